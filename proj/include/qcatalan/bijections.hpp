#pragma once
// bijections.hpp - Executable forward and inverse maps between the path
// families: psi and phi (the height-split pair behind the q-Ballot sum),
// f (ballot-star paths onto Catalan paths of height > 1), and g
// (ballot-star-star paths into the Catalan paths with h+ >= h- + 3).
// Every map validates its domain before touching the path and refuses
// partial application.
//
// Landmark vocabulary, stored in traces:
//   R  right-most maximum          L  left-most maximum (of the image or
//   Q  the point next to L/R          of the intermediate ballot path)
//   N  first point at level -1     X  the level-one split point
//   M  point before N or X         Y  point after N, or the start of sigma
//   sigma  the relocated down-wedge range (post-splice indices)
// All landmark values are lattice-point indices. For g and g_inv, R/N/M/X/Y
// refer to the input path and sigma/L/Q to the post-splice (intermediate or
// output) path; no other map moves points around.

#include "qcatalan/paths.hpp"
#include "qcatalan/qpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qcatalan {

enum class BijectionCase { Case1, Case2 };

enum class WedgeDirection { Before, After };

/// Closed point range [begin_point, end_point]; begin == end is the empty
/// wedge anchored there. A wedge spans an even number of steps.
struct WedgeRange {
    int begin_point = 0;
    int end_point = 0;
    bool empty() const { return begin_point == end_point; }
    int step_count() const { return end_point - begin_point; }
    bool operator==(const WedgeRange&) const = default;
};

/// Longest run of steps alternating Down,Up,...,Down,Up that ends at the
/// anchor point (Before) or starts at it (After); possibly empty.
inline WedgeRange find_down_wedge(const LatticePath& p, int anchor, WedgeDirection dir) {
    if (anchor < 0 || anchor > p.length())
        throw DomainError("find_down_wedge: anchor outside the path");
    int k = 0;
    if (dir == WedgeDirection::Before) {
        while (anchor - 2 * k - 1 >= 1 && p.step(anchor - 2 * k - 1) == Step::Down &&
               p.step(anchor - 2 * k) == Step::Up)
            ++k;
        return {anchor - 2 * k, anchor};
    }
    while (anchor + 2 * k + 2 <= p.length() && p.step(anchor + 2 * k + 1) == Step::Down &&
           p.step(anchor + 2 * k + 2) == Step::Up)
        ++k;
    return {anchor, anchor + 2 * k};
}

using LandmarkValue = std::variant<int, WedgeRange>;

struct StatDelta {
    int maj = 0;
    int des = 0;
    bool operator==(const StatDelta&) const = default;
};

/// Record of one map application: which case ran, where the landmark points
/// sat, and how the statistics moved. stat_delta is stats(input) minus
/// stats(output).
struct BijectionTrace {
    std::string name;
    LatticePath input;
    LatticePath output;
    std::map<std::string, LandmarkValue> landmarks;
    std::optional<BijectionCase> case_taken;
    StatDelta stat_delta;
};

namespace detail {

inline LatticePath flip_step(const LatticePath& p, int i, Step to) {
    std::vector<Step> steps = p.steps();
    steps.at(static_cast<size_t>(i - 1)) = to;
    return LatticePath(std::move(steps));
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

inline void fill_delta(BijectionTrace& t) {
    PathStats in = stats(t.input), out = stats(t.output);
    t.stat_delta = {in.maj - out.maj, in.des - out.des};
}

}  // namespace detail

// ---- psi ---------------------------------------------------------------
// Domain: paths with n+r-1 ups and n-r downs of height > 2r-1. Turns the
// down step after the right-most maximum into an up step; the descent set
// is unchanged, so maj is preserved.

inline LatticePath psi(const LatticePath& p, int n, int r, BijectionTrace* tr = nullptr) {
    detail::require(contains(FamilySpec::height_above(n, r), p),
                    "psi: input not in heightabove:" + std::to_string(n) + "," + std::to_string(r));
    int R = right_most_maximum(p);
    if (R >= p.length() || p.step(R + 1) != Step::Down)
        throw InvariantViolation("psi: no down step after the right-most maximum");
    LatticePath out = detail::flip_step(p, R + 1, Step::Up);
    if (tr) {
        tr->landmarks["R"] = R;
        tr->landmarks["L"] = R + 1;
    }
    return out;
}

inline LatticePath psi_inv(const LatticePath& p, int n, int r, BijectionTrace* tr = nullptr) {
    detail::require(r >= 1 && r <= n - 1 && contains(FamilySpec::all_paths(n + r, n - r - 1), p),
                    "psi_inv: input not in allpaths:" + std::to_string(n + r) + "," +
                        std::to_string(n - r - 1));
    int L = left_most_maximum(p);
    if (L < 1 || p.step(L) != Step::Up)
        throw InvariantViolation("psi_inv: no up step into the left-most maximum");
    LatticePath out = detail::flip_step(p, L, Step::Down);
    if (!contains(FamilySpec::height_above(n, r), out))
        throw InvariantViolation("psi_inv: output escaped the tall family");
    if (tr) {
        tr->landmarks["L"] = L;
        tr->landmarks["R"] = L - 1;
    }
    return out;
}

// ---- phi ---------------------------------------------------------------
// Domain: paths with n+r-1 ups and n-r downs never rising above 2r-1.
// Reflect over the x-axis, then prepend one up step. The image is the
// ballot family; maj(p) - (n-r) = maj(phi(p)) - des(phi(p)).

inline LatticePath phi(const LatticePath& p, int n, int r, BijectionTrace* tr = nullptr) {
    detail::require(contains(FamilySpec::height_at_most(n, r), p),
                    "phi: input not in heightatmost:" + std::to_string(n) + "," +
                        std::to_string(r));
    LatticePath mirrored = reflect(p);
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(p.length()) + 1);
    steps.push_back(Step::Up);
    steps.insert(steps.end(), mirrored.steps().begin(), mirrored.steps().end());
    (void)tr;
    return LatticePath(std::move(steps));
}

inline LatticePath phi_inv(const LatticePath& p, int n, int r, BijectionTrace* tr = nullptr) {
    detail::require(contains(FamilySpec::ballot(n, r), p),
                    "phi_inv: input not in ballot:" + std::to_string(n) + "," +
                        std::to_string(r));
    std::vector<Step> steps(p.steps().begin() + 1, p.steps().end());
    LatticePath out = reflect(LatticePath(std::move(steps)));
    if (!contains(FamilySpec::height_at_most(n, r), out))
        throw InvariantViolation("phi_inv: output escaped the capped family");
    (void)tr;
    return out;
}

// ---- f -----------------------------------------------------------------
// Domain: ballotstar:n (n inferred from the length). Turns the down step
// after the right-most maximum into an up step; both maj and des are
// preserved, and the image is exactly the Catalan paths of height > 1.

inline LatticePath f(const LatticePath& p, BijectionTrace* tr = nullptr) {
    detail::require(p.length() % 2 == 0 && p.length() >= 4,
                    "f: input length must be an even number >= 4");
    int n = p.length() / 2;
    detail::require(contains(FamilySpec::ballot_star(n), p),
                    "f: input not in ballotstar:" + std::to_string(n));
    int R = right_most_maximum(p);
    if (R >= p.length() || p.step(R + 1) != Step::Down)
        throw InvariantViolation("f: no down step after the right-most maximum");
    LatticePath out = detail::flip_step(p, R + 1, Step::Up);
    PathStats st = stats(out);
    if (!is_catalan_path(out) || st.height < 2)
        throw InvariantViolation("f: output not a Catalan path of height >= 2");
    if (tr) {
        tr->landmarks["R"] = R;
        tr->landmarks["Q"] = R + 1;
    }
    return out;
}

inline LatticePath f_inv(const LatticePath& p, BijectionTrace* tr = nullptr) {
    detail::require(p.length() % 2 == 0 && p.length() >= 4 && is_catalan_path(p) &&
                        stats(p).height > 1,
                    "f_inv: input not a Catalan path of height > 1");
    int n = p.length() / 2;
    int Q = left_most_maximum(p);
    if (Q < 1 || p.step(Q) != Step::Up)
        throw InvariantViolation("f_inv: no up step into the left-most maximum");
    LatticePath out = detail::flip_step(p, Q, Step::Down);
    if (!contains(FamilySpec::ballot_star(n), out))
        throw InvariantViolation("f_inv: output escaped ballotstar");
    if (tr) {
        tr->landmarks["Q"] = Q;
        tr->landmarks["R"] = Q - 1;
    }
    return out;
}

// ---- g -----------------------------------------------------------------

namespace detail {

// Intermediate of g: a nonnegative path of length 2n ending at level 2,
// whose maximum after the split point exceeds the maximum before it by at
// least 4. Each proof obligation is checked before the final flip.
inline void check_g_intermediate(const LatticePath& b, int split_point) {
    auto lv = b.levels();
    for (int v : lv)
        if (v < 0) throw InvariantViolation("g: intermediate path dips below the x-axis");
    if (lv.back() != 2) throw InvariantViolation("g: intermediate path does not end at level 2");
    int before = 0, after = 0;
    for (int j = 0; j <= split_point; ++j) before = std::max(before, lv[static_cast<size_t>(j)]);
    for (int j = split_point; j <= b.length(); ++j)
        after = std::max(after, lv[static_cast<size_t>(j)]);
    if (after < before + 4)
        throw InvariantViolation("g: intermediate maxima gap below 4");
}

// Last point of the path at level 1. The intermediates of g end at level 2
// and stay nonnegative, so the point exists and everything after it sits at
// level >= 2.
inline int last_level_one_point(const LatticePath& p) {
    auto lv = p.levels();
    for (int j = p.length(); j >= 0; --j)
        if (lv[static_cast<size_t>(j)] == 1) return j;
    throw InvariantViolation("path never touches level 1");
}

inline LatticePath g_finish(const LatticePath& ballot2, int n, BijectionTrace* tr) {
    int L = left_most_maximum(ballot2);
    if (L < 1 || ballot2.step(L) != Step::Up)
        throw InvariantViolation("g: no up step into the left-most maximum");
    LatticePath out = flip_step(ballot2, L, Step::Down);
    if (!contains(FamilySpec::catalan(n), out))
        throw InvariantViolation("g: output not a Catalan path");
    PathStats st = stats(out);
    if (!st.h_plus || *st.h_plus < *st.h_minus + 3)
        throw InvariantViolation("g: output landed in Omega");
    if (tr) {
        tr->landmarks["L"] = L;
        tr->landmarks["Q"] = L - 1;
    }
    return out;
}

}  // namespace detail

/// Case 1 (the first -1 point N is followed by a down step): the two down
/// steps around N become two up steps. Case 2 (N is followed by an up
/// step): the longest down wedge ending two points before N moves to just
/// after N, and the two down steps into N become two up steps. Both cases
/// finish by turning the up step into the left-most maximum of the
/// resulting ballot path into a down step.
inline LatticePath g(const LatticePath& p, BijectionTrace* tr = nullptr) {
    detail::require(p.length() % 2 == 0 && p.length() >= 4,
                    "g: input length must be an even number >= 4");
    int n = p.length() / 2;
    detail::require(contains(FamilySpec::ballot_star_star(n), p),
                    "g: input not in ballotstarstar:" + std::to_string(n));

    int R = right_most_maximum(p);
    auto n_opt = first_hit(p, -1);
    if (!n_opt || *n_opt >= R)
        throw InvariantViolation("g: no level -1 point before the right-most maximum");
    int N = *n_opt;
    if (tr) {
        tr->landmarks["R"] = R;
        tr->landmarks["N"] = N;
    }

    if (p.step(N + 1) == Step::Down) {
        // Case 1. Points M = N-1 and Y = N+1 flank N; steps N and N+1 are
        // both down and become both up. The split point keeps index N.
        LatticePath ballot2 =
            detail::flip_step(detail::flip_step(p, N, Step::Up), N + 1, Step::Up);
        detail::check_g_intermediate(ballot2, N);
        if (tr) {
            tr->case_taken = BijectionCase::Case1;
            tr->landmarks["M"] = N - 1;
            tr->landmarks["Y"] = N + 1;
            tr->landmarks["X"] = N;
        }
        return detail::g_finish(ballot2, n, tr);
    }

    // Case 2. X = N-2 sits at level 1 and steps N-1, N are both down.
    int X = N - 2;
    WedgeRange sigma = find_down_wedge(p, X, WedgeDirection::Before);
    int Y = sigma.begin_point;
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(p.length()));
    for (int i = 1; i <= Y; ++i) steps.push_back(p.step(i));
    steps.push_back(Step::Up);
    steps.push_back(Step::Up);
    for (int i = Y + 1; i <= X; ++i) steps.push_back(p.step(i));  // sigma, relocated
    for (int i = N + 1; i <= p.length(); ++i) steps.push_back(p.step(i));
    LatticePath ballot2(std::move(steps));
    detail::check_g_intermediate(ballot2, Y);
    if (tr) {
        tr->case_taken = BijectionCase::Case2;
        tr->landmarks["X"] = X;
        tr->landmarks["Y"] = Y;
        tr->landmarks["sigma"] = WedgeRange{Y + 2, Y + 2 + sigma.step_count()};
    }
    return detail::g_finish(ballot2, n, tr);
}

/// Inverse of g on Catalan paths with h+ >= h- + 3. The case is read off
/// the point before the last level-one point of the intermediate ballot
/// path: a descent there means Case 1.
inline LatticePath g_inv(const LatticePath& p, BijectionTrace* tr = nullptr) {
    detail::require(p.length() % 2 == 0 && p.length() >= 4 && is_catalan_path(p),
                    "g_inv: input not a Catalan path");
    int n = p.length() / 2;
    PathStats st = stats(p);
    detail::require(st.h_plus && *st.h_plus >= *st.h_minus + 3,
                    "g_inv: input not outside omega:" + std::to_string(n) +
                        " (needs h_plus >= h_minus + 3)");

    int Q = right_most_maximum(p);
    if (Q >= p.length() || p.step(Q + 1) != Step::Down)
        throw InvariantViolation("g_inv: no down step after the right-most maximum");
    LatticePath ballot2 = detail::flip_step(p, Q + 1, Step::Up);
    int X = detail::last_level_one_point(ballot2);
    if (tr) {
        tr->landmarks["Q"] = Q;
        tr->landmarks["L"] = Q + 1;
        tr->landmarks["X"] = X;
    }

    bool case1 = X >= 2 && ballot2.step(X - 1) == Step::Down && ballot2.step(X) == Step::Up;
    if (case1) {
        // Steps X and X+1 (up, up) become down, down.
        if (X + 1 > ballot2.length() || ballot2.step(X + 1) != Step::Up)
            throw InvariantViolation("g_inv: expected an up step after the split point");
        LatticePath out =
            detail::flip_step(detail::flip_step(ballot2, X, Step::Down), X + 1, Step::Down);
        if (!contains(FamilySpec::ballot_star_star(n), out))
            throw InvariantViolation("g_inv: output escaped ballotstarstar");
        if (tr) {
            tr->case_taken = BijectionCase::Case1;
            tr->landmarks["M"] = X - 1;
            tr->landmarks["Y"] = X + 1;
            tr->landmarks["N"] = X;
        }
        return out;
    }

    // Case 2: X is followed by two up steps; the longest down wedge starting
    // at their endpoint moves back in front of X, and the two up steps
    // become two down steps.
    if (X + 2 > ballot2.length() || ballot2.step(X + 1) != Step::Up ||
        ballot2.step(X + 2) != Step::Up)
        throw InvariantViolation("g_inv: expected two up steps after the split point");
    int Y = X + 2;
    WedgeRange sigma = find_down_wedge(ballot2, Y, WedgeDirection::After);
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(ballot2.length()));
    for (int i = 1; i <= X; ++i) steps.push_back(ballot2.step(i));
    for (int i = Y + 1; i <= sigma.end_point; ++i) steps.push_back(ballot2.step(i));
    steps.push_back(Step::Down);
    steps.push_back(Step::Down);
    for (int i = sigma.end_point + 1; i <= ballot2.length(); ++i)
        steps.push_back(ballot2.step(i));
    LatticePath out(std::move(steps));
    if (!contains(FamilySpec::ballot_star_star(n), out))
        throw InvariantViolation("g_inv: output escaped ballotstarstar");
    if (tr) {
        tr->case_taken = BijectionCase::Case2;
        tr->landmarks["Y"] = Y;
        tr->landmarks["sigma"] = WedgeRange{X, X + sigma.step_count()};
        tr->landmarks["N"] = X + sigma.step_count() + 2;
    }
    return out;
}

// ---- name-based dispatch ----------------------------------------------

inline const std::vector<std::string>& bijection_names() {
    static const std::vector<std::string> names = {"psi", "psi_inv", "phi", "phi_inv",
                                                   "f",   "f_inv",   "g",   "g_inv"};
    return names;
}

namespace detail {

struct PsiPhiParams {
    int n = 0;
    int r = 0;
};

// psi, phi and their inverses determine (n, r) from the up/down counts of
// the input, so the by-name entry points need no extra arguments.
inline PsiPhiParams infer_params(const std::string& name, const LatticePath& p) {
    int u = p.count_up(), d = p.count_down();
    if (name == "psi" || name == "phi") {
        // u = n+r-1, d = n-r
        if ((u + d) % 2 == 0) throw DomainError(name + ": input length must be odd");
        return {(u + d + 1) / 2, (u - d + 1) / 2};
    }
    if (name == "psi_inv") {
        // u = n+r, d = n-r-1
        if ((u + d) % 2 == 0) throw DomainError("psi_inv: input length must be odd");
        return {(u + d + 1) / 2, (u - d - 1) / 2};
    }
    // phi_inv: length 2n, ends at -2r+2
    if (p.length() % 2 != 0) throw DomainError("phi_inv: input length must be even");
    int end = p.end_level();
    if ((2 - end) % 2 != 0 || p.empty()) throw DomainError("phi_inv: input not a ballot path");
    return {p.length() / 2, (2 - end) / 2};
}

}  // namespace detail

/// Applies the named map and records landmarks, case, and statistic deltas.
inline BijectionTrace trace(const std::string& name, const LatticePath& p) {
    BijectionTrace t;
    t.name = name;
    t.input = p;
    if (name == "f") {
        t.output = f(p, &t);
    } else if (name == "f_inv") {
        t.output = f_inv(p, &t);
    } else if (name == "g") {
        t.output = g(p, &t);
    } else if (name == "g_inv") {
        t.output = g_inv(p, &t);
    } else if (name == "psi" || name == "psi_inv" || name == "phi" || name == "phi_inv") {
        auto [n, r] = detail::infer_params(name, p);
        if (name == "psi")
            t.output = psi(p, n, r, &t);
        else if (name == "psi_inv")
            t.output = psi_inv(p, n, r, &t);
        else if (name == "phi")
            t.output = phi(p, n, r, &t);
        else
            t.output = phi_inv(p, n, r, &t);
    } else {
        throw DomainError("unknown bijection '" + name + "'");
    }
    detail::fill_delta(t);
    return t;
}

/// The named map's output, domain-checked.
inline LatticePath apply_bijection(const std::string& name, const LatticePath& p) {
    return trace(name, p).output;
}

}  // namespace qcatalan
