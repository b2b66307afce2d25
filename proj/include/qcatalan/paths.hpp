#pragma once
// paths.hpp - Lattice paths over {Up, Down}, their maj/des/height statistics,
// landmark points, and exhaustive enumeration of the path families the
// library works with.
//
// Indexing convention, used everywhere: steps are 1-indexed (step i is the
// i-th letter of the word), lattice points are 0-indexed (point j is the
// endpoint of step j, point 0 is the origin). In the 0/1 word encoding,
// 0 is an up step and 1 is a down step.

#include "qcatalan/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace qcatalan {

enum class Step : unsigned char { Up = 0, Down = 1 };

class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    int length() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }

    /// Step i, 1-indexed.
    Step step(int i) const { return steps_.at(static_cast<size_t>(i - 1)); }

    const std::vector<Step>& steps() const { return steps_; }

    int count_up() const {
        int u = 0;
        for (Step s : steps_) u += (s == Step::Up);
        return u;
    }
    int count_down() const { return length() - count_up(); }

    /// Level of lattice point j (0 <= j <= length).
    int level_at(int point) const {
        int lvl = 0;
        for (int i = 1; i <= point; ++i) lvl += (step(i) == Step::Up) ? 1 : -1;
        return lvl;
    }

    /// Levels of all points 0..length in one pass.
    std::vector<int> levels() const {
        std::vector<int> lv(steps_.size() + 1, 0);
        for (size_t i = 0; i < steps_.size(); ++i)
            lv[i + 1] = lv[i] + (steps_[i] == Step::Up ? 1 : -1);
        return lv;
    }

    int end_level() const { return level_at(length()); }

    /// 0/1 word, the encoding used by the CLI and the JSON output.
    std::string to_string() const {
        std::string s;
        s.reserve(steps_.size());
        for (Step st : steps_) s.push_back(st == Step::Up ? '0' : '1');
        return s;
    }

    bool operator==(const LatticePath& o) const { return steps_ == o.steps_; }
    bool operator!=(const LatticePath& o) const { return !(*this == o); }
    bool operator<(const LatticePath& o) const { return steps_ < o.steps_; }

private:
    std::vector<Step> steps_;
};

/// Rejected path or family text. position is 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::string msg, size_t position, char offending)
        : std::invalid_argument(std::move(msg)), position_(position), offending_(offending) {}
    size_t position() const { return position_; }
    char offending() const { return offending_; }

private:
    size_t position_;
    char offending_;
};

/// Accepts a word over {0,1} or over {u,d} (case-insensitive); the first
/// character fixes the alphabet and mixing is an error. Empty input is the
/// empty path.
inline LatticePath parse_path(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    bool binary_alphabet = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        char lc = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
        bool is_binary = (c == '0' || c == '1');
        bool is_letter = (lc == 'u' || lc == 'd');
        if (!is_binary && !is_letter)
            throw ParseError("invalid path character '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1),
                             i + 1, c);
        if (i == 0) {
            binary_alphabet = is_binary;
        } else if (is_binary != binary_alphabet) {
            throw ParseError("mixed path alphabets: '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1),
                             i + 1, c);
        }
        if (is_binary)
            steps.push_back(c == '0' ? Step::Up : Step::Down);
        else
            steps.push_back(lc == 'u' ? Step::Up : Step::Down);
    }
    return LatticePath(std::move(steps));
}

/// Swaps Up and Down at every position (reflection over the x-axis).
inline LatticePath reflect(const LatticePath& p) {
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(p.length()));
    for (Step s : p.steps()) steps.push_back(s == Step::Up ? Step::Down : Step::Up);
    return LatticePath(std::move(steps));
}

// ---- Landmark points -------------------------------------------------

/// Greatest point index attaining the maximum level.
inline int right_most_maximum(const LatticePath& p) {
    auto lv = p.levels();
    int best = 0, where = 0;
    for (int j = 0; j <= p.length(); ++j)
        if (lv[static_cast<size_t>(j)] >= best) {
            best = lv[static_cast<size_t>(j)];
            where = j;
        }
    return where;
}

/// Least point index attaining the maximum level.
inline int left_most_maximum(const LatticePath& p) {
    auto lv = p.levels();
    int best = 0, where = 0;
    for (int j = 0; j <= p.length(); ++j)
        if (lv[static_cast<size_t>(j)] > best) {
            best = lv[static_cast<size_t>(j)];
            where = j;
        }
    return where;
}

/// Least point index at the given level, if the path ever reaches it.
inline std::optional<int> first_hit(const LatticePath& p, int level) {
    auto lv = p.levels();
    for (int j = 0; j <= p.length(); ++j)
        if (lv[static_cast<size_t>(j)] == level) return j;
    return std::nullopt;
}

inline bool is_nonnegative_path(const LatticePath& p) {
    int lvl = 0;
    for (Step s : p.steps()) {
        lvl += (s == Step::Up) ? 1 : -1;
        if (lvl < 0) return false;
    }
    return true;
}

inline bool is_catalan_path(const LatticePath& p) {
    return p.count_up() == p.count_down() && is_nonnegative_path(p);
}

/// The point X: last level-one point at or before the right-most maximum.
/// Defined for nonempty Catalan paths only.
inline int last_level_one_before_rmax(const LatticePath& p) {
    if (p.empty() || !is_catalan_path(p))
        throw DomainError("X is defined for nonempty Catalan paths only");
    auto lv = p.levels();
    int r = right_most_maximum(p);
    for (int j = r; j >= 0; --j)
        if (lv[static_cast<size_t>(j)] == 1) return j;
    throw InvariantViolation("Catalan path with no level-one point before its maximum");
}

// ---- Statistics ------------------------------------------------------

/// maj/des/height bundle for one path. h_minus and h_plus are present only
/// for nonempty Catalan paths; elsewhere the split point X is undefined.
struct PathStats {
    int maj = 0;
    int des = 0;
    int height = 0;
    int end_level = 0;
    int min_level = 0;
    std::optional<int> h_minus;
    std::optional<int> h_plus;
};

/// Descents are step indices i with step i = Down and step i+1 = Up
/// (1 <= i <= length-1); maj is their sum and des their count.
inline PathStats stats(const LatticePath& p) {
    PathStats st;
    auto lv = p.levels();
    for (int j = 0; j <= p.length(); ++j) {
        st.height = std::max(st.height, lv[static_cast<size_t>(j)]);
        st.min_level = std::min(st.min_level, lv[static_cast<size_t>(j)]);
    }
    st.end_level = lv.back();
    for (int i = 1; i + 1 <= p.length(); ++i)
        if (p.step(i) == Step::Down && p.step(i + 1) == Step::Up) {
            st.maj += i;
            st.des += 1;
        }
    if (!p.empty() && is_catalan_path(p)) {
        int x = last_level_one_before_rmax(p);
        int hm = 0, hp = 0;
        for (int j = 0; j <= x; ++j) hm = std::max(hm, lv[static_cast<size_t>(j)]);
        for (int j = x; j <= p.length(); ++j) hp = std::max(hp, lv[static_cast<size_t>(j)]);
        st.h_minus = hm;
        st.h_plus = hp;
    }
    return st;
}

enum class PathStat { Maj, MajMinusDes };

inline int stat_value(const PathStats& st, PathStat which) {
    return which == PathStat::Maj ? st.maj : st.maj - st.des;
}

// ---- Families --------------------------------------------------------

enum class Family {
    AllPaths,        // m ups, n downs
    NonnegPaths,     // m ups, n downs, never below the x-axis
    Catalan,         // NonnegPaths(n, n)
    Ballot,          // length 2n, first step up, ends at -2r+2, never below it
    Omega,           // Catalan(n) with h_plus <= h_minus + 2
    BallotStar,      // Ballot(n,2) never at level -1 strictly before the right-most maximum
    BallotStarStar,  // Ballot(n,2) minus BallotStar(n)
    HeightAbove,     // AllPaths(n+r-1, n-r) of height > 2r-1
    HeightAtMost,    // AllPaths(n+r-1, n-r) of height <= 2r-1
};

struct FamilySpec {
    Family tag = Family::AllPaths;
    int a = 0;  // m, or n
    int b = 0;  // n, or r; unused for one-parameter families

    static FamilySpec all_paths(int m, int n) { return {Family::AllPaths, m, n}; }
    static FamilySpec nonneg(int m, int n) { return {Family::NonnegPaths, m, n}; }
    static FamilySpec catalan(int n) { return {Family::Catalan, n, 0}; }
    static FamilySpec ballot(int n, int r) { return {Family::Ballot, n, r}; }
    static FamilySpec omega(int n) { return {Family::Omega, n, 0}; }
    static FamilySpec ballot_star(int n) { return {Family::BallotStar, n, 0}; }
    static FamilySpec ballot_star_star(int n) { return {Family::BallotStarStar, n, 0}; }
    static FamilySpec height_above(int n, int r) { return {Family::HeightAbove, n, r}; }
    static FamilySpec height_at_most(int n, int r) { return {Family::HeightAtMost, n, r}; }

    bool operator==(const FamilySpec& o) const = default;
};

inline void validate(const FamilySpec& spec) {
    switch (spec.tag) {
        case Family::AllPaths:
        case Family::NonnegPaths:
            if (spec.a < 0 || spec.b < 0) throw DomainError("path counts must be nonnegative");
            return;
        case Family::Catalan:
        case Family::Omega:
            if (spec.a < 0) throw DomainError("catalan/omega: n must be nonnegative");
            return;
        case Family::Ballot:
        case Family::HeightAbove:
        case Family::HeightAtMost:
            if (spec.b < 1 || spec.b > spec.a)
                throw DomainError("ballot-style families require 1 <= r <= n");
            return;
        case Family::BallotStar:
        case Family::BallotStarStar:
            if (spec.a < 2) throw DomainError("ballot_star families require n >= 2");
            return;
    }
    throw DomainError("unknown family");
}

inline std::string to_string(const FamilySpec& spec) {
    auto two = [&](const char* name) {
        return std::string(name) + ":" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    };
    auto one = [&](const char* name) { return std::string(name) + ":" + std::to_string(spec.a); };
    switch (spec.tag) {
        case Family::AllPaths: return two("allpaths");
        case Family::NonnegPaths: return two("nonneg");
        case Family::Catalan: return one("catalan");
        case Family::Ballot: return two("ballot");
        case Family::Omega: return one("omega");
        case Family::BallotStar: return one("ballotstar");
        case Family::BallotStarStar: return one("ballotstarstar");
        case Family::HeightAbove: return two("heightabove");
        case Family::HeightAtMost: return two("heightatmost");
    }
    return "?";
}

/// "catalan:5", "ballot:6,2", "omega:7", "allpaths:3,2", ...
inline FamilySpec parse_family(std::string_view text) {
    size_t colon = text.find(':');
    std::string name(text.substr(0, colon == std::string_view::npos ? text.size() : colon));
    std::vector<int> args;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        size_t pos = colon + 1;
        while (!rest.empty()) {
            size_t comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            try {
                size_t used = 0;
                std::string tok_s(tok);
                int v = std::stoi(tok_s, &used);
                if (used != tok_s.size()) throw std::invalid_argument("trailing");
                args.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("invalid family parameter at position " + std::to_string(pos + 1),
                                 pos + 1, tok.empty() ? ':' : tok[0]);
            }
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
            pos += comma + 1;
        }
    }
    auto want = [&](size_t k, Family tag) {
        if (args.size() != k)
            throw ParseError("family '" + name + "' takes " + std::to_string(k) + " parameter(s)",
                             1, ':');
        FamilySpec s{tag, k >= 1 ? args[0] : 0, k >= 2 ? args[1] : 0};
        validate(s);
        return s;
    };
    if (name == "allpaths") return want(2, Family::AllPaths);
    if (name == "nonneg") return want(2, Family::NonnegPaths);
    if (name == "catalan") return want(1, Family::Catalan);
    if (name == "ballot") return want(2, Family::Ballot);
    if (name == "omega") return want(1, Family::Omega);
    if (name == "ballotstar") return want(1, Family::BallotStar);
    if (name == "ballotstarstar") return want(1, Family::BallotStarStar);
    if (name == "heightabove") return want(2, Family::HeightAbove);
    if (name == "heightatmost") return want(2, Family::HeightAtMost);
    throw ParseError("unknown family '" + name + "'", 1, name.empty() ? ':' : name[0]);
}

namespace detail {

// Base enumeration shape: (ups, downs, floor, must_start_up). The filtered
// families share a base family and add a per-path predicate.
struct EnumPlan {
    int ups = 0;
    int downs = 0;
    bool has_floor = false;
    int floor = 0;
    bool must_start_up = false;
    std::function<bool(const LatticePath&)> filter;  // empty = accept all
};

inline bool ballot_star_predicate(const LatticePath& p) {
    // No level -1 point strictly before the right-most maximum.
    auto lv = p.levels();
    int r = right_most_maximum(p);
    for (int j = 0; j < r; ++j)
        if (lv[static_cast<size_t>(j)] == -1) return false;
    return true;
}

inline EnumPlan make_plan(const FamilySpec& spec) {
    validate(spec);
    EnumPlan plan;
    switch (spec.tag) {
        case Family::AllPaths:
            plan.ups = spec.a;
            plan.downs = spec.b;
            return plan;
        case Family::NonnegPaths:
            plan.ups = spec.a;
            plan.downs = spec.b;
            plan.has_floor = true;
            plan.floor = 0;
            return plan;
        case Family::Catalan:
            plan.ups = plan.downs = spec.a;
            plan.has_floor = true;
            plan.floor = 0;
            return plan;
        case Family::Ballot: {
            int n = spec.a, r = spec.b;
            plan.ups = n - r + 1;
            plan.downs = n + r - 1;
            plan.has_floor = true;
            plan.floor = -2 * r + 2;
            plan.must_start_up = true;
            return plan;
        }
        case Family::Omega:
            plan = make_plan(FamilySpec::catalan(spec.a));
            plan.filter = [](const LatticePath& p) {
                PathStats st = stats(p);
                return st.h_plus.has_value() && *st.h_plus <= *st.h_minus + 2;
            };
            return plan;
        case Family::BallotStar:
            plan = make_plan(FamilySpec::ballot(spec.a, 2));
            plan.filter = ballot_star_predicate;
            return plan;
        case Family::BallotStarStar:
            plan = make_plan(FamilySpec::ballot(spec.a, 2));
            plan.filter = [](const LatticePath& p) { return !ballot_star_predicate(p); };
            return plan;
        case Family::HeightAbove: {
            int n = spec.a, r = spec.b;
            plan.ups = n + r - 1;
            plan.downs = n - r;
            plan.filter = [r](const LatticePath& p) { return stats(p).height > 2 * r - 1; };
            return plan;
        }
        case Family::HeightAtMost: {
            int n = spec.a, r = spec.b;
            plan.ups = n + r - 1;
            plan.downs = n - r;
            plan.filter = [r](const LatticePath& p) { return stats(p).height <= 2 * r - 1; };
            return plan;
        }
    }
    throw DomainError("unknown family");
}

// Depth-first generation, Up branch before Down branch, which yields
// lexicographic order under Up < Down. Sharding fixes the first
// prefix_bits steps: a path belongs to the shard equal to the value of
// those steps (Up=0, Down=1, most significant first) mod num_shards.
inline void enumerate_impl(const EnumPlan& plan, unsigned num_shards, unsigned shard_index,
                           const std::function<void(const LatticePath&)>& fn) {
    const int total = plan.ups + plan.downs;
    int prefix_bits = 0;
    while (num_shards > (1u << prefix_bits) && prefix_bits < total) ++prefix_bits;

    std::vector<Step> buf(static_cast<size_t>(total));
    std::function<void(int, int, int, int, unsigned)> rec =
        [&](int pos, int ups_left, int downs_left, int level, unsigned prefix_value) {
            if (pos == prefix_bits + 1 && num_shards > 1 &&
                prefix_value % num_shards != shard_index)
                return;
            if (pos > total) {
                LatticePath p(buf);
                if (!plan.filter || plan.filter(p)) fn(p);
                return;
            }
            // Up branch first (lexicographically smaller).
            if (ups_left > 0) {
                buf[static_cast<size_t>(pos - 1)] = Step::Up;
                rec(pos + 1, ups_left - 1, downs_left, level + 1,
                    pos <= prefix_bits ? prefix_value << 1 : prefix_value);
            }
            if (downs_left > 0 && !(plan.has_floor && level - 1 < plan.floor) &&
                !(pos == 1 && plan.must_start_up)) {
                buf[static_cast<size_t>(pos - 1)] = Step::Down;
                rec(pos + 1, ups_left, downs_left - 1, level - 1,
                    pos <= prefix_bits ? (prefix_value << 1) | 1u : prefix_value);
            }
        };
    rec(1, plan.ups, plan.downs, 0, 0);
}

}  // namespace detail

/// Visits every member of the family exactly once, in lexicographic step
/// order with Up < Down.
inline void for_each_path(const FamilySpec& spec,
                          const std::function<void(const LatticePath&)>& fn) {
    detail::enumerate_impl(detail::make_plan(spec), 1, 0, fn);
}

/// Shard shard_index of num_shards; the union over all shards is exactly
/// the full family, each shard internally in lexicographic order.
inline void for_each_path_sharded(const FamilySpec& spec, unsigned num_shards,
                                  unsigned shard_index,
                                  const std::function<void(const LatticePath&)>& fn) {
    if (num_shards == 0 || shard_index >= num_shards)
        throw DomainError("shard_index must be below num_shards");
    detail::enumerate_impl(detail::make_plan(spec), num_shards, shard_index, fn);
}

inline std::vector<LatticePath> all_paths_in(const FamilySpec& spec) {
    std::vector<LatticePath> out;
    for_each_path(spec, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

inline unsigned long long count_paths(const FamilySpec& spec) {
    unsigned long long n = 0;
    for_each_path(spec, [&](const LatticePath&) { ++n; });
    return n;
}

/// Membership test matching the enumerator exactly.
inline bool contains(const FamilySpec& spec, const LatticePath& p) {
    validate(spec);
    auto plan = detail::make_plan(spec);
    if (p.count_up() != plan.ups || p.count_down() != plan.downs) return false;
    if (plan.must_start_up && (p.empty() || p.step(1) != Step::Up)) return false;
    if (plan.has_floor) {
        auto lv = p.levels();
        for (int v : lv)
            if (v < plan.floor) return false;
    }
    return !plan.filter || plan.filter(p);
}

/// Sum of q^stat over the family, as an exact polynomial.
inline QPoly gen_fun(const FamilySpec& spec, PathStat stat_kind) {
    std::vector<unsigned long long> hist;
    for_each_path(spec, [&](const LatticePath& p) {
        int v = stat_value(stats(p), stat_kind);
        if (v >= static_cast<int>(hist.size())) hist.resize(static_cast<size_t>(v) + 1, 0);
        ++hist[static_cast<size_t>(v)];
    });
    std::vector<BigInt> cs(hist.size());
    for (size_t i = 0; i < hist.size(); ++i) cs[i] = hist[i];
    return QPoly::from_coeffs(0, std::move(cs));
}

/// Same value as gen_fun, computed with num_shards worker threads. Shards
/// are merged by addition, so the result does not depend on scheduling.
inline QPoly gen_fun_sharded(const FamilySpec& spec, PathStat stat_kind, unsigned num_shards) {
    if (num_shards <= 1) return gen_fun(spec, stat_kind);
    std::vector<std::vector<unsigned long long>> hists(num_shards);
    std::vector<std::thread> workers;
    workers.reserve(num_shards);
    for (unsigned k = 0; k < num_shards; ++k) {
        workers.emplace_back([&, k]() {
            auto& hist = hists[k];
            for_each_path_sharded(spec, num_shards, k, [&](const LatticePath& p) {
                int v = stat_value(stats(p), stat_kind);
                if (v >= static_cast<int>(hist.size()))
                    hist.resize(static_cast<size_t>(v) + 1, 0);
                ++hist[static_cast<size_t>(v)];
            });
        });
    }
    for (auto& w : workers) w.join();
    size_t len = 0;
    for (const auto& h : hists) len = std::max(len, h.size());
    std::vector<BigInt> cs(len);
    for (const auto& h : hists)
        for (size_t i = 0; i < h.size(); ++i) cs[i] += h[i];
    return QPoly::from_coeffs(0, std::move(cs));
}

}  // namespace qcatalan
