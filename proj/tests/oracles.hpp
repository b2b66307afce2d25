#pragma once
// Test-only oracles, deliberately independent of the library's
// implementation choices: a sparse map-backed polynomial instead of the
// dense vector, gaussian binomials from the Pascal-style recurrence instead
// of factorial division, and path-family enumeration by filtering all 2^len
// words instead of pruned DFS. Keep this file free of calls into the
// library's arithmetic beyond the QPoly conversions at the boundary.

#include "qcatalan/paths.hpp"
#include "qcatalan/qpoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using qcatalan::BigInt;
using qcatalan::QPoly;

// ---- sparse polynomial ----------------------------------------------------

using SparsePoly = std::map<int, BigInt>;

inline SparsePoly sp_from(const QPoly& p) {
    SparsePoly s;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) s[p.min_deg() + static_cast<int>(i)] = p.coeffs()[i];
    return s;
}

inline QPoly sp_to_qpoly(const SparsePoly& s) {
    if (s.empty()) return QPoly::zero();
    int lo = s.begin()->first, hi = s.rbegin()->first;
    std::vector<BigInt> cs(static_cast<size_t>(hi - lo + 1));
    for (const auto& [e, c] : s) cs[static_cast<size_t>(e - lo)] = c;
    return QPoly::from_coeffs(lo, std::move(cs));
}

inline SparsePoly sp_add(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    for (const auto& [e, c] : b) {
        r[e] += c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

inline SparsePoly sp_mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            r[ea + eb] += ca * cb;
            if (r[ea + eb] == 0) r.erase(ea + eb);
        }
    return r;
}

inline SparsePoly sp_shift(const SparsePoly& a, int k) {
    SparsePoly r;
    for (const auto& [e, c] : a) r[e + k] = c;
    return r;
}

// ---- gaussian binomial by recurrence ---------------------------------------
// [n choose k]_q = [n-1 choose k-1]_q + q^k [n-1 choose k]_q

inline SparsePoly gauss_rec(int n, int k) {
    if (k < 0 || k > n) return {};
    std::vector<std::vector<SparsePoly>> t(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        t[static_cast<size_t>(i)].resize(static_cast<size_t>(i + 1));
        for (int j = 0; j <= i; ++j) {
            if (j == 0 || j == i) {
                t[static_cast<size_t>(i)][static_cast<size_t>(j)] = {{0, BigInt(1)}};
                continue;
            }
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                sp_add(t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                       sp_shift(t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)], j));
        }
    }
    return t[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

inline QPoly gaussian_binomial(int n, int k) { return sp_to_qpoly(gauss_rec(n, k)); }

// ---- paths as words ---------------------------------------------------------
// A word is a string over '0' (up) and '1' (down). Everything below reads
// levels and descents straight off the word.

inline std::vector<int> word_levels(const std::string& w) {
    std::vector<int> lv{0};
    for (char c : w) lv.push_back(lv.back() + (c == '0' ? 1 : -1));
    return lv;
}

inline int word_maj(const std::string& w) {
    int maj = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == '1' && w[i + 1] == '0') maj += static_cast<int>(i) + 1;
    return maj;
}

inline int word_des(const std::string& w) {
    int des = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == '1' && w[i + 1] == '0') ++des;
    return des;
}

inline int word_height(const std::string& w) {
    int h = 0;
    for (int v : word_levels(w)) h = std::max(h, v);
    return h;
}

inline int word_min_level(const std::string& w) {
    int m = 0;
    for (int v : word_levels(w)) m = std::min(m, v);
    return m;
}

inline int word_ups(const std::string& w) {
    int u = 0;
    for (char c : w) u += (c == '0');
    return u;
}

inline int word_rightmost_max(const std::string& w) {
    auto lv = word_levels(w);
    int best = 0, where = 0;
    for (size_t j = 0; j < lv.size(); ++j)
        if (lv[j] >= best) {
            best = lv[j];
            where = static_cast<int>(j);
        }
    return where;
}

// h- / h+ of a Catalan word, from the definitions.
struct WordSplit {
    int h_minus;
    int h_plus;
};

inline WordSplit word_hsplit(const std::string& w) {
    auto lv = word_levels(w);
    int r = word_rightmost_max(w);
    int x = -1;
    for (int j = r; j >= 0; --j)
        if (lv[static_cast<size_t>(j)] == 1) {
            x = j;
            break;
        }
    WordSplit s{0, 0};
    for (int j = 0; j <= x; ++j) s.h_minus = std::max(s.h_minus, lv[static_cast<size_t>(j)]);
    for (int j = x; j < static_cast<int>(lv.size()); ++j)
        s.h_plus = std::max(s.h_plus, lv[static_cast<size_t>(j)]);
    return s;
}

// Membership predicates spelled out from the family definitions.
inline bool word_in_all(const std::string& w, int m, int n) {
    return static_cast<int>(w.size()) == m + n && word_ups(w) == m;
}

inline bool word_in_nonneg(const std::string& w, int m, int n) {
    return word_in_all(w, m, n) && word_min_level(w) >= 0;
}

inline bool word_in_catalan(const std::string& w, int n) { return word_in_nonneg(w, n, n); }

inline bool word_in_ballot(const std::string& w, int n, int r) {
    if (static_cast<int>(w.size()) != 2 * n || w.empty() || w[0] != '0') return false;
    auto lv = word_levels(w);
    return lv.back() == -2 * r + 2 && word_min_level(w) >= -2 * r + 2;
}

inline bool word_in_omega(const std::string& w, int n) {
    if (!word_in_catalan(w, n) || w.empty()) return false;
    WordSplit s = word_hsplit(w);
    return s.h_plus <= s.h_minus + 2;
}

inline bool word_in_ballot_star(const std::string& w, int n) {
    if (!word_in_ballot(w, n, 2)) return false;
    auto lv = word_levels(w);
    int r = word_rightmost_max(w);
    for (int j = 0; j < r; ++j)
        if (lv[static_cast<size_t>(j)] == -1) return false;
    return true;
}

inline bool word_in_ballot_star_star(const std::string& w, int n) {
    return word_in_ballot(w, n, 2) && !word_in_ballot_star(w, n);
}

inline bool word_in_height_above(const std::string& w, int n, int r) {
    return word_in_all(w, n + r - 1, n - r) && word_height(w) > 2 * r - 1;
}

inline bool word_in_height_at_most(const std::string& w, int n, int r) {
    return word_in_all(w, n + r - 1, n - r) && word_height(w) <= 2 * r - 1;
}

/// All words of the given length satisfying keep, in lexicographic order
/// ('0' < '1' matches Up < Down).
template <typename Keep>
inline std::vector<std::string> words_where(int len, Keep keep) {
    std::vector<std::string> out;
    for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
        std::string w(static_cast<size_t>(len), '0');
        for (int i = 0; i < len; ++i)
            if (mask & (1ull << (len - 1 - i))) w[static_cast<size_t>(i)] = '1';
        if (keep(w)) out.push_back(std::move(w));
    }
    return out;
}

/// Sum of q^(maj or maj-des) over the kept words.
template <typename Keep>
inline QPoly words_gen_fun(int len, Keep keep, bool maj_minus_des) {
    SparsePoly acc;
    for (const auto& w : words_where(len, keep)) {
        int v = maj_minus_des ? word_maj(w) - word_des(w) : word_maj(w);
        acc[v] += 1;
    }
    return sp_to_qpoly(acc);
}

}  // namespace oracle
