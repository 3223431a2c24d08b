#pragma once

// Independent reference implementations used as test oracles. They share
// nothing with the engine beyond FiniteMetricSpace and the number types:
// dense matrices, brute-force enumeration straight from the definitions,
// rank over Q, a textbook dense Smith form, and determinantal divisors.

#include "magh/metric.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using magh::FiniteMetricSpace;
using magh::Integer;
using magh::Rational;
using Dense = std::vector<std::vector<Integer>>;
using Points = std::vector<std::size_t>;

inline Rational length(FiniteMetricSpace const& x, Points const& p)
{
    Rational total(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        total = total + x.d(p[i], p[i + 1]);
    return total;
}

// a < c < b read literally from the definition.
inline bool between(FiniteMetricSpace const& x, std::size_t a, std::size_t c, std::size_t b)
{
    return a != c && c != b && x.d(a, b) == x.d(a, c) + x.d(c, b);
}

/// Every tuple of N^{n+1} with distinct neighbours, in lexicographic order.
inline std::vector<Points> proper_tuples(FiniteMetricSpace const& x, int n)
{
    std::vector<Points> out;
    std::size_t const N = x.size();
    if (N == 0)
        return out;
    Points t(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            ok = ok && t[i] != t[i + 1];
        if (ok)
            out.push_back(t);
        std::size_t k = t.size();
        while (k > 0 && ++t[k - 1] == N)
            t[--k] = 0;
        if (k == 0)
            break;
    }
    return out;
}

inline std::vector<Points> proper_tuples_of_length(FiniteMetricSpace const& x, int n, Rational const& l)
{
    std::vector<Points> out;
    for (auto& t : proper_tuples(x, n))
        if (length(x, t) == l)
            out.push_back(std::move(t));
    return out;
}

/// Dense matrix of ∂_n : MC_n^l → MC_{n−1}^l, rows indexed by `lower`.
inline Dense boundary_matrix(FiniteMetricSpace const& x, std::vector<Points> const& lower,
                             std::vector<Points> const& upper)
{
    std::map<Points, std::size_t> row;
    for (std::size_t i = 0; i < lower.size(); ++i)
        row[lower[i]] = i;
    Dense m(lower.size(), std::vector<Integer>(upper.size(), 0));
    for (std::size_t c = 0; c < upper.size(); ++c) {
        auto const& t = upper[c];
        for (std::size_t i = 1; i + 1 < t.size(); ++i)
            if (between(x, t[i - 1], t[i], t[i + 1])) {
                Points face = t;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                m[row.at(face)][c] += (i % 2 == 0) ? 1 : -1;
            }
    }
    return m;
}

/// Rank over Q by Gaussian elimination with exact rationals.
inline std::size_t rank_q(Dense const& m)
{
    if (m.empty() || m[0].empty())
        return 0;
    std::vector<std::vector<mpq_class>> a(m.size(), std::vector<mpq_class>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            a[i][j] = m[i][j];
    std::size_t r = 0;
    for (std::size_t col = 0; col < a[0].size() && r < a.size(); ++col) {
        std::size_t p = r;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][col] == 0)
                continue;
            mpq_class const f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < a[i].size(); ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Textbook dense Smith form: move the smallest entry to the corner, clear
/// its row and column by division with remainder, repeat; then fix up
/// divisibility along the diagonal. Returns the nonzero diagonal.
inline std::vector<Integer> smith_dense(Dense a)
{
    std::vector<Integer> diag;
    std::size_t const rows = a.size();
    std::size_t const cols = rows ? a[0].size() : 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                goto done;
            std::swap(a[t], a[pi]);
            for (auto& r : a)
                std::swap(r[t], r[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean)
                continue;
            // the corner must divide everything left, otherwise fold a bad
            // row into row t and go again
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
done:
    return diag;
}

inline Integer determinant(Dense m)
{
    std::size_t const n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        Dense minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Integer const term = m[0][c] * determinant(std::move(minor));
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > n)
        return;
    while (true) {
        out.push_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

/// Invariant factors from determinantal divisors: D_k = gcd of all k×k
/// minors, d_k = D_k / D_{k−1}. Exponential; meant for matrices up to 4×4.
inline std::vector<Integer> invariant_factors_by_minors(Dense const& m)
{
    std::size_t const rows = m.size();
    std::size_t const cols = rows ? m[0].size() : 0;
    std::vector<Integer> out;
    Integer previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(rows, k, rs);
        subsets(cols, k, cs);
        Integer g = 0;
        for (auto const& r : rs)
            for (auto const& c : cs) {
                Dense minor(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor[i][j] = m[r[i]][c[j]];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(determinant(std::move(minor))).get_mpz_t());
            }
        if (g == 0)
            break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

struct Group {
    std::size_t betti = 0;
    std::vector<Integer> torsion;
};

/// H_n of MC_*^l from dense matrices: betti = dim C_n − rank ∂_n − rank ∂_{n+1}
/// over Q; torsion = Smith factors of ∂_{n+1} above 1.
inline Group magnitude_group(FiniteMetricSpace const& x, Rational const& l, int n)
{
    auto const below = n > 0 ? proper_tuples_of_length(x, n - 1, l) : std::vector<Points>{};
    auto const here = proper_tuples_of_length(x, n, l);
    auto const above = proper_tuples_of_length(x, n + 1, l);
    std::size_t const r_in = n > 0 ? rank_q(boundary_matrix(x, below, here)) : 0;
    Dense const out_matrix = boundary_matrix(x, here, above);
    std::size_t const r_out = rank_q(out_matrix);
    Group g;
    g.betti = here.size() - r_in - r_out;
    for (auto const& f : smith_dense(out_matrix))
        if (f > 1)
            g.torsion.push_back(f);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

/// 4-cuts read from the three-condition form: neighbours distinct, both
/// interior points on a geodesic between their neighbours (plain equality),
/// and d(x_0, x_3) strictly below the length.
inline std::vector<Points> four_cuts(FiniteMetricSpace const& x)
{
    std::vector<Points> out;
    std::size_t const N = x.size();
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t c = 0; c < N; ++c)
                for (std::size_t e = 0; e < N; ++e) {
                    if (a == b || b == c || c == e)
                        continue;
                    if (x.d(a, c) != x.d(a, b) + x.d(b, c) || x.d(b, e) != x.d(b, c) + x.d(c, e))
                        continue;
                    if (x.d(a, e) < x.d(a, b) + x.d(b, c) + x.d(c, e))
                        out.push_back({a, b, c, e});
                }
    return out;
}

} // namespace oracle
