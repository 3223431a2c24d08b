#pragma once

// Invariant factors of sparse integer matrices.

#include "magh/sparse_matrix.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace magh {

namespace detail {

/// Turns a list of diagonal entries into the invariant-factor chain
/// d_1 | d_2 | ... with the same product, keeping the length.
inline std::vector<Integer> normalize_diagonal(std::vector<Integer> diagonal)
{
    std::vector<Integer> ones, rest;
    for (auto& d : diagonal) {
        d = abs(d);
        if (d == 1)
            ones.push_back(d);
        else
            rest.push_back(std::move(d));
    }
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            Integer g = gcd(rest[i], rest[j]);
            Integer l = lcm(rest[i], rest[j]);
            rest[i] = std::move(g);
            rest[j] = std::move(l);
        }
    std::vector<Integer> out;
    out.reserve(diagonal.size());
    std::size_t const n_ones = ones.size();
    out.assign(n_ones, Integer(1));
    for (auto& d : rest) {
        if (d == 1)
            out.insert(out.begin(), Integer(1));
        else
            out.push_back(std::move(d));
    }
    return out;
}

class Eliminator {
public:
    explicit Eliminator(SparseIntMatrix const& m) : rows_(m.rows()), cols_(m.cols())
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (auto const& [r, v] : m.column(c)) {
                rows_[r].emplace(c, v);
                cols_[c].insert(r);
            }
    }

    std::vector<Integer> run()
    {
        std::vector<Integer> diagonal;
        for (std::size_t c = 0; c < cols_.size(); ++c)
            while (!cols_[c].empty())
                diagonal.push_back(eliminate(pick_in_column(c), c));
        return diagonal;
    }

private:
    using Row = std::map<std::size_t, Integer>;

    // Smallest |entry| in column c, ties broken by shortest row.
    std::size_t pick_in_column(std::size_t c) const
    {
        std::size_t best = *cols_[c].begin();
        for (std::size_t r : cols_[c]) {
            int const cmp = mpz_cmpabs(rows_[r].at(c).get_mpz_t(), rows_[best].at(c).get_mpz_t());
            if (cmp < 0 || (cmp == 0 && rows_[r].size() < rows_[best].size()))
                best = r;
        }
        return best;
    }

    // row[target] -= q * row[source]
    void axpy(std::size_t target, std::size_t source, Integer const& q)
    {
        Row& t = rows_[target];
        for (auto const& [c, v] : rows_[source]) {
            auto [it, inserted] = t.try_emplace(c, 0);
            it->second -= q * v;
            if (it->second == 0) {
                t.erase(it);
                cols_[c].erase(target);
            } else if (inserted) {
                cols_[c].insert(target);
            }
        }
    }

    // Reduces the pivot's row and column to zero apart from the pivot,
    // moving the pivot to a smaller entry whenever a remainder survives.
    // Removes the final pivot row and column and returns the pivot.
    Integer eliminate(std::size_t p, std::size_t c)
    {
        for (;;) {
            Integer const pivot = rows_[p].at(c);
            std::vector<std::size_t> others;
            for (std::size_t r : cols_[c])
                if (r != p)
                    others.push_back(r);
            for (std::size_t r : others) {
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), rows_[r].at(c).get_mpz_t(), pivot.get_mpz_t());
                if (q != 0)
                    axpy(r, p, q);
            }
            if (cols_[c].size() > 1) {
                p = pick_in_column(c);
                continue;
            }
            // Column c now holds only the pivot, so column operations
            // against it touch row p alone.
            Row& row = rows_[p];
            std::size_t next_col = c;
            for (auto it = row.begin(); it != row.end();) {
                if (it->first == c) {
                    ++it;
                    continue;
                }
                mpz_tdiv_r(it->second.get_mpz_t(), it->second.get_mpz_t(), pivot.get_mpz_t());
                if (it->second == 0) {
                    cols_[it->first].erase(p);
                    it = row.erase(it);
                } else {
                    if (next_col == c || mpz_cmpabs(it->second.get_mpz_t(), row.at(next_col).get_mpz_t()) < 0)
                        next_col = it->first;
                    ++it;
                }
            }
            if (next_col != c) {
                c = next_col;
                continue;
            }
            for (auto const& [col, v] : row)
                cols_[col].erase(p);
            row.clear();
            return abs(pivot);
        }
    }

    std::vector<Row> rows_;
    std::vector<std::set<std::size_t>> cols_;
};

} // namespace detail

/// Invariant factors d_1 | d_2 | ... | d_r of m, where r = rank(m).
/// Elimination is fraction-free over arbitrary-precision integers with the
/// pivot chosen as the smallest nonzero absolute value.
inline std::vector<Integer> snf(SparseIntMatrix const& m)
{
    return detail::normalize_diagonal(detail::Eliminator(m).run());
}

inline std::size_t rank(SparseIntMatrix const& m)
{
    return snf(m).size();
}

} // namespace magh
