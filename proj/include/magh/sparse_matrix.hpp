#pragma once

#include "magh/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace magh {

/// Sparse integer matrix stored by column. Zero entries are never stored.
class SparseIntMatrix {
public:
    using Column = std::map<std::size_t, Integer>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    /// Adds `value` to entry (r, c).
    void add(std::size_t r, std::size_t c, Integer const& value)
    {
        check(r, c);
        if (value == 0)
            return;
        auto [it, inserted] = columns_[c].try_emplace(r, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0)
                columns_[c].erase(it);
        }
    }

    void set(std::size_t r, std::size_t c, Integer const& value)
    {
        check(r, c);
        if (value == 0)
            columns_[c].erase(r);
        else
            columns_[c][r] = value;
    }

    Integer at(std::size_t r, std::size_t c) const
    {
        check(r, c);
        auto it = columns_[c].find(r);
        return it == columns_[c].end() ? Integer(0) : it->second;
    }

    Column const& column(std::size_t c) const { return columns_.at(c); }

    std::size_t nonzeros() const
    {
        std::size_t total = 0;
        for (auto const& col : columns_)
            total += col.size();
        return total;
    }

    bool is_zero() const { return nonzeros() == 0; }

    /// Product this · other.
    SparseIntMatrix operator*(SparseIntMatrix const& other) const
    {
        if (cols() != other.rows())
            throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(cols()) + " vs " +
                                        std::to_string(other.rows()));
        SparseIntMatrix out(rows(), other.cols());
        for (std::size_t j = 0; j < other.cols(); ++j)
            for (auto const& [k, b] : other.columns_[j])
                for (auto const& [i, a] : columns_[k])
                    out.add(i, j, Integer(a * b));
        return out;
    }

    static SparseIntMatrix from_dense(std::vector<std::vector<long>> const& rows)
    {
        std::size_t const r = rows.size();
        std::size_t const c = r == 0 ? 0 : rows.front().size();
        SparseIntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("ragged dense matrix");
            for (std::size_t j = 0; j < c; ++j)
                m.set(i, j, Integer(rows[i][j]));
        }
        return m;
    }

    friend bool operator==(SparseIntMatrix const&, SparseIntMatrix const&) = default;

private:
    void check(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= columns_.size())
            throw std::out_of_range("matrix index (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                                    std::to_string(rows_) + "x" + std::to_string(columns_.size()));
    }

    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

} // namespace magh
