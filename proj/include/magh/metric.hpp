#pragma once

// Finite metric spaces with exact rational distances: validation, closure,
// generators and decimal quantization.

#include "magh/error.hpp"
#include "magh/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace magh {

using PointIndex = std::uint32_t;

/// Square matrix stored row-major.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T const& fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    T const& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    friend bool operator==(SquareMatrix const&, SquareMatrix const&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<Rational>;

class FiniteMetricSpace;
FiniteMetricSpace validate_metric(RationalMatrix const& matrix, std::vector<std::string> labels);

/// A finite metric space. Immutable once built; only validate_metric
/// constructs one, so every instance satisfies the metric axioms exactly.
class FiniteMetricSpace {
public:
    std::size_t size() const { return labels_.size(); }
    std::vector<std::string> const& labels() const { return labels_; }
    std::string const& label(std::size_t i) const { return labels_[i]; }
    Rational const& d(std::size_t i, std::size_t j) const { return dist_(i, j); }
    RationalMatrix const& matrix() const { return dist_; }

    /// a ≠ c, c ≠ b and d(a,b) = d(a,c) + d(c,b).
    bool smooth(std::size_t a, std::size_t c, std::size_t b) const
    {
        if (a == c || c == b)
            return false;
        if (smooth_)
            return (*smooth_)[(a * size() + c) * size() + b];
        return dist_(a, b) == dist_(a, c) + dist_(c, b);
    }

    friend bool operator==(FiniteMetricSpace const& x, FiniteMetricSpace const& y)
    {
        return x.labels_ == y.labels_ && x.dist_ == y.dist_;
    }

private:
    static constexpr std::size_t kSmoothTableLimit = 400;

    FiniteMetricSpace(std::vector<std::string> labels, RationalMatrix dist)
        : labels_(std::move(labels)), dist_(std::move(dist))
    {
        std::size_t const n = size();
        if (n > kSmoothTableLimit)
            return;
        auto table = std::make_shared<std::vector<bool>>(n * n * n, false);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) {
                if (a == c)
                    continue;
                for (std::size_t b = 0; b < n; ++b)
                    if (b != c && dist_(a, b) == dist_(a, c) + dist_(c, b))
                        (*table)[(a * n + c) * n + b] = true;
            }
        smooth_ = std::move(table);
    }

    friend FiniteMetricSpace validate_metric(RationalMatrix const&, std::vector<std::string>);

    std::vector<std::string> labels_;
    RationalMatrix dist_;
    std::shared_ptr<std::vector<bool> const> smooth_;
};

/// Checks the metric axioms and builds the space. Reports the first
/// violation in the order: labels, diagonal, off-diagonal sign, symmetry,
/// triangle inequality.
inline FiniteMetricSpace validate_metric(RationalMatrix const& matrix, std::vector<std::string> labels)
{
    std::size_t const n = matrix.size();
    using K = MetricError::Kind;
    if (labels.size() != n)
        throw MetricError(K::LabelMismatch, {labels.size(), n},
                          "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    for (std::size_t i = 0; i < n; ++i)
        if (!matrix(i, i).is_zero())
            throw MetricError(K::NonzeroDiagonal, {i},
                              "d(" + std::to_string(i) + "," + std::to_string(i) + ") = " + matrix(i, i).str() + " is not 0");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && matrix(i, j).sign() <= 0)
                throw MetricError(K::NegativeOrZeroOffDiagonal, {i, j},
                                  "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " + matrix(i, j).str() + " must be positive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix(i, j) != matrix(j, i))
                throw MetricError(K::AsymmetricAt, {i, j},
                                  "d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" + std::to_string(j) + "," + std::to_string(i) + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (matrix(i, k) > matrix(i, j) + matrix(j, k))
                    throw MetricError(K::TriangleViolation, {i, j, k},
                                      "triangle inequality fails: d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
                                          std::to_string(i) + "," + std::to_string(j) + ") + d(" + std::to_string(j) + "," +
                                          std::to_string(k) + ")");
    return FiniteMetricSpace(std::move(labels), matrix);
}

inline std::vector<std::string> index_labels(std::size_t n)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

/// All-pairs shortest-path closure in exact arithmetic. The result is the
/// largest matrix dominated by the input that satisfies the triangle
/// inequality.
inline RationalMatrix shortest_path_closure(RationalMatrix m)
{
    std::size_t const n = m.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational via = m(i, k) + m(k, j);
                if (via < m(i, j))
                    m(i, j) = std::move(via);
            }
    return m;
}

/// N equally spaced points on a circle with unit arc step.
inline FiniteMetricSpace cycle_space(std::size_t n)
{
    if (n < 3)
        throw MetricError(MetricError::Kind::NTooSmall, {n}, "cycle needs at least 3 points, got " + std::to_string(n));
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long const diff = i > j ? static_cast<long>(i - j) : static_cast<long>(j - i);
            m(i, j) = Rational(std::min(diff, static_cast<long>(n) - diff));
        }
    return validate_metric(m, index_labels(n));
}

/// Points 0..N-1 on a line, d(i,j) = |i - j|.
inline FiniteMetricSpace path_space(std::size_t n)
{
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(i > j ? static_cast<long>(i - j) : static_cast<long>(j - i));
    return validate_metric(m, index_labels(n));
}

/// Complete graph K_N: all distinct points at distance 1.
inline FiniteMetricSpace complete_space(std::size_t n)
{
    RationalMatrix m(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Rational(0);
    return validate_metric(m, index_labels(n));
}

/// Random integer weights in [1, max_w] from a seeded mt19937_64, repaired
/// by shortest-path closure. A pure function of its arguments.
inline FiniteMetricSpace random_metric(std::size_t n, std::uint64_t seed, std::uint64_t max_w)
{
    if (n < 1)
        throw MetricError(MetricError::Kind::NTooSmall, {n}, "random metric needs at least 1 point");
    if (max_w < 1)
        throw std::invalid_argument("max_w must be positive");
    std::mt19937_64 rng(seed);
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // raw engine output keeps the draw identical across standard libraries
            long const w = static_cast<long>(1 + rng() % max_w);
            m(i, j) = Rational(w);
            m(j, i) = Rational(w);
        }
    return validate_metric(shortest_path_closure(std::move(m)), index_labels(n));
}

/// Snaps decimal entries to the nearest multiple of 1/q (ties toward zero),
/// symmetrizes by taking the smaller of the two snapped entries, zeroes the
/// diagonal and applies shortest-path closure. The result generally differs
/// from the sampled space; validate it before use.
inline RationalMatrix quantize(std::vector<std::vector<std::string>> const& decimals, Integer const& q)
{
    if (q <= 0)
        throw std::invalid_argument("quantization denominator must be positive");
    std::size_t const n = decimals.size();
    for (auto const& row : decimals)
        if (row.size() != n)
            throw MetricError(MetricError::Kind::NotSquare, {n, row.size()}, "matrix is not square");
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational const value = Rational::parse_decimal(decimals[i][j]);
            if (value.sign() < 0)
                throw MetricError(MetricError::Kind::NegativeEntry, {i, j},
                                  "negative entry " + decimals[i][j] + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            m(i, j) = snap_to_grid(value, q);
        }
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(0);
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational const lo = std::min(m(i, j), m(j, i));
            m(i, j) = lo;
            m(j, i) = lo;
        }
    }
    return shortest_path_closure(std::move(m));
}

/// Builds a matrix from nested rows, rejecting ragged input.
inline RationalMatrix to_square_matrix(std::vector<std::vector<Rational>> const& rows)
{
    std::size_t const n = rows.size();
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw MetricError(MetricError::Kind::NotSquare, {i, rows[i].size()},
                              "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

} // namespace magh
