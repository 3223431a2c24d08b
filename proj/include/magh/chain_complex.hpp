#pragma once

// Integer chain complexes, their homology, direct sums and tensor products.

#include "magh/error.hpp"
#include "magh/smith.hpp"
#include "magh/sparse_matrix.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace magh {

/// A finitely generated abelian group Z^betti ⊕ Z/t_1 ⊕ ... with
/// t_1 | t_2 | ... and every t_i > 1.
struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string out;
        if (betti > 0)
            out = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
        for (auto const& t : torsion) {
            if (!out.empty())
                out += " + ";
            out += "Z/" + t.get_str();
        }
        return out;
    }

    friend bool operator==(HomologyGroup const&, HomologyGroup const&) = default;
};

/// Direct sum of groups, with the torsion merged back into invariant-factor
/// form.
inline HomologyGroup direct_sum(std::vector<HomologyGroup> const& groups)
{
    HomologyGroup out;
    std::vector<Integer> torsion;
    for (auto const& g : groups) {
        out.betti += g.betti;
        torsion.insert(torsion.end(), g.torsion.begin(), g.torsion.end());
    }
    for (auto& t : detail::normalize_diagonal(std::move(torsion)))
        if (t > 1)
            out.torsion.push_back(std::move(t));
    return out;
}

/// Chain complex of free Z-modules over a contiguous degree range
/// [lowest, highest]. Degrees may be negative. The boundary in degree d
/// maps degree d to degree d-1; the boundary out of the lowest degree has
/// no rows.
class ChainComplexZ {
public:
    ChainComplexZ() = default;

    ChainComplexZ(int lowest, std::vector<std::size_t> sizes) : lowest_(lowest), sizes_(std::move(sizes))
    {
        boundaries_.reserve(sizes_.size());
        for (std::size_t k = 0; k < sizes_.size(); ++k)
            boundaries_.emplace_back(k == 0 ? 0 : sizes_[k - 1], sizes_[k]);
    }

    int lowest() const { return lowest_; }
    int highest() const { return lowest_ + static_cast<int>(sizes_.size()) - 1; }
    bool in_range(int degree) const { return degree >= lowest() && degree <= highest(); }

    /// Basis size in a degree; 0 outside the range.
    std::size_t size(int degree) const { return in_range(degree) ? sizes_[index(degree)] : 0; }

    SparseIntMatrix const& boundary(int degree) const
    {
        if (!in_range(degree))
            throw DegreeOutOfRange(degree, lowest(), highest());
        return boundaries_[index(degree)];
    }

    void set_boundary(int degree, SparseIntMatrix m)
    {
        if (!in_range(degree))
            throw DegreeOutOfRange(degree, lowest(), highest());
        if (m.cols() != size(degree) || m.rows() != size(degree - 1))
            throw std::invalid_argument("boundary in degree " + std::to_string(degree) + " has shape " +
                                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                        std::to_string(size(degree - 1)) + "x" + std::to_string(size(degree)));
        boundaries_[index(degree)] = std::move(m);
    }

    /// Whether every composite ∂_{d-1} ∘ ∂_d vanishes.
    bool squares_to_zero() const
    {
        for (int d = lowest() + 1; d <= highest(); ++d)
            if (!(boundary(d - 1) * boundary(d)).is_zero())
                return false;
        return true;
    }

    /// Alternating sum of basis sizes.
    long euler_characteristic() const
    {
        long chi = 0;
        for (int d = lowest(); d <= highest(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(size(d));
        return chi;
    }

private:
    std::size_t index(int degree) const { return static_cast<std::size_t>(degree - lowest_); }

    int lowest_ = 0;
    std::vector<std::size_t> sizes_;
    std::vector<SparseIntMatrix> boundaries_;
};

/// H_n(C): betti = dim ker ∂_n − rank ∂_{n+1}, torsion = invariant factors
/// of ∂_{n+1} above 1.
inline HomologyGroup complex_homology(ChainComplexZ const& c, int degree)
{
    if (!c.in_range(degree))
        throw DegreeOutOfRange(degree, c.lowest(), c.highest());
    std::size_t const rank_out = rank(c.boundary(degree));
    HomologyGroup g;
    std::size_t rank_in = 0;
    if (c.in_range(degree + 1)) {
        auto factors = snf(c.boundary(degree + 1));
        rank_in = factors.size();
        for (auto& f : factors)
            if (f > 1)
                g.torsion.push_back(std::move(f));
    }
    g.betti = c.size(degree) - rank_out - rank_in;
    return g;
}

/// Homology in every degree of the range, one SNF per boundary matrix.
inline std::vector<HomologyGroup> complex_homology_all(ChainComplexZ const& c)
{
    std::vector<std::vector<Integer>> factors;
    for (int d = c.lowest(); d <= c.highest(); ++d)
        factors.push_back(snf(c.boundary(d)));
    std::vector<HomologyGroup> out;
    for (int d = c.lowest(); d <= c.highest(); ++d) {
        std::size_t const k = static_cast<std::size_t>(d - c.lowest());
        HomologyGroup g;
        std::size_t rank_in = 0;
        if (k + 1 < factors.size()) {
            rank_in = factors[k + 1].size();
            for (auto const& f : factors[k + 1])
                if (f > 1)
                    g.torsion.push_back(f);
        }
        g.betti = c.size(d) - factors[k].size() - rank_in;
        out.push_back(std::move(g));
    }
    return out;
}

/// (A⊗B)_k = ⊕_{i+j=k} A_i ⊗ B_j with ∂(a⊗b) = ∂a⊗b + (−1)^{deg a} a⊗∂b.
/// The basis of each degree lists blocks by increasing i, and inside a block
/// pairs (a, b) in row-major order.
inline ChainComplexZ tensor(ChainComplexZ const& a, ChainComplexZ const& b)
{
    int const lo = a.lowest() + b.lowest();
    int const hi = a.highest() + b.highest();
    if (hi < lo)
        return ChainComplexZ(lo, {});

    // offset[k][i] = position of block A_i ⊗ B_{k-i} inside degree k.
    std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(hi - lo + 1),
                                                 std::vector<std::size_t>(a.highest() - a.lowest() + 1, 0));
    std::vector<std::size_t> sizes(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int k = lo; k <= hi; ++k) {
        auto const kk = static_cast<std::size_t>(k - lo);
        for (int i = a.lowest(); i <= a.highest(); ++i) {
            offset[kk][static_cast<std::size_t>(i - a.lowest())] = sizes[kk];
            sizes[kk] += a.size(i) * b.size(k - i);
        }
    }
    ChainComplexZ out(lo, sizes);
    auto position = [&](int k, int i, std::size_t ai, std::size_t bj) {
        return offset[static_cast<std::size_t>(k - lo)][static_cast<std::size_t>(i - a.lowest())] + ai * b.size(k - i) + bj;
    };

    for (int k = lo + 1; k <= hi; ++k) {
        SparseIntMatrix m(sizes[static_cast<std::size_t>(k - 1 - lo)], sizes[static_cast<std::size_t>(k - lo)]);
        for (int i = a.lowest(); i <= a.highest(); ++i) {
            int const j = k - i;
            if (!b.in_range(j) || a.size(i) == 0 || b.size(j) == 0)
                continue;
            int const sign = (i % 2 == 0) ? 1 : -1;
            for (std::size_t ai = 0; ai < a.size(i); ++ai)
                for (std::size_t bj = 0; bj < b.size(j); ++bj) {
                    std::size_t const col = position(k, i, ai, bj);
                    if (a.in_range(i - 1))
                        for (auto const& [r, v] : a.boundary(i).column(ai))
                            m.add(position(k - 1, i - 1, r, bj), col, v);
                    if (b.in_range(j - 1))
                        for (auto const& [r, v] : b.boundary(j).column(bj))
                            m.add(position(k - 1, i, ai, r), col, Integer(sign * v));
                }
        }
        out.set_boundary(k, std::move(m));
    }
    return out;
}

} // namespace magh
