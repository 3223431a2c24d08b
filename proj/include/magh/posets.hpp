#pragma once

// Interval posets I(a, b), their order complexes and reduced chain
// complexes, the tensor-product route to MH_n^F, and the MH_2 certificate.

#include "magh/chain_complex.hpp"
#include "magh/error.hpp"
#include "magh/frames.hpp"
#include "magh/metric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace magh {

/// The points strictly smooth between a and b, ordered by
/// x ≤ y ⇔ d(a, y) = d(a, x) + d(x, y). Elements are listed in a linear
/// extension of the order (ascending distance from a, then index).
class IntervalPoset {
public:
    IntervalPoset(PointIndex a, PointIndex b, std::vector<PointIndex> elements, std::vector<std::vector<bool>> leq)
        : a_(a), b_(b), elements_(std::move(elements)), leq_(std::move(leq))
    {
    }

    PointIndex a() const { return a_; }
    PointIndex b() const { return b_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    std::vector<PointIndex> const& elements() const { return elements_; }

    /// Order on element positions.
    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
    bool comparable(std::size_t i, std::size_t j) const { return leq_[i][j] || leq_[j][i]; }

private:
    PointIndex a_, b_;
    std::vector<PointIndex> elements_;
    std::vector<std::vector<bool>> leq_;
};

inline IntervalPoset interval_poset(FiniteMetricSpace const& space, PointIndex a, PointIndex b)
{
    if (a >= space.size() || b >= space.size())
        throw std::out_of_range("interval endpoint outside the space");
    if (a == b)
        throw SamePoint(a);
    std::vector<PointIndex> elements;
    for (std::size_t c = 0; c < space.size(); ++c)
        if (space.smooth(a, c, b))
            elements.push_back(static_cast<PointIndex>(c));
    std::stable_sort(elements.begin(), elements.end(),
                     [&](PointIndex x, PointIndex y) { return space.d(a, x) < space.d(a, y); });
    std::size_t const n = elements.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PointIndex const x = elements[i], y = elements[j];
            bool const from_a = i == j || space.d(a, y) == space.d(a, x) + space.d(x, y);
            bool const from_b = i == j || space.d(x, b) == space.d(x, y) + space.d(y, b);
            if (from_a != from_b)
                throw Error("interval order of (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") disagrees between endpoints at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
            leq[i][j] = from_a;
        }
    return IntervalPoset(a, b, std::move(elements), std::move(leq));
}

/// Reflexive, antisymmetric and transitive, checked exhaustively.
inline bool is_partial_order(IntervalPoset const& p)
{
    std::size_t const n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.leq(i, i))
            return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && p.leq(i, j) && p.leq(j, i))
                return false;
            for (std::size_t k = 0; k < n; ++k)
                if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k))
                    return false;
        }
    }
    return true;
}

/// Totally ordered subsets of a poset. simplices[k] holds the k-simplices,
/// each as element positions in increasing order, listed lexicographically.
struct OrderComplex {
    std::vector<PointIndex> vertices;
    std::vector<std::vector<std::vector<std::size_t>>> simplices;

    bool empty() const { return simplices.empty(); }
    int dimension() const { return static_cast<int>(simplices.size()) - 1; }
};

inline OrderComplex order_complex(IntervalPoset const& p)
{
    OrderComplex k{p.elements(), {}};
    std::vector<std::size_t> current;
    auto extend = [&](auto& self) -> void {
        std::size_t const dim = current.size() - 1;
        if (k.simplices.size() <= dim)
            k.simplices.resize(dim + 1);
        k.simplices[dim].push_back(current);
        for (std::size_t j = current.back() + 1; j < p.size(); ++j)
            if (p.less(current.back(), j)) {
                current.push_back(j);
                self(self);
                current.pop_back();
            }
    };
    for (std::size_t i = 0; i < p.size(); ++i) {
        current.assign(1, i);
        extend(extend);
    }
    for (auto& layer : k.simplices)
        std::sort(layer.begin(), layer.end());
    return k;
}

/// Augmented simplicial chain complex: degree n ≥ 0 spanned by n-simplices,
/// degree −1 by a single generator, ∂ = Σ (−1)^i (delete vertex i).
inline ChainComplexZ reduced_complex(OrderComplex const& k)
{
    std::vector<std::size_t> sizes{1};
    for (auto const& layer : k.simplices)
        sizes.push_back(layer.size());
    ChainComplexZ c(-1, sizes);
    if (k.empty())
        return c;
    SparseIntMatrix augmentation(1, k.simplices[0].size());
    for (std::size_t v = 0; v < k.simplices[0].size(); ++v)
        augmentation.set(0, v, 1);
    c.set_boundary(0, std::move(augmentation));
    for (std::size_t dim = 1; dim < k.simplices.size(); ++dim) {
        std::map<std::vector<std::size_t>, std::size_t> faces;
        for (std::size_t i = 0; i < k.simplices[dim - 1].size(); ++i)
            faces.emplace(k.simplices[dim - 1][i], i);
        SparseIntMatrix m(k.simplices[dim - 1].size(), k.simplices[dim].size());
        for (std::size_t col = 0; col < k.simplices[dim].size(); ++col) {
            auto const& s = k.simplices[dim][col];
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<std::size_t> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                m.add(faces.at(face), col, i % 2 == 0 ? 1 : -1);
            }
        }
        c.set_boundary(static_cast<int>(dim), std::move(m));
    }
    return c;
}

/// Connected components of the comparability graph of I(a, b); 0 when the
/// poset is empty.
inline std::size_t poset_component_count(FiniteMetricSpace const& space, PointIndex a, PointIndex b)
{
    IntervalPoset const p = interval_poset(space, a, b);
    std::vector<std::size_t> parent(p.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p.comparable(i, j)) {
                auto ri = find(i), rj = find(j);
                if (ri != rj) {
                    parent[ri] = rj;
                    --components;
                }
            }
    return components;
}

/// C_*(Δ_{0,1}) ⊗ ... ⊗ C_*(Δ_{m−1,m}) for the frame's consecutive pairs.
inline ChainComplexZ frame_tensor_complex(FiniteMetricSpace const& space, Frame const& f)
{
    if (f.degree() < 1)
        throw std::invalid_argument("frame needs at least two points");
    if (!is_proper(f.points))
        throw std::invalid_argument("frame is not a proper chain");
    ChainComplexZ product;
    for (std::size_t i = 0; i + 1 < f.points.size(); ++i) {
        ChainComplexZ factor = reduced_complex(order_complex(interval_poset(space, f.points[i], f.points[i + 1])));
        product = i == 0 ? std::move(factor) : tensor(product, factor);
    }
    return product;
}

/// True when no refinement of F by chains of its interval posets turns a
/// frame point smooth, so that every such refinement keeps frame F. For
/// these frames MC_*^F is exactly the complex of refinements and agrees
/// with the tensor product generator for generator. Every frame with
/// |F| < m_X qualifies: a frame point made smooth by a refinement yields a
/// 4-cut of length at most |F|.
inline bool refinements_keep_frame(FiniteMetricSpace const& space, Frame const& f)
{
    auto const& x = f.points;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        std::vector<PointIndex> before{x[i - 1]}, after{x[i + 1]};
        for (std::size_t c = 0; c < space.size(); ++c) {
            if (space.smooth(x[i - 1], c, x[i]))
                before.push_back(static_cast<PointIndex>(c));
            if (space.smooth(x[i], c, x[i + 1]))
                after.push_back(static_cast<PointIndex>(c));
        }
        for (PointIndex p : before)
            for (PointIndex q : after)
                if (p != q && space.smooth(p, x[i], q))
                    return false;
    }
    return true;
}

/// MH_n^F computed as H_{n−2m} of the tensor product of the reduced
/// interval complexes, where F has m + 1 points.
inline HomologyGroup frame_homology_via_posets(FiniteMetricSpace const& space, Frame const& f, int n)
{
    ChainComplexZ const product = frame_tensor_complex(space, f);
    int const shifted = n - 2 * f.degree();
    if (!product.in_range(shifted))
        return {};
    return complex_homology(product, shifted);
}

struct Certificate {
    PointIndex a = 0, b = 0;
    Rational distance;
    std::size_t components = 0;
    std::size_t mh2_lower_bound = 0;
};

/// Lower bound on rank MH_2^{d(a,b)}: (components of I(a, b)) − 1, clamped
/// at 0. Never an exact rank.
inline Certificate mh2_certificate(FiniteMetricSpace const& space, PointIndex a, PointIndex b)
{
    std::size_t const comps = poset_component_count(space, a, b);
    return Certificate{a, b, space.d(a, b), comps, comps > 0 ? comps - 1 : 0};
}

} // namespace magh
