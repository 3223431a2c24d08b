#pragma once

// Frames (singular-point subtuples), geodesically simple chains, the frame
// subcomplexes MC_*^F, the simple decomposition of MC_*^l, 4-cuts and m_X.

#include "magh/chain_complex.hpp"
#include "magh/chains.hpp"
#include "magh/magnitude.hpp"
#include "magh/parallel.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace magh {

struct Frame {
    Tuple points;
    Rational len;

    int degree() const { return static_cast<int>(points.size()) - 1; }

    friend bool operator==(Frame const& a, Frame const& b) { return a.points == b.points; }
    friend auto operator<=>(Frame const& a, Frame const& b) { return a.points <=> b.points; }
};

inline Frame make_frame(FiniteMetricSpace const& space, Tuple points)
{
    ProperChain c = make_chain(space, std::move(points));
    return Frame{std::move(c.points), std::move(c.len)};
}

/// The endpoints together with every interior point that is not strictly
/// smooth between its neighbours.
inline Frame frame(FiniteMetricSpace const& space, ProperChain const& chain)
{
    auto const& x = chain.points;
    Tuple points;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i == 0 || i + 1 == x.size() || !space.smooth(x[i - 1], x[i], x[i + 1]))
            points.push_back(x[i]);
    Rational len = chain_length(space, points);
    return Frame{std::move(points), std::move(len)};
}

/// |φ(x)| = |x|.
inline bool is_geodesically_simple(FiniteMetricSpace const& space, ProperChain const& chain)
{
    return frame(space, chain).len == chain.len;
}

namespace detail {

// Strictly increasing sequences a < y_1 < ... < y_k < b with consecutive
// entries comparable in the interval order, k ≤ max_len. Includes the
// empty sequence.
inline std::vector<Tuple> interval_sequences(FiniteMetricSpace const& space, PointIndex a, PointIndex b, int max_len)
{
    std::vector<PointIndex> interior;
    for (std::size_t c = 0; c < space.size(); ++c)
        if (space.smooth(a, c, b))
            interior.push_back(static_cast<PointIndex>(c));
    std::vector<Tuple> out{Tuple{}};
    Tuple current;
    auto extend = [&](auto& self, PointIndex last) -> void {
        if (static_cast<int>(current.size()) >= max_len)
            return;
        for (PointIndex y : interior) {
            // last < y in the order of I(a, b); last == a means y is unconstrained
            if (last != a && !space.smooth(a, last, y))
                continue;
            current.push_back(y);
            out.push_back(current);
            self(self, y);
            current.pop_back();
        }
    };
    extend(extend, a);
    return out;
}

} // namespace detail

/// Bases of MC_n^F for 0 ≤ n ≤ top_degree: the geodesically simple chains
/// whose frame is exactly F. Each segment between consecutive frame points
/// is a chain of the interval order; candidates whose frame gains or loses
/// points are discarded.
inline GradedBasis frame_bases(FiniteMetricSpace const& space, Frame const& f, int top_degree)
{
    GradedBasis bases(static_cast<std::size_t>(std::max(top_degree, 0)) + 1);
    int const m = f.degree();
    if (m > top_degree || m < 0)
        return bases;
    int const budget = top_degree - m;
    std::vector<std::vector<Tuple>> segments;
    for (int i = 0; i < m; ++i)
        segments.push_back(detail::interval_sequences(space, f.points[static_cast<std::size_t>(i)],
                                                      f.points[static_cast<std::size_t>(i) + 1], budget));

    Tuple current{f.points.front()};
    auto combine = [&](auto& self, int seg, int used) -> void {
        if (seg == m) {
            ProperChain chain{current, f.len};
            if (frame(space, chain).points == f.points)
                bases[static_cast<std::size_t>(chain.degree())].push_back(std::move(chain));
            return;
        }
        for (auto const& s : segments[static_cast<std::size_t>(seg)]) {
            int const k = static_cast<int>(s.size());
            if (used + k > budget)
                continue;
            std::size_t const mark = current.size();
            current.insert(current.end(), s.begin(), s.end());
            current.push_back(f.points[static_cast<std::size_t>(seg) + 1]);
            self(self, seg + 1, used + k);
            current.resize(mark);
        }
    };
    combine(combine, 0, 0);
    for (auto& b : bases)
        std::sort(b.begin(), b.end());
    return bases;
}

/// MC_*^F over degrees 0..n_max+1, so that homology is exact through
/// degree n_max. Throws NotASubcomplex if the basis is not closed under ∂.
inline ChainComplexZ frame_subcomplex(FiniteMetricSpace const& space, Frame const& f, int n_max)
{
    if (!is_proper(f.points))
        throw std::invalid_argument("frame is not a proper chain");
    return assemble_complex(space, frame_bases(space, f, n_max + 1));
}

/// MC_*^{simp,l} split by frame. Keys are the frames of geodesically simple
/// chains of length l with degree between 1 and n_max; each complex covers
/// degrees 0..n_max+1. Bases come from grouping the enumerated chains, not
/// from frame_bases.
inline std::map<Frame, ChainComplexZ> simp_decomposition(FiniteMetricSpace const& space, Rational const& len,
                                                         int n_max, std::uint64_t cap = default_enumeration_cap())
{
    std::map<Frame, ChainComplexZ> out;
    if (len.sign() <= 0 || n_max < 1)
        return out;
    std::map<Frame, GradedBasis> grouped;
    auto const top = static_cast<std::size_t>(n_max) + 1;
    for (int n = 1; n <= n_max + 1; ++n)
        for (auto& chain : chains_of_length(space, n, len, cap)) {
            Frame f = frame(space, chain);
            if (f.len != chain.len)
                continue;
            auto it = grouped.find(f);
            if (it == grouped.end()) {
                if (n > n_max)
                    continue;
                it = grouped.emplace(std::move(f), GradedBasis(top + 1)).first;
            }
            it->second[static_cast<std::size_t>(n)].push_back(std::move(chain));
        }
    for (auto& [f, bases] : grouped)
        out.emplace(f, assemble_complex(space, bases));
    return out;
}

/// MH_n^{simp,l} for 0 ≤ n ≤ n_max as the direct sum over frames.
inline std::vector<HomologyGroup> simp_homology(FiniteMetricSpace const& space, Rational const& len, int n_max,
                                                std::uint64_t cap = default_enumeration_cap())
{
    std::vector<std::vector<HomologyGroup>> per_degree(static_cast<std::size_t>(n_max) + 1);
    for (auto const& [f, complex] : simp_decomposition(space, len, n_max, cap)) {
        auto groups = complex_homology_all(complex);
        for (int n = 0; n <= n_max; ++n)
            per_degree[static_cast<std::size_t>(n)].push_back(groups[static_cast<std::size_t>(n)]);
    }
    std::vector<HomologyGroup> out;
    for (auto const& gs : per_degree)
        out.push_back(direct_sum(gs));
    return out;
}

// ---------------------------------------------------------------------------
// 4-cuts and m_X

struct FourCut {
    ProperChain chain;

    Rational const& len() const { return chain.len; }

    friend bool operator==(FourCut const&, FourCut const&) = default;
};

/// m_X with +∞ represented by an empty value.
struct MxResult {
    std::optional<Rational> value;
    std::optional<FourCut> witness;

    bool is_infinite() const { return !value.has_value(); }

    /// l < m_X, exact.
    bool exceeds(Rational const& l) const { return is_infinite() || l < *value; }
};

/// Every proper 3-chain whose frame is its endpoint pair and whose length
/// exceeds d(x_0, x_3), sorted by (length, tuple).
inline std::vector<FourCut> four_cuts(FiniteMetricSpace const& space, unsigned threads = default_thread_count())
{
    std::size_t const n = space.size();
    std::vector<std::vector<FourCut>> per_start(n);
    parallel_for(n, threads, [&](std::size_t x0) {
        for (std::size_t x1 = 0; x1 < n; ++x1)
            for (std::size_t x2 = 0; x2 < n; ++x2) {
                if (!space.smooth(x0, x1, x2))
                    continue;
                for (std::size_t x3 = 0; x3 < n; ++x3) {
                    if (!space.smooth(x1, x2, x3))
                        continue;
                    Rational len = space.d(x0, x1) + space.d(x1, x2) + space.d(x2, x3);
                    if (space.d(x0, x3) < len)
                        per_start[x0].push_back(FourCut{ProperChain{
                            Tuple{static_cast<PointIndex>(x0), static_cast<PointIndex>(x1), static_cast<PointIndex>(x2),
                                  static_cast<PointIndex>(x3)},
                            std::move(len)}});
                }
            }
    });
    std::vector<FourCut> out;
    for (auto& v : per_start)
        for (auto& c : v)
            out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](FourCut const& a, FourCut const& b) {
        if (a.len() != b.len())
            return a.len() < b.len();
        return a.chain.points < b.chain.points;
    });
    return out;
}

/// Least 4-cut length, witnessed by the first 4-cut in sorted order.
inline MxResult m_x(FiniteMetricSpace const& space, unsigned threads = default_thread_count())
{
    auto cuts = four_cuts(space, threads);
    if (cuts.empty())
        return {};
    return MxResult{cuts.front().len(), cuts.front()};
}

} // namespace magh
