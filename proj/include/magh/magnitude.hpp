#pragma once

// The magnitude chain complex MC_*^l and the homology table MH_n^l.

#include "magh/chain_complex.hpp"
#include "magh/chains.hpp"
#include "magh/error.hpp"
#include "magh/parallel.hpp"

#include <set>
#include <unordered_map>
#include <vector>

namespace magh {

/// Bases indexed by degree, starting at degree 0.
using GradedBasis = std::vector<std::vector<ProperChain>>;

/// Builds the complex spanned by `bases` with boundary matrices taken from
/// the magnitude boundary under `smooth`. Every boundary term must land in
/// the basis one degree down, otherwise NotASubcomplex is thrown.
template <typename Smooth>
ChainComplexZ assemble_complex(FiniteMetricSpace const& space, GradedBasis const& bases, Smooth&& smooth)
{
    std::vector<std::size_t> sizes;
    for (auto const& b : bases)
        sizes.push_back(b.size());
    ChainComplexZ complex(0, sizes);
    std::unordered_map<Tuple, std::size_t, TupleHash> lower;
    for (std::size_t d = 1; d < bases.size(); ++d) {
        lower.clear();
        for (std::size_t i = 0; i < bases[d - 1].size(); ++i)
            lower.emplace(bases[d - 1][i].points, i);
        SparseIntMatrix m(bases[d - 1].size(), bases[d].size());
        for (std::size_t col = 0; col < bases[d].size(); ++col) {
            FormalSum const faces = boundary_with(space, bases[d][col], smooth);
            for (auto const& [face, coeff] : faces.terms()) {
                auto it = lower.find(face.points);
                if (it == lower.end())
                    throw NotASubcomplex("boundary term leaves the basis in degree " + std::to_string(d - 1));
                m.add(it->second, col, coeff);
            }
        }
        complex.set_boundary(static_cast<int>(d), std::move(m));
    }
    return complex;
}

inline ChainComplexZ assemble_complex(FiniteMetricSpace const& space, GradedBasis const& bases)
{
    return assemble_complex(space, bases, [&](std::size_t a, std::size_t c, std::size_t b) { return space.smooth(a, c, b); });
}

/// Bases of MC_n^l for 0 ≤ n ≤ top_degree.
inline GradedBasis magnitude_bases(FiniteMetricSpace const& space, Rational const& len, int top_degree,
                                   std::uint64_t cap = default_enumeration_cap())
{
    GradedBasis bases;
    for (int n = 0; n <= top_degree; ++n)
        bases.push_back(chains_of_length(space, n, len, cap));
    return bases;
}

/// MC_*^l truncated at top_degree.
inline ChainComplexZ magnitude_complex(FiniteMetricSpace const& space, Rational const& len, int top_degree,
                                       std::uint64_t cap = default_enumeration_cap())
{
    return assemble_complex(space, magnitude_bases(space, len, top_degree, cap));
}

struct HomologyRow {
    Rational l;
    int n = 0;
    HomologyGroup group;

    friend bool operator==(HomologyRow const&, HomologyRow const&) = default;
};

/// Rows sorted by (l, n), at most one per pair.
struct HomologyTable {
    std::vector<HomologyRow> rows;

    HomologyGroup const* find(Rational const& l, int n) const
    {
        for (auto const& r : rows)
            if (r.l == l && r.n == n)
                return &r.group;
        return nullptr;
    }
};

/// MH_n^l for 0 ≤ n ≤ n_max. The complex is built one degree past n_max so
/// that every reported degree sees its incoming boundary.
inline std::vector<HomologyRow> magnitude_homology(FiniteMetricSpace const& space, Rational const& len, int n_max,
                                                   std::uint64_t cap = default_enumeration_cap())
{
    if (len.sign() < 0)
        throw std::invalid_argument("length grading must be nonnegative");
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    auto const groups = complex_homology_all(magnitude_complex(space, len, n_max + 1, cap));
    std::vector<HomologyRow> rows;
    for (int n = 0; n <= n_max; ++n)
        rows.push_back(HomologyRow{len, n, groups[static_cast<std::size_t>(n)]});
    return rows;
}

/// Every length carried by a proper chain of degree ≤ n_max, ascending.
inline std::vector<Rational> spectrum_lengths(FiniteMetricSpace const& space, int n_max,
                                              std::uint64_t cap = default_enumeration_cap())
{
    std::set<Rational> all;
    for (int n = 0; n <= n_max; ++n) {
        LengthSpectrum const spectrum = length_spectrum(space, n, cap);
        all.insert(spectrum.lengths.begin(), spectrum.lengths.end());
    }
    return {all.begin(), all.end()};
}

/// The table for a list of lengths. Lengths are computed independently on
/// up to `threads` workers; the result does not depend on the thread count.
inline HomologyTable homology_table(FiniteMetricSpace const& space, std::vector<Rational> lengths, int n_max,
                                    unsigned threads = default_thread_count(),
                                    std::uint64_t cap = default_enumeration_cap())
{
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    std::vector<std::vector<HomologyRow>> per_length(lengths.size());
    parallel_for(lengths.size(), threads,
                 [&](std::size_t i) { per_length[i] = magnitude_homology(space, lengths[i], n_max, cap); });
    HomologyTable table;
    for (auto& rows : per_length)
        for (auto& r : rows)
            table.rows.push_back(std::move(r));
    return table;
}

} // namespace magh
