#pragma once

// Proper chains, their lengths, enumeration by length, and the magnitude
// boundary operator.

#include "magh/error.hpp"
#include "magh/metric.hpp"
#include "magh/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace magh {

using Tuple = std::vector<PointIndex>;

struct TupleHash {
    std::size_t operator()(Tuple const& t) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto p : t) {
            h ^= p;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// A tuple with distinct consecutive entries together with its length.
struct ProperChain {
    Tuple points;
    Rational len;

    int degree() const { return static_cast<int>(points.size()) - 1; }

    friend bool operator==(ProperChain const& a, ProperChain const& b) { return a.points == b.points; }
    friend auto operator<=>(ProperChain const& a, ProperChain const& b) { return a.points <=> b.points; }
};

inline bool is_proper(std::span<PointIndex const> points)
{
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] == points[i - 1])
            return false;
    return !points.empty();
}

inline bool is_strictly_smooth(FiniteMetricSpace const& space, std::size_t a, std::size_t c, std::size_t b)
{
    return space.smooth(a, c, b);
}

inline Rational chain_length(FiniteMetricSpace const& space, std::span<PointIndex const> points)
{
    Rational len;
    for (std::size_t i = 1; i < points.size(); ++i)
        len += space.d(points[i - 1], points[i]);
    return len;
}

inline ProperChain make_chain(FiniteMetricSpace const& space, Tuple points)
{
    if (!is_proper(points))
        throw std::invalid_argument("tuple is not a proper chain");
    for (auto p : points)
        if (p >= space.size())
            throw std::out_of_range("point index " + std::to_string(p) + " out of range");
    Rational len = chain_length(space, points);
    return ProperChain{std::move(points), std::move(len)};
}

/// Integer combination of chains of one degree and one length. Zero
/// coefficients are never stored.
class FormalSum {
public:
    void add(ProperChain const& chain, Integer const& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(chain, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(FormalSum const& other, Integer const& scale = 1)
    {
        for (auto const& [chain, c] : other.terms_)
            add(chain, Integer(c * scale));
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::map<ProperChain, Integer> const& terms() const { return terms_; }

    Integer coefficient(Tuple const& points) const
    {
        auto it = terms_.find(ProperChain{points, {}});
        return it == terms_.end() ? Integer(0) : it->second;
    }

private:
    std::map<ProperChain, Integer> terms_;
};

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

/// The enumeration cap: MAGH_CAP from the environment if set, else the
/// default.
inline std::uint64_t default_enumeration_cap()
{
    if (char const* env = std::getenv("MAGH_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultEnumerationCap;
}

/// N·(N-1)^n, saturating at UINT64_MAX.
inline std::uint64_t proper_chain_bound(std::size_t n_points, int degree)
{
    if (n_points == 0)
        return 0;
    unsigned __int128 total = n_points;
    for (int i = 0; i < degree; ++i) {
        total *= (n_points - 1);
        if (total > UINT64_MAX)
            return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(total);
}

using ChainBuckets = std::map<Rational, std::vector<ProperChain>>;

/// Every proper chain of the given degree, bucketed by exact length.
/// Within a bucket, chains are in lexicographic order.
inline ChainBuckets enumerate_proper_chains(FiniteMetricSpace const& space, int degree,
                                            std::uint64_t cap = default_enumeration_cap())
{
    if (degree < 0)
        throw std::invalid_argument("degree must be nonnegative");
    std::uint64_t const bound = proper_chain_bound(space.size(), degree);
    if (bound > cap)
        throw EnumerationCapExceeded(bound, cap);

    ChainBuckets buckets;
    std::size_t const n = space.size();
    if (n == 0 || (degree > 0 && n < 2))
        return buckets;
    Tuple points(static_cast<std::size_t>(degree) + 1);
    std::vector<Rational> prefix(static_cast<std::size_t>(degree) + 1);
    auto recurse = [&](auto& self, std::size_t pos) -> void {
        if (pos == points.size()) {
            buckets[prefix[pos - 1]].push_back(ProperChain{points, prefix[pos - 1]});
            return;
        }
        for (std::size_t p = 0; p < n; ++p) {
            if (pos > 0 && p == points[pos - 1])
                continue;
            points[pos] = static_cast<PointIndex>(p);
            prefix[pos] = pos == 0 ? Rational(0) : prefix[pos - 1] + space.d(points[pos - 1], p);
            self(self, pos + 1);
        }
    };
    recurse(recurse, 0);
    return buckets;
}

/// The proper chains of the given degree whose length is exactly `len`,
/// in lexicographic order. Branches whose partial length cannot finish at
/// `len` are pruned, so this is far cheaper than a full enumeration. The
/// cap bounds the number of chains produced.
inline std::vector<ProperChain> chains_of_length(FiniteMetricSpace const& space, int degree, Rational const& len,
                                                 std::uint64_t cap = default_enumeration_cap())
{
    if (degree < 0)
        throw std::invalid_argument("degree must be nonnegative");
    std::vector<ProperChain> out;
    std::size_t const n = space.size();
    if (n == 0 || len.sign() < 0)
        return out;
    if (degree == 0) {
        if (len.is_zero())
            for (std::size_t p = 0; p < n; ++p)
                out.push_back(ProperChain{Tuple{static_cast<PointIndex>(p)}, Rational(0)});
        return out;
    }
    if (n < 2)
        return out;

    Rational min_step = space.d(0, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            min_step = std::min(min_step, space.d(i, j));

    Tuple points(static_cast<std::size_t>(degree) + 1);
    auto recurse = [&](auto& self, std::size_t pos, Rational const& so_far) -> void {
        if (pos == points.size()) {
            if (so_far == len) {
                if (out.size() >= cap)
                    throw EnumerationCapExceeded(out.size() + 1, cap);
                out.push_back(ProperChain{points, len});
            }
            return;
        }
        long const steps_left = static_cast<long>(points.size() - pos - 1);
        for (std::size_t p = 0; p < n; ++p) {
            if (pos > 0 && p == points[pos - 1])
                continue;
            points[pos] = static_cast<PointIndex>(p);
            Rational next = pos == 0 ? Rational(0) : so_far + space.d(points[pos - 1], p);
            if (next + min_step * Rational(steps_left) > len)
                continue;
            self(self, pos + 1, next);
        }
    };
    recurse(recurse, 0, Rational(0));
    return out;
}

struct LengthSpectrum {
    int degree = 0;
    std::vector<Rational> lengths;
};

/// The lengths l with P_n^l nonempty, ascending.
inline LengthSpectrum length_spectrum(FiniteMetricSpace const& space, int degree,
                                      std::uint64_t cap = default_enumeration_cap())
{
    LengthSpectrum spectrum{degree, {}};
    for (auto const& [len, chains] : enumerate_proper_chains(space, degree, cap))
        spectrum.lengths.push_back(len);
    return spectrum;
}

// ---------------------------------------------------------------------------
// Boundary

/// Boundary with a caller-supplied smoothness predicate
/// `smooth(prev, point, next)`. Only interior positions are removable.
template <typename Smooth>
FormalSum boundary_with(FiniteMetricSpace const& space, ProperChain const& chain, Smooth&& smooth)
{
    FormalSum sum;
    auto const& x = chain.points;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        if (!smooth(x[i - 1], x[i], x[i + 1]))
            continue;
        Tuple face;
        face.reserve(x.size() - 1);
        face.insert(face.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
        face.insert(face.end(), x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
        Rational len = chain_length(space, face);
        sum.add(ProperChain{std::move(face), std::move(len)}, (i % 2 == 0) ? 1 : -1);
    }
    return sum;
}

/// ∂x = Σ_{interior i} (-1)^i x with x_i removed, over positions where x_i
/// is strictly smooth between its neighbours.
inline FormalSum boundary(FiniteMetricSpace const& space, ProperChain const& chain)
{
    return boundary_with(space, chain, [&](std::size_t a, std::size_t c, std::size_t b) { return space.smooth(a, c, b); });
}

/// Boundary extended linearly over a formal sum.
template <typename Smooth>
FormalSum boundary_with(FiniteMetricSpace const& space, FormalSum const& sum, Smooth&& smooth)
{
    FormalSum out;
    for (auto const& [chain, c] : sum.terms())
        out.add(boundary_with(space, chain, smooth), c);
    return out;
}

inline FormalSum boundary(FiniteMetricSpace const& space, FormalSum const& sum)
{
    return boundary_with(space, sum, [&](std::size_t a, std::size_t c, std::size_t b) { return space.smooth(a, c, b); });
}

} // namespace magh
