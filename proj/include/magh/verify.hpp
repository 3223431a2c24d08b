#pragma once

// Executable cross-checks between the independent computation routes:
// ∂∘∂ = 0, the simple decomposition below m_X, frame injectivity at rank
// level, the interval-poset tensor route, trivial gradings and MH_2
// certificates. Every check returns a report; failures carry a witness.

#include "magh/chains.hpp"
#include "magh/frames.hpp"
#include "magh/io.hpp"
#include "magh/magnitude.hpp"
#include "magh/parallel.hpp"
#include "magh/posets.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace magh {

struct VerificationReport {
    std::string check;
    std::string space;
    json params = json::object();
    bool passed = true;
    json witness = nullptr;

    json to_json() const
    {
        return json{{"check", check},
                    {"space", space},
                    {"params", params},
                    {"status", passed ? "pass" : "fail"},
                    {"witness", witness}};
    }
};

namespace detail {

inline json group_json(HomologyGroup const& g)
{
    return json{{"betti", g.betti}, {"torsion", torsion_json(g)}};
}

} // namespace detail

/// ∂∘∂ = 0 on every proper chain of degree ≤ n_max, with the boundary
/// computed from `smooth`.
template <typename Smooth>
VerificationReport check_d_squared_with(FiniteMetricSpace const& space, std::string const& name, int n_max,
                                        Smooth&& smooth, std::uint64_t cap = default_enumeration_cap())
{
    VerificationReport report{"d_squared", name, json{{"n_max", n_max}}};
    for (int n = 2; n <= n_max; ++n)
        for (auto const& [len, chains] : enumerate_proper_chains(space, n, cap))
            for (auto const& chain : chains) {
                FormalSum once;
                once.add(chain, 1);
                FormalSum const twice = boundary_with(space, boundary_with(space, once, smooth), smooth);
                if (!twice.empty()) {
                    json terms = json::array();
                    for (auto const& [c, coeff] : twice.terms())
                        terms.push_back(json{{"chain", c.points}, {"coeff", coeff.get_str()}});
                    report.passed = false;
                    report.witness = json{{"chain", chain.points}, {"boundary_squared", terms}};
                    return report;
                }
            }
    return report;
}

inline VerificationReport check_d_squared(FiniteMetricSpace const& space, std::string const& name, int n_max,
                                          std::uint64_t cap = default_enumeration_cap())
{
    return check_d_squared_with(space, name, n_max,
                                [&](std::size_t a, std::size_t c, std::size_t b) { return space.smooth(a, c, b); }, cap);
}

/// MH_0^0 = Z^|X|, MH_n^0 = 0 for n > 0, and MH_0^l = 0 for every
/// spectrum length l > 0.
inline VerificationReport check_trivial_gradings(FiniteMetricSpace const& space, std::string const& name, int n_max,
                                                 std::uint64_t cap = default_enumeration_cap())
{
    VerificationReport report{"trivial_gradings", name, json{{"n_max", n_max}}};
    auto fail = [&](Rational const& l, int n, HomologyGroup const& got, HomologyGroup const& want) {
        report.passed = false;
        report.witness = json{{"l", l.str()}, {"n", n}, {"got", detail::group_json(got)}, {"expected", detail::group_json(want)}};
    };
    for (auto const& row : magnitude_homology(space, Rational(0), n_max, cap)) {
        HomologyGroup const want{row.n == 0 ? space.size() : 0, {}};
        if (row.group != want) {
            fail(row.l, row.n, row.group, want);
            return report;
        }
    }
    for (auto const& l : spectrum_lengths(space, n_max, cap)) {
        if (l.is_zero())
            continue;
        auto const rows = magnitude_homology(space, l, 0, cap);
        if (!rows[0].group.is_zero()) {
            fail(l, 0, rows[0].group, {});
            return report;
        }
    }
    return report;
}

/// For every spectrum length 0 < l < m_X and 1 ≤ n ≤ n_max, the direct sum
/// of the frame complexes has the same homology as MC_*^l.
inline VerificationReport check_simp_iso(FiniteMetricSpace const& space, std::string const& name, int n_max,
                                         std::uint64_t cap = default_enumeration_cap())
{
    MxResult const mx = m_x(space, 1);
    VerificationReport report{"simp_iso", name,
                              json{{"n_max", n_max}, {"m_x", mx.is_infinite() ? std::string("inf") : mx.value->str()}}};
    std::size_t checked = 0;
    for (auto const& l : spectrum_lengths(space, n_max, cap)) {
        if (l.sign() <= 0 || !mx.exceeds(l))
            continue;
        auto const direct = magnitude_homology(space, l, n_max, cap);
        auto const simp = simp_homology(space, l, n_max, cap);
        for (int n = 1; n <= n_max; ++n) {
            auto const& a = direct[static_cast<std::size_t>(n)].group;
            auto const& b = simp[static_cast<std::size_t>(n)];
            if (a != b) {
                report.passed = false;
                report.witness = json{{"l", l.str()}, {"n", n}, {"direct", detail::group_json(a)}, {"simp", detail::group_json(b)}};
                return report;
            }
        }
        ++checked;
    }
    report.params["lengths_checked"] = checked;
    return report;
}

/// For every proper 1-chain F = (a, b): betti MH_n^F ≤ betti MH_n^{d(a,b)}
/// for all n ≤ n_max.
inline VerificationReport check_frame_injectivity(FiniteMetricSpace const& space, std::string const& name, int n_max,
                                                  std::uint64_t cap = default_enumeration_cap())
{
    VerificationReport report{"frame_injectivity", name, json{{"n_max", n_max}}};
    std::map<Rational, std::vector<HomologyRow>> full;
    for (PointIndex a = 0; a < space.size(); ++a)
        for (PointIndex b = 0; b < space.size(); ++b) {
            if (a == b)
                continue;
            Frame const f = make_frame(space, Tuple{a, b});
            auto it = full.find(f.len);
            if (it == full.end())
                it = full.emplace(f.len, magnitude_homology(space, f.len, n_max, cap)).first;
            auto const frame_groups = complex_homology_all(frame_subcomplex(space, f, n_max));
            for (int n = 0; n <= n_max; ++n) {
                auto const& local = frame_groups[static_cast<std::size_t>(n)];
                auto const& global = it->second[static_cast<std::size_t>(n)].group;
                if (local.betti > global.betti) {
                    report.passed = false;
                    report.witness = json{{"frame", f.points}, {"l", f.len.str()}, {"n", n},
                                          {"frame_group", detail::group_json(local)}, {"mh", detail::group_json(global)}};
                    return report;
                }
            }
        }
    return report;
}

/// Frames of geodesically simple chains of degree 1..n_max whose own degree
/// is at most m_max, in lexicographic order.
inline std::vector<Frame> realized_frames(FiniteMetricSpace const& space, int m_max, int n_max,
                                          std::uint64_t cap = default_enumeration_cap())
{
    std::set<Frame> frames;
    for (int n = 1; n <= n_max; ++n)
        for (auto const& [len, chains] : enumerate_proper_chains(space, n, cap))
            for (auto const& chain : chains) {
                Frame f = frame(space, chain);
                if (f.len == chain.len && f.degree() <= m_max)
                    frames.insert(std::move(f));
            }
    return {frames.begin(), frames.end()};
}

enum class TensorScope {
    AllFrames,        ///< every realized frame
    StableFrames,     ///< only frames whose refinements keep the frame
};

/// For every realized frame with at most m_max + 1 points, the frame
/// subcomplex and the interval-poset tensor product agree in every degree
/// n ≤ n_max. With AllFrames a mismatch anywhere fails; with StableFrames
/// frames failing refinements_keep_frame are skipped and counted.
inline VerificationReport check_tensor_route(FiniteMetricSpace const& space, std::string const& name, int m_max,
                                             int n_max, TensorScope scope = TensorScope::AllFrames,
                                             std::uint64_t cap = default_enumeration_cap())
{
    VerificationReport report{scope == TensorScope::AllFrames ? "tensor_route" : "tensor_route_stable", name,
                              json{{"m_max", m_max}, {"n_max", n_max}}};
    auto const frames = realized_frames(space, m_max, n_max, cap);
    std::size_t checked = 0, skipped = 0;
    for (auto const& f : frames) {
        bool const stable = refinements_keep_frame(space, f);
        if (!stable && scope == TensorScope::StableFrames) {
            ++skipped;
            continue;
        }
        ++checked;
        auto const direct = complex_homology_all(frame_subcomplex(space, f, n_max));
        ChainComplexZ const product = frame_tensor_complex(space, f);
        auto const via_posets = complex_homology_all(product);
        for (int n = 0; n <= n_max; ++n) {
            int const shifted = n - 2 * f.degree();
            HomologyGroup const b = product.in_range(shifted)
                                        ? via_posets[static_cast<std::size_t>(shifted - product.lowest())]
                                        : HomologyGroup{};
            auto const& a = direct[static_cast<std::size_t>(n)];
            if (a != b) {
                report.passed = false;
                report.witness = json{{"frame", f.points},
                                      {"n", n},
                                      {"frame_complex", detail::group_json(a)},
                                      {"posets", detail::group_json(b)},
                                      {"refinements_keep_frame", stable}};
                return report;
            }
        }
    }
    report.params["frames_checked"] = checked;
    if (scope == TensorScope::StableFrames)
        report.params["frames_skipped"] = skipped;
    return report;
}

/// Every certificate with a positive bound is met by MH_2^{d(a,b)}.
inline VerificationReport check_certificates(FiniteMetricSpace const& space, std::string const& name,
                                             std::uint64_t cap = default_enumeration_cap())
{
    VerificationReport report{"certificates", name};
    std::map<Rational, std::size_t> mh2;
    std::size_t positive = 0;
    for (PointIndex a = 0; a < space.size(); ++a)
        for (PointIndex b = 0; b < space.size(); ++b) {
            if (a == b)
                continue;
            Certificate const cert = mh2_certificate(space, a, b);
            if (cert.mh2_lower_bound == 0)
                continue;
            ++positive;
            auto it = mh2.find(cert.distance);
            if (it == mh2.end())
                it = mh2.emplace(cert.distance, magnitude_homology(space, cert.distance, 2, cap)[2].group.betti).first;
            if (it->second < cert.mh2_lower_bound) {
                report.passed = false;
                report.witness = json{{"certificate", certificate_to_json(cert)}, {"mh2_betti", it->second}};
                return report;
            }
        }
    report.params["positive_certificates"] = positive;
    return report;
}

// ---------------------------------------------------------------------------
// Suite

struct NamedSpace {
    std::string name;
    FiniteMetricSpace space;
};

inline std::string random_name(std::size_t n, std::uint64_t seed, std::uint64_t max_w)
{
    return "random(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ",max_w=" + std::to_string(max_w) + ")";
}

/// Cycles C_3..C_8, paths P_1..P_6, complete graphs K_1..K_5.
inline std::vector<NamedSpace> canonical_spaces()
{
    std::vector<NamedSpace> out;
    for (std::size_t n = 3; n <= 8; ++n)
        out.push_back({"cycle(" + std::to_string(n) + ")", cycle_space(n)});
    for (std::size_t n = 1; n <= 6; ++n)
        out.push_back({"path(" + std::to_string(n) + ")", path_space(n)});
    for (std::size_t n = 1; n <= 5; ++n)
        out.push_back({"complete(" + std::to_string(n) + ")", complete_space(n)});
    return out;
}

/// `count` seeded random spaces with 2..max_points points and weights drawn
/// from a rotating set of ranges. Small ranges make many geodesic
/// coincidences, large ones few.
inline std::vector<NamedSpace> random_spaces(std::uint64_t seed, std::size_t count, std::size_t max_points)
{
    static constexpr std::uint64_t kWeights[] = {2, 3, 4, 6, 9};
    std::vector<NamedSpace> out;
    std::size_t const span = max_points >= 2 ? max_points - 1 : 1;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t const n = 2 + i % span;
        std::uint64_t const w = kWeights[(i / span) % 5];
        std::uint64_t const s = seed * 1000003ull + i;
        out.push_back({random_name(n, s, w), random_metric(n, s, w)});
    }
    return out;
}

/// C_4, C_6, P_4 and 20 random spaces with at most 5 points.
inline std::vector<NamedSpace> tensor_route_spaces(std::uint64_t seed)
{
    std::vector<NamedSpace> out{{"cycle(4)", cycle_space(4)}, {"cycle(6)", cycle_space(6)}, {"path(4)", path_space(4)}};
    auto const small = random_spaces(seed + 1, 20, 5);
    out.insert(out.end(), small.begin(), small.end());
    return out;
}

/// The full verification run: d_squared (n ≤ 4), trivial gradings,
/// simp_iso, frame injectivity and certificates (n ≤ 3) on the canonical
/// spaces and random spaces, and the tensor route (m ≤ 2, n ≤ 4, over all
/// frames and over stable frames) on tensor_route_spaces. Reports come back
/// in a fixed order regardless of `threads`.
inline std::vector<VerificationReport> run_suite(std::uint64_t seed, unsigned threads = default_thread_count(),
                                                 std::uint64_t cap = default_enumeration_cap())
{
    std::vector<NamedSpace> main = canonical_spaces();
    auto const randoms = random_spaces(seed, 50, 6);
    std::size_t const n_canonical = main.size();
    main.insert(main.end(), randoms.begin(), randoms.end());

    std::vector<std::function<VerificationReport()>> jobs;
    for (std::size_t i = 0; i < main.size(); ++i) {
        auto const& s = main[i];
        jobs.emplace_back([&s, cap] { return check_d_squared(s.space, s.name, 4, cap); });
        jobs.emplace_back([&s, cap] { return check_trivial_gradings(s.space, s.name, 3, cap); });
        if (i < n_canonical + 30) {
            jobs.emplace_back([&s, cap] { return check_simp_iso(s.space, s.name, 3, cap); });
            jobs.emplace_back([&s, cap] { return check_frame_injectivity(s.space, s.name, 3, cap); });
            jobs.emplace_back([&s, cap] { return check_certificates(s.space, s.name, cap); });
        }
    }
    auto const tensor_spaces = tensor_route_spaces(seed);
    for (auto const& s : tensor_spaces) {
        jobs.emplace_back([&s, cap] { return check_tensor_route(s.space, s.name, 2, 4, TensorScope::AllFrames, cap); });
        jobs.emplace_back([&s, cap] { return check_tensor_route(s.space, s.name, 2, 4, TensorScope::StableFrames, cap); });
    }

    std::vector<VerificationReport> reports(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) { reports[i] = jobs[i](); });
    return reports;
}

} // namespace magh
