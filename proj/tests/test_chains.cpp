#include "magh/chains.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace magh;

namespace {

FiniteMetricSpace two_points()
{
    return path_space(2);
}

std::vector<Tuple> points_of(std::vector<ProperChain> const& chains)
{
    std::vector<Tuple> out;
    for (auto const& c : chains)
        out.push_back(c.points);
    return out;
}

} // namespace

TEST(Smoothness, Examples)
{
    auto const p3 = path_space(3);
    EXPECT_TRUE(is_strictly_smooth(p3, 0, 1, 2));
    EXPECT_FALSE(is_strictly_smooth(p3, 0, 1, 0));
    EXPECT_FALSE(is_strictly_smooth(p3, 0, 0, 2));
    EXPECT_FALSE(is_strictly_smooth(p3, 0, 2, 2));
}

TEST(ChainLength, Examples)
{
    EXPECT_EQ(chain_length(path_space(3), Tuple{0, 1, 2}), Rational(2));
    EXPECT_EQ(chain_length(path_space(3), Tuple{1}), Rational(0));
    EXPECT_EQ(chain_length(cycle_space(6), Tuple{0, 1, 2, 4}), Rational(4));
}

TEST(Enumerate, TwoPointSpaceAlternates)
{
    auto const buckets = enumerate_proper_chains(two_points(), 2);
    ASSERT_EQ(buckets.size(), 1u);
    EXPECT_EQ(buckets.begin()->first, Rational(2));
    EXPECT_EQ(points_of(buckets.begin()->second), (std::vector<Tuple>{{0, 1, 0}, {1, 0, 1}}));
}

TEST(Enumerate, PathOfThreeDegreeOne)
{
    auto const buckets = enumerate_proper_chains(path_space(3), 1);
    ASSERT_EQ(buckets.size(), 2u);
    EXPECT_EQ(points_of(buckets.at(Rational(1))), (std::vector<Tuple>{{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
    EXPECT_EQ(points_of(buckets.at(Rational(2))), (std::vector<Tuple>{{0, 2}, {2, 0}}));
    EXPECT_TRUE(enumerate_proper_chains(path_space(1), 1).empty());
}

TEST(Enumerate, MatchesProductSetFilter)
{
    std::vector<FiniteMetricSpace> spaces{path_space(4), cycle_space(4), complete_space(3), random_metric(4, 11, 5),
                                          random_metric(3, 5, 2)};
    for (auto const& x : spaces)
        for (int n = 0; n <= 3; ++n) {
            std::map<Rational, std::vector<Tuple>> expected;
            for (auto const& t : oracle::proper_tuples(x, n))
                expected[oracle::length(x, t)].push_back(Tuple(t.begin(), t.end()));
            std::map<Rational, std::vector<Tuple>> got;
            for (auto const& [l, chains] : enumerate_proper_chains(x, n)) {
                got[l] = points_of(chains);
                for (auto const& c : chains)
                    EXPECT_EQ(c.len, l);
            }
            EXPECT_EQ(got, expected) << "n = " << n;
        }
}

TEST(Enumerate, FixedLengthMatchesBuckets)
{
    for (auto const& x : {cycle_space(6), random_metric(5, 3, 4), path_space(5)})
        for (int n = 0; n <= 4; ++n)
            for (auto const& [l, chains] : enumerate_proper_chains(x, n))
                EXPECT_EQ(points_of(chains_of_length(x, n, l)), points_of(chains));
}

TEST(Enumerate, CapIsEnforced)
{
    EXPECT_THROW(enumerate_proper_chains(cycle_space(8), 6, 1000), EnumerationCapExceeded);
    EXPECT_THROW(chains_of_length(cycle_space(8), 6, Rational(6), 10), EnumerationCapExceeded);
    EXPECT_NO_THROW(enumerate_proper_chains(cycle_space(4), 2, 4 * 3 * 3));
}

TEST(Spectrum, Examples)
{
    EXPECT_EQ(length_spectrum(path_space(3), 1).lengths, (std::vector<Rational>{Rational(1), Rational(2)}));
    EXPECT_EQ(length_spectrum(cycle_space(4), 1).lengths, (std::vector<Rational>{Rational(1), Rational(2)}));
    EXPECT_TRUE(length_spectrum(path_space(1), 1).lengths.empty());
}

TEST(Boundary, Examples)
{
    auto const p3 = path_space(3);
    FormalSum const a = boundary(p3, make_chain(p3, {0, 1, 2}));
    EXPECT_EQ(a.size(), 1u);
    EXPECT_EQ(a.coefficient({0, 2}), -1);
    EXPECT_TRUE(boundary(p3, make_chain(p3, {0, 1, 0})).empty());

    auto const c6 = cycle_space(6);
    FormalSum const b = boundary(c6, make_chain(c6, {0, 1, 2, 3}));
    EXPECT_EQ(b.size(), 2u);
    EXPECT_EQ(b.coefficient({0, 2, 3}), -1);
    EXPECT_EQ(b.coefficient({0, 1, 3}), 1);
}

TEST(Boundary, SquaresToZeroAndPreservesGrading)
{
    for (auto const& x : {cycle_space(5), cycle_space(6), random_metric(5, 9, 3), complete_space(4)})
        for (int n = 1; n <= 4; ++n)
            for (auto const& [l, chains] : enumerate_proper_chains(x, n))
                for (auto const& c : chains) {
                    FormalSum const once = boundary(x, c);
                    for (auto const& [face, coeff] : once.terms()) {
                        EXPECT_TRUE(is_proper(face.points));
                        EXPECT_EQ(chain_length(x, face.points), l);
                        EXPECT_EQ(face.len, l);
                    }
                    EXPECT_TRUE(boundary(x, once).empty());
                }
}

TEST(Boundary, MatchesDenseOracle)
{
    auto const x = random_metric(4, 21, 3);
    for (int n = 1; n <= 3; ++n)
        for (auto const& [l, chains] : enumerate_proper_chains(x, n)) {
            auto const upper = oracle::proper_tuples_of_length(x, n, l);
            auto const lower = oracle::proper_tuples_of_length(x, n - 1, l);
            auto const dense = oracle::boundary_matrix(x, lower, upper);
            for (std::size_t c = 0; c < upper.size(); ++c) {
                FormalSum const sum = boundary(x, make_chain(x, Tuple(upper[c].begin(), upper[c].end())));
                for (std::size_t r = 0; r < lower.size(); ++r)
                    EXPECT_EQ(sum.coefficient(Tuple(lower[r].begin(), lower[r].end())), dense[r][c]);
            }
        }
}
