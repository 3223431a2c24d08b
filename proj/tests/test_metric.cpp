#include "magh/metric.hpp"

#include <gtest/gtest.h>

using namespace magh;

namespace {

RationalMatrix from_ints(std::vector<std::vector<long>> const& rows)
{
    RationalMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(i, j) = Rational(rows[i][j]);
    return m;
}

MetricError::Kind kind_of(RationalMatrix m, std::vector<std::size_t>* witness = nullptr)
{
    try {
        validate_metric(std::move(m), index_labels(m.size()));
    } catch (MetricError const& e) {
        if (witness)
            *witness = e.witness();
        return e.kind();
    }
    ADD_FAILURE() << "matrix was accepted";
    return MetricError::Kind::NotSquare;
}

} // namespace

TEST(Rational, ParsesAndPrintsInLowestTerms)
{
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rational::parse("-4/2").str(), "-2");
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, ExactArithmeticAndOrder)
{
    Rational const third = Rational::parse("1/3");
    EXPECT_EQ(third + third + third, Rational(1));
    EXPECT_LT(Rational::parse("1/3"), Rational::parse("34/100"));
    EXPECT_EQ(Rational::parse("1/2") * Rational(4), Rational(2));
}

TEST(Rational, DecimalParsingIsExact)
{
    EXPECT_EQ(Rational::parse_decimal("0.1"), Rational::parse("1/10"));
    EXPECT_EQ(Rational::parse_decimal("-2.50"), Rational::parse("-5/2"));
    EXPECT_EQ(Rational::parse_decimal("1e-3"), Rational::parse("1/1000"));
}

TEST(Rational, SnapRoundsHalfTowardZero)
{
    Integer const q = 10;
    EXPECT_EQ(snap_to_grid(Rational::parse("3/20"), q), Rational::parse("1/10"));
    EXPECT_EQ(snap_to_grid(Rational::parse("16/100"), q), Rational::parse("2/10"));
    EXPECT_EQ(snap_to_grid(Rational::parse("14/100"), q), Rational::parse("1/10"));
}

TEST(ValidateMetric, AcceptsSinglePointAndCycle)
{
    EXPECT_EQ(validate_metric(from_ints({{0}}), {"p"}).size(), 1u);
    RationalMatrix c4(4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j)
            c4(i, j) = Rational(std::min(std::labs(i - j), 4 - std::labs(i - j)));
    EXPECT_NO_THROW(validate_metric(c4, index_labels(4)));
}

TEST(ValidateMetric, ReportsFirstViolatedAxiomWithWitness)
{
    std::vector<std::size_t> w;
    EXPECT_EQ(kind_of(from_ints({{0, 1}, {2, 0}}), &w), MetricError::Kind::AsymmetricAt);
    EXPECT_EQ(w, (std::vector<std::size_t>{0, 1}));

    EXPECT_EQ(kind_of(from_ints({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), &w), MetricError::Kind::TriangleViolation);
    EXPECT_EQ(w, (std::vector<std::size_t>{0, 1, 2}));

    EXPECT_EQ(kind_of(from_ints({{0, 0}, {0, 0}}), &w), MetricError::Kind::NegativeOrZeroOffDiagonal);
    EXPECT_EQ(kind_of(from_ints({{1, 1}, {1, 0}}), &w), MetricError::Kind::NonzeroDiagonal);
    EXPECT_EQ(w, (std::vector<std::size_t>{0}));
}

TEST(ValidateMetric, RejectsLabelMismatchAndRaggedInput)
{
    EXPECT_THROW(validate_metric(from_ints({{0, 1}, {1, 0}}), {"only"}), MetricError);
    std::vector<std::vector<Rational>> ragged{{Rational(0), Rational(1)}, {Rational(1)}};
    try {
        to_square_matrix(ragged);
        FAIL();
    } catch (MetricError const& e) {
        EXPECT_EQ(e.kind(), MetricError::Kind::NotSquare);
    }
}

TEST(Generators, CycleDistances)
{
    auto const c4 = cycle_space(4);
    EXPECT_EQ(c4.d(0, 2), Rational(2));
    EXPECT_EQ(c4.d(1, 3), Rational(2));
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(c4.d(i, (i + 1) % 4), Rational(1));
    auto const c6 = cycle_space(6);
    EXPECT_EQ(c6.d(1, 5), Rational(2));
    EXPECT_EQ(c6.d(0, 3), Rational(3));
    try {
        cycle_space(2);
        FAIL();
    } catch (MetricError const& e) {
        EXPECT_EQ(e.kind(), MetricError::Kind::NTooSmall);
    }
}

TEST(Generators, CycleIsVertexTransitive)
{
    for (std::size_t n = 3; n <= 8; ++n) {
        auto const c = cycle_space(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                EXPECT_EQ(c.d(i, j), c.d((i + 1) % n, (j + 1) % n));
    }
}

TEST(Generators, PathDistances)
{
    EXPECT_EQ(path_space(3).d(0, 2), Rational(2));
    EXPECT_EQ(path_space(1).size(), 1u);
    EXPECT_EQ(path_space(5).d(0, 4), Rational(4));
}

TEST(Generators, RandomIsPureAndMetric)
{
    auto const a = random_metric(5, 1, 9);
    auto const b = random_metric(5, 1, 9);
    EXPECT_TRUE(a.matrix() == b.matrix());
    EXPECT_EQ(random_metric(1, 7, 3).size(), 1u);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto const r = random_metric(2 + seed % 6, seed, 1 + seed % 9);
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j) {
                EXPECT_EQ(r.d(i, j), r.d(j, i));
                EXPECT_EQ(r.d(i, j).sign(), i == j ? 0 : 1);
                for (std::size_t k = 0; k < r.size(); ++k)
                    EXPECT_LE(r.d(i, k), r.d(i, j) + r.d(j, k));
            }
    }
}

TEST(Quantize, SnapsThenCloses)
{
    auto const half = quantize({{"0", "0.5"}, {"0.5", "0"}}, Integer(2));
    EXPECT_EQ(half(0, 1), Rational::parse("1/2"));
    EXPECT_EQ(half(0, 0), Rational(0));

    auto const pinned = quantize({{"0", "1.0471975"}, {"1.0471975", "0"}}, Integer(1000000));
    EXPECT_EQ(pinned(0, 1), Rational::parse("1047197/1000000"));

    // 0-2 is longer than going through 1, so closure shortens it
    auto const closed = quantize({{"0", "1", "3"}, {"1", "0", "1"}, {"3", "1", "0"}}, Integer(1));
    EXPECT_EQ(closed(0, 2), Rational(2));

    try {
        quantize({{"0", "-0.1"}, {"-0.1", "0"}}, Integer(10));
        FAIL();
    } catch (MetricError const& e) {
        EXPECT_EQ(e.kind(), MetricError::Kind::NegativeEntry);
    }
}
