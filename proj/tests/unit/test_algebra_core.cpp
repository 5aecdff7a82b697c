#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "singlab/graded.hpp"
#include "singlab/poly_io.hpp"

using namespace singlab;

namespace {

Polynomial P(const char* text, std::size_t nvars, std::uint64_t p) { return parse_poly(text, nvars, PrimeField(p)); }

Polynomial random_poly(std::size_t nvars, unsigned max_degree, const PrimeField& f, Rng& rng) {
    return GradedSpace::at_most(f, nvars, max_degree).sample(rng);
}

}  // namespace

TEST(PrimeField, RejectsComposite) {
    EXPECT_THROW(PrimeField(1), ValidationError);
    EXPECT_THROW(PrimeField(9), ValidationError);
    EXPECT_NO_THROW(PrimeField(2305843009213693951ULL));  // 2^61 - 1
}

TEST(FieldOps, InverseOfTwoModFive) {
    const PrimeField f5(5);
    const FieldElement two(f5, 2);
    EXPECT_EQ(two.inv().value(), 3U);
    EXPECT_EQ((two * two.inv()).value(), 1U);
}

TEST(FieldOps, MultiplicativeIdentity) {
    const PrimeField f7(7);
    const FieldElement one(f7, 1);
    for (std::uint64_t a = 0; a < 7; ++a) EXPECT_EQ((FieldElement(f7, a) * one).value(), a);
}

TEST(FieldOps, FermatPower) {
    const PrimeField f5(5);
    EXPECT_EQ(FieldElement(f5, 3).pow(4).value(), 1U);
}

TEST(FieldOps, Errors) {
    const PrimeField f5(5);
    const PrimeField f7(7);
    EXPECT_THROW((void)FieldElement(f5, 0).inv(), ValidationError);
    EXPECT_THROW(FieldElement(f5, 1) / FieldElement(f5, 0), ValidationError);
    EXPECT_THROW(FieldElement(f5, 1) + FieldElement(f7, 1), ValidationError);
}

TEST(FieldOps, AxiomsExhaustiveSmallFields) {
    for (std::uint64_t p : {2U, 3U, 5U, 7U}) {
        const PrimeField f(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            for (std::uint64_t b = 0; b < p; ++b) {
                FieldElement x(f, a), y(f, b);
                EXPECT_EQ((x + y).value(), (a + b) % p);
                EXPECT_EQ((x * y).value(), (a * b) % p);
                EXPECT_EQ(((x - y) + y).value(), a);
                if (b != 0) {
                    EXPECT_EQ(((x / y) * y).value(), a);
                }
            }
        }
    }
}

TEST(ParsePoly, TwoTerms) {
    const auto f = P("x0^2*x1 + 2*x3^3", 4, 5);
    EXPECT_EQ(f.size(), 2U);
    EXPECT_EQ(f.coefficient(Monomial{2, 1, 0, 0}), 1U);
    EXPECT_EQ(f.coefficient(Monomial{0, 0, 0, 3}), 2U);
}

TEST(ParsePoly, Cancellation) {
    EXPECT_TRUE(P("x0 - x0", 1, 7).is_zero());
    EXPECT_TRUE(P("3*x1", 2, 3).is_zero());
}

TEST(ParsePoly, SignsAndConstants) {
    const auto f = P("-x0 + 4 - 2*x1*x0", 2, 5);
    EXPECT_EQ(f.coefficient(Monomial{1, 0}), 4U);
    EXPECT_EQ(f.coefficient(Monomial{0, 0}), 4U);
    EXPECT_EQ(f.coefficient(Monomial{1, 1}), 3U);
    EXPECT_EQ(P(" x0 ^ 2 * x0 ", 1, 5), P("x0^3", 1, 5));
}

TEST(ParsePoly, ErrorsCarryOffsets) {
    try {
        (void)P("x0 + + x1", 2, 5);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 5U);
    }
    try {
        (void)P("x0 + x7", 3, 5);
        FAIL() << "expected a range error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 5U);
    }
    EXPECT_THROW((void)P("2*", 1, 5), ParseError);
    EXPECT_THROW((void)P("", 1, 5), ParseError);
    EXPECT_THROW((void)P("y1", 2, 5), ParseError);
}

TEST(ParsePoly, InferVariables) {
    EXPECT_EQ(infer_num_vars("x0^2*x1"), 2U);
    EXPECT_EQ(infer_num_vars("x0 + 2*x3^3"), 4U);
    EXPECT_EQ(infer_num_vars("5"), 0U);
}

TEST(FormatPoly, CanonicalRoundTrip) {
    Rng rng(11);
    for (std::uint64_t p : {2U, 3U, 5U, 101U}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = random_poly(4, 4, f, rng);
            const auto text = format_poly(g);
            EXPECT_EQ(parse_poly(text, 4, f), g) << text;
            EXPECT_EQ(format_poly(parse_poly(text, 4, f)), text);
        }
    }
    EXPECT_EQ(format_poly(P("2*x1 + x0^2 + 1", 2, 5)), "x0^2 + 2*x1 + 1");
    EXPECT_EQ(format_poly(Polynomial(PrimeField(3), 2)), "0");
}

TEST(PartialDerivative, PowerRule) {
    EXPECT_EQ(P("x0^2*x1", 4, 5).partial_derivative(0), P("2*x0*x1", 4, 5));
    EXPECT_TRUE(P("x0^2*x1", 4, 2).partial_derivative(0).is_zero());
    EXPECT_THROW((void)P("x0", 1, 5).partial_derivative(1), ValidationError);
}

TEST(PartialDerivative, SquaresAreConstantsInCharTwo) {
    const PrimeField f2(2);
    Rng rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = random_poly(4, 3, f2, rng);
        const auto sq = g * g;
        for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(sq.partial_derivative(i).is_zero());
    }
}

TEST(Homogenize, PadsWithHiddenVariable) {
    const auto f = P("x0^2 + x1", 2, 5);
    EXPECT_EQ(f.homogenize_to_degree(3), P("x0^2*x2 + x1*x2^2", 3, 5));
    const auto g = P("x0^2*x1 + x1^3", 2, 5);
    EXPECT_EQ(g.homogenize_to_degree(3), g.extend_vars(3));
    EXPECT_THROW((void)f.homogenize_to_degree(1), ValidationError);
}

TEST(Homogenize, ExplicitHiddenIndex) {
    const auto f = P("x0^2 + x1", 2, 5);
    EXPECT_EQ(f.homogenize_to_degree(2, 0), P("x1^2 + x0*x2", 3, 5));
}

TEST(Dehomogenize, Substitution) {
    EXPECT_EQ(dehomogenize(P("x0^2*x2 + x1*x2^2", 3, 5), 2), P("x0^2 + x1", 2, 5));
    EXPECT_EQ(dehomogenize(P("x2^3", 3, 5), 2), Polynomial::constant(PrimeField(5), 2, 1));
    EXPECT_EQ(dehomogenize(P("x0*x1 + x1^2", 3, 5), 0), P("x0 + x0^2", 2, 5));
    EXPECT_THROW((void)dehomogenize(P("x0 + 1", 1, 5), 0), ValidationError);
}

TEST(Dehomogenize, InvertsHomogenization) {
    Rng rng(3);
    for (std::uint64_t p : {2U, 3U, 5U}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 1000; ++trial) {
            const unsigned l = 1 + static_cast<unsigned>(rng.below(5));
            const auto g = random_poly(3, l, f, rng);
            const auto h = g.homogenize_to_degree(l);
            EXPECT_TRUE(h.is_homogeneous(l) || h.is_zero());
            EXPECT_EQ(dehomogenize(h, 3), g);
        }
    }
}

TEST(Homogenize, BijectionBetweenGradedSpaces) {
    const PrimeField f3(3);
    const auto low = GradedSpace::at_most(f3, 2, 3);
    const auto forms = GradedSpace::forms(f3, 3, 3);
    ASSERT_EQ(low.dimension(), forms.dimension());
    EXPECT_EQ(low.dimension(), 10U);  // C(3+2, 2)
    std::set<std::uint64_t> images;
    for (std::uint64_t i = 0; i < *low.cardinality(); ++i) {
        images.insert(forms.index(low.element(i).homogenize_to_degree(3)));
    }
    EXPECT_EQ(images.size(), *forms.cardinality());
}

TEST(Properties, EulerRelation) {
    Rng rng(101);
    for (std::uint64_t p : {2U, 3U, 5U}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 1000; ++trial) {
            const unsigned l = 1 + static_cast<unsigned>(rng.below(5));
            const auto F = GradedSpace::forms(f, 4, l).sample(rng);
            Polynomial euler(f, 4);
            for (std::size_t i = 0; i < 4; ++i) euler += Polynomial::variable(f, 4, i) * F.partial_derivative(i);
            EXPECT_EQ(euler, F.scale(l % p));
        }
    }
}

TEST(Properties, HomogenizationCommutesWithDifferentiation) {
    Rng rng(202);
    for (std::uint64_t p : {2U, 3U, 5U}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 500; ++trial) {
            const unsigned l = 1 + static_cast<unsigned>(rng.below(5));
            const auto g = random_poly(3, l - 1, f, rng);
            for (std::size_t i = 0; i < 3; ++i) {
                EXPECT_EQ(g.partial_derivative(i).homogenize_to_degree(l - 1),
                          g.homogenize_to_degree(l).partial_derivative(i));
            }
        }
    }
}

TEST(Properties, Frobenius) {
    Rng rng(303);
    for (std::uint64_t p : {2U, 3U, 5U}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = random_poly(3, 2, f, rng);
            const auto h = random_poly(3, 2, f, rng);
            EXPECT_EQ((g + h).pow(static_cast<unsigned>(p)),
                      g.pow(static_cast<unsigned>(p)) + h.pow(static_cast<unsigned>(p)));
        }
    }
}

TEST(Polynomial, RingOperations) {
    const auto a = P("x0 + x1", 2, 7);
    const auto b = P("x0 - x1", 2, 7);
    EXPECT_EQ(a * b, P("x0^2 - x1^2", 2, 7));
    EXPECT_EQ(a.pow(2), P("x0^2 + 2*x0*x1 + x1^2", 2, 7));
    EXPECT_TRUE((a - a).is_zero());
    const std::vector<Coeff> pt{3, 4};
    EXPECT_EQ((a * b).evaluate(pt), 0U);  // 9 - 16 = -7
    EXPECT_THROW((void)(a + P("x0", 2, 5)), ValidationError);
}

TEST(SampleGraded, ChiSquareUniformity) {
    // Two-dimensional space {c0 * x0 + c1} over F_3: nine outcomes.
    const PrimeField f3(3);
    const auto space = GradedSpace::at_most(f3, 1, 1);
    ASSERT_EQ(space.dimension(), 2U);
    Rng rng(2024);
    std::vector<int> counts(9, 0);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++counts[space.index(space.sample(rng))];
    const double expected = draws / 9.0;
    double chi2 = 0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    // 8 degrees of freedom, 0.1% upper tail.
    EXPECT_LT(chi2, 26.12);
}

TEST(SampleGraded, Deterministic) {
    const auto space = GradedSpace::forms(PrimeField(5), 4, 3);
    Rng a(99), b(99);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(space.sample(a), space.sample(b));
}

TEST(SampleGraded, CoversSmallSpace) {
    const auto space = GradedSpace::at_most(PrimeField(2), 2, 1);
    ASSERT_EQ(space.dimension(), 3U);
    Rng rng(5);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 200; ++i) seen.insert(space.index(space.sample(rng)));
    EXPECT_EQ(seen.size(), 8U);
}

TEST(GradedSpace, DimensionsMatchBinomial) {
    const PrimeField f(5);
    // C(l+n, n) for n = 3.
    EXPECT_EQ(GradedSpace::forms(f, 4, 2).dimension(), 10U);
    EXPECT_EQ(GradedSpace::forms(f, 4, 3).dimension(), 20U);
    EXPECT_EQ(GradedSpace::at_most(f, 3, 3).dimension(), 20U);
}
