#include <gtest/gtest.h>

#include "dmod/formal_sum.hpp"
#include "oracles.hpp"

using namespace dmod;

namespace {

oracle::Sum plain(const FormalSum& s) {
    oracle::Sum out;
    for (const auto& [idx, c] : s.terms()) {
        EXPECT_EQ(c.denominator(), 1);
        out[idx.parts()] = c.numerator();
    }
    return out;
}

oracle::Poly plain(const TruncatedPolynomial& p) {
    oracle::Poly out;
    for (const auto& [e, c] : p.terms) out[e] = c.numerator();
    return out;
}

}  // namespace

TEST(FormalSum, KToFMatchesBruteForce) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& alpha : enumerate_peak_compositions(n))
            EXPECT_EQ(plain(peak_to_fundamental(FormalSum::single(Basis::Peak, alpha))), oracle::k_to_f(alpha.parts()))
                << alpha;
}

TEST(FormalSum, KToFSmallCases) {
    auto k21 = peak_to_fundamental(FormalSum::single(Basis::Peak, {2, 1}));
    EXPECT_EQ(to_text(k21), "4*F[2,1] + 4*F[1,2]");
    auto k1 = peak_to_fundamental(FormalSum::single(Basis::Peak, {1}));
    EXPECT_EQ(to_text(k1), "2*F[1]");
    auto k3 = peak_to_fundamental(FormalSum::single(Basis::Peak, {3}));
    EXPECT_EQ(to_text(k3), "2*F[3] + 2*F[2,1] + 2*F[1,2] + 2*F[1,1,1]");
}

TEST(FormalSum, ThetaKeepsOnlyThePeakSet) {
    EXPECT_EQ(to_text(theta(FormalSum::single(Basis::Fundamental, {1, 1, 2, 2, 1}))), "K[4,2,1]");
    FormalSum f(Basis::Fundamental, 3);
    f.add_term({2, 1}, 1);
    f.add_term({1, 1, 1}, 1);
    f.add_term({3}, 2);
    EXPECT_EQ(to_text(theta(f)), "3*K[3] + K[2,1]");
}

TEST(FormalSum, TruncationMatchesBruteForce) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : enumerate_compositions(n))
            for (int k = 1; k <= 3; ++k)
                EXPECT_EQ(plain(evaluate_truncated(FormalSum::single(Basis::Fundamental, alpha), k)),
                          oracle::f_in_k_variables(alpha.parts(), k));
}

TEST(FormalSum, PeakFunctionsTruncate) {
    auto p = evaluate_truncated(FormalSum::single(Basis::Peak, {1}), 2);
    EXPECT_EQ(to_text(p), "2*x1 + 2*x2");
    EXPECT_TRUE(is_symmetric(evaluate_truncated(FormalSum::single(Basis::Peak, {3}), 3)));
    EXPECT_FALSE(is_symmetric(evaluate_truncated(FormalSum::single(Basis::Fundamental, {1, 2}), 2)));
}

TEST(FormalSum, ArithmeticCancels) {
    auto a = parse_formal_sum("K[3,3,1] + 2*K[2,2,2,1]");
    auto b = parse_formal_sum("K[3,3,1] - K[2,2,2,1]");
    EXPECT_EQ(to_text(a - b), "3*K[2,2,2,1]");
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(to_text(scale(Rational(1, 2), a)), "1/2*K[3,3,1] + K[2,2,2,1]");
    EXPECT_TRUE(a.is_nonnegative());
    EXPECT_FALSE(b.is_nonnegative());
}

TEST(FormalSum, TextRoundTrip) {
    for (const char* text : {"K[3,3,1] + 2*K[2,2,2,1]", "-F[2,1] + 3/4*F[1,2]", "F[1]"}) {
        auto s = parse_formal_sum(text);
        EXPECT_EQ(to_text(s), text);
        EXPECT_EQ(parse_formal_sum(to_text(s)), s);
    }
    EXPECT_TRUE(parse_formal_sum("0", Basis::Peak, 4).is_zero());
}

TEST(FormalSum, Latex) {
    EXPECT_EQ(to_latex(parse_formal_sum("K[3,3,1] + 2*K[2,2,2,1]")), "K_{(3,3,1)} + 2K_{(2,2,2,1)}");
}

TEST(FormalSum, RejectsBadInput) {
    EXPECT_THROW(parse_formal_sum("K[1,2]"), domain_error);  // not a peak composition
    EXPECT_THROW(parse_formal_sum("F[2,1] + K[3]"), domain_error);
    EXPECT_THROW(parse_formal_sum("F[2,1] + F[1]"), domain_error);
    EXPECT_THROW(parse_formal_sum("2F[2,1]"), domain_error);
    EXPECT_THROW(theta(FormalSum::single(Basis::Peak, {2})), domain_error);
    EXPECT_THROW(peak_to_fundamental(FormalSum::single(Basis::Fundamental, {2})), domain_error);
    FormalSum a(Basis::Fundamental, 2), b(Basis::Fundamental, 3);
    EXPECT_THROW(a + b, domain_error);
}
