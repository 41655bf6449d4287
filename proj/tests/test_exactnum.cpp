#include <doctest.h>

#include "atn/bigfloat.hpp"
#include "atn/qseries.hpp"

using namespace atn;

TEST_CASE("rational canonical form and arithmetic") {
    Rational a(6, -4);
    CHECK(a == Rational(-3, 2));
    CHECK(a.den() == 2);
    CHECK(a.num() == -3);
    CHECK((a * Rational(-2, 3)) == Rational(1));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(1, 3).pow(0) == Rational(1));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(0).pow(-1));
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(14, 7).str() == "2");
}

TEST_CASE("associativity permutations give identical canonical values") {
    Rational vals[] = {Rational(3, 7), Rational(-5, 2), Rational(11, 13), Rational(4)};
    Rational left = ((vals[0] + vals[1]) + vals[2]) + vals[3];
    Rational right = vals[0] + (vals[1] + (vals[2] + vals[3]));
    CHECK(left == right);
    Rational pl = ((vals[0] * vals[1]) * vals[2]) * vals[3];
    Rational pr = vals[0] * (vals[1] * (vals[2] * vals[3]));
    CHECK(pl == pr);
}

TEST_CASE("QValue prime powers") {
    QValue q8 = QValue::from_q(8);
    CHECK(q8.p == 2);
    CHECK(q8.h == 3);
    CHECK(q8.q == Rational(8));
    CHECK(QValue(3, 2).q == Rational(9));
    CHECK_THROWS(QValue::from_q(6));
    CHECK_THROWS(QValue::from_q(1));
    CHECK_THROWS(QValue(4, 2));  // p must be prime
    CHECK(QValue(2, 3).pow(-2) == Rational(1, 64));
}

TEST_CASE("q-pochhammer") {
    CHECK(q_pochhammer(Rational(5), Rational(2), 0) == Rational(1));
    CHECK(q_pochhammer(Rational(1, 4), Rational(2), 1) == Rational(3, 4));
    // (1-2)(1-4)(1-8) = -21
    CHECK(q_pochhammer(Rational(2), Rational(2), 3) == Rational(-21));
    CHECK_THROWS_AS(q_pochhammer(Rational(1), Rational(2), -1), SeriesError);
}

TEST_CASE("q-pochhammer incremental property") {
    Rational q(3);
    for (long n = 0; n < 8; ++n) {
        Rational a(2, 5);
        Rational lhs = q_pochhammer(a, q, n + 1);
        Rational rhs = q_pochhammer(a, q, n) * (Rational(1) - a * q.pow(n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q-binomial values and conventions") {
    CHECK(q_binomial(5, 0, Rational(3)) == Rational(1));
    CHECK(q_binomial(3, 2, Rational(2)) == Rational(7));
    CHECK(q_binomial(4, 2, Rational(2)) == Rational(35));
    CHECK(q_binomial(4, -1, Rational(2)) == Rational(0));
    CHECK(q_binomial(4, 5, Rational(2)) == Rational(0));
}

TEST_CASE("q-binomial symmetry and Pascal rule") {
    for (long qv : {2L, 3L, 4L}) {
        Rational q(qv);
        for (long n = 0; n <= 12; ++n)
            for (long k = 0; k <= n; ++k) {
                CHECK(q_binomial(n, k, q) == q_binomial(n, n - k, q));
                if (n > 0)
                    CHECK(q_binomial(n, k, q) ==
                          q_binomial(n - 1, k - 1, q) + q.pow(k) * q_binomial(n - 1, k, q));
            }
    }
}

TEST_CASE("terminating 3phi2") {
    Rational q(2);
    // all numerator parameters 1 = q^0: only the k=0 term survives
    CHECK(phi_3_2(Rational(1), Rational(7), Rational(5), Rational(3), Rational(11), q, q) ==
          Rational(1));

    // K^aff_1(q^-1; p=q^-3, N=2; q) at q=2: 3phi2(q^-1, 0, q^-1; q^-2, q^-2; q, q).
    // Independent term-by-term oracle: 1 + [(1-q^-1)(1-0)(1-q^-1)] /
    // [(1-q^-2)(1-q^-2)] * q/(1-q)
    Rational t1 = (Rational(1) - q.pow(-1)) * (Rational(1) - Rational(0)) *
                  (Rational(1) - q.pow(-1)) /
                  ((Rational(1) - q.pow(-2)) * (Rational(1) - q.pow(-2))) * q /
                  (Rational(1) - q);
    Rational oracle = Rational(1) + t1;
    CHECK(oracle == Rational(1, 9));
    CHECK(phi_3_2(q.pow(-1), Rational(0), q.pow(-1), q.pow(-2), q.pow(-2), q, q) == oracle);

    // singular: termination at k=2 but (q^-1; q)_k vanishes from k=2 on
    CHECK_THROWS_AS(phi_3_2(q.pow(-2), Rational(0), Rational(0), q.pow(-1), Rational(3), q, q),
                    SeriesError);
    // non-terminating: no numerator parameter is q^-N
    CHECK_THROWS_AS(phi_3_2(Rational(2), Rational(3), Rational(5), Rational(7), Rational(11), q, q),
                    SeriesError);
}

TEST_CASE("qfactor ratio corner rules") {
    Rational q(2);
    // plain evaluation
    CHECK(qfactor_ratio(q, Rational(1), {1}, {2}) == (Rational(1) - q) / (Rational(1) - q.pow(2)));
    // more zeros above: continuous extension 0
    CHECK(qfactor_ratio(q, Rational(5), {0, 0, 3}, {0, 2}) == Rational(0));
    // plain zero numerator
    CHECK(qfactor_ratio(q, Rational(5), {0, 3}, {2}) == Rational(0));
    // genuine singularity
    CHECK_THROWS_AS(qfactor_ratio(q, Rational(1), {1}, {0}), SeriesError);
    // ambiguous 0/0 refused
    CHECK_THROWS_AS(qfactor_ratio(q, Rational(1), {0, 1}, {0}), SeriesError);
}

TEST_CASE("classical pochhammer, binomial, terminating hypergeometric") {
    CHECK(pochhammer(Rational(7, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(-5), 3) == Rational(-5) * Rational(-4) * Rational(-3));
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(4, -1) == Rational(0));
    CHECK(binomial(3, 5) == Rational(0));

    // 2F1(-1,-1;-2;2): direct two-term oracle 1 + (-1)(-1)/(-2) * 2 = 0
    Rational oracle = Rational(1) + Rational(-1) * Rational(-1) / Rational(-2) * Rational(2);
    CHECK(oracle == Rational(0));
    CHECK(hyp2F1(Rational(-1), Rational(-1), Rational(-2), Rational(2)) == oracle);

    // 3F2 with a 0 numerator parameter terminates immediately
    CHECK(hyp3F2(Rational(0), Rational(5), Rational(7), Rational(3), Rational(2), Rational(1)) ==
          Rational(1));
    CHECK_THROWS_AS(hyp2F1(Rational(1, 2), Rational(3), Rational(2), Rational(1)), SeriesError);
    // singular: c = -1 vanishes before -n = -3 terminates
    CHECK_THROWS_AS(hyp2F1(Rational(-3), Rational(5), Rational(-1), Rational(1)), SeriesError);
}

TEST_CASE("high precision reals") {
    BigFloat x = BigFloat::pow_dyadic(2, Rational(1, 2), 256);
    BigFloat err = (x * x - BigFloat(2, 256)).abs();
    // 256-bit mantissa leaves error far below 2^-200
    BigFloat bound(Rational(1, 1), 256);
    for (int i = 0; i < 200; ++i) bound = bound / BigFloat(2, 256);
    CHECK(err < bound);
    CHECK(x.precision() == 256);

    BigFloat third(Rational(1, 3), 128);
    CHECK(third.precision() == 128);
    CHECK(BigFloat(Rational(3, 2)).to_double() == doctest::Approx(1.5));
    CHECK(BigFloat(7) > BigFloat(3));
    CHECK((BigFloat(1) - BigFloat(1)).is_zero());
}
