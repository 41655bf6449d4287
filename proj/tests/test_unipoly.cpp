#include <doctest.h>

#include "atn/unipoly.hpp"

using namespace atn;

namespace {
const QValue q2(2, 1);
const QValue q3(3, 1);
}

TEST_CASE("K family values") {
    for (long N : {1L, 2L, 3L})
        for (long x : {0L, 1L, 2L}) CHECK(K_poly(0, N, 2, q2, x) == Rational(1));

    // K_1(1,2;2;0): prefactor (1 - 1/4) * [1 1]_q * q^ell, series = 1 at x = 0
    Rational pre = (Rational(1) - Rational(1, 4)) * q_binomial(1, 1, q2.q) * q2.pow(2);
    CHECK(pre == Rational(3));
    CHECK(K_poly(1, 1, 2, q2, 0) == Rational(3));

    CHECK(K_poly(3, 2, 2, q2, 0) == Rational(0));  // k > min(N, ell)
    CHECK(K_poly(-1, 2, 2, q2, 0) == Rational(0));
}

TEST_CASE("E family values") {
    CHECK(E_poly(0, 3, 2, q2, 0) == Rational(1));
    CHECK(E_poly(0, 4, 2, q3, 1) == Rational(1));
    // E_1(3,2;2;0) = q * [2 1]_q [1 1]_q * R_1(mu(0)), R = 1 at x = 0
    Rational oracle = q2.q * q_binomial(2, 1, q2.q) * q_binomial(1, 1, q2.q);
    CHECK(oracle == Rational(6));
    CHECK(E_poly(1, 3, 2, q2, 0) == Rational(6));
    CHECK(E_poly(2, 3, 2, q2, 0) == Rational(0));  // k > min(N-m, m) = 1
}

TEST_CASE("Q family values") {
    for (long N : {2L, 3L, 4L}) CHECK(Q_poly(0, N, std::min(N - 1, 2L), q2, 0) == Rational(1));
    Rational oracle = q_binomial(3, 1, q2.q) - q_binomial(3, 0, q2.q);
    CHECK(oracle == Rational(6));
    CHECK(Q_poly(1, 3, 2, q2, 0) == Rational(6));
    CHECK(Q_poly(-1, 3, 2, q2, 4) == Rational(0));
}

TEST_CASE("vanishing convention with a margin of two") {
    for (const QValue& q : {q2, q3})
        for (long N = 0; N <= 4; ++N) {
            for (long ell = 0; ell <= 3; ++ell) {
                long kmax = std::min(N, ell);
                for (long k : {kmax + 1, kmax + 2, -1L, -2L})
                    for (long x = 0; x <= N; ++x) CHECK(K_poly(k, N, ell, q, x) == Rational(0));
            }
            for (long m = 0; m <= N; ++m) {
                long kmax = std::min(N - m, m);
                for (long k : {kmax + 1, kmax + 2, -1L, -2L})
                    for (long x = 0; x <= kmax; ++x) {
                        CHECK(E_poly(k, N, m, q, x) == Rational(0));
                        CHECK(Q_poly(k, N, m, q, x) == Rational(0));
                    }
            }
        }
}

TEST_CASE("E and Q share the dual q-Hahn kernel") {
    for (const QValue& q : {q2, q3})
        for (long N = 1; N <= 5; ++N)
            for (long m = 1; m <= N - 1; ++m) {
                long kmax = std::min(N - m, m);
                for (long k = 0; k <= kmax; ++k)
                    for (long x = 0; x <= kmax; ++x) {
                        // E_k / prefactor == Q_x / prefactor, cross-multiplied
                        Rational lhs = E_poly(k, N, m, q, x) *
                                       (q_binomial(N, x, q.q) - q_binomial(N, x - 1, q.q));
                        Rational rhs = Q_poly(x, N, m, q, k) * q.pow(k * k) *
                                       q_binomial(m, k, q.q) * q_binomial(N - m, k, q.q);
                        CHECK(lhs == rhs);
                    }
            }
}

TEST_CASE("contiguity recurrences and difference equation for K") {
    for (const QValue& q : {q2, q3})
        for (long N = 0; N <= 5; ++N)
            for (long ell = 0; ell <= 5; ++ell) {
                auto rs = verify_K_relations(N, ell, q);
                CHECK(!rs.empty());
                for (const auto& r : rs) {
                    INFO(r.relation, " eps=", r.eps, " at (", r.index[0], ",", r.index[1], ") N=", N,
                         " ell=", ell, " q=", q.q_long());
                    CHECK(r.pass());
                }
            }
}

TEST_CASE("recurrence and contiguity differences for E") {
    for (const QValue& q : {q2, q3})
        for (long N = 0; N <= 5; ++N)
            for (long m = 0; m <= N; ++m) {
                auto rs = verify_E_relations(N, m, q);
                for (const auto& r : rs) {
                    INFO(r.relation, " eps=", r.eps, " at (", r.index[0], ",", r.index[1], ") N=", N,
                         " m=", m, " q=", q.q_long());
                    CHECK(r.pass());
                }
            }
}

TEST_CASE("negative evaluation points are rejected") {
    CHECK_THROWS(K_poly(1, 2, 2, q2, -1));
    CHECK_THROWS(E_poly(1, 3, 2, q2, -1));
    CHECK_THROWS(Q_poly(1, 3, 2, q2, -2));
}

TEST_CASE("residual order is deterministic") {
    auto a = verify_K_relations(3, 2, q2);
    auto b = verify_K_relations(3, 2, q2);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].relation == b[i].relation);
        CHECK(a[i].index == b[i].index);
    }
}
