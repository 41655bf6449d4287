#include <doctest.h>

#include "atn/bispectral.hpp"

using namespace atn;

namespace {
const SchemeParams P232{QValue(2, 1), 3, 2, 2};
const SchemeParams P422{QValue(2, 1), 4, 2, 2};
const SchemeParams P311{QValue(3, 1), 2, 1, 1};
const SchemeParams P412{QValue(2, 1), 4, 1, 2};
}

TEST_CASE("coefficient definitional identities") {
    BispectralCoeffs co{P232};
    for (long i = 0; i <= 1; ++i)
        for (long j = 0; j <= 2; ++j) {
            CHECK(co.b(0, i, j) == -co.b(+1, i, j - 1) - co.b(-1, i, j + 1));
            CHECK(co.c(+1, +1, i, j) == Rational(0));
            CHECK(co.c(-1, -1, i, j) == Rational(0));
        }
    for (long r = 0; r <= 1; ++r)
        for (long s = 0; s <= 2; ++s) {
            if (r + s > 2) continue;
            CHECK(co.B(0, r, s) == -co.B(+1, r, s) - co.B(-1, r, s));
            CHECK(co.C(+1, +1, r, s) == Rational(0));
            CHECK(co.C(-1, -1, r, s) == Rational(0));
        }
}

TEST_CASE("recurrence relations hold exactly") {
    for (const SchemeParams& p : {P232, P422, P311, P412}) {
        EigenGrid g = compute_grid(p);
        CheckReport rep = verify_recurrences(g);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.pass);
        CHECK(rep.checked == 2 * g.nclasses() * g.nclasses());
    }
}

TEST_CASE("difference equations hold exactly") {
    for (const SchemeParams& p : {P232, P422, P311, P412}) {
        EigenGrid g = compute_grid(p);
        CheckReport rep = verify_differences(g);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.pass);
    }
}

TEST_CASE("boundary coefficients vanish where targets leave the domain") {
    BispectralCoeffs co{P232};
    // r+1 leaves D at r = n-m or r+s = m
    CHECK(co.B(+1, 1, 0) == Rational(0));  // r = n-m = 1
    CHECK(co.B(+1, 1, 1) == Rational(0));  // corner 2r+s = n, resolved to 0
    CHECK(co.B(+1, 0, 2) == Rational(0));  // r+s = m
    CHECK(co.B(-1, 0, 0) == Rational(0));  // r = 0
    CHECK(co.C(0, +1, 0, 2) == Rational(0));
    CHECK(co.C(+1, -1, 1, 1) == Rational(0));
    CHECK(co.C(0, -1, 0, 0) == Rational(0));
}

TEST_CASE("operator quadruple structure") {
    EigenGrid g = compute_grid(P232);
    OperatorQuadruple ops = build_operators(g);
    REQUIRE(ops.nclasses() == 5);

    CheckReport rep = verify_operator_structure(ops, g);
    for (const auto& f : rep.failures) FAIL_CHECK(f);
    CHECK(rep.pass);

    // Y* diagonal entries are theta_i = q^-i - 1
    BispectralCoeffs co{P232};
    for (long a = 0; a < 5; ++a) {
        CHECK(ops.rawYs[a * 5 + a] == co.theta(ops.D[a].first));
        CHECK(ops.rawXs[a * 5 + a] ==
              P232.q.pow(-ops.D[a].first) * co.theta(ops.D[a].second));
    }
    // X columns carry b^eps(i,j) at rows (i, j+eps)
    for (long src = 0; src < 5; ++src) {
        auto [i, j] = ops.D[src];
        for (long tgt = 0; tgt < 5; ++tgt) {
            auto [ti, tj] = ops.D[tgt];
            Rational expect =
                (ti == i && tj >= j - 1 && tj <= j + 1) ? co.b(static_cast<int>(tj - j), i, j)
                                                        : Rational(0);
            CHECK(ops.rawX[tgt * 5 + src] == expect);
        }
    }
}

TEST_CASE("bispectral algebra relations") {
    for (const SchemeParams& p : {P232, P422, P311, P412}) {
        EigenGrid g = compute_grid(p);
        OperatorQuadruple ops = build_operators(g);
        CheckReport rep = verify_algebra(ops);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.pass);
        CHECK(rep.checked == 7);  // three commutators + four AW relations
    }
}

TEST_CASE("operator JSON dump") {
    EigenGrid g = compute_grid(P311);
    OperatorQuadruple ops = build_operators(g);
    std::string j = operators_to_json(ops, {verify_algebra(ops)});
    CHECK(j.find("\"Xstar\"") != std::string::npos);
    CHECK(j.find("bispectral_algebra") != std::string::npos);
}
