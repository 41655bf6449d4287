#include <doctest.h>

#include "atn/spectra.hpp"

using namespace atn;

namespace {
const SchemeParams P232{QValue(2, 1), 3, 2, 2};
const SchemeParams P311{QValue(3, 1), 2, 1, 1};
}

TEST_CASE("eigenvalues of (2,3,2,2)") {
    for (long r = 0; r <= 1; ++r)
        for (long s = 0; s <= 1; ++s) CHECK(eigenvalue_T(0, 0, r, s, P232) == Rational(1));
    CHECK(eigenvalue_T(1, 0, 0, 0, P232) == Rational(24));
    CHECK(eigenvalue_T(1, 1, 0, 0, P232) == Rational(72));
    CHECK(eigenvalue_T(0, 1, 0, 0, P232) == Rational(9));
    CHECK(eigenvalue_T(0, 2, 0, 0, P232) == Rational(6));
    CHECK_THROWS(eigenvalue_T(2, 0, 0, 0, P232));  // outside D
}

TEST_CASE("dual eigenvalues and multiplicities") {
    CHECK(dual_U(0, 0, 1, 1, P232) == Rational(1));
    CHECK(dual_U(0, 0, 0, 2, P232) == Rational(1));
    CHECK_THROWS(dual_U(0, 0, 2, 0, P232));

    // closed form for U_rs(0,0) from the intermediate result:
    // q^(ell s) (q^-ell;q)_s [n s]_q [n-s r]_q (1-q^(2r+s-n-1))/(1-q^(r+s-n-1))
    const QValue& q = P232.q;
    auto mult = [&](long r, long s) {
        Rational val = q.pow(P232.ell * s) * q_pochhammer(q.pow(-P232.ell), q.q, s) *
                       q_binomial(P232.n, s, q.q) * q_binomial(P232.n - s, r, q.q);
        return val * (Rational(1) - q.pow(2 * r + s - P232.n - 1)) /
               (Rational(1) - q.pow(r + s - P232.n - 1));
    };
    CHECK(mult(1, 0) == Rational(6));
    CHECK(dual_U(1, 0, 0, 0, P232) == Rational(6));

    EigenGrid g = compute_grid(P232);
    Rational total(0);
    for (long rs = 0; rs < g.nclasses(); ++rs) {
        const Rational& m = g.Uval(rs, 0);
        CHECK(m == mult(g.D[rs].first, g.D[rs].second));
        CHECK(m.is_integer());
        CHECK(m.sign() > 0);
        total += m;
    }
    CHECK(total == Rational(112));
}

TEST_CASE("T vanishes when i+s exceeds m") {
    EigenGrid g = compute_grid(P232);
    for (long a = 0; a < g.nclasses(); ++a)
        for (long b = 0; b < g.nclasses(); ++b) {
            if (g.D[a].first + g.D[b].second > P232.m) CHECK(g.Tval(a, b) == Rational(0));
        }
}

TEST_CASE("wilson duality") {
    for (const SchemeParams& p : {P232, P311}) {
        EigenGrid g = compute_grid(p);
        CheckReport rep = wilson_duality_check(g);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.pass);
        CHECK(rep.checked == g.nclasses() * g.nclasses());
    }
}

TEST_CASE("idempotents verified exactly (dense path)") {
    SchemeInstance s = build_scheme(P232);
    EigenGrid g = compute_grid(P232);
    AxiomReport arep;
    BruteTensor t = brute_intersection_numbers(s, &arep);
    REQUIRE(arep.pass);
    CheckReport rep = verify_idempotents(s, g, t);
    for (const auto& f : rep.failures) FAIL_CHECK(f);
    CHECK(rep.pass);
}

TEST_CASE("idempotents on the small scheme") {
    SchemeInstance s = build_scheme(P311);
    EigenGrid g = compute_grid(P311);
    BruteTensor t = brute_intersection_numbers(s);
    CheckReport rep = verify_idempotents(s, g, t);
    for (const auto& f : rep.failures) FAIL_CHECK(f);
    CHECK(rep.pass);

    IdempotentSet e = idempotents(s, g);
    // E_00 entries are all 1/|X|
    for (long ij = 0; ij < e.nclasses(); ++ij)
        CHECK(e.entry_class(0, ij) == Rational(1, s.size()));
    // materialized E_00 is J/|X|: mat/den = 1/|X| entrywise
    auto m = e.materialize(s, 0);
    for (long u = 0; u < s.size(); ++u)
        for (long v = 0; v < s.size(); ++v)
            CHECK(m.mat.at(u, v) * mpz_class(s.size()) == m.den);
}

TEST_CASE("brute Krein parameters") {
    SchemeInstance s = build_scheme(P232);
    EigenGrid g = compute_grid(P232);
    CheckReport rep;
    KreinTensor k = brute_krein(s, g, &rep);
    for (const auto& f : rep.failures) FAIL_CHECK(f);
    CHECK(rep.pass);

    long nc = g.nclasses();
    // q_{00,rs}^{ab} = delta (Schur unit)
    for (long rs = 0; rs < nc; ++rs)
        for (long ab = 0; ab < nc; ++ab)
            CHECK(k.at(0, rs, ab) == Rational(rs == ab ? 1 : 0));
    // Krein condition: all parameters non-negative
    for (long a = 0; a < nc; ++a)
        for (long b = 0; b < nc; ++b)
            for (long c = 0; c < nc; ++c) CHECK(k.at(a, b, c).sign() >= 0);
}

TEST_CASE("grid CSV export shape") {
    EigenGrid g = compute_grid(P311);
    std::string csv = grid_to_csv(g, false);
    CHECK(csv.find("i,j") == 0);
    CHECK(csv.find("T(") != std::string::npos);
    std::string dual = grid_to_csv(g, true);
    CHECK(dual.find("r,s") == 0);
}
