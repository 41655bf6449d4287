#include <doctest.h>

#include "atn/bispectral.hpp"
#include "atn/structure.hpp"
#include "atn/subconstituent.hpp"

using namespace atn;

// end-to-end sweeps over extension fields: the whole pipeline (enumeration,
// axioms, grids, idempotents, Krein, formula tables, bivariate polynomials,
// operator algebra, subconstituent relations) on GF(4) and GF(9) schemes
TEST_CASE("full pipeline on extension-field schemes") {
    for (auto [p, h, n, ell, m] :
         {std::tuple<long, long, long, long, long>{2, 2, 2, 1, 1}, {3, 2, 2, 1, 1}}) {
        SchemeParams par{QValue(p, h), n, ell, m};
        SchemeInstance s = build_scheme(par);
        INFO("q=", par.q.q_long());

        AxiomReport basic = verify_basic_axioms(s);
        for (const auto& f : basic.failures) FAIL_CHECK(f);
        CHECK(basic.pass);
        AxiomReport prods;
        BruteTensor t = brute_intersection_numbers(s, &prods);
        CHECK(prods.pass);

        EigenGrid g = compute_grid(par);
        for (long c = 0; c < g.nclasses(); ++c) {
            long v = s.valency[c] < 0 ? 0 : s.valency[c];
            CHECK(g.Tval(c, 0) == Rational(v));
        }
        CHECK(wilson_duality_check(g).pass);
        CHECK(verify_idempotents(s, g, t).pass);
        CheckReport krep;
        KreinTensor k = brute_krein(s, g, &krep);
        CHECK(krep.pass);

        GeneratorTables pf = intersection_formula(par);
        GeneratorTables pb = slices_from_brute(par, s.D, t);
        GeneratorTables qf = krein_formula(par);
        GeneratorTables qb = slices_from_krein(par, s.D, k);
        long nn = pf.nclasses() * pf.nclasses();
        for (long a = 0; a < nn; ++a) {
            CHECK(pf.e10[a] == pb.e10[a]);
            CHECK(pf.e01[a] == pb.e01[a]);
            CHECK(qf.e10[a] == qb.e10[a]);
            CHECK(qf.e01[a] == qb.e01[a]);
        }

        CHECK(verify_recurrences(g).pass);
        CHECK(verify_differences(g).pass);
        OperatorQuadruple ops = build_operators(g);
        CHECK(verify_operator_structure(ops, g).pass);
        CHECK(verify_algebra(ops).pass);

        auto v = bivariate_v(pf);
        auto vs = bivariate_v_star(qf);
        CHECK(verify_bivariate(g, v, vs).pass);

        for (long base : {0L, s.size() / 2, s.size() - 1}) {
            DualPair d = build_dual(s, base);
            CHECK(verify_dual_invariants(s, g, d).pass);
            CHECK(verify_lemma_EAE(s, g, t, k, d).pass);
            CHECK(verify_tridiagonal(s, g, d).pass);
        }
    }
}

TEST_CASE("univariate relation families over GF(4)") {
    QValue q4(2, 2);
    for (long N = 0; N <= 3; ++N) {
        for (long ell = 0; ell <= 3; ++ell)
            for (const auto& r : verify_K_relations(N, ell, q4)) CHECK(r.pass());
        for (long m = 0; m <= N; ++m)
            for (const auto& r : verify_E_relations(N, m, q4)) CHECK(r.pass());
    }
}
