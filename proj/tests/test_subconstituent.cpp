#include <doctest.h>

#include <map>

#include "atn/subconstituent.hpp"

using namespace atn;

namespace {
const SchemeParams P232{QValue(2, 1), 3, 2, 2};
const SchemeParams P311{QValue(3, 1), 2, 1, 1};

std::vector<long> sample_bases(long n) { return {0, n / 2, n - 1}; }
}

TEST_CASE("dual pair invariants") {
    SchemeInstance s = build_scheme(P232);
    EigenGrid g = compute_grid(P232);
    DualPair d = build_dual(s, 0);

    CheckReport rep = verify_dual_invariants(s, g, d);
    for (const auto& f : rep.failures) FAIL_CHECK(f);
    CHECK(rep.pass);

    // E* block sizes are exactly the valencies {1,24,9,72,6}
    std::map<ClassId, long> sizes;
    for (long y = 0; y < s.size(); ++y) ++sizes[s.D[d.base_class[y]]];
    CHECK(sizes[ClassId{0, 0}] == 1);
    CHECK(sizes[ClassId{1, 0}] == 24);
    CHECK(sizes[ClassId{0, 1}] == 9);
    CHECK(sizes[ClassId{1, 1}] == 72);
    CHECK(sizes[ClassId{0, 2}] == 6);

    CHECK_THROWS(build_dual(s, -1));
    CHECK_THROWS(build_dual(s, s.size()));
}

TEST_CASE("lemma equivalences on (2,3,2,2)") {
    SchemeInstance s = build_scheme(P232);
    EigenGrid g = compute_grid(P232);
    BruteTensor p = brute_intersection_numbers(s);
    KreinTensor k = brute_krein(s, g);
    for (long base : sample_bases(s.size())) {
        DualPair d = build_dual(s, base);
        CheckReport rep = verify_lemma_EAE(s, g, p, k, d);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.pass);
    }
}

TEST_CASE("lemma equivalences with the literal dense expansion") {
    SchemeInstance s = build_scheme(P311);
    EigenGrid g = compute_grid(P311);
    BruteTensor p = brute_intersection_numbers(s);
    KreinTensor k = brute_krein(s, g);
    for (long base : sample_bases(s.size())) {
        DualPair d = build_dual(s, base);
        CheckReport rep = verify_lemma_EAE(s, g, p, k, d, /*dense_limit=*/64);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.pass);
    }
}

TEST_CASE("tridiagonal relations with odd q and m = 2") {
    SchemeParams par{QValue(3, 1), 3, 1, 2};  // 117 vertices
    SchemeInstance s = build_scheme(par);
    EigenGrid g = compute_grid(par);
    for (long base : sample_bases(s.size())) {
        DualPair d = build_dual(s, base);
        CheckReport rep = verify_tridiagonal(s, g, d);
        for (const auto& f : rep.failures) FAIL_CHECK(f);
        CHECK(rep.pass);
    }
}

TEST_CASE("tridiagonal relations") {
    for (const SchemeParams& par : {P232, P311}) {
        SchemeInstance s = build_scheme(par);
        EigenGrid g = compute_grid(par);
        for (long base : sample_bases(s.size())) {
            DualPair d = build_dual(s, base);
            CheckReport rep = verify_tridiagonal(s, g, d);
            for (const auto& f : rep.failures) FAIL_CHECK(f);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("residual report JSON") {
    SchemeInstance s = build_scheme(P311);
    EigenGrid g = compute_grid(P311);
    DualPair d = build_dual(s, 2);
    std::string j = dual_report_json(2, {verify_dual_invariants(s, g, d)});
    CHECK(j.find("\"base_vertex\": 2") != std::string::npos);
    CHECK(j.find("dual_invariants") != std::string::npos);
}
