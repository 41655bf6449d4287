#ifndef ATN_SUBCONSTITUENT_HPP
#define ATN_SUBCONSTITUENT_HPP

#include <string>
#include <vector>

#include "atn/spectra.hpp"

namespace atn {

/// Dual adjacency matrices A*_rs and dual idempotents E*_ij with respect to a
/// base vertex; both are diagonal, so they are stored as the per-vertex class
/// relative to the base plus the U-table that supplies the diagonal values.
struct DualPair {
    long base = 0;
    std::vector<ClassId> D;
    std::vector<int> base_class;  // base_class[y] = class index of (base, y)

    // diagonal of A*_rs at vertex y is U_rs(base_class[y])
};

DualPair build_dual(const SchemeInstance& s, long base);

/// E* diagonals partition the vertex set with block sizes equal to the
/// valencies; A*_00 = I; A*_rs = sum_ij U_rs(ij) E*_ij; sum E* = I and
/// E*_ij E*_mn = delta E*_ij (diagonal 01 with disjoint supports).
CheckReport verify_dual_invariants(const SchemeInstance& s, const EigenGrid& g, const DualPair& d);

/// Lemma-style zero equivalences, both directions:
///   E*_ij A_mn E*_rs = 0  <=>  p_{ij,mn}^{rs} = 0   (direct sparse sweep)
///   E_ij A*_mn E_rs = 0   <=>  q_{ij,mn}^{rs} = 0   (exact Frobenius-norm trace;
///       the matrix is real symmetric-conjugated so |M|_F^2 = 0 iff M = 0, and
///       tr(A* E_rs A* E_ij) collapses onto verified intersection numbers)
/// For |X| <= dense_limit the second family is also expanded literally.
CheckReport verify_lemma_EAE(const SchemeInstance& s, const EigenGrid& g, const BruteTensor& p,
                             const KreinTensor& k, const DualPair& d, long dense_limit = 64);

/// The five subconstituent-algebra relations: [A_01,A*_10] = 0, the two
/// tridiagonal relations for (A_10, A*_10) with gamma, rho, chi, and the two for
/// (A_01, A*_01) with zeta, xi; plus centrality of gamma, rho, xi, eta1.
/// All verified as exact |X| x |X| matrix identities.
CheckReport verify_tridiagonal(const SchemeInstance& s, const EigenGrid& g, const DualPair& d);

/// JSON residual report for one base vertex.
std::string dual_report_json(long base, const std::vector<CheckReport>& reports);

}  // namespace atn

#endif
