#ifndef ATN_BISPECTRAL_HPP
#define ATN_BISPECTRAL_HPP

#include <string>
#include <vector>

#include "atn/spectra.hpp"

namespace atn {

/// Recurrence coefficients b^eps(i,j), c^{eps,eps'}(i,j) acting on the degree
/// indices, and difference coefficients B^eps(r,s), C^{eps,eps'}(r,s) acting on
/// the variable indices.
struct BispectralCoeffs {
    SchemeParams params;

    Rational b(int eps, long i, long j) const;
    Rational c(int e1, int e2, long i, long j) const;
    Rational B(int eps, long r, long s) const;
    Rational C(int e1, int e2, long r, long s) const;

    Rational lambda(long s) const;           // q^-s - 1
    Rational Lambda(long r, long s) const;   // (q^-r - 1)(1 - q^(r+s-n-1))
    Rational theta(long i) const;            // q^-i - 1
};

/// lambda(s) T_ij = sum_eps b^eps(i,j) T_{i,j+eps} and
/// q^-s Lambda(r,s) T_ij = sum c^{eps,eps'}(i,j) T_{i+eps,j+eps'},
/// swept over all of D x D*; degree-shifted terms evaluate through the formula,
/// which vanishes outside D.
CheckReport verify_recurrences(const EigenGrid& g);

/// theta_i T_ij = sum_eps B^eps(r,s) T_ij(r+eps,s) and
/// q^-i theta_j T_ij = sum C^{eps,eps'}(r,s) T_ij(r+eps,s+eps').
/// Variable shifts leaving D* are dropped; the verifier asserts the matching
/// coefficient vanishes there (boundary consistency).
CheckReport verify_differences(const EigenGrid& g);

/// The four operators on W = span{T_ij} in the deg-lex (i,j) basis, plus the
/// raw recurrence/difference operators they are affine images of.
struct OperatorQuadruple {
    SchemeParams params;
    std::vector<ClassId> D;
    // row-major nc x nc; entry [target][source]
    std::vector<Rational> rawX, rawY, rawXs, rawYs;
    std::vector<Rational> X, Y, Xs, Ys;

    long nclasses() const { return static_cast<long>(D.size()); }
};

OperatorQuadruple build_operators(const EigenGrid& g);

/// Structural support of the operators: X tridiagonal in j (i fixed), Y with no
/// (+,+)/(-,-) offsets, X* and Y* diagonal; plus the action of each operator on
/// every grid column reproducing its eigenvalue relation.
CheckReport verify_operator_structure(const OperatorQuadruple& ops, const EigenGrid& g);

/// The six defining relations of the bispectral (Askey-Wilson type) algebra as
/// exact matrix identities on W.
CheckReport verify_algebra(const OperatorQuadruple& ops);

/// JSON dump of the operator matrices ("num/den" strings) and a residual summary.
std::string operators_to_json(const OperatorQuadruple& ops,
                              const std::vector<CheckReport>& reports);

}  // namespace atn

#endif
