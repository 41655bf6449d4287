#ifndef ATN_SPECTRA_HPP
#define ATN_SPECTRA_HPP

#include <string>
#include <vector>

#include "atn/matrix.hpp"
#include "atn/scheme.hpp"
#include "atn/unipoly.hpp"

namespace atn {

/// Exact eigenvalue/dual-eigenvalue tables over D x D* (D* = D), indexed by the
/// deg-lex class order shared with SchemeInstance.
struct EigenGrid {
    SchemeParams params;
    std::vector<ClassId> D;
    std::vector<Rational> T;  // T[ij][rs], row-major
    std::vector<Rational> U;  // U[rs][ij], row-major

    long nclasses() const { return static_cast<long>(D.size()); }
    const Rational& Tval(long ij, long rs) const { return T[ij * nclasses() + rs]; }
    const Rational& Uval(long rs, long ij) const { return U[rs * nclasses() + ij]; }
};

/// T_ij(r,s) = q^(i ell) K_j(m-i,ell;q;s) E_i(n-s,m-s;q;r); throws when either
/// index pair is outside the domain.
Rational eigenvalue_T(long i, long j, long r, long s, const SchemeParams& p);

/// U_rs(i,j) = [n m]_q/[n-s m-s]_q K_s(m-i,ell;q;j) Q_r(n-s,m-s;q;i).
Rational dual_U(long r, long s, long i, long j, const SchemeParams& p);

/// Formula value with no domain check on (i,j); the vanishing conventions of the
/// univariate families make it 0 at every one-step excursion outside D, which is
/// what the degree-shifted terms of the recurrence relations need. (r,s) must
/// still be a valid variable point (r,s >= 0).
Rational eigenvalue_T_formula(long i, long j, long r, long s, const SchemeParams& p);
Rational dual_U_formula(long r, long s, long i, long j, const SchemeParams& p);

bool in_attenuated_domain(long a, long b, const SchemeParams& p);

EigenGrid compute_grid(const SchemeParams& p);

struct CheckReport {
    std::string name;
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        if (failures.size() < 100) failures.push_back(std::move(msg));
    }
};

/// U_rs(i,j) T_ij(0,0) - T_ij(r,s) U_rs(0,0) == 0 on all index pairs.
CheckReport wilson_duality_check(const EigenGrid& g);

/// Primitive idempotents as class functions: entry of E_rs on a pair of class
/// (i,j) is U_rs(i,j)/|X|. Dense materialization multiplies them out on demand.
struct IdempotentSet {
    long vertex_count = 0;
    std::vector<ClassId> D;
    std::vector<Rational> coef;  // coef[rs][ij] = U_rs(ij)/|X|

    long nclasses() const { return static_cast<long>(D.size()); }
    const Rational& entry_class(long rs, long ij) const { return coef[rs * nclasses() + ij]; }

    /// Integer view: E_rs = mat / den (den is the lcm of the class-value
    /// denominators, which already carry the 1/|X| factor).
    struct Scaled {
        ZMat mat;
        mpz_class den;
    };
    Scaled materialize(const SchemeInstance& s, long rs) const;
};

IdempotentSet idempotents(const SchemeInstance& s, const EigenGrid& g);

/// Verifies E_rs^2 = E_rs, E_ij E_rs = 0, sum E = I, E_00 = J/|X|, the inverse
/// expansion A_ij = sum_rs T_ij(rs) E_rs, A_ij E_rs = T_ij(rs) E_rs, and
/// rank E_rs = U_rs(0,0). All identities are checked exactly in the adjacency
/// basis (valid because axiom (iv) was verified by explicit products); for
/// |X| <= dense_limit they are additionally re-checked as literal |X| x |X|
/// integer matrix identities, and the rank comes from fraction-free elimination.
CheckReport verify_idempotents(const SchemeInstance& s, const EigenGrid& g, const BruteTensor& t,
                               long dense_limit = 160);

/// Krein parameters tensor q_{c1,c2}^{c3} as exact rationals.
struct KreinTensor {
    long nclasses = 0;
    std::vector<Rational> v;

    const Rational& at(long c1, long c2, long c3) const {
        return v[(c1 * nclasses + c2) * nclasses + c3];
    }
    Rational& at(long c1, long c2, long c3) { return v[(c1 * nclasses + c2) * nclasses + c3]; }
};

/// Schur products of idempotents expanded exactly in the A-basis (Schur-diagonal
/// reads), then converted with the inverse expansion; validates the expansion has
/// remainder exactly zero and reports negative parameters.
KreinTensor brute_krein(const SchemeInstance& s, const EigenGrid& g, CheckReport* report = nullptr);

/// CSV with rows (i,j | values across (r,s)) for T, or (r,s | values) for U.
std::string grid_to_csv(const EigenGrid& g, bool dual);

}  // namespace atn

#endif
