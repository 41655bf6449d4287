#ifndef ATN_STRUCTURE_HPP
#define ATN_STRUCTURE_HPP

#include <map>
#include <string>
#include <vector>

#include "atn/spectra.hpp"

namespace atn {

enum class Ordering { Less, Equal, Greater, Incomparable };

/// deg-lex, the coordinate-swapped deg-lex', or the two-parameter partial order
/// (m1 + a m2 <= n1 + a n2 and b m1 + m2 <= b n1 + n2).
struct OrderSpec {
    enum class Kind { DegLex, DegLexPrime, Partial } kind = Kind::DegLex;
    Rational alpha, beta;  // Partial only

    static OrderSpec deglex() { return {Kind::DegLex, Rational(0), Rational(0)}; }
    static OrderSpec deglex_prime() { return {Kind::DegLexPrime, Rational(0), Rational(0)}; }
    /// Validates 0 <= alpha,beta <= 1, alpha*beta != 1, and compatibility with the
    /// monomial order the partial order will be paired with (alpha < 1 for deg-lex,
    /// beta < 1 for deg-lex').
    static OrderSpec partial(const Rational& alpha, const Rational& beta, Kind paired_with);
};

Ordering order_compare(const OrderSpec& spec, const ClassId& a, const ClassId& b);
bool order_leq(const OrderSpec& spec, const ClassId& a, const ClassId& b);

/// Generator slices of a structure-constant tensor: values[src*nc + tgt] is
/// p_{e,src}^{tgt} (or the Krein analogue) for e = (1,0) and e = (0,1).
struct GeneratorTables {
    SchemeParams params;
    std::vector<ClassId> D;
    std::vector<Rational> e10, e01;

    long nclasses() const { return static_cast<long>(D.size()); }
    const Rational& at10(long src, long tgt) const { return e10[src * nclasses() + tgt]; }
    const Rational& at01(long src, long tgt) const { return e01[src * nclasses() + tgt]; }
};

/// Closed-form intersection numbers p_{10,ij}^{ab}, p_{01,ij}^{ab}. Requires a
/// non-degenerate domain (both generators present: m >= 1, ell >= 1, n > m).
GeneratorTables intersection_formula(const SchemeParams& p);

/// Closed-form Krein parameters q_{10,rs}^{ab}, q_{01,rs}^{ab}.
GeneratorTables krein_formula(const SchemeParams& p);

/// The same slices read from brute tensors, for cross-checking.
GeneratorTables slices_from_brute(const SchemeParams& p, const std::vector<ClassId>& D,
                                  const BruteTensor& t);
GeneratorTables slices_from_krein(const SchemeParams& p, const std::vector<ClassId>& D,
                                  const KreinTensor& t);

struct CompatReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> witnesses;  // capped at 100

    void fail(std::string w) {
        pass = false;
        if (witnesses.size() < 100) witnesses.push_back(std::move(w));
    }
};

/// Proposition-style compatibility: for each generator e and source a in D,
/// t_{e,a}^b != 0 implies b <= a+e in the partial order, and a+e in D implies
/// t_{e,a}^{a+e} != 0.
CompatReport check_compat(const GeneratorTables& t, const OrderSpec& partial_order);

/// Supports lie on the three lines n1+n2 = m1+m2, m1+m2 +- 1 with the truncated
/// ends of Figs. 1-2: no (+,+) or (-,-) offsets for the 7-term slices, only
/// (0,eps) for p01, only (eps,0) for q10.
CheckReport check_sparsity(const GeneratorTables& t, bool krein_side);

/// Sparse bivariate polynomial with exact coefficients.
struct BivariatePoly {
    std::map<std::pair<long, long>, Rational> coef;  // nonzero terms only

    bool is_zero() const { return coef.empty(); }
    void add_term(long d1, long d2, const Rational& c);
    Rational eval(const Rational& x, const Rational& y) const;
    BivariatePoly shift_x() const;  // * x
    BivariatePoly shift_y() const;  // * y
    std::pair<long, long> multidegree(const OrderSpec& monomial_order) const;
    std::string str() const;  // human-readable, for table export
};

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly operator*(const BivariatePoly& a, const Rational& s);

/// Solves the recurrences for v_ij (x = T_10, y = T_01 variables), ascending in
/// deg-lex: the three-term relation advances j, the seven-term relation advances
/// i. Initial conditions v_00 = 1, v_10 = x, v_01 = y.
std::vector<BivariatePoly> bivariate_v(const GeneratorTables& p);

/// Same for v*_rs from the Krein tables, ascending in deg-lex'.
std::vector<BivariatePoly> bivariate_v_star(const GeneratorTables& q);

/// v_ij(T_10,T_01) == T_ij on all of D*, multidegree(v_ij) == (i,j), all
/// monomials within D and partial-order compatible; mirrored for v* against U.
CheckReport verify_bivariate(const EigenGrid& g, const std::vector<BivariatePoly>& v,
                             const std::vector<BivariatePoly>& vstar);

std::string tables_to_csv(const GeneratorTables& t, const char* label);
std::string polys_to_json(const std::vector<ClassId>& D, const std::vector<BivariatePoly>& v,
                          const char* varname_x, const char* varname_y);

}  // namespace atn

#endif
