#ifndef ATN_UNIPOLY_HPP
#define ATN_UNIPOLY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "atn/qseries.hpp"
#include "atn/rational.hpp"

namespace atn {

/// Supplies q^(a + b*ell) without committing to an integer ell. The exact path
/// has integer ell; the q->1 limit path has real ell with q^ell known exactly.
template <class F>
struct QPow {
    F q;
    F q_ell;                      // q^ell
    std::optional<long> ell_int;  // set when ell is a known integer

    F pow(long a, long b) const {
        F r = q.pow(a);
        if (b != 0) r *= q_ell.pow(b);
        return r;
    }
    // "k > ell" is decidable only when ell is an integer; on the limit path the
    // evaluation domain keeps k far below ell(h).
    bool ell_less_than(long k) const { return ell_int.has_value() && *ell_int < k; }
};

template <class F>
QPow<F> make_qpow(const F& q, long ell) {
    return QPow<F>{q, q.pow(ell), ell};
}

/// K_k(N,ell;q;x): prefactor (q^-ell;q)_k [N choose k]_q q^(ell k) times the
/// affine q-Krawtchouk 3phi2(q^-k, 0, q^-x; q^-ell, q^-N; q, q).
/// Vanishes outside 0 <= k <= min(N, ell).
template <class F>
F K_family(long k, long N, const QPow<F>& ctx, long x) {
    if (x < 0) throw std::invalid_argument("K_family: x must be non-negative");
    if (k < 0 || k > N || ctx.ell_less_than(k)) return F(0);
    const F& q = ctx.q;
    F pre(1);
    for (long t = 0; t < k; ++t) pre *= F(1) - ctx.pow(t, -1);
    pre *= q_binomial_generic(N, k, q);
    pre *= ctx.pow(0, k);
    long kmax = std::min(k, x);
    F series = phi32_sum<F>({q.pow(-k), F(0), q.pow(-x)}, {ctx.pow(0, -1), q.pow(-N)}, q, q, kmax);
    return pre * series;
}

/// E_k(N,m;q;x) = q^(k^2) [m k]_q [N-m k]_q R_k(mu(x); q^-m-1, q^-N+m-1, N-m | q),
/// the dual q-Hahn kernel being 3phi2(q^-k, q^(x-N-1), q^-x; q^-m, q^(m-N); q, q).
/// Vanishes outside 0 <= k <= min(N-m, m).
template <class F>
F E_family(long k, long N, long m, const F& q, long x) {
    if (x < 0) throw std::invalid_argument("E_family: x must be non-negative");
    if (k < 0 || k > N - m || k > m) return F(0);
    F pre = q.pow(k * k) * q_binomial_generic(m, k, q) * q_binomial_generic(N - m, k, q);
    long kmax = std::min(k, x);
    F series =
        phi32_sum<F>({q.pow(-k), q.pow(x - N - 1), q.pow(-x)}, {q.pow(-m), q.pow(m - N)}, q, q, kmax);
    return pre * series;
}

/// Q_k(N,m;q;x) = ([N k]_q - [N k-1]_q) R_x(mu(k); ...), the q-Hahn side of the
/// same kernel. Vanishes outside 0 <= k <= min(N-m, m).
template <class F>
F Q_family(long k, long N, long m, const F& q, long x) {
    if (x < 0) throw std::invalid_argument("Q_family: x must be non-negative");
    if (k < 0 || k > N - m || k > m) return F(0);
    F pre = q_binomial_generic(N, k, q) - q_binomial_generic(N, k - 1, q);
    long kmax = std::min(k, x);
    F series =
        phi32_sum<F>({q.pow(-x), q.pow(k - N - 1), q.pow(-k)}, {q.pow(-m), q.pow(m - N)}, q, q, kmax);
    return pre * series;
}

// Exact-path wrappers.
Rational K_poly(long k, long N, long ell, const QValue& q, long x);
Rational E_poly(long k, long N, long m, const QValue& q, long x);
Rational Q_poly(long k, long N, long m, const QValue& q, long x);

/// One evaluated relation instance: lhs and rhs computed independently; a passing
/// check has residual exactly zero.
struct RelationResidual {
    std::string relation;  // "crecK(eps)", "diffK", "recE", "cdiffE(eps)"
    long eps = 0;
    std::vector<long> index;  // (j,s) or (i,r)
    Rational lhs;
    Rational rhs;
    Rational residual;

    bool pass() const { return residual.is_zero(); }
};

/// Contiguity recurrences (all eps) and the difference equation for K.
std::vector<RelationResidual> verify_K_relations(long N, long ell, const QValue& q);

/// Recurrence and contiguity difference equations (all eps) for E.
std::vector<RelationResidual> verify_E_relations(long N, long m, const QValue& q);

}  // namespace atn

#endif
