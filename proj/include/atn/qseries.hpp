#ifndef ATN_QSERIES_HPP
#define ATN_QSERIES_HPP

#include <array>
#include <optional>
#include <stdexcept>

#include "atn/rational.hpp"

namespace atn {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- generic kernels, usable with Rational (exact path) or BigFloat (limit path)

/// (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k), n >= 0.
template <class F>
F q_poch_generic(const F& a, const F& q, long n) {
    F acc(1);
    F aqk = a;
    for (long k = 0; k < n; ++k) {
        acc *= F(1) - aqk;
        aqk *= q;
    }
    return acc;
}

/// Gaussian binomial via the product formula; 0 outside 0 <= k <= n.
template <class F>
F q_binomial_generic(long n, long k, const F& q) {
    if (k < 0 || n < 0 || k > n) return F(0);
    F acc(1);
    for (long t = 1; t <= k; ++t) acc *= (F(1) - q.pow(n - k + t)) / (F(1) - q.pow(t));
    return acc;
}

/// 3phi2 summed to k = kmax inclusive; termination must be guaranteed by the caller.
/// With r=3, s=2 the (-1)^((1+s-r)k) q^((1+s-r)C(k,2)) factor of the general series is 1.
template <class F>
F phi32_sum(const std::array<F, 3>& num, const std::array<F, 2>& den, const F& q, const F& z,
            long kmax) {
    F total(1);
    F term(1);
    F qk(1);  // q^k
    for (long k = 0; k < kmax; ++k) {
        for (const F& a : num) term *= F(1) - a * qk;
        for (const F& b : den) term /= F(1) - b * qk;
        qk *= q;
        term *= z / (F(1) - qk);
        total += term;
    }
    return total;
}

// ---- exact q-kernels (the ExactScalar contract)

/// prod_{k=0}^{n-1}(1 - a q^k); throws on n < 0.
Rational q_pochhammer(const Rational& a, const Rational& q, long n);

/// (q;q)_n / ((q;q)_k (q;q)_{n-k}) for 0 <= k <= n, else 0 (vanishing convention).
Rational q_binomial(long n, long k, const Rational& q);

/// Terminating 3phi2. Requires q > 1 and at least one numerator parameter of the
/// form q^-N with N >= 0; throws SeriesError("non-terminating series") otherwise,
/// and SeriesError("singular parameter") when a denominator q-Pochhammer factor
/// vanishes before the termination index.
Rational phi_3_2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                 const Rational& b2, const Rational& q, const Rational& z);

/// Smallest N >= 0 with a == q^-N, if any (q > 1).
std::optional<long> as_negative_q_power(const Rational& a, const Rational& q);

/// prefix * prod_i (1-q^{num[i]}) / prod_j (1-q^{den[j]}) with exact handling of
/// vanishing factors (exponent 0): strictly more zeros above than below gives the
/// continuous extension 0 (the (1-A)(1-B)/(1-AB) -> 0 pattern at domain corners);
/// more below is a genuine singularity; an equal nonzero count is ambiguous and
/// refused. Coefficient tables use this so corner points like 2r+s = n evaluate.
Rational qfactor_ratio(const Rational& q, const Rational& prefix, const std::vector<long>& num,
                       const std::vector<long>& den);

// ---- classical kernels (used by the Johnson-scheme module)

/// Rising factorial (a)_n; throws on n < 0.
Rational pochhammer(const Rational& a, long n);

/// Ordinary binomial coefficient; 0 outside 0 <= k <= n.
Rational binomial(long n, long k);

/// Terminating 2F1(a,b;c;z): some numerator parameter must be a non-positive integer.
Rational hyp2F1(const Rational& a, const Rational& b, const Rational& c, const Rational& z);

/// Terminating 3F2(a1,a2,a3;b1,b2;z).
Rational hyp3F2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                const Rational& b2, const Rational& z);

}  // namespace atn

#endif
