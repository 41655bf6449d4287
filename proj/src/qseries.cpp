#include "atn/qseries.hpp"

#include <algorithm>
#include <vector>

namespace atn {

Rational q_pochhammer(const Rational& a, const Rational& q, long n) {
    if (n < 0) throw SeriesError("q_pochhammer: undefined order");
    return q_poch_generic(a, q, n);
}

Rational q_binomial(long n, long k, const Rational& q) {
    return q_binomial_generic(n, k, q);
}

std::optional<long> as_negative_q_power(const Rational& a, const Rational& q) {
    if (a.sign() <= 0) return std::nullopt;
    Rational t(1);
    for (long N = 0; N <= 4096; ++N) {
        if (a == t) return N;
        if (t < a) return std::nullopt;  // q^-N strictly decreasing for q > 1
        t /= q;
    }
    return std::nullopt;
}

Rational phi_3_2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                 const Rational& b2, const Rational& q, const Rational& z) {
    if (q <= Rational(1)) throw SeriesError("phi_3_2: requires q > 1");
    long kmax = -1;
    for (const Rational* a : {&a1, &a2, &a3}) {
        if (auto N = as_negative_q_power(*a, q)) {
            if (kmax < 0 || *N < kmax) kmax = *N;
        }
    }
    if (kmax < 0) throw SeriesError("phi_3_2: non-terminating series");
    Rational qj(1);
    for (long j = 0; j < kmax; ++j) {
        if (b1 * qj == Rational(1) || b2 * qj == Rational(1))
            throw SeriesError("phi_3_2: singular parameter");
        qj *= q;
    }
    return phi32_sum<Rational>({a1, a2, a3}, {b1, b2}, q, z, kmax);
}

Rational qfactor_ratio(const Rational& q, const Rational& prefix, const std::vector<long>& num,
                       const std::vector<long>& den) {
    long zn = 0, zd = 0;
    for (long e : num)
        if (e == 0) ++zn;
    for (long e : den)
        if (e == 0) ++zd;
    if (zn > zd) return Rational(0);
    if (zd > zn) throw SeriesError("singular denominator");
    if (zn != 0) throw SeriesError("ambiguous 0/0 coefficient");
    Rational r = prefix;
    for (long e : num) r *= Rational(1) - q.pow(e);
    for (long e : den) r /= Rational(1) - q.pow(e);
    return r;
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw SeriesError("pochhammer: undefined order");
    Rational acc(1);
    for (long k = 0; k < n; ++k) acc *= a + Rational(k);
    return acc;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    k = std::min(k, n - k);
    Rational acc(1);
    for (long t = 1; t <= k; ++t) acc *= Rational(n - k + t, t);
    return acc;
}

namespace {

std::optional<long> as_nonpositive_integer(const Rational& a) {
    if (!a.is_integer() || a.sign() > 0) return std::nullopt;
    return -a.to_long();
}

Rational hyp_sum(const std::vector<Rational>& num, const std::vector<Rational>& den,
                 const Rational& z) {
    long kmax = -1;
    for (const Rational& a : num) {
        if (auto N = as_nonpositive_integer(a)) {
            if (kmax < 0 || *N < kmax) kmax = *N;
        }
    }
    if (kmax < 0) throw SeriesError("hypergeometric: non-terminating series");
    for (const Rational& b : den) {
        if (auto N = as_nonpositive_integer(b)) {
            if (*N < kmax) throw SeriesError("hypergeometric: singular parameter");
        }
    }
    Rational total(1), term(1);
    for (long k = 0; k < kmax; ++k) {
        for (const Rational& a : num) term *= a + Rational(k);
        for (const Rational& b : den) term /= b + Rational(k);
        term *= z / Rational(k + 1);
        total += term;
    }
    return total;
}

}  // namespace

Rational hyp2F1(const Rational& a, const Rational& b, const Rational& c, const Rational& z) {
    return hyp_sum({a, b}, {c}, z);
}

Rational hyp3F2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                const Rational& b2, const Rational& z) {
    return hyp_sum({a1, a2, a3}, {b1, b2}, z);
}

}  // namespace atn
