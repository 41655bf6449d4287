#ifndef ATN_BIGFLOAT_HPP
#define ATN_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "atn/rational.hpp"

namespace atn {

/// Arbitrary-precision binary float. The precision is part of the value;
/// binary operations compute at the larger precision of the two operands.
/// Used only by the q->1 limit path, everything else stays rational.
class BigFloat {
public:
    static constexpr mpfr_prec_t kDefaultPrec = 256;

    BigFloat() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
    explicit BigFloat(long n, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    explicit BigFloat(const Rational& r, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    /// p^x with dyadic rational x, computed to `prec` bits.
    static BigFloat pow_dyadic(long base, const Rational& exponent, mpfr_prec_t prec = kDefaultPrec);

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_div); }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    BigFloat pow(long e) const;
    BigFloat abs() const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal string with `digits` significant digits.
    std::string str(int digits = 40) const;

private:
    using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat bin(const BigFloat& a, const BigFloat& b, mpfr_bin_fn fn);

    mpfr_t v_;
};

}  // namespace atn

#endif
