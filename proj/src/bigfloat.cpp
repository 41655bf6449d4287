#include "atn/bigfloat.hpp"

#include <stdexcept>
#include <vector>

namespace atn {

BigFloat BigFloat::bin(const BigFloat& a, const BigFloat& b, mpfr_bin_fn fn) {
    mpfr_prec_t p = std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    BigFloat r(0, p);
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(0, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(0, precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(long e) const {
    BigFloat r(0, precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_dyadic(long base, const Rational& exponent, mpfr_prec_t prec) {
    if (base <= 0) throw std::invalid_argument("pow_dyadic: base must be positive");
    BigFloat r(0, prec);
    mpfr_t e;
    mpfr_init2(e, prec);
    mpfr_set_q(e, exponent.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_t b;
    mpfr_init2(b, prec);
    mpfr_set_si(b, base, MPFR_RNDN);
    mpfr_pow(r.v_, b, e, MPFR_RNDN);
    mpfr_clear(b);
    mpfr_clear(e);
    return r;
}

std::string BigFloat::str(int digits) const {
    mpfr_exp_t exp10 = 0;
    char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    // mpfr convention: value = 0.<digits> * 10^exp10
    std::string out = (neg ? "-" : "") + std::string("0.") + d + "e" + std::to_string(exp10);
    return out;
}

}  // namespace atn
