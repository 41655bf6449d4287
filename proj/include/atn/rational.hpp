#ifndef ATN_RATIONAL_HPP
#define ATN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace atn {

/// Exact rational scalar. Always in canonical form (gcd(num,den)=1, den>0);
/// every operation is exact, nothing is ever rounded.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    long to_long() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: out of long range");
        return v_.get_num().get_si();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// q^e for any integer e (negative exponents give exact reciprocals).
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: 0^negative");
            return Rational(0);
        }
        mpz_class num, den;
        unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), a);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), a);
        mpq_class r = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
        r.canonicalize();
        return Rational(r);
    }

    /// "num/den" (or just "num" for integers); lossless.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline bool is_prime_small(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// A concrete prime power q = p^h. All scheme formulas get q as this exact value.
struct QValue {
    long p = 2;
    long h = 1;
    Rational q;

    QValue() : q(2) {}
    QValue(long p_, long h_) : p(p_), h(h_), q(Rational(p_).pow(h_)) {
        if (!is_prime_small(p_)) throw std::invalid_argument("QValue: p is not prime");
        if (h_ < 1) throw std::invalid_argument("QValue: h must be >= 1");
    }

    /// Builds from q itself (q = p^h for some prime p), e.g. CLI input.
    static QValue from_q(long qv) {
        if (qv < 2) throw std::invalid_argument("QValue: q must be >= 2");
        long p = 2;
        while (qv % p != 0) {
            ++p;
            if (p * p > qv) { p = qv; break; }
        }
        long h = 0, rest = qv;
        while (rest > 1) {
            if (rest % p != 0) throw std::invalid_argument("QValue: q is not a prime power");
            rest /= p;
            ++h;
        }
        return QValue(p, h);
    }

    long q_long() const { return q.to_long(); }

    /// q^e as an exact rational, e may be negative.
    Rational pow(long e) const { return q.pow(e); }
};

}  // namespace atn

#endif
