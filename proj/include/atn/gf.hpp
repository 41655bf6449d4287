#ifndef ATN_GF_HPP
#define ATN_GF_HPP

#include <cstdint>
#include <vector>

#include "atn/rational.hpp"

namespace atn {

/// Arithmetic context for GF(q), q = p^h from a fixed table of irreducible
/// (Conway) polynomials. Elements are encoded as integers 0..q-1, the base-p
/// digits being the polynomial coefficients. Full multiplication/inverse
/// tables are precomputed; q is small by design.
class FieldContext {
public:
    /// Throws std::invalid_argument("field not in table") for unsupported q.
    explicit FieldContext(long q);

    long q() const { return q_; }
    long p() const { return p_; }
    long h() const { return h_; }
    QValue qvalue() const { return QValue(p_, h_); }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;

    /// Modulus coefficients c0..ch (monic, degree h); empty for prime fields.
    const std::vector<int>& modulus() const { return mod_; }

    static bool supported(long q);
    static const std::vector<long>& supported_fields();

private:
    long q_, p_, h_;
    std::vector<int> mod_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace atn

#endif
