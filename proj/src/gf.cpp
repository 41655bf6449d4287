#include "atn/gf.hpp"

#include <map>
#include <stdexcept>

namespace atn {

namespace {

struct FieldSpec {
    long p;
    long h;
    std::vector<int> mod;  // c0..ch, monic
};

// Conway polynomials for the supported extension fields.
const std::map<long, FieldSpec>& field_table() {
    static const std::map<long, FieldSpec> t = {
        {2, {2, 1, {}}},
        {3, {3, 1, {}}},
        {5, {5, 1, {}}},
        {7, {7, 1, {}}},
        {4, {2, 2, {1, 1, 1}}},        // x^2 + x + 1
        {8, {2, 3, {1, 1, 0, 1}}},     // x^3 + x + 1
        {16, {2, 4, {1, 1, 0, 0, 1}}}, // x^4 + x + 1
        {9, {3, 2, {2, 2, 1}}},        // x^2 + 2x + 2
        {27, {3, 3, {1, 2, 0, 1}}},    // x^3 + 2x + 1
        {25, {5, 2, {2, 4, 1}}},       // x^2 + 4x + 2
    };
    return t;
}

std::vector<int> decode(long v, long p, long h) {
    std::vector<int> c(h);
    for (long i = 0; i < h; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
    }
    return c;
}

long encode(const std::vector<int>& c, long p) {
    long v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

}  // namespace

bool FieldContext::supported(long q) { return field_table().count(q) > 0; }

const std::vector<long>& FieldContext::supported_fields() {
    static const std::vector<long> v = [] {
        std::vector<long> r;
        for (const auto& [q, s] : field_table()) r.push_back(q);
        return r;
    }();
    return v;
}

FieldContext::FieldContext(long q) : q_(q) {
    auto it = field_table().find(q);
    if (it == field_table().end()) throw std::invalid_argument("field not in table");
    p_ = it->second.p;
    h_ = it->second.h;
    mod_ = it->second.mod;

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (long a = 0; a < q_; ++a) {
        auto ca = decode(a, p_, h_);
        std::vector<int> cneg(h_);
        for (long i = 0; i < h_; ++i) cneg[i] = static_cast<int>((p_ - ca[i]) % p_);
        neg_[a] = static_cast<int>(encode(cneg, p_));
        for (long b = 0; b < q_; ++b) {
            auto cb = decode(b, p_, h_);
            std::vector<int> cs(h_);
            for (long i = 0; i < h_; ++i) cs[i] = static_cast<int>((ca[i] + cb[i]) % p_);
            add_[a * q_ + b] = static_cast<int>(encode(cs, p_));

            // polynomial product reduced by the monic modulus
            std::vector<int> prod(2 * h_ - 1, 0);
            for (long i = 0; i < h_; ++i)
                for (long j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % static_cast<int>(p_);
            for (long d = 2 * h_ - 2; d >= h_; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (long i = 0; i < h_; ++i) {
                    long idx = d - h_ + i;
                    prod[idx] = static_cast<int>(((prod[idx] - c * mod_[i]) % p_ + p_ * p_) % p_);
                }
            }
            prod.resize(h_);
            mul_[a * q_ + b] = static_cast<int>(encode(prod, p_));
        }
    }
    for (long a = 1; a < q_; ++a)
        for (long b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<int>(b);
    for (long a = 1; a < q_; ++a)
        if (inv_[a] == 0) throw std::logic_error("field table: non-invertible element");
}

int FieldContext::inv(int a) const {
    if (a == 0) throw std::domain_error("FieldContext: inverse of zero");
    return inv_[a];
}

}  // namespace atn
