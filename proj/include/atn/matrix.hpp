#ifndef ATN_MATRIX_HPP
#define ATN_MATRIX_HPP

#include <gmpxx.h>

#include <vector>

#include "atn/scheme.hpp"

namespace atn {

/// Dense integer matrix (GMP). Rational matrices with a known common denominator
/// are carried as ZMat plus a scalar denominator, so products stay in integers.
struct ZMat {
    long rows = 0;
    long cols = 0;
    std::vector<mpz_class> a;

    ZMat() = default;
    ZMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    mpz_class& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpz_class& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static ZMat identity(long n, const mpz_class& scale = 1);
    bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_zero() const;
};

ZMat operator+(const ZMat& x, const ZMat& y);
ZMat operator-(const ZMat& x, const ZMat& y);
ZMat operator*(const ZMat& x, const ZMat& y);
ZMat scale(const ZMat& x, const mpz_class& s);

/// 01-CSR times dense.
ZMat csr_mul(const SchemeInstance::Csr& A, const ZMat& B);
/// dense times 01-CSR.
ZMat mul_csr(const ZMat& A, const SchemeInstance::Csr& B, long bcols);
/// CSR as a dense 01 matrix.
ZMat csr_to_dense(const SchemeInstance::Csr& A, long cols);

/// Rank over Q by fraction-free (Bareiss) elimination; input is consumed.
long bareiss_rank(ZMat m);

}  // namespace atn

#endif
