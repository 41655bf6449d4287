#include "atn/matrix.hpp"

#include <stdexcept>

namespace atn {

ZMat ZMat::identity(long n, const mpz_class& s) {
    ZMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

bool ZMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

ZMat operator+(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("ZMat+: shape mismatch");
    ZMat r(x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

ZMat operator-(const ZMat& x, const ZMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("ZMat-: shape mismatch");
    ZMat r(x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

ZMat operator*(const ZMat& x, const ZMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("ZMat*: shape mismatch");
    ZMat r(x.rows, y.cols);
    mpz_class tmp;
    for (long i = 0; i < x.rows; ++i) {
        for (long k = 0; k < x.cols; ++k) {
            const mpz_class& xik = x.at(i, k);
            if (xik == 0) continue;
            const mpz_class* yrow = &y.a[static_cast<size_t>(k) * y.cols];
            mpz_class* rrow = &r.a[static_cast<size_t>(i) * r.cols];
            for (long j = 0; j < y.cols; ++j) {
                if (sgn(yrow[j]) == 0) continue;
                tmp = xik * yrow[j];
                rrow[j] += tmp;
            }
        }
    }
    return r;
}

ZMat scale(const ZMat& x, const mpz_class& s) {
    ZMat r(x.rows, x.cols);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] * s;
    return r;
}

ZMat csr_mul(const SchemeInstance::Csr& A, const ZMat& B) {
    long n = static_cast<long>(A.row_ptr.size()) - 1;
    ZMat r(n, B.cols);
    for (long i = 0; i < n; ++i) {
        mpz_class* rrow = &r.a[static_cast<size_t>(i) * r.cols];
        for (int z = A.row_ptr[i]; z < A.row_ptr[i + 1]; ++z) {
            const mpz_class* brow = &B.a[static_cast<size_t>(A.col[z]) * B.cols];
            for (long j = 0; j < B.cols; ++j) rrow[j] += brow[j];
        }
    }
    return r;
}

ZMat mul_csr(const ZMat& A, const SchemeInstance::Csr& B, long bcols) {
    long n = static_cast<long>(B.row_ptr.size()) - 1;
    if (A.cols != n) throw std::invalid_argument("mul_csr: shape mismatch");
    ZMat r(A.rows, bcols);
    for (long i = 0; i < A.rows; ++i) {
        const mpz_class* arow = &A.a[static_cast<size_t>(i) * A.cols];
        mpz_class* rrow = &r.a[static_cast<size_t>(i) * r.cols];
        for (long k = 0; k < n; ++k) {
            if (sgn(arow[k]) == 0) continue;
            for (int z = B.row_ptr[k]; z < B.row_ptr[k + 1]; ++z) rrow[B.col[z]] += arow[k];
        }
    }
    return r;
}

ZMat csr_to_dense(const SchemeInstance::Csr& A, long cols) {
    long n = static_cast<long>(A.row_ptr.size()) - 1;
    ZMat r(n, cols);
    for (long i = 0; i < n; ++i)
        for (int z = A.row_ptr[i]; z < A.row_ptr[i + 1]; ++z) r.at(i, A.col[z]) = 1;
    return r;
}

long bareiss_rank(ZMat m) {
    long rank = 0;
    mpz_class prev = 1;
    long row = 0;
    for (long c = 0; c < m.cols && row < m.rows; ++c) {
        long piv = -1;
        for (long r = row; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (long j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        for (long r = row + 1; r < m.rows; ++r) {
            for (long j = c + 1; j < m.cols; ++j) {
                mpz_class t = m.at(r, j) * m.at(row, c) - m.at(r, c) * m.at(row, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(r, j) = t;
            }
            m.at(r, c) = 0;
        }
        prev = m.at(row, c);
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace atn
