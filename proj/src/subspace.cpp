#include "atn/subspace.hpp"

#include <stdexcept>

namespace atn {

int rref_inplace(const FieldContext& F, std::vector<uint8_t>& mat, int rows, int cols) {
    auto at = [&](int r, int c) -> uint8_t& { return mat[static_cast<size_t>(r) * cols + c]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
        int s = F.inv(at(rank, c));
        for (int j = c; j < cols; ++j) at(rank, j) = static_cast<uint8_t>(F.mul(at(rank, j), s));
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int f = at(r, c);
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                at(r, j) = static_cast<uint8_t>(F.sub(at(r, j), F.mul(f, at(rank, j))));
        }
        ++rank;
    }
    return rank;
}

int rank_of_stack(const FieldContext& F, const SubspaceBasis& x, const SubspaceBasis& y,
                  int restrict_cols) {
    int cols = restrict_cols > 0 ? restrict_cols : x.cols;
    int rows = x.rows + y.rows;
    std::vector<uint8_t> mat(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < cols; ++c) mat[static_cast<size_t>(r) * cols + c] = x.at(r, c);
    for (int r = 0; r < y.rows; ++r)
        for (int c = 0; c < cols; ++c)
            mat[static_cast<size_t>(x.rows + r) * cols + c] = y.at(r, c);
    return rref_inplace(F, mat, rows, cols);
}

SubspaceBasis canonicalize(const FieldContext& F, const std::vector<uint8_t>& mat, int rows,
                           int cols) {
    std::vector<uint8_t> work = mat;
    int rank = rref_inplace(F, work, rows, cols);
    SubspaceBasis b;
    b.rows = rank;
    b.cols = cols;
    b.a.assign(work.begin(), work.begin() + static_cast<size_t>(rank) * cols);
    return b;
}

std::vector<SubspaceBasis> enumerate_attenuated(const FieldContext& F, long n, long ell, long m) {
    if (m < 0 || m > n || ell < 0) throw std::invalid_argument("enumerate_attenuated: bad parameters");
    const int cols = static_cast<int>(n + ell);
    std::vector<SubspaceBasis> out;

    if (m == 0) {
        SubspaceBasis zero;
        zero.rows = 0;
        zero.cols = cols;
        out.push_back(zero);
        return out;
    }

    // pivot profiles: increasing m-subsets of {0..n-1}, lexicographic
    std::vector<int> piv(m);
    for (long i = 0; i < m; ++i) piv[i] = static_cast<int>(i);
    const long q = F.q();

    auto emit_profile = [&]() {
        // free positions, row-major: in-row columns > pivot, not pivotal, plus the tail block
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(cols, false);
        for (int c : piv) is_piv[c] = true;
        for (long r = 0; r < m; ++r) {
            for (int c = piv[r] + 1; c < n; ++c)
                if (!is_piv[c]) free_pos.emplace_back(static_cast<int>(r), c);
            for (int c = static_cast<int>(n); c < cols; ++c)
                free_pos.emplace_back(static_cast<int>(r), c);
        }
        std::vector<uint8_t> digits(free_pos.size(), 0);
        while (true) {
            SubspaceBasis b;
            b.rows = static_cast<int>(m);
            b.cols = cols;
            b.a.assign(static_cast<size_t>(m) * cols, 0);
            for (long r = 0; r < m; ++r) b.at(static_cast<int>(r), piv[r]) = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                b.at(free_pos[t].first, free_pos[t].second) = digits[t];
            out.push_back(std::move(b));
            // odometer, last position fastest
            size_t t = digits.size();
            while (t > 0) {
                --t;
                if (digits[t] + 1 < q) {
                    ++digits[t];
                    std::fill(digits.begin() + t + 1, digits.end(), 0);
                    break;
                }
                if (t == 0) return;
                digits[t] = 0;
            }
            if (digits.empty()) return;
        }
    };

    while (true) {
        emit_profile();
        // next m-subset of {0..n-1} in lexicographic order
        long i = m - 1;
        while (i >= 0 && piv[i] == n - m + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (long j = i + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

}  // namespace atn
