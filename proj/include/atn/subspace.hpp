#ifndef ATN_SUBSPACE_HPP
#define ATN_SUBSPACE_HPP

#include <cstdint>
#include <vector>

#include "atn/gf.hpp"

namespace atn {

/// Canonical basis of a subspace of GF(q)^cols: reduced row echelon form with
/// strictly increasing pivots and cleared pivot columns. Two subspaces are equal
/// iff their SubspaceBasis are identical.
struct SubspaceBasis {
    int rows = 0;  // dimension
    int cols = 0;
    std::vector<uint8_t> a;  // row-major field elements

    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const SubspaceBasis& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

/// In-place Gaussian elimination to RREF; returns the rank. `mat` is row-major
/// with `rows` rows of length `cols`.
int rref_inplace(const FieldContext& F, std::vector<uint8_t>& mat, int rows, int cols);

/// Rank of the row space of two stacked bases (no canonicalization kept).
int rank_of_stack(const FieldContext& F, const SubspaceBasis& x, const SubspaceBasis& y,
                  int restrict_cols = -1);

/// Canonical RREF basis from arbitrary spanning rows.
SubspaceBasis canonicalize(const FieldContext& F, const std::vector<uint8_t>& mat, int rows,
                           int cols);

/// All m-dimensional subspaces of GF(q)^(n+ell) meeting w = span(e_{n+1},..,e_{n+ell})
/// trivially, in canonical RREF, ordered lexicographically by (pivot columns, free
/// entries). A subspace avoids w exactly when all its RREF pivots lie in the first
/// n columns, so enumeration walks those pivot profiles only and never rejects.
std::vector<SubspaceBasis> enumerate_attenuated(const FieldContext& F, long n, long ell, long m);

}  // namespace atn

#endif
