#ifndef ATN_JOHNSON_HPP
#define ATN_JOHNSON_HPP

#include <string>
#include <vector>

#include "atn/bigfloat.hpp"
#include "atn/scheme.hpp"
#include "atn/spectra.hpp"

namespace atn {

struct JohnsonParams {
    long r = 3;  // alphabet size; r = 2 degenerates to the binary Johnson scheme
    long n = 3;
    long m = 2;
};

/// Non-empty relation classes of J_r(n,m): i+j <= m, i <= n-m, and j = 0 when
/// the alphabet has a single nonzero letter. Deg-lex sorted.
std::vector<ClassId> johnson_domain(const JohnsonParams& p);

/// Index domain of the eigenvalue formulas, the transpose of the class domain:
/// the formula label (i,j) describes the relation class (j,i), matching the
/// transposition in the q->1 limit pairing.
std::vector<ClassId> johnson_label_domain(const JohnsonParams& p);

/// Explicit J_r(n,m): weight-m words over {0..r-1} with the relations read off
/// the agreement counts e and c.
struct JohnsonScheme {
    JohnsonParams params;
    std::vector<std::vector<uint8_t>> words;
    std::vector<ClassId> D;
    std::vector<uint8_t> class_of;
    std::vector<SchemeInstance::Csr> adjacency;
    std::vector<long> valency;

    long size() const { return static_cast<long>(words.size()); }
    int cls(long u, long v) const { return class_of[static_cast<size_t>(u) * size() + v]; }
    PartitionView view() const { return {size(), &D, &class_of, &adjacency, &valency}; }
};

/// Size guard: refuses vertex sets above 5000.
JohnsonScheme enumerate_johnson(const JohnsonParams& p);

/// Eigenvalues of J_r(n,m):
///   T~_ij(x,y) = (r-1)^j K~_i(m-j,r-1,x) E~_j(n-x,m-x,y)
/// with the Krawtchouk factor expanded so r = 2 needs no division by r-2.
/// (i,j) and (x,y) live in the label domain; T~_ij belongs to the class (j,i)
/// and T~_ij(0,0) is that class's valency.
Rational johnson_T(long i, long j, long x, long y, const JohnsonParams& p);

/// Dual eigenvalues: U~_ij(x,y) = [C(n,i)/C(m,i)] K~_i(m-y,r-1,x) Q~_j(n-i,m-i,y),
/// same label convention.
Rational johnson_U(long i, long j, long x, long y, const JohnsonParams& p);

struct EmbedReport {
    bool pass = true;
    bool injective = true;
    long image_count = 0;
    long pairs_checked = 0;
    long pairs_preserved = 0;
    long pairs_violated = 0;
    // what actually holds for every pair: the first index is preserved and the
    // second can only drop (extra intersection from dependent letter differences)
    bool i_always_preserved = true;
    bool j_never_increases = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        if (failures.size() < 100) failures.push_back(std::move(msg));
    }
};

/// The weight-respecting map of J_r(n,m) into the attenuated scheme for
/// r = q^ell + 1: letter k goes to the k-th element of w in lexicographic order,
/// f_i are the first n standard basis vectors. Verifies injectivity and relation
/// preservation exhaustively. Full preservation fails on pairs whose disagreeing
/// common positions carry linearly dependent letter differences (possible once
/// c-e >= 2); the report separates that failure mode from everything else.
EmbedReport embedding_phi(const SchemeInstance& att, const JohnsonScheme& js);

struct LimitConfig {
    long p = 2;
    long r = 3;
    int k_min = 4;
    int k_max = 20;  // h = 2^-k
    long precision_bits = 256;
};

struct LimitPoint {
    ClassId deg, var;  // Johnson-side labels (i,j), (x,y)
    std::vector<std::string> error_seq;  // decimal strings, one per h
    bool monotone_tail = true;
    bool within_tol = true;
    std::string target;
};

struct LimitReport {
    bool pass = true;
    std::vector<LimitPoint> points;
    LimitPoint cardinality;
};

/// Evaluates T_{ji}(y,x) at q = p^h, ell = log_p(r-1)/h over the dyadic
/// h-sequence and compares against the exact Johnson eigenvalue T~_ij(x,y);
/// the tail of e(h) must be non-increasing and the final error below
/// 1e-8 * max(1,|T~|). The cardinality limit is checked the same way.
LimitReport limit_check(const LimitConfig& cfg, long n, long m);

std::string limit_report_json(const LimitReport& rep, const LimitConfig& cfg, long n, long m);

}  // namespace atn

#endif
