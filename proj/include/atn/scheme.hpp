#ifndef ATN_SCHEME_HPP
#define ATN_SCHEME_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atn/gf.hpp"
#include "atn/rational.hpp"
#include "atn/subspace.hpp"

namespace atn {

using ClassId = std::pair<long, long>;

struct SchemeParams {
    QValue q;
    long n = 1;
    long ell = 0;
    long m = 0;

    Rational vertex_count_formula() const;  // q^(m ell) [n m]_q
};

/// D = {(a,b) : a+b <= m, a <= n-m, b <= ell}, sorted by deg-lex (total degree,
/// then first coordinate). This ordering indexes every class-based table.
std::vector<ClassId> attenuated_domain(long n, long ell, long m);

/// i = m - dim((x+w)/w cap (y+w)/w), j = m - i - dim(x cap y); w is the span of
/// the last ell coordinates, so the projection mod w is the first-n-columns block.
ClassId relation_of(const FieldContext& F, const SubspaceBasis& x, const SubspaceBasis& y, long n,
                    long m);

struct SchemeInstance {
    SchemeParams params;
    FieldContext field;
    std::vector<SubspaceBasis> vertices;
    std::vector<ClassId> D;
    std::vector<uint8_t> class_of;  // |X|^2 entries, index into D

    struct Csr {
        std::vector<int> row_ptr;
        std::vector<int> col;
    };
    std::vector<Csr> adjacency;  // one 01-matrix per class
    std::vector<long> valency;   // constant row sums, verified at build time

    long size() const { return static_cast<long>(vertices.size()); }
    int cls(long u, long v) const { return class_of[static_cast<size_t>(u) * size() + v]; }
    int class_index(const ClassId& c) const;
};

/// Enumerates vertices, assigns all pairwise relations and verifies on the way:
/// cardinality formula, diagonal class (0,0), symmetry, classes within D.
SchemeInstance build_scheme(const SchemeParams& p, int threads = 0);

/// p_{c1,c2}^{c3} indexed by positions in D.
struct BruteTensor {
    long nclasses = 0;
    std::vector<long> v;  // c1*nc^2 + c2*nc + c3

    long at(long c1, long c2, long c3) const { return v[(c1 * nclasses + c2) * nclasses + c3]; }
    long& at(long c1, long c2, long c3) { return v[(c1 * nclasses + c2) * nclasses + c3]; }
};

struct AxiomReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        if (failures.size() < 100) failures.push_back(std::move(msg));
    }
};

/// Read-only view of a classified pair partition; the scheme-axiom machinery
/// works on this so the Johnson reference scheme can reuse it.
struct PartitionView {
    long size = 0;
    const std::vector<ClassId>* D = nullptr;
    const std::vector<uint8_t>* class_of = nullptr;
    const std::vector<SchemeInstance::Csr>* adjacency = nullptr;
    const std::vector<long>* valency = nullptr;

    int cls(long u, long v) const { return (*class_of)[static_cast<size_t>(u) * size + v]; }
    long nclasses() const { return static_cast<long>(D->size()); }
};

PartitionView view_of(const SchemeInstance& s);

/// Axioms (i)-(iii) plus the Schur-side structure: A_00 = I, sum A = J with each
/// pair covered exactly once, and A^T = A, all checked entry by entry.
AxiomReport verify_basic_axioms(const PartitionView& s);
AxiomReport verify_basic_axioms(const SchemeInstance& s);

/// Axiom (iv) by explicit sparse 01-matrix products: every product A_c1 A_c2 is
/// expanded in the adjacency basis with exact integer counts; non-constant counts
/// within a class are reported. Returns the full intersection tensor.
BruteTensor brute_intersection_numbers(const PartitionView& s, AxiomReport* report = nullptr,
                                       int threads = 0);
BruteTensor brute_intersection_numbers(const SchemeInstance& s, AxiomReport* report = nullptr,
                                       int threads = 0);

/// CSR adjacency + valency arrays from a filled class_of map.
void build_adjacency(long N, long nclasses, const std::vector<uint8_t>& class_of,
                     std::vector<SchemeInstance::Csr>& adjacency, std::vector<long>& valency);

// Versioned scheme file (JSON): header params + counts, vertex RREF matrices as
// flat coefficient arrays, relation classes as CSR arrays. Round-trips bit-exactly.
std::string scheme_to_json(const SchemeInstance& s);
SchemeInstance scheme_from_json(const std::string& text);
void save_scheme(const SchemeInstance& s, const std::string& path);
SchemeInstance load_scheme(const std::string& path);

}  // namespace atn

#endif
