#include "atn/scheme.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "atn/parallel.hpp"
#include "atn/qseries.hpp"

namespace atn {

using ordered_json = nlohmann::ordered_json;

Rational SchemeParams::vertex_count_formula() const {
    return q.pow(m * ell) * q_binomial(n, m, q.q);
}

std::vector<ClassId> attenuated_domain(long n, long ell, long m) {
    std::vector<ClassId> d;
    for (long a = 0; a <= m && a <= n - m; ++a)
        for (long b = 0; a + b <= m && b <= ell; ++b) d.emplace_back(a, b);
    std::sort(d.begin(), d.end(), [](const ClassId& x, const ClassId& y) {
        long dx = x.first + x.second, dy = y.first + y.second;
        if (dx != dy) return dx < dy;
        return x.first < y.first;
    });
    return d;
}

ClassId relation_of(const FieldContext& F, const SubspaceBasis& x, const SubspaceBasis& y, long n,
                    long m) {
    // dim(pi(x) cap pi(y)) = 2m - rank[pi x; pi y], pi = restriction to first n columns
    int rank_proj = rank_of_stack(F, x, y, static_cast<int>(n));
    long i = rank_proj - m;
    int rank_full = rank_of_stack(F, x, y);
    long dim_meet = 2 * m - rank_full;
    long j = m - i - dim_meet;
    return {i, j};
}

int SchemeInstance::class_index(const ClassId& c) const {
    for (size_t k = 0; k < D.size(); ++k)
        if (D[k] == c) return static_cast<int>(k);
    return -1;
}

SchemeInstance build_scheme(const SchemeParams& p, int threads) {
    if (p.m < 0 || p.m > p.n || p.ell < 0) throw std::invalid_argument("build_scheme: bad parameters");
    SchemeInstance s{p, FieldContext(p.q.q_long()), {}, {}, {}, {}, {}};
    s.vertices = enumerate_attenuated(s.field, p.n, p.ell, p.m);
    s.D = attenuated_domain(p.n, p.ell, p.m);

    Rational expect = p.vertex_count_formula();
    if (Rational(static_cast<long>(s.vertices.size())) != expect)
        throw std::logic_error("build_scheme: vertex count does not match the cardinality formula");

    const long N = s.size();
    const long nc = static_cast<long>(s.D.size());
    s.class_of.assign(static_cast<size_t>(N) * N, 0);

    std::atomic<bool> out_of_domain{false};
    parallel_for(N, threads, [&](long lo, long hi) {
        for (long u = lo; u < hi; ++u)
            for (long v = 0; v < N; ++v) {
                ClassId c = relation_of(s.field, s.vertices[u], s.vertices[v], p.n, p.m);
                int idx = s.class_index(c);
                if (idx < 0) {
                    out_of_domain.store(true);
                    idx = 0;
                }
                s.class_of[static_cast<size_t>(u) * N + v] = static_cast<uint8_t>(idx);
            }
    });
    if (out_of_domain.load()) throw std::logic_error("relation_of: class outside the domain D");

    build_adjacency(N, nc, s.class_of, s.adjacency, s.valency);
    return s;
}

void build_adjacency(long N, long nclasses, const std::vector<uint8_t>& class_of,
                     std::vector<SchemeInstance::Csr>& adjacency, std::vector<long>& valency) {
    adjacency.assign(nclasses, {});
    valency.assign(nclasses, -1);
    auto cls = [&](long u, long v) { return class_of[static_cast<size_t>(u) * N + v]; };
    for (long c = 0; c < nclasses; ++c) adjacency[c].row_ptr.assign(N + 1, 0);
    for (long u = 0; u < N; ++u) {
        std::vector<long> counts(nclasses, 0);
        for (long v = 0; v < N; ++v) ++counts[cls(u, v)];
        for (long c = 0; c < nclasses; ++c) {
            if (valency[c] < 0 && counts[c] > 0) valency[c] = counts[c];
            adjacency[c].row_ptr[u + 1] = adjacency[c].row_ptr[u] + static_cast<int>(counts[c]);
        }
    }
    for (long c = 0; c < nclasses; ++c) adjacency[c].col.resize(adjacency[c].row_ptr[N]);
    std::vector<int> cursor(nclasses, 0);
    for (long u = 0; u < N; ++u) {
        for (long c = 0; c < nclasses; ++c) cursor[c] = adjacency[c].row_ptr[u];
        for (long v = 0; v < N; ++v) {
            int c = cls(u, v);
            adjacency[c].col[cursor[c]++] = static_cast<int>(v);
        }
    }
}

PartitionView view_of(const SchemeInstance& s) {
    return PartitionView{s.size(), &s.D, &s.class_of, &s.adjacency, &s.valency};
}

AxiomReport verify_basic_axioms(const PartitionView& s) {
    AxiomReport rep;
    const long N = s.size;
    const long nc = s.nclasses();
    int c00 = -1;
    for (long c = 0; c < nc; ++c)
        if ((*s.D)[c] == ClassId{0, 0}) c00 = static_cast<int>(c);
    if (c00 < 0) {
        rep.fail("domain does not contain (0,0)");
        return rep;
    }
    for (long u = 0; u < N; ++u) {
        if (s.cls(u, u) != c00) rep.fail("axiom (i): diagonal pair not in R_00 at " + std::to_string(u));
        for (long v = 0; v < N; ++v) {
            if (u != v && s.cls(u, v) == c00)
                rep.fail("axiom (i): off-diagonal pair in R_00 at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
            if (s.cls(u, v) != s.cls(v, u))
                rep.fail("axiom (iii): asymmetric relation at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
        }
    }
    // sum A = J with disjoint supports: CSR sizes must cover all |X|^2 pairs
    long nnz_total = 0;
    for (long c = 0; c < nc; ++c) nnz_total += static_cast<long>((*s.adjacency)[c].col.size());
    if (nnz_total != N * N) rep.fail("axiom (ii): adjacency supports do not partition X x X");
    // constant row sums per class
    for (long c = 0; c < nc; ++c) {
        for (long u = 0; u < N; ++u) {
            long row = (*s.adjacency)[c].row_ptr[u + 1] - (*s.adjacency)[c].row_ptr[u];
            if (row != (*s.valency)[c])
                rep.fail("non-constant valency in class " + std::to_string(c) + " at row " +
                         std::to_string(u));
        }
    }
    return rep;
}

AxiomReport verify_basic_axioms(const SchemeInstance& s) { return verify_basic_axioms(view_of(s)); }

BruteTensor brute_intersection_numbers(const PartitionView& s, AxiomReport* report, int threads) {
    const long N = s.size;
    const long nc = s.nclasses();
    BruteTensor t;
    t.nclasses = nc;
    t.v.assign(nc * nc * nc, -1);  // -1 = not yet seen

    AxiomReport local;
    AxiomReport& rep = report ? *report : local;

    // one pass per class pair: SpGEMM row into a dense counter, then bucket by the
    // class of each (u,v) and demand a constant count
    for (long c1 = 0; c1 < nc; ++c1) {
        const auto& A = (*s.adjacency)[c1];
        for (long c2 = 0; c2 < nc; ++c2) {
            const auto& B = (*s.adjacency)[c2];
            std::vector<long> stats(nc, -2);  // per-target-class constant, -2 = unseen
            std::vector<bool> bad(nc, false);
            std::mutex mtx;
            parallel_for(N, threads, [&](long lo, long hi) {
                std::vector<int> acc(N, 0);
                std::vector<long> my_stats(nc, -2);
                std::vector<bool> my_bad(nc, false);
                for (long u = lo; u < hi; ++u) {
                    std::fill(acc.begin(), acc.end(), 0);
                    for (int z = A.row_ptr[u]; z < A.row_ptr[u + 1]; ++z) {
                        int zz = A.col[z];
                        for (int w = B.row_ptr[zz]; w < B.row_ptr[zz + 1]; ++w) ++acc[B.col[w]];
                    }
                    for (long v = 0; v < N; ++v) {
                        int c3 = s.cls(u, v);
                        long count = acc[v];
                        if (my_stats[c3] == -2)
                            my_stats[c3] = count;
                        else if (my_stats[c3] != count)
                            my_bad[c3] = true;
                    }
                }
                std::lock_guard<std::mutex> lk(mtx);
                for (long c3 = 0; c3 < nc; ++c3) {
                    if (my_bad[c3]) bad[c3] = true;
                    if (my_stats[c3] != -2) {
                        if (stats[c3] == -2)
                            stats[c3] = my_stats[c3];
                        else if (stats[c3] != my_stats[c3])
                            bad[c3] = true;
                    }
                }
            });
            for (long c3 = 0; c3 < nc; ++c3) {
                if (bad[c3])
                    rep.fail("axiom (iv): non-constant p[" + std::to_string(c1) + "," +
                             std::to_string(c2) + "]^" + std::to_string(c3));
                t.at(c1, c2, c3) = stats[c3] == -2 ? 0 : stats[c3];
            }
        }
    }
    // commutativity p_{c1,c2} = p_{c2,c1}
    for (long c1 = 0; c1 < nc; ++c1)
        for (long c2 = 0; c2 < nc; ++c2)
            for (long c3 = 0; c3 < nc; ++c3)
                if (t.at(c1, c2, c3) != t.at(c2, c1, c3))
                    rep.fail("axiom (iv): A_c1 A_c2 != A_c2 A_c1 at (" + std::to_string(c1) + "," +
                             std::to_string(c2) + "," + std::to_string(c3) + ")");
    return t;
}

BruteTensor brute_intersection_numbers(const SchemeInstance& s, AxiomReport* report, int threads) {
    return brute_intersection_numbers(view_of(s), report, threads);
}

std::string scheme_to_json(const SchemeInstance& s) {
    ordered_json j;
    j["format"] = "atnscheme.scheme";
    j["version"] = 1;
    j["p"] = s.params.q.p;
    j["h"] = s.params.q.h;
    j["q"] = s.params.q.q_long();
    j["n"] = s.params.n;
    j["ell"] = s.params.ell;
    j["m"] = s.params.m;
    j["vertex_count"] = s.size();
    ordered_json dom = ordered_json::array();
    for (const auto& [a, b] : s.D) dom.push_back({a, b});
    j["domain"] = dom;
    ordered_json verts = ordered_json::array();
    for (const auto& v : s.vertices) {
        ordered_json flat = ordered_json::array();
        for (uint8_t x : v.a) flat.push_back(static_cast<int>(x));
        verts.push_back(std::move(flat));
    }
    j["vertices"] = verts;
    ordered_json rels = ordered_json::array();
    for (size_t c = 0; c < s.D.size(); ++c) {
        ordered_json r;
        r["class"] = {s.D[c].first, s.D[c].second};
        r["row_ptr"] = s.adjacency[c].row_ptr;
        r["col"] = s.adjacency[c].col;
        rels.push_back(std::move(r));
    }
    j["relations"] = rels;
    return j.dump();
}

SchemeInstance scheme_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("format") != "atnscheme.scheme" || j.at("version") != 1)
        throw std::runtime_error("scheme_from_json: unknown format/version");
    SchemeParams p{QValue(j.at("p").get<long>(), j.at("h").get<long>()), j.at("n").get<long>(),
                   j.at("ell").get<long>(), j.at("m").get<long>()};
    SchemeInstance s{p, FieldContext(p.q.q_long()), {}, {}, {}, {}, {}};
    s.D.clear();
    for (const auto& d : j.at("domain")) s.D.emplace_back(d[0].get<long>(), d[1].get<long>());
    const long cols = p.n + p.ell;
    for (const auto& vf : j.at("vertices")) {
        SubspaceBasis b;
        b.cols = static_cast<int>(cols);
        b.rows = static_cast<int>(vf.size() / cols);
        for (const auto& x : vf) b.a.push_back(static_cast<uint8_t>(x.get<int>()));
        s.vertices.push_back(std::move(b));
    }
    const long N = s.size();
    if (N != j.at("vertex_count").get<long>())
        throw std::runtime_error("scheme_from_json: vertex count mismatch");
    s.adjacency.assign(s.D.size(), {});
    size_t ci = 0;
    for (const auto& r : j.at("relations")) {
        ClassId c{r.at("class")[0].get<long>(), r.at("class")[1].get<long>()};
        if (c != s.D[ci]) throw std::runtime_error("scheme_from_json: relation order mismatch");
        s.adjacency[ci].row_ptr = r.at("row_ptr").get<std::vector<int>>();
        s.adjacency[ci].col = r.at("col").get<std::vector<int>>();
        ++ci;
    }
    s.class_of.assign(static_cast<size_t>(N) * N, 0);
    s.valency.assign(s.D.size(), -1);
    for (size_t c = 0; c < s.D.size(); ++c) {
        const auto& A = s.adjacency[c];
        if (static_cast<long>(A.row_ptr.size()) != N + 1)
            throw std::runtime_error("scheme_from_json: bad row_ptr");
        for (long u = 0; u < N; ++u) {
            if (A.row_ptr[u + 1] < A.row_ptr[u] ||
                A.row_ptr[u + 1] > static_cast<int>(A.col.size()))
                throw std::runtime_error("scheme_from_json: inconsistent row_ptr");
            long row = A.row_ptr[u + 1] - A.row_ptr[u];
            if (s.valency[c] < 0 && row > 0) s.valency[c] = row;
            for (int z = A.row_ptr[u]; z < A.row_ptr[u + 1]; ++z) {
                int v = A.col[z];
                if (v < 0 || v >= N) throw std::runtime_error("scheme_from_json: column out of range");
                s.class_of[static_cast<size_t>(u) * N + v] = static_cast<uint8_t>(c);
            }
        }
    }
    return s;
}

void save_scheme(const SchemeInstance& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("save_scheme: cannot open " + path);
    f << scheme_to_json(s);
}

SchemeInstance load_scheme(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_scheme: cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return scheme_from_json(ss.str());
}

}  // namespace atn
