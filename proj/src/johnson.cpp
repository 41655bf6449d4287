#include "atn/johnson.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "atn/qseries.hpp"

namespace atn {

std::vector<ClassId> johnson_domain(const JohnsonParams& p) {
    std::vector<ClassId> d;
    long jmax_alphabet = p.r >= 3 ? p.m : 0;  // two distinct nonzero letters needed for j > 0
    for (long i = 0; i <= std::min(p.m, p.n - p.m); ++i)
        for (long j = 0; i + j <= p.m && j <= jmax_alphabet; ++j) d.emplace_back(i, j);
    std::sort(d.begin(), d.end(), [](const ClassId& x, const ClassId& y) {
        long dx = x.first + x.second, dy = y.first + y.second;
        if (dx != dy) return dx < dy;
        return x.first < y.first;
    });
    return d;
}

std::vector<ClassId> johnson_label_domain(const JohnsonParams& p) {
    std::vector<ClassId> d = johnson_domain(p);
    for (auto& c : d) std::swap(c.first, c.second);
    std::sort(d.begin(), d.end(), [](const ClassId& x, const ClassId& y) {
        long dx = x.first + x.second, dy = y.first + y.second;
        if (dx != dy) return dx < dy;
        return x.first < y.first;
    });
    return d;
}

JohnsonScheme enumerate_johnson(const JohnsonParams& p) {
    if (p.r < 2 || p.m < 0 || p.m > p.n) throw std::invalid_argument("enumerate_johnson: bad parameters");
    Rational count = binomial(p.n, p.m) * Rational(p.r - 1).pow(p.m);
    if (count > Rational(5000)) throw std::invalid_argument("enumerate_johnson: vertex set above 5000");

    JohnsonScheme js;
    js.params = p;
    js.D = johnson_domain(p);

    // supports in lexicographic order, nonzero letters as an odometer
    std::vector<int> pos(p.m);
    for (long i = 0; i < p.m; ++i) pos[i] = static_cast<int>(i);
    auto emit = [&]() {
        std::vector<uint8_t> letters(p.m, 1);
        while (true) {
            std::vector<uint8_t> w(p.n, 0);
            for (long t = 0; t < p.m; ++t) w[pos[t]] = letters[t];
            js.words.push_back(std::move(w));
            long t = p.m;
            while (t > 0) {
                --t;
                if (letters[t] + 1 < p.r) {
                    ++letters[t];
                    std::fill(letters.begin() + t + 1, letters.end(), 1);
                    break;
                }
                if (t == 0) return;
                letters[t] = 1;
            }
            if (p.m == 0) return;
        }
    };
    if (p.m == 0) {
        js.words.push_back(std::vector<uint8_t>(p.n, 0));
    } else {
        while (true) {
            emit();
            long i = p.m - 1;
            while (i >= 0 && pos[i] == p.n - p.m + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (long j = i + 1; j < p.m; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    if (Rational(js.size()) != count)
        throw std::logic_error("enumerate_johnson: counting formula mismatch");

    const long N = js.size();
    js.class_of.assign(static_cast<size_t>(N) * N, 0);
    auto class_index = [&](long a, long b) -> int {
        for (size_t k = 0; k < js.D.size(); ++k)
            if (js.D[k].first == a && js.D[k].second == b) return static_cast<int>(k);
        return -1;
    };
    for (long u = 0; u < N; ++u)
        for (long v = 0; v < N; ++v) {
            long e = 0, c = 0;
            for (long t = 0; t < p.n; ++t) {
                bool xu = js.words[u][t] != 0, xv = js.words[v][t] != 0;
                if (xu && xv) {
                    ++c;
                    if (js.words[u][t] == js.words[v][t]) ++e;
                }
            }
            long i = p.m - c, j = c - e;
            int idx = class_index(i, j);
            if (idx < 0) throw std::logic_error("enumerate_johnson: relation outside the domain");
            js.class_of[static_cast<size_t>(u) * N + v] = static_cast<uint8_t>(idx);
        }
    build_adjacency(N, static_cast<long>(js.D.size()), js.class_of, js.adjacency, js.valency);
    return js;
}

namespace {

// label domain: the transpose of the class domain
bool johnson_in_label_domain(long i, long j, const JohnsonParams& p) {
    if (i < 0 || j < 0 || i + j > p.m || j > p.n - p.m) return false;
    if (p.r == 2 && i > 0) return false;
    return true;
}

/// K~_i(N,r-1,x) = C(N,i) sum_k [(-i)_k (-x)_k / ((-N)_k k!)] (r-2)^(i-k) (r-1)^k,
/// the 2F1 form of the Krawtchouk factor with (r-2)^i distributed inside.
Rational kraw_tilde(long i, long N, long r, long x) {
    if (i < 0 || i > N) return Rational(0);
    Rational total(0);
    Rational term(1);  // (-i)_k (-x)_k / ((-N)_k k!) at k = 0
    for (long k = 0; k <= i; ++k) {
        if (k > 0) {
            Rational den = (Rational(-N) + Rational(k - 1)) * Rational(k);
            if (den.is_zero()) throw SeriesError("kraw_tilde: singular parameter");
            term *= (Rational(-i) + Rational(k - 1)) * (Rational(-x) + Rational(k - 1)) / den;
        }
        total += term * Rational(r - 2).pow(i - k) * Rational(r - 1).pow(k);
        if (term.is_zero()) break;
    }
    return binomial(N, i) * total;
}

/// dual-Hahn kernel R_n(lambda(x); g, d, N) = 3F2(-n, -x, x+g+d+1; g+1, -N; 1)
Rational dual_hahn_R(long nn, long x, const Rational& g, const Rational& d, long N) {
    return hyp3F2(Rational(-nn), Rational(-x), Rational(x) + g + d + Rational(1), g + Rational(1),
                  Rational(-N), Rational(1));
}

Rational E_tilde(long j, long n, long m, long x, long y) {
    // E~_j(n-x, m-x, y) with parameters gamma = -m+x-1, delta = -n+m-1, N = n-m
    if (j < 0 || j > m - x || j > n - m) return Rational(0);
    Rational pre = binomial(m - x, j) * binomial(n - m, j);
    return pre * dual_hahn_R(j, y, Rational(-m + x - 1), Rational(-n + m - 1), n - m);
}

Rational Q_tilde(long j, long n, long m, long i, long y) {
    // Q~_j(n-i, m-i, y) with gamma = -m+i-1, delta = -n+m-1, N = n-m
    if (j < 0 || j > m - i || j > n - m) return Rational(0);
    Rational pre = binomial(n - i, j) - binomial(n - i, j - 1);
    return pre * dual_hahn_R(y, j, Rational(-m + i - 1), Rational(-n + m - 1), n - m);
}

}  // namespace

Rational johnson_T(long i, long j, long x, long y, const JohnsonParams& p) {
    if (!johnson_in_label_domain(i, j, p) || !johnson_in_label_domain(x, y, p))
        throw std::invalid_argument("johnson_T: index pair outside the domain");
    return Rational(p.r - 1).pow(j) * kraw_tilde(i, p.m - j, p.r, x) * E_tilde(j, p.n, p.m, x, y);
}

Rational johnson_U(long i, long j, long x, long y, const JohnsonParams& p) {
    if (!johnson_in_label_domain(i, j, p) || !johnson_in_label_domain(x, y, p))
        throw std::invalid_argument("johnson_U: index pair outside the domain");
    Rational head = binomial(p.n, i) / binomial(p.m, i);
    return head * kraw_tilde(i, p.m - y, p.r, x) * Q_tilde(j, p.n, p.m, i, y);
}

EmbedReport embedding_phi(const SchemeInstance& att, const JohnsonScheme& js) {
    EmbedReport rep;
    const SchemeParams& ap = att.params;
    Rational r_expected = ap.q.pow(ap.ell) + Rational(1);
    if (Rational(js.params.r) != r_expected)
        throw std::invalid_argument("embedding_phi: requires r = q^ell + 1");
    if (js.params.n != ap.n || js.params.m != ap.m)
        throw std::invalid_argument("embedding_phi: parameter mismatch");

    const long q = att.field.q();
    const long n = ap.n, ell = ap.ell;
    const long cols = n + ell;

    // elements of w = span(e_{n+1},..,e_{n+ell}) in lexicographic coordinate order
    std::vector<std::vector<uint8_t>> welts;
    std::vector<uint8_t> tail(ell, 0);
    while (true) {
        std::vector<uint8_t> v(cols, 0);
        for (long t = 0; t < ell; ++t) v[n + t] = tail[t];
        welts.push_back(std::move(v));
        long t = ell;
        bool done = true;
        while (t > 0) {
            --t;
            if (tail[t] + 1 < q) {
                ++tail[t];
                std::fill(tail.begin() + t + 1, tail.end(), 0);
                done = false;
                break;
            }
            tail[t] = 0;
        }
        if (done) break;
    }

    std::map<std::vector<uint8_t>, long> vertex_index;
    for (long v = 0; v < att.size(); ++v) vertex_index[att.vertices[v].a] = v;

    std::vector<long> image(js.size(), -1);
    for (long u = 0; u < js.size(); ++u) {
        std::vector<uint8_t> rows;
        long nrows = 0;
        for (long t = 0; t < n; ++t) {
            uint8_t letter = js.words[u][t];
            if (letter == 0) continue;
            std::vector<uint8_t> vec = welts[letter - 1];  // letter k -> k-th element of w
            vec[t] = att.field.add(vec[t], 1);             // f_t + phi(letter)
            rows.insert(rows.end(), vec.begin(), vec.end());
            ++nrows;
        }
        SubspaceBasis b = canonicalize(att.field, rows, static_cast<int>(nrows),
                                       static_cast<int>(cols));
        auto it = vertex_index.find(b.a);
        if (it == vertex_index.end() || b.rows != ap.m) {
            rep.fail("image of word " + std::to_string(u) + " is not a scheme vertex");
            rep.injective = false;
            continue;
        }
        image[u] = it->second;
    }
    rep.image_count = js.size();
    for (long u = 0; u < js.size(); ++u)
        for (long v = 0; v < u; ++v)
            if (image[u] >= 0 && image[u] == image[v]) {
                rep.fail("phi is not injective");
                rep.injective = false;
            }

    for (long u = 0; u < js.size(); ++u)
        for (long v = 0; v < js.size(); ++v) {
            if (image[u] < 0 || image[v] < 0) continue;
            ++rep.pairs_checked;
            ClassId jc = js.D[js.cls(u, v)];
            ClassId ac = att.D[att.cls(image[u], image[v])];
            if (jc == ac) {
                ++rep.pairs_preserved;
                continue;
            }
            ++rep.pairs_violated;
            if (ac.first != jc.first) rep.i_always_preserved = false;
            if (ac.second > jc.second) rep.j_never_increases = false;
            std::ostringstream w;
            w << "relation not preserved at words (" << u << "," << v << "): J class ("
              << jc.first << "," << jc.second << ") vs attenuated (" << ac.first << ","
              << ac.second << ")";
            rep.fail(w.str());
        }
    return rep;
}

namespace {

BigFloat attenuated_T_float(long i, long j, long y, long x, long n, long m, const QPow<BigFloat>& ctx) {
    // T_{ji}(y,x) = q^(j ell) K_i(m-j,ell;q;x) E_j(n-x,m-x;q;y)
    return ctx.pow(0, j) * K_family(i, m - j, ctx, x) * E_family(j, n - x, m - x, ctx.q, y);
}

}  // namespace

LimitReport limit_check(const LimitConfig& cfg, long n, long m) {
    LimitReport rep;
    JohnsonParams jp{cfg.r, n, m};

    // formula labels (i,j): the transposed pair (j,i) is then automatically a
    // valid attenuated index since ell(h) is effectively infinite
    std::vector<ClassId> common = johnson_label_domain(jp);

    Rational tol_rel(1, 100000000);  // 1e-8

    auto run_sequence = [&](const std::function<BigFloat(const QPow<BigFloat>&)>& value_at,
                            const Rational& target, LimitPoint& pt) {
        BigFloat target_f(target, cfg.precision_bits);
        Rational abs_target = target.abs();
        if (abs_target < Rational(1)) abs_target = Rational(1);
        BigFloat scale(abs_target, cfg.precision_bits);
        BigFloat tol = BigFloat(tol_rel, cfg.precision_bits) * scale;
        // roundoff floor: sequences that converge to exactly 0 wobble at the
        // working-precision noise level, far below any analytic error
        BigFloat floor = scale;
        for (long b = 0; b < cfg.precision_bits / 2; ++b) floor = floor / BigFloat(2);

        std::vector<BigFloat> errs;
        for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
            Rational h(1, 1L << k);
            BigFloat qf = BigFloat::pow_dyadic(cfg.p, h, cfg.precision_bits);
            QPow<BigFloat> ctx{qf, BigFloat(cfg.r - 1, cfg.precision_bits), std::nullopt};
            BigFloat err = (value_at(ctx) - target_f).abs();
            pt.error_seq.push_back(err.str(20));
            errs.push_back(std::move(err));
        }
        const size_t tail = 8;
        size_t start = errs.size() > tail ? errs.size() - tail : 0;
        for (size_t t = start + 1; t < errs.size(); ++t)
            if (errs[t] > errs[t - 1] + floor) pt.monotone_tail = false;
        pt.within_tol = errs.back() <= tol;
        pt.target = target.str();
    };

    for (const auto& dg : common)
        for (const auto& vr : common) {
            LimitPoint pt;
            pt.deg = dg;
            pt.var = vr;
            Rational target = johnson_T(dg.first, dg.second, vr.first, vr.second, jp);
            auto [i, j] = dg;
            auto [x, y] = vr;
            run_sequence(
                [&](const QPow<BigFloat>& ctx) {
                    return attenuated_T_float(i, j, y, x, n, m, ctx);
                },
                target, pt);
            if (!pt.monotone_tail || !pt.within_tol) rep.pass = false;
            rep.points.push_back(std::move(pt));
        }

    {
        LimitPoint pt;
        pt.deg = {-1, -1};
        pt.var = {-1, -1};
        Rational target = binomial(n, m) * Rational(cfg.r - 1).pow(m);
        run_sequence(
            [&](const QPow<BigFloat>& ctx) {
                return ctx.pow(0, m) * q_binomial_generic(n, m, ctx.q);
            },
            target, pt);
        if (!pt.monotone_tail || !pt.within_tol) rep.pass = false;
        rep.cardinality = std::move(pt);
    }
    return rep;
}

std::string limit_report_json(const LimitReport& rep, const LimitConfig& cfg, long n, long m) {
    nlohmann::ordered_json j;
    j["p"] = cfg.p;
    j["r"] = cfg.r;
    j["n"] = n;
    j["m"] = m;
    j["h_sequence"] = "2^-k, k = " + std::to_string(cfg.k_min) + ".." + std::to_string(cfg.k_max);
    j["precision_bits"] = cfg.precision_bits;
    j["pass"] = rep.pass;
    auto dump_pt = [](const LimitPoint& pt) {
        nlohmann::ordered_json o;
        o["deg"] = {pt.deg.first, pt.deg.second};
        o["var"] = {pt.var.first, pt.var.second};
        o["target"] = pt.target;
        o["errors"] = pt.error_seq;
        o["monotone_tail"] = pt.monotone_tail;
        o["within_tolerance"] = pt.within_tol;
        return o;
    };
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& pt : rep.points) pts.push_back(dump_pt(pt));
    j["points"] = pts;
    j["cardinality"] = dump_pt(rep.cardinality);
    return j.dump(2);
}

}  // namespace atn
