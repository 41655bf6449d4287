#include "atn/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "atn/bispectral.hpp"

namespace atn {

OrderSpec OrderSpec::partial(const Rational& alpha, const Rational& beta, Kind paired_with) {
    if (alpha < Rational(0) || alpha > Rational(1) || beta < Rational(0) || beta > Rational(1))
        throw std::invalid_argument("OrderSpec: alpha, beta must lie in [0,1]");
    if (alpha * beta == Rational(1)) throw std::invalid_argument("OrderSpec: alpha*beta must differ from 1");
    if (paired_with == Kind::DegLex && !(alpha < Rational(1)))
        throw std::invalid_argument("OrderSpec: deg-lex pairing needs alpha < 1");
    if (paired_with == Kind::DegLexPrime && !(beta < Rational(1)))
        throw std::invalid_argument("OrderSpec: deg-lex' pairing needs beta < 1");
    OrderSpec s;
    s.kind = Kind::Partial;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

Ordering order_compare(const OrderSpec& spec, const ClassId& a, const ClassId& b) {
    if (spec.kind == OrderSpec::Kind::DegLex || spec.kind == OrderSpec::Kind::DegLexPrime) {
        if (a == b) return Ordering::Equal;
        long da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
        long ka = spec.kind == OrderSpec::Kind::DegLex ? a.first : a.second;
        long kb = spec.kind == OrderSpec::Kind::DegLex ? b.first : b.second;
        return ka < kb ? Ordering::Less : Ordering::Greater;
    }
    // m1 + alpha m2 <= n1 + alpha n2  and  beta m1 + m2 <= beta n1 + n2
    Rational l1 = Rational(a.first) + spec.alpha * Rational(a.second);
    Rational r1 = Rational(b.first) + spec.alpha * Rational(b.second);
    Rational l2 = spec.beta * Rational(a.first) + Rational(a.second);
    Rational r2 = spec.beta * Rational(b.first) + Rational(b.second);
    bool ab = l1 <= r1 && l2 <= r2;
    bool ba = r1 <= l1 && r2 <= l2;
    if (ab && ba) return Ordering::Equal;
    if (ab) return Ordering::Less;
    if (ba) return Ordering::Greater;
    return Ordering::Incomparable;
}

bool order_leq(const OrderSpec& spec, const ClassId& a, const ClassId& b) {
    Ordering o = order_compare(spec, a, b);
    return o == Ordering::Less || o == Ordering::Equal;
}

namespace {

void require_generators(const SchemeParams& p) {
    if (p.m < 1 || p.ell < 1 || p.n - p.m < 1)
        throw std::invalid_argument(
            "structure tables need both generators in D (m >= 1, ell >= 1, n > m)");
}

long find_class(const std::vector<ClassId>& D, long a, long b) {
    for (size_t k = 0; k < D.size(); ++k)
        if (D[k].first == a && D[k].second == b) return static_cast<long>(k);
    return -1;
}

// Prop 5.1 coefficients: the three-term b-tilde family and seven-term c-tilde family.
Rational btilde(const SchemeParams& par, int eps, long i, long j) {
    const QValue& q = par.q;
    Rational one(1);
    Rational dq = one - q.q;  // 1 - q
    if (eps == +1) return q.pow(i + j) * (one - q.pow(j + 1)) / dq;
    if (eps == -1) return (q.pow(par.ell) - q.pow(j - 1)) * (q.pow(i + j - 1) - q.pow(par.m)) / dq;
    Rational t = (q.pow(par.ell) - one) * (one - q.pow(par.m)) - q.pow(i + j - 1) * (one - q.pow(j)) -
                 (q.pow(par.ell) - q.pow(j)) * (q.pow(i + j) - q.pow(par.m));
    return t / dq;
}

Rational ctilde(const SchemeParams& par, int e1, int e2, long i, long j) {
    const QValue& q = par.q;
    const long n = par.n, m = par.m, ell = par.ell;
    Rational one(1);
    Rational dq2 = (one - q.q).pow(2);
    if (e1 == +1 && e2 == 0) return q.pow(j) * (one - q.pow(i + 1)).pow(2) / dq2;
    if (e1 == +1 && e2 == -1)
        return (q.pow(ell) - q.pow(j - 1)) * (one - q.pow(i + 1)).pow(2) / dq2;
    if (e1 == 0 && e2 == +1)
        return q.pow(i + j + 1) * (one - q.pow(i)) * (one - q.pow(j + 1)) / dq2;
    if (e1 == 0 && e2 == 0) {
        BispectralCoeffs co{par};
        Rational inner = one - q.pow(n - m) + q.pow(i) - q.pow(m) -
                         q.pow(-1) * (one - q.pow(i)) - q.pow(m) * co.b(0, i, j);
        return q.pow(ell + 1) * (one - q.pow(i)) * inner / dq2;
    }
    if (e1 == 0 && e2 == -1)
        return (q.pow(ell) - q.pow(j - 1)) * (one - q.pow(i)) * (q.pow(i + j) - q.pow(m + 1)) / dq2;
    if (e1 == -1 && e2 == +1)
        return q.pow(ell + i) * (one - q.pow(j + 1)) * (q.pow(i - 1) - q.pow(n - m)) / dq2;
    if (e1 == -1 && e2 == 0)
        return q.pow(ell) * (q.pow(i + j) - q.pow(m + 1)) * (q.pow(i - 1) - q.pow(n - m)) / dq2;
    return Rational(0);
}

// Prop 6.1 coefficients.
Rational Btilde(const SchemeParams& par, int eps, long r, long s) {
    const QValue& q = par.q;
    const long n = par.n, m = par.m;
    Rational one(1);
    if (eps == +1) {
        std::vector<long> num = {-n, -n + 1, r + 1, r + m - n, r + s - m};
        std::vector<long> den = {-m, m - n, 2 * r + s - n, 2 * r + s - n + 1};
        return qfactor_ratio(q.q, q.pow(r + s) / (one - q.q), num, den);
    }
    if (eps == -1) {
        std::vector<long> num = {n - 1, -n, r + m - n - 1, r + s - m - 1, r + s - n - 2};
        std::vector<long> den = {-m, m - n, 2 * r + s - n - 2, 2 * r + s - n - 3};
        return qfactor_ratio(q.q, q.q / (one - q.q), num, den);
    }
    BispectralCoeffs co{par};
    Rational head = q.q * (one - q.pow(n - 1)) / (one - q.q);
    Rational coef = q.q * (one - q.pow(n - 1)) * (one - q.pow(-n)) /
                    ((one - q.q) * (one - q.pow(-m)) * (one - q.pow(m - n)));
    return head + coef * co.B(0, r, s);
}

Rational Ctilde(const SchemeParams& par, int e1, int e2, long r, long s) {
    const QValue& q = par.q;
    const long n = par.n, m = par.m, ell = par.ell;
    Rational one(1);
    if (e1 == +1 && e2 == 0)
        return qfactor_ratio(q.q, -q.pow(r + s) / (one - q.q),
                             {-n, s, r + 1, r + m - n, r + s - m},
                             {-m, 2 * r + s - n, 2 * r + s - n + 1});
    if (e1 == -1 && e2 == 0)
        return qfactor_ratio(q.q, -one / (one - q.q),
                             {n, s, r + s - n - 2, r + s - m - 1, r + m - n - 1},
                             {-m, 2 * r + s - n - 2, 2 * r + s - n - 3});
    if (e1 == 0 && e2 == 0) {
        BispectralCoeffs co{par};
        Rational inner = q.pow(ell) + q.pow(m) - q.pow(s) - q.pow(s - 1) - one +
                         q.pow(m) * co.B(0, r, s);
        return (one - q.pow(n)) * (one - q.pow(s)) * inner / ((one - q.q) * (one - q.pow(m)));
    }
    if (e1 == -1 && e2 == +1)
        return qfactor_ratio(q.q, -q.pow(s - m) / (one - q.q), {n, s + 1, r + m - n - 1},
                             {-m, 2 * r + s - n - 2});
    if (e1 == 0 && e2 == +1)
        return qfactor_ratio(q.q, q.pow(r + s) / (one - q.q), {-n, s + 1, r + s - m},
                             {-m, 2 * r + s - n});
    if (e1 == +1 && e2 == -1)
        return qfactor_ratio(q.q, -q.pow(s - m - 1) * (q.pow(ell) - q.pow(s - 1)) / (one - q.q),
                             {r + m - n, n, r + 1}, {-m, 2 * r + s - n});
    if (e1 == 0 && e2 == -1)
        return qfactor_ratio(q.q, (q.pow(ell) - q.pow(s - 1)) / (one - q.q),
                             {n, r + s - m - 1, r + s - n - 2}, {-m, 2 * r + s - n - 2});
    return Rational(0);
}

}  // namespace

GeneratorTables intersection_formula(const SchemeParams& p) {
    require_generators(p);
    GeneratorTables t;
    t.params = p;
    t.D = attenuated_domain(p.n, p.ell, p.m);
    long nc = t.nclasses();
    t.e10.assign(nc * nc, Rational(0));
    t.e01.assign(nc * nc, Rational(0));
    for (long src = 0; src < nc; ++src) {
        auto [i, j] = t.D[src];
        for (int e1 : {+1, 0, -1})
            for (int e2 : {+1, 0, -1}) {
                long tgt = find_class(t.D, i + e1, j + e2);
                if (tgt < 0) continue;
                t.e10[src * nc + tgt] = ctilde(p, e1, e2, i, j);
                if (e1 == 0) t.e01[src * nc + tgt] = btilde(p, e2, i, j);
            }
    }
    return t;
}

GeneratorTables krein_formula(const SchemeParams& p) {
    require_generators(p);
    GeneratorTables t;
    t.params = p;
    t.D = attenuated_domain(p.n, p.ell, p.m);
    long nc = t.nclasses();
    t.e10.assign(nc * nc, Rational(0));
    t.e01.assign(nc * nc, Rational(0));
    for (long src = 0; src < nc; ++src) {
        auto [r, s] = t.D[src];
        for (int e1 : {+1, 0, -1})
            for (int e2 : {+1, 0, -1}) {
                long tgt = find_class(t.D, r + e1, s + e2);
                if (tgt < 0) continue;
                t.e01[src * nc + tgt] = Ctilde(p, e1, e2, r, s);
                if (e2 == 0) t.e10[src * nc + tgt] = Btilde(p, e1, r, s);
            }
    }
    return t;
}

GeneratorTables slices_from_brute(const SchemeParams& p, const std::vector<ClassId>& D,
                                  const BruteTensor& t) {
    GeneratorTables g;
    g.params = p;
    g.D = D;
    long nc = g.nclasses();
    long c10 = find_class(D, 1, 0), c01 = find_class(D, 0, 1);
    if (c10 < 0 || c01 < 0) throw std::invalid_argument("slices_from_brute: generators not in D");
    g.e10.assign(nc * nc, Rational(0));
    g.e01.assign(nc * nc, Rational(0));
    for (long src = 0; src < nc; ++src)
        for (long tgt = 0; tgt < nc; ++tgt) {
            g.e10[src * nc + tgt] = Rational(t.at(c10, src, tgt));
            g.e01[src * nc + tgt] = Rational(t.at(c01, src, tgt));
        }
    return g;
}

GeneratorTables slices_from_krein(const SchemeParams& p, const std::vector<ClassId>& D,
                                  const KreinTensor& t) {
    GeneratorTables g;
    g.params = p;
    g.D = D;
    long nc = g.nclasses();
    long c10 = find_class(D, 1, 0), c01 = find_class(D, 0, 1);
    if (c10 < 0 || c01 < 0) throw std::invalid_argument("slices_from_krein: generators not in D");
    g.e10.assign(nc * nc, Rational(0));
    g.e01.assign(nc * nc, Rational(0));
    for (long src = 0; src < nc; ++src)
        for (long tgt = 0; tgt < nc; ++tgt) {
            g.e10[src * nc + tgt] = t.at(c10, src, tgt);
            g.e01[src * nc + tgt] = t.at(c01, src, tgt);
        }
    return g;
}

CompatReport check_compat(const GeneratorTables& t, const OrderSpec& po) {
    CompatReport rep;
    long nc = t.nclasses();
    auto sweep = [&](const std::vector<Rational>& slice, long g1, long g2, const char* label) {
        for (long src = 0; src < nc; ++src) {
            ClassId a = t.D[src];
            ClassId ae{a.first + g1, a.second + g2};
            for (long tgt = 0; tgt < nc; ++tgt) {
                ++rep.checked;
                const Rational& val = slice[src * nc + tgt];
                if (!val.is_zero() && !order_leq(po, t.D[tgt], ae)) {
                    std::ostringstream w;
                    w << label << ": nonzero at source (" << a.first << "," << a.second
                      << ") target (" << t.D[tgt].first << "," << t.D[tgt].second
                      << ") not below (" << ae.first << "," << ae.second << ")";
                    rep.fail(w.str());
                }
            }
            long tgt_ae = find_class(t.D, ae.first, ae.second);
            if (tgt_ae >= 0) {
                ++rep.checked;
                if (slice[src * nc + tgt_ae].is_zero()) {
                    std::ostringstream w;
                    w << label << ": leading entry vanishes at source (" << a.first << ","
                      << a.second << ")";
                    rep.fail(w.str());
                }
            }
        }
    };
    sweep(t.e10, 1, 0, "e1 slice");
    sweep(t.e01, 0, 1, "e2 slice");
    return rep;
}

CheckReport check_sparsity(const GeneratorTables& t, bool krein_side) {
    CheckReport rep;
    rep.name = krein_side ? "krein_sparsity" : "intersection_sparsity";
    long nc = t.nclasses();
    auto offset_ok_7 = [](long d1, long d2) {
        return d1 >= -1 && d1 <= 1 && d2 >= -1 && d2 <= 1 && !(d1 == 1 && d2 == 1) &&
               !(d1 == -1 && d2 == -1);
    };
    for (long src = 0; src < nc; ++src)
        for (long tgt = 0; tgt < nc; ++tgt) {
            long d1 = t.D[tgt].first - t.D[src].first;
            long d2 = t.D[tgt].second - t.D[src].second;
            ++rep.checked;
            if (!t.e10[src * nc + tgt].is_zero()) {
                bool ok = krein_side ? (d2 == 0 && d1 >= -1 && d1 <= 1) : offset_ok_7(d1, d2);
                if (!ok) rep.fail("e1 slice support outside the allowed offsets");
            }
            if (!t.e01[src * nc + tgt].is_zero()) {
                bool ok = krein_side ? offset_ok_7(d1, d2) : (d1 == 0 && d2 >= -1 && d2 <= 1);
                if (!ok) rep.fail("e2 slice support outside the allowed offsets");
            }
        }
    return rep;
}

void BivariatePoly::add_term(long d1, long d2, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(d1, d2);
    auto it = coef.find(key);
    if (it == coef.end()) {
        coef.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coef.erase(it);
    }
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [d, c] : coef) acc += c * x.pow(d.first) * y.pow(d.second);
    return acc;
}

BivariatePoly BivariatePoly::shift_x() const {
    BivariatePoly r;
    for (const auto& [d, c] : coef) r.coef.emplace(std::make_pair(d.first + 1, d.second), c);
    return r;
}

BivariatePoly BivariatePoly::shift_y() const {
    BivariatePoly r;
    for (const auto& [d, c] : coef) r.coef.emplace(std::make_pair(d.first, d.second + 1), c);
    return r;
}

std::pair<long, long> BivariatePoly::multidegree(const OrderSpec& mo) const {
    if (coef.empty()) return {-1, -1};
    std::pair<long, long> best = coef.begin()->first;
    for (const auto& [d, c] : coef)
        if (order_compare(mo, best, d) == Ordering::Less) best = d;
    return best;
}

std::string BivariatePoly::str() const {
    if (coef.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : coef) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        if (d.first > 0) out << "*x^" << d.first;
        if (d.second > 0) out << "*y^" << d.second;
    }
    return out.str();
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [d, c] : b.coef) r.add_term(d.first, d.second, c);
    return r;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [d, c] : b.coef) r.add_term(d.first, d.second, -c);
    return r;
}

BivariatePoly operator*(const BivariatePoly& a, const Rational& s) {
    BivariatePoly r;
    if (s.is_zero()) return r;
    for (const auto& [d, c] : a.coef) r.coef.emplace(d, c * s);
    return r;
}

namespace {

// shared back-solver: three-term relation advances the coordinate the generator
// moves, seven-term relation advances the other one
std::vector<BivariatePoly> solve_bivariate(const GeneratorTables& t, bool krein_side) {
    long nc = t.nclasses();
    std::vector<BivariatePoly> v(nc);
    std::vector<bool> done(nc, false);
    auto idx = [&](long a, long b) { return find_class(t.D, a, b); };

    auto poly_at = [&](long a, long b) -> BivariatePoly {
        long k = idx(a, b);
        if (k < 0 || !done[k]) return BivariatePoly();
        return v[k];
    };

    // D is already deg-lex sorted; for the Krein side we need deg-lex' order
    std::vector<long> order(nc);
    for (long k = 0; k < nc; ++k) order[k] = k;
    if (krein_side) {
        OrderSpec dlp = OrderSpec::deglex_prime();
        std::sort(order.begin(), order.end(), [&](long x, long y) {
            return order_compare(dlp, t.D[x], t.D[y]) == Ordering::Less;
        });
    }

    for (long k : order) {
        auto [a, b] = t.D[k];
        if (a == 0 && b == 0) {
            v[k].add_term(0, 0, Rational(1));
            done[k] = true;
            continue;
        }
        if (!krein_side) {
            // advance j with  y v_{i,j-1} = sum_eps bt^eps(i,j-1) v_{i,j-1+eps}
            if (b > 0) {
                long src = idx(a, b - 1);
                BivariatePoly rhs = poly_at(a, b - 1).shift_y();
                for (int eps : {0, -1}) {
                    long tgt = idx(a, b - 1 + eps);
                    if (tgt < 0) continue;
                    rhs = rhs - poly_at(a, b - 1 + eps) * t.at01(src, tgt);
                }
                const Rational& lead = t.at01(src, k);
                if (lead.is_zero()) throw std::runtime_error("recurrence degenerate");
                v[k] = rhs * (Rational(1) / lead);
            } else {
                // advance i with  x v_{i-1,0} = sum c~^{eps,eps'}(i-1,0) v_{i-1+eps,eps'}
                long src = idx(a - 1, 0);
                BivariatePoly rhs = poly_at(a - 1, 0).shift_x();
                for (int e1 : {+1, 0, -1})
                    for (int e2 : {+1, 0, -1}) {
                        if (e1 == +1 && e2 == 0) continue;  // the unknown
                        long tgt = idx(a - 1 + e1, e2);
                        if (tgt < 0) continue;
                        rhs = rhs - poly_at(a - 1 + e1, e2) * t.at10(src, tgt);
                    }
                const Rational& lead = t.at10(src, k);
                if (lead.is_zero()) throw std::runtime_error("recurrence degenerate");
                v[k] = rhs * (Rational(1) / lead);
            }
        } else {
            // advance r with  x v*_{r-1,s} = sum Bt^eps(r-1,s) v*_{r-1+eps,s}
            if (a > 0) {
                long src = idx(a - 1, b);
                BivariatePoly rhs = poly_at(a - 1, b).shift_x();
                for (int eps : {0, -1}) {
                    long tgt = idx(a - 1 + eps, b);
                    if (tgt < 0) continue;
                    rhs = rhs - poly_at(a - 1 + eps, b) * t.at10(src, tgt);
                }
                const Rational& lead = t.at10(src, k);
                if (lead.is_zero()) throw std::runtime_error("recurrence degenerate");
                v[k] = rhs * (Rational(1) / lead);
            } else {
                // advance s with  y v*_{0,s-1} = sum Ct^{eps,eps'}(0,s-1) v*_{eps,s-1+eps'}
                long src = idx(0, b - 1);
                BivariatePoly rhs = poly_at(0, b - 1).shift_y();
                for (int e1 : {+1, 0, -1})
                    for (int e2 : {+1, 0, -1}) {
                        if (e1 == 0 && e2 == +1) continue;  // the unknown
                        long tgt = idx(e1, b - 1 + e2);
                        if (tgt < 0) continue;
                        rhs = rhs - poly_at(e1, b - 1 + e2) * t.at01(src, tgt);
                    }
                const Rational& lead = t.at01(src, k);
                if (lead.is_zero()) throw std::runtime_error("recurrence degenerate");
                v[k] = rhs * (Rational(1) / lead);
            }
        }
        done[k] = true;
    }
    return v;
}

}  // namespace

std::vector<BivariatePoly> bivariate_v(const GeneratorTables& p) { return solve_bivariate(p, false); }

std::vector<BivariatePoly> bivariate_v_star(const GeneratorTables& q) {
    return solve_bivariate(q, true);
}

CheckReport verify_bivariate(const EigenGrid& g, const std::vector<BivariatePoly>& v,
                             const std::vector<BivariatePoly>& vstar) {
    CheckReport rep;
    rep.name = "bivariate_polynomials";
    long nc = g.nclasses();
    long c10 = find_class(g.D, 1, 0), c01 = find_class(g.D, 0, 1);
    OrderSpec dl = OrderSpec::deglex(), dlp = OrderSpec::deglex_prime();
    OrderSpec po_P = OrderSpec::partial(Rational(0), Rational(1), OrderSpec::Kind::DegLex);
    OrderSpec po_Q = OrderSpec::partial(Rational(1), Rational(0), OrderSpec::Kind::DegLexPrime);

    for (long k = 0; k < nc; ++k) {
        // multidegree and compatibility
        ++rep.checked;
        if (v[k].multidegree(dl) != g.D[k]) rep.fail("multidegree(v) mismatch at class " + std::to_string(k));
        ++rep.checked;
        if (vstar[k].multidegree(dlp) != g.D[k])
            rep.fail("multidegree(v*) mismatch at class " + std::to_string(k));
        for (const auto& [d, c] : v[k].coef) {
            ++rep.checked;
            if (!order_leq(po_P, d, g.D[k])) rep.fail("v monomial not partial-order compatible");
            if (find_class(g.D, d.first, d.second) < 0) rep.fail("v monomial outside D");
        }
        for (const auto& [d, c] : vstar[k].coef) {
            ++rep.checked;
            if (!order_leq(po_Q, d, g.D[k])) rep.fail("v* monomial not partial-order compatible");
            if (find_class(g.D, d.first, d.second) < 0) rep.fail("v* monomial outside D*");
        }
        // evaluation reproduces the grids
        for (long pt = 0; pt < nc; ++pt) {
            ++rep.checked;
            if (v[k].eval(g.Tval(c10, pt), g.Tval(c01, pt)) != g.Tval(k, pt))
                rep.fail("v evaluation mismatch at class " + std::to_string(k) + " point " +
                         std::to_string(pt));
            ++rep.checked;
            if (vstar[k].eval(g.Uval(c10, pt), g.Uval(c01, pt)) != g.Uval(k, pt))
                rep.fail("v* evaluation mismatch at class " + std::to_string(k) + " point " +
                         std::to_string(pt));
        }
    }
    return rep;
}

std::string tables_to_csv(const GeneratorTables& t, const char* label) {
    std::ostringstream out;
    long nc = t.nclasses();
    out << "generator,src_a,src_b,tgt_a,tgt_b," << label << "\n";
    for (long src = 0; src < nc; ++src)
        for (long tgt = 0; tgt < nc; ++tgt) {
            if (!t.e10[src * nc + tgt].is_zero())
                out << "(1;0)," << t.D[src].first << "," << t.D[src].second << "," << t.D[tgt].first
                    << "," << t.D[tgt].second << "," << t.e10[src * nc + tgt].str() << "\n";
            if (!t.e01[src * nc + tgt].is_zero())
                out << "(0;1)," << t.D[src].first << "," << t.D[src].second << "," << t.D[tgt].first
                    << "," << t.D[tgt].second << "," << t.e01[src * nc + tgt].str() << "\n";
        }
    return out.str();
}

std::string polys_to_json(const std::vector<ClassId>& D, const std::vector<BivariatePoly>& v,
                          const char* varname_x, const char* varname_y) {
    nlohmann::ordered_json j;
    j["variables"] = {varname_x, varname_y};
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (size_t k = 0; k < v.size(); ++k) {
        nlohmann::ordered_json item;
        item["class"] = {D[k].first, D[k].second};
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [d, c] : v[k].coef)
            terms.push_back({{"deg", {d.first, d.second}}, {"coef", c.str()}});
        item["terms"] = terms;
        item["pretty"] = v[k].str();
        items.push_back(std::move(item));
    }
    j["polynomials"] = items;
    return j.dump(2);
}

}  // namespace atn
