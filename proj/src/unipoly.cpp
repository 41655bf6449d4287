#include "atn/unipoly.hpp"

namespace atn {

Rational K_poly(long k, long N, long ell, const QValue& q, long x) {
    return K_family(k, N, make_qpow(q.q, ell), x);
}

Rational E_poly(long k, long N, long m, const QValue& q, long x) {
    return E_family(k, N, m, q.q, x);
}

Rational Q_poly(long k, long N, long m, const QValue& q, long x) {
    return Q_family(k, N, m, q.q, x);
}

namespace {

Rational qp(const QValue& q, long e) { return q.pow(e); }

}  // namespace

// Contiguity recurrences: lambda^eps(s) K_j(N,ell;q;s) = sum_eps' a_j^{eps,eps'}
// K_{j+eps'}(N+eps,ell;q;s), then the difference equation in the variable s.
// Both sides are evaluated independently, coefficients straight from the tables.
std::vector<RelationResidual> verify_K_relations(long N, long ell, const QValue& q) {
    std::vector<RelationResidual> out;
    auto K = [&](long k, long NN, long x) { return K_poly(k, NN, ell, q, x); };

    for (long eps : {0L, +1L, -1L}) {
        long smax = std::min({N, N + eps, ell});
        for (long j = 0; j <= std::min(N, ell); ++j) {
            // coefficient table a_j^{eps,eps'}
            auto a = [&](long jj, long e2) -> Rational {
                if (eps == +1) {
                    if (e2 == +1) return (qp(q, jj + 1) - Rational(1)) * qp(q, -N);
                    if (e2 == -1) return Rational(0);
                    return q.q - qp(q, jj - N);
                }
                if (eps == 0) {
                    if (e2 == +1) return (qp(q, jj + 1) - Rational(1)) * qp(q, jj - N - ell);
                    if (e2 == -1)
                        return (Rational(1) - qp(q, jj - N - 1)) * (Rational(1) - qp(q, jj - ell - 1));
                    return Rational(0);  // a^{00} assembled below from shifted entries
                }
                if (e2 == +1) return Rational(0);
                if (e2 == -1) return qp(q, ell) - qp(q, jj - 1);
                return qp(q, jj);
            };
            auto a_coef = [&](long e2) -> Rational {
                if (eps == 0 && e2 == 0) return -a(j - 1, +1) - a(j + 1, -1);
                return a(j, e2);
            };
            for (long s = 0; s <= smax; ++s) {
                Rational lambda;
                if (eps == +1)
                    lambda = (qp(q, -s) - qp(q, -N - 1)) * qp(q, ell + 1);
                else if (eps == 0)
                    lambda = qp(q, -s) - Rational(1);
                else
                    lambda = Rational(1);
                Rational lhs = lambda * K(j, N, s);
                Rational rhs(0);
                for (long e2 : {+1L, 0L, -1L}) rhs += a_coef(e2) * K(j + e2, N + eps, s);
                RelationResidual r;
                r.relation = "crecK";
                r.eps = eps;
                r.index = {j, s};
                r.lhs = lhs;
                r.rhs = rhs;
                r.residual = lhs - rhs;
                out.push_back(std::move(r));
            }
        }
    }

    long js_max = std::min(N, ell);
    for (long j = 0; j <= js_max; ++j) {
        for (long s = 0; s <= js_max; ++s) {
            Rational theta = qp(q, -j) - Rational(1);
            Rational bp = (Rational(1) - qp(q, s - N)) * (Rational(1) - qp(q, s - ell));
            Rational bm = -qp(q, s - ell - N - 1) * (Rational(1) - qp(q, s));
            Rational b0 = -bp - bm;
            Rational lhs = theta * K(j, N, s);
            Rational rhs(0);
            struct Term {
                long shift;
                Rational c;
            };
            for (const Term& t : {Term{+1, bp}, Term{0, b0}, Term{-1, bm}}) {
                long sv = s + t.shift;
                if (sv < 0 || sv > js_max) {
                    if (!t.c.is_zero())
                        throw SeriesError("diffK: nonzero coefficient at out-of-range shift");
                    continue;
                }
                rhs += t.c * K(j, N, sv);
            }
            RelationResidual r;
            r.relation = "diffK";
            r.index = {j, s};
            r.lhs = lhs;
            r.rhs = rhs;
            r.residual = lhs - rhs;
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Recurrence Lambda(r) E_i = A^+ E_{i+1} + A^0 E_i + A^- E_{i-1}, then the three
// contiguity difference equations Theta^eps_i E_i(N,m;r) = sum B^{eps,eps'}(r)
// E_i(N+eps,m+eps;r+eps').
std::vector<RelationResidual> verify_E_relations(long N, long m, const QValue& q) {
    std::vector<RelationResidual> out;
    long imax = std::min(N - m, m);
    auto E = [&](long k, long NN, long mm, long x) { return E_poly(k, NN, mm, q, x); };

    auto Aplus = [&](long i) { return (Rational(1) - qp(q, i + 1)).pow(2) * qp(q, -N - 1); };
    auto Aminus = [&](long i) {
        return (Rational(1) - qp(q, i - 1 - N + m)) * (Rational(1) - qp(q, i - m - 1));
    };

    for (long i = 0; i <= imax; ++i) {
        Rational A0 = -Aplus(i - 1) - Aminus(i + 1);
        for (long r = 0; r <= imax; ++r) {
            Rational Lam = (qp(q, -r) - Rational(1)) * (Rational(1) - qp(q, r - N - 1));
            Rational lhs = Lam * E(i, N, m, r);
            Rational rhs = Aplus(i) * E(i + 1, N, m, r) + A0 * E(i, N, m, r) +
                           Aminus(i) * E(i - 1, N, m, r);
            RelationResidual res;
            res.relation = "recE";
            res.index = {i, r};
            res.lhs = lhs;
            res.rhs = rhs;
            res.residual = lhs - rhs;
            out.push_back(std::move(res));
        }
    }

    for (long eps : {+1L, 0L, -1L}) {
        auto B_side = [&](long e2, long r) -> Rational {
            const Rational& qq = q.q;
            if (eps == +1) {
                if (e2 == +1) return qfactor_ratio(qq, Rational(1), {r + m - N}, {2 * r - N - 1});
                if (e2 == -1) return Rational(0);
                return qfactor_ratio(qq, -qp(q, 2 * r - N - 1), {m + 1 - r}, {2 * r - N - 1});
            }
            if (eps == 0) {
                if (e2 == +1)
                    return qfactor_ratio(qq, Rational(1), {r - N + m, r - N - 1, r - m},
                                         {2 * r - N - 1, 2 * r - N});
                return qfactor_ratio(qq, -qp(q, r - N - 1), {r, r - m - 1, r - N + m - 1},
                                     {2 * r - N - 1, 2 * r - N - 2});
            }
            if (e2 == +1) return Rational(0);
            if (e2 == -1)
                return qfactor_ratio(qq, Rational(-1), {r - N + m - 1, r}, {2 * r - N - 1});
            // (1-q^{r-N-1})(q^m - q^r) = -q^r (1-q^{r-N-1})(1-q^{m-r})
            return qfactor_ratio(qq, -qp(q, r), {r - N - 1, m - r}, {2 * r - N - 1});
        };
        auto B = [&](long e2, long r) -> Rational {
            if (eps == 0 && e2 == 0) return -B_side(+1, r) - B_side(-1, r);
            return B_side(e2, r);
        };
        for (long i = 0; i <= imax; ++i) {
            Rational theta;
            if (eps == +1)
                theta = Rational(1);
            else if (eps == 0)
                theta = qp(q, -i) - Rational(1);
            else
                theta = qp(q, m - i) - Rational(1);
            for (long r = 0; r <= imax; ++r) {
                Rational lhs = theta * E(i, N, m, r);
                Rational rhs(0);
                long shifted_rmax = std::min(N - m, m + eps);
                for (long e2 : {+1L, 0L, -1L}) {
                    Rational c = B(e2, r);
                    long rv = r + e2;
                    if (rv < 0 || rv > shifted_rmax) {
                        if (!c.is_zero())
                            throw SeriesError("cdiffE: nonzero coefficient at out-of-range shift");
                        continue;
                    }
                    rhs += c * E(i, N + eps, m + eps, rv);
                }
                RelationResidual res;
                res.relation = "cdiffE";
                res.eps = eps;
                res.index = {i, r};
                res.lhs = lhs;
                res.rhs = rhs;
                res.residual = lhs - rhs;
                out.push_back(std::move(res));
            }
        }
    }
    return out;
}

}  // namespace atn
