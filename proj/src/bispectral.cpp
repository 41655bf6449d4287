#include "atn/bispectral.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace atn {

namespace {
Rational one() { return Rational(1); }
}

Rational BispectralCoeffs::lambda(long s) const { return params.q.pow(-s) - one(); }

Rational BispectralCoeffs::Lambda(long r, long s) const {
    return (params.q.pow(-r) - one()) * (one() - params.q.pow(r + s - params.n - 1));
}

Rational BispectralCoeffs::theta(long i) const { return params.q.pow(-i) - one(); }

Rational BispectralCoeffs::b(int eps, long i, long j) const {
    const QValue& q = params.q;
    const long ell = params.ell, m = params.m;
    if (eps == +1) return q.pow(i + j - ell - m) * (q.pow(j + 1) - one());
    if (eps == -1) return (q.pow(j - ell - 1) - one()) * (q.pow(i + j - m - 1) - one());
    return -b(+1, i, j - 1) - b(-1, i, j + 1);
}

Rational BispectralCoeffs::c(int e1, int e2, long i, long j) const {
    const QValue& q = params.q;
    const long ell = params.ell, m = params.m, n = params.n;
    if (e1 == +1 && e2 == 0) return q.pow(j - ell - n - 1) * (one() - q.pow(i + 1)).pow(2);
    if (e1 == +1 && e2 == -1)
        return q.pow(-n - 1) * (one() - q.pow(i + 1)).pow(2) * (one() - q.pow(j - ell - 1));
    if (e1 == 0 && e2 == +1)
        return q.pow(i + j - ell - m) * (q.pow(i - n + m) - one()) * (q.pow(j + 1) - one());
    if (e1 == 0 && e2 == 0)
        return -(one() - q.pow(i - n + m)) * (one() - q.pow(i - m)) -
               q.pow(-n - 1) * (one() - q.pow(i)).pow(2) - (one() - q.pow(i - n + m)) * b(0, i, j);
    if (e1 == 0 && e2 == -1)
        return -(one() - q.pow(i - n + m)) * (one() - q.pow(j - ell - 1)) *
               (one() - q.pow(i + j - m - 1));
    if (e1 == -1 && e2 == +1)
        return q.pow(i - m - 1) * (one() - q.pow(i - 1 - n + m)) * (q.pow(j + 1) - one());
    if (e1 == -1 && e2 == 0)
        return (one() - q.pow(i - 1 - n + m)) * (one() - q.pow(j - m + i - 1));
    return Rational(0);  // (+,+) and (-,-)
}

Rational BispectralCoeffs::B(int eps, long r, long s) const {
    const QValue& q = params.q;
    const long m = params.m, n = params.n;
    // qfactor_ratio resolves the removable 0/0 at the corner 2r+s = n
    if (eps == +1)
        return qfactor_ratio(q.q, one(), {r + m - n, r + s - m, r + s - n - 1},
                             {2 * r + s - n - 1, 2 * r + s - n});
    if (eps == -1)
        return qfactor_ratio(q.q, -q.pow(r + s - n - 1), {r, r + s - m - 1, r + m - n - 1},
                             {2 * r + s - n - 2, 2 * r + s - n - 1});
    return -B(+1, r, s) - B(-1, r, s);
}

Rational BispectralCoeffs::C(int e1, int e2, long r, long s) const {
    const QValue& q = params.q;
    const long ell = params.ell, m = params.m, n = params.n;
    Rational sfac = one() - q.pow(s - ell);
    if (e1 == +1 && e2 == 0) return -sfac * B(+1, r, s);
    if (e1 == -1 && e2 == 0) return -sfac * B(-1, r, s);
    if (e1 == 0 && e2 == 0)
        return -sfac * B(0, r, s) - sfac * (one() - q.pow(s - m)) +
               q.pow(s - ell - m - 1) * (one() - q.pow(s));
    if (e1 == -1 && e2 == +1)
        return -(q.pow(s - m) * sfac * (one() - q.pow(r)) * (one() - q.pow(r + m - n - 1))) /
               (one() - q.pow(2 * r + s - n - 1));
    if (e1 == 0 && e2 == +1)
        return (sfac * (one() - q.pow(r + s - n - 1)) * (one() - q.pow(r + s - m))) /
               (one() - q.pow(2 * r + s - n - 1));
    if (e1 == +1 && e2 == -1)
        return -(q.pow(s - ell - m - 1) * (one() - q.pow(s)) * (one() - q.pow(r + m - n))) /
               (one() - q.pow(2 * r + s - n - 1));
    if (e1 == 0 && e2 == -1)
        return -(q.pow(r + s - ell - n - 1) * (one() - q.pow(s)) * (one() - q.pow(r + s - m - 1))) /
               (one() - q.pow(2 * r + s - n - 1));
    return Rational(0);  // (+,+) and (-,-)
}

CheckReport verify_recurrences(const EigenGrid& g) {
    CheckReport rep;
    rep.name = "recurrences";
    BispectralCoeffs co{g.params};
    const long nc = g.nclasses();
    for (long a = 0; a < nc; ++a) {
        auto [i, j] = g.D[a];
        for (long b = 0; b < nc; ++b) {
            auto [r, s] = g.D[b];
            // three-term relation in j
            Rational lhs = co.lambda(s) * g.Tval(a, b);
            Rational rhs(0);
            for (int eps : {+1, 0, -1})
                rhs += co.b(eps, i, j) * eigenvalue_T_formula(i, j + eps, r, s, g.params);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("recT1 fails at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                         ") (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")");

            // at-most-seven-term relation in (i,j)
            lhs = g.params.q.pow(-s) * co.Lambda(r, s) * g.Tval(a, b);
            rhs = Rational(0);
            for (int e1 : {+1, 0, -1})
                for (int e2 : {+1, 0, -1})
                    rhs += co.c(e1, e2, i, j) *
                           eigenvalue_T_formula(i + e1, j + e2, r, s, g.params);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("recT2 fails at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                         ") (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")");
        }
    }
    return rep;
}

CheckReport verify_differences(const EigenGrid& g) {
    CheckReport rep;
    rep.name = "differences";
    BispectralCoeffs co{g.params};
    const long nc = g.nclasses();
    auto term = [&](long i, long j, long r, long s, const Rational& coef, Rational& acc) {
        if (!in_attenuated_domain(r, s, g.params)) {
            if (!coef.is_zero())
                rep.fail("boundary: nonzero coefficient into (" + std::to_string(r) + "," +
                         std::to_string(s) + ") outside D*");
            return;
        }
        if (!coef.is_zero()) acc += coef * eigenvalue_T_formula(i, j, r, s, g.params);
    };
    for (long a = 0; a < nc; ++a) {
        auto [i, j] = g.D[a];
        for (long b = 0; b < nc; ++b) {
            auto [r, s] = g.D[b];
            Rational lhs = co.theta(i) * g.Tval(a, b);
            Rational rhs(0);
            for (int eps : {+1, 0, -1}) term(i, j, r + eps, s, co.B(eps, r, s), rhs);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("diffT1 fails at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                         ") (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")");

            lhs = g.params.q.pow(-i) * co.theta(j) * g.Tval(a, b);
            rhs = Rational(0);
            for (int e1 : {+1, 0, -1})
                for (int e2 : {+1, 0, -1}) term(i, j, r + e1, s + e2, co.C(e1, e2, r, s), rhs);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("diffT2 fails at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                         ") (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")");
        }
    }
    return rep;
}

namespace {

// small dense rational matrix helpers on nc x nc vectors
using RVec = std::vector<Rational>;

RVec matmul(const RVec& A, const RVec& B, long n) {
    RVec r(n * n, Rational(0));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            const Rational& a = A[i * n + k];
            if (a.is_zero()) continue;
            for (long j = 0; j < n; ++j) {
                const Rational& b = B[k * n + j];
                if (!b.is_zero()) r[i * n + j] += a * b;
            }
        }
    return r;
}

RVec madd(const RVec& A, const RVec& B) {
    RVec r(A.size());
    for (size_t i = 0; i < A.size(); ++i) r[i] = A[i] + B[i];
    return r;
}

RVec msub(const RVec& A, const RVec& B) {
    RVec r(A.size());
    for (size_t i = 0; i < A.size(); ++i) r[i] = A[i] - B[i];
    return r;
}

RVec mscale(const RVec& A, const Rational& s) {
    RVec r(A.size());
    for (size_t i = 0; i < A.size(); ++i) r[i] = A[i] * s;
    return r;
}

RVec identity_m(long n) {
    RVec r(n * n, Rational(0));
    for (long i = 0; i < n; ++i) r[i * n + i] = Rational(1);
    return r;
}

bool mzero(const RVec& A) {
    for (const auto& x : A)
        if (!x.is_zero()) return false;
    return true;
}

RVec commutator(const RVec& A, const RVec& B, long n) {
    return msub(matmul(A, B, n), matmul(B, A, n));
}

RVec anticommutator(const RVec& A, const RVec& B, long n) {
    return madd(matmul(A, B, n), matmul(B, A, n));
}

}  // namespace

OperatorQuadruple build_operators(const EigenGrid& g) {
    OperatorQuadruple ops;
    ops.params = g.params;
    ops.D = g.D;
    const long nc = ops.nclasses();
    BispectralCoeffs co{g.params};
    auto idx = [&](long i, long j) -> long {
        for (long a = 0; a < nc; ++a)
            if (ops.D[a].first == i && ops.D[a].second == j) return a;
        return -1;
    };

    ops.rawX.assign(nc * nc, Rational(0));
    ops.rawY.assign(nc * nc, Rational(0));
    ops.rawXs.assign(nc * nc, Rational(0));
    ops.rawYs.assign(nc * nc, Rational(0));
    for (long a = 0; a < nc; ++a) {
        auto [i, j] = ops.D[a];
        ops.rawXs[a * nc + a] = g.params.q.pow(-i) * co.theta(j);
        ops.rawYs[a * nc + a] = co.theta(i);
        for (int eps : {+1, 0, -1}) {
            long tgt = idx(i, j + eps);
            if (tgt >= 0) ops.rawX[tgt * nc + a] = co.b(eps, i, j);
        }
        for (int e1 : {+1, 0, -1})
            for (int e2 : {+1, 0, -1}) {
                long tgt = idx(i + e1, j + e2);
                if (tgt >= 0) ops.rawY[tgt * nc + a] = co.c(e1, e2, i, j);
            }
    }

    const QValue& q = g.params.q;
    Rational qm1sq = (q.q - Rational(1)).pow(2);
    RVec I = identity_m(nc);
    ops.X = madd(I, ops.rawX);
    ops.Y = mscale(madd(mscale(I, Rational(1) + q.pow(-g.params.n - 1)), madd(ops.rawX, ops.rawY)),
                   q.pow(g.params.n + 1) / qm1sq);
    ops.Ys = madd(I, ops.rawYs);
    ops.Xs = mscale(madd(I, madd(ops.rawYs, ops.rawXs)), q.pow(g.params.ell + 1) / qm1sq);
    return ops;
}

CheckReport verify_operator_structure(const OperatorQuadruple& ops, const EigenGrid& g) {
    CheckReport rep;
    rep.name = "operator_structure";
    const long nc = ops.nclasses();
    BispectralCoeffs co{ops.params};

    for (long a = 0; a < nc; ++a) {
        auto [ti, tj] = ops.D[a];
        for (long b = 0; b < nc; ++b) {
            auto [si, sj] = ops.D[b];
            ++rep.checked;
            if (a != b && (!ops.rawXs[a * nc + b].is_zero() || !ops.rawYs[a * nc + b].is_zero()))
                rep.fail("X*/Y* not diagonal");
            if (!ops.rawX[a * nc + b].is_zero()) {
                if (ti != si || (tj - sj != 1 && tj - sj != -1 && tj != sj))
                    rep.fail("X support outside tridiagonal in j");
            }
            if (!ops.rawY[a * nc + b].is_zero()) {
                long d1 = ti - si, d2 = tj - sj;
                bool ok = d1 >= -1 && d1 <= 1 && d2 >= -1 && d2 <= 1 &&
                          !(d1 == 1 && d2 == 1) && !(d1 == -1 && d2 == -1);
                if (!ok) rep.fail("Y support includes a forbidden offset");
            }
        }
    }

    // action on each grid column reproduces the spectral relations
    for (long b = 0; b < nc; ++b) {
        auto [r, s] = ops.D[b];
        for (long a = 0; a < nc; ++a) {
            Rational actX(0), actY(0);
            for (long t = 0; t < nc; ++t) {
                // column a of rawX contributes to row t; action on functions reads
                // (X T_a)(r,s) = sum_t rawX[t][a] T_t(r,s)
                if (!ops.rawX[t * nc + a].is_zero()) actX += ops.rawX[t * nc + a] * g.Tval(t, b);
                if (!ops.rawY[t * nc + a].is_zero()) actY += ops.rawY[t * nc + a] * g.Tval(t, b);
            }
            ++rep.checked;
            if (actX != co.lambda(s) * g.Tval(a, b)) rep.fail("X action mismatch");
            if (actY != ops.params.q.pow(-s) * co.Lambda(r, s) * g.Tval(a, b))
                rep.fail("Y action mismatch");
        }
    }
    return rep;
}

CheckReport verify_algebra(const OperatorQuadruple& ops) {
    CheckReport rep;
    rep.name = "bispectral_algebra";
    const long nc = ops.nclasses();
    const QValue& q = ops.params.q;
    const long n = ops.params.n, m = ops.params.m, ell = ops.params.ell;
    const RVec I = identity_m(nc);
    const RVec &X = ops.X, &Y = ops.Y, &Xs = ops.Xs, &Ys = ops.Ys;
    Rational qq = q.q;
    Rational qp1 = qq + Rational(1);
    Rational qiq = qq + Rational(1) / qq;  // q + q^-1
    Rational qm1sq = (qq - Rational(1)).pow(2);

    auto check = [&](const char* name, const RVec& residual) {
        ++rep.checked;
        if (!mzero(residual)) rep.fail(std::string(name) + " residual nonzero");
    };

    check("[X,Y]", commutator(X, Y, nc));
    check("[X*,Y*]", commutator(Xs, Ys, nc));
    check("[X,Y*]", commutator(X, Ys, nc));

    {  // {X^2,X*} - (q+1/q) X X* X = q^{-m-1}(q+1) I - q^{-m-1}(q^{l+1}+1) X - Y* X
        RVec X2 = matmul(X, X, nc);
        RVec lhs = msub(anticommutator(X2, Xs, nc), mscale(matmul(X, matmul(Xs, X, nc), nc), qiq));
        RVec rhs = msub(mscale(I, q.pow(-m - 1) * qp1),
                        mscale(X, q.pow(-m - 1) * (q.pow(ell + 1) + Rational(1))));
        rhs = msub(rhs, matmul(Ys, X, nc));
        check("AW(X,X*) 1", msub(lhs, rhs));
    }
    {  // {X*^2,X} - (q+1/q) X* X X* = q^{l-m}(q+1)/(q-1)^2 Y* - q^{-m-1}(q^{l+1}+1) X* - Y* X*
        RVec Xs2 = matmul(Xs, Xs, nc);
        RVec lhs =
            msub(anticommutator(Xs2, X, nc), mscale(matmul(Xs, matmul(X, Xs, nc), nc), qiq));
        RVec rhs = msub(mscale(Ys, q.pow(ell - m) * qp1 / qm1sq),
                        mscale(Xs, q.pow(-m - 1) * (q.pow(ell + 1) + Rational(1))));
        rhs = msub(rhs, matmul(Ys, Xs, nc));
        check("AW(X,X*) 2", msub(lhs, rhs));
    }
    {  // {Y^2,Y*} - (q+1/q) Y Y* Y = (q+1)/(q-1)^2 (q^{n-m-1} I + (q^{m-1}+2q^n) X
       //   - q^{n-1}(q+1) X Y*) - (2/q + q^{n-m}) Y - q^m X Y
        RVec Y2 = matmul(Y, Y, nc);
        RVec lhs = msub(anticommutator(Y2, Ys, nc), mscale(matmul(Y, matmul(Ys, Y, nc), nc), qiq));
        RVec inner = madd(mscale(I, q.pow(n - m - 1)),
                          mscale(X, q.pow(m - 1) + Rational(2) * q.pow(n)));
        inner = msub(inner, mscale(matmul(X, Ys, nc), q.pow(n - 1) * qp1));
        RVec rhs = mscale(inner, qp1 / qm1sq);
        rhs = msub(rhs, mscale(Y, Rational(2) / qq + q.pow(n - m)));
        rhs = msub(rhs, mscale(matmul(X, Y, nc), q.pow(m)));
        check("AW(Y,Y*) 1", msub(lhs, rhs));
    }
    {  // {Y*^2,Y} - (q+1/q) Y* Y Y* = (1+1/q) I - q^m X Y* - (2/q + q^{n-m}) Y*
        RVec Ys2 = matmul(Ys, Ys, nc);
        RVec lhs =
            msub(anticommutator(Ys2, Y, nc), mscale(matmul(Ys, matmul(Y, Ys, nc), nc), qiq));
        RVec rhs = mscale(I, Rational(1) + Rational(1) / qq);
        rhs = msub(rhs, mscale(matmul(X, Ys, nc), q.pow(m)));
        rhs = msub(rhs, mscale(Ys, Rational(2) / qq + q.pow(n - m)));
        check("AW(Y,Y*) 2", msub(lhs, rhs));
    }
    return rep;
}

std::string operators_to_json(const OperatorQuadruple& ops,
                              const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json j;
    j["params"] = {{"q", ops.params.q.q_long()},
                   {"n", ops.params.n},
                   {"ell", ops.params.ell},
                   {"m", ops.params.m}};
    nlohmann::ordered_json dom = nlohmann::ordered_json::array();
    for (const auto& [a, b] : ops.D) dom.push_back({a, b});
    j["basis"] = dom;
    auto dump = [&](const char* name, const std::vector<Rational>& M) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        long nc = ops.nclasses();
        for (long r = 0; r < nc; ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (long c = 0; c < nc; ++c) row.push_back(M[r * nc + c].str());
            rows.push_back(std::move(row));
        }
        j["operators"][name] = rows;
    };
    dump("X", ops.X);
    dump("Y", ops.Y);
    dump("Xstar", ops.Xs);
    dump("Ystar", ops.Ys);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json c;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["checked"] = r.checked;
        c["failures"] = r.failures;
        checks.push_back(std::move(c));
    }
    j["checks"] = checks;
    return j.dump(2);
}

}  // namespace atn
