#include "atn/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace atn {

bool in_attenuated_domain(long a, long b, const SchemeParams& p) {
    return a >= 0 && b >= 0 && a + b <= p.m && a <= p.n - p.m && b <= p.ell;
}

Rational eigenvalue_T_formula(long i, long j, long r, long s, const SchemeParams& p) {
    return p.q.pow(i * p.ell) * K_poly(j, p.m - i, p.ell, p.q, s) *
           E_poly(i, p.n - s, p.m - s, p.q, r);
}

Rational dual_U_formula(long r, long s, long i, long j, const SchemeParams& p) {
    Rational head = q_binomial(p.n, p.m, p.q.q) / q_binomial(p.n - s, p.m - s, p.q.q);
    return head * K_poly(s, p.m - i, p.ell, p.q, j) * Q_poly(r, p.n - s, p.m - s, p.q, i);
}

Rational eigenvalue_T(long i, long j, long r, long s, const SchemeParams& p) {
    if (!in_attenuated_domain(i, j, p) || !in_attenuated_domain(r, s, p))
        throw std::invalid_argument("eigenvalue_T: index pair outside the domain");
    return eigenvalue_T_formula(i, j, r, s, p);
}

Rational dual_U(long r, long s, long i, long j, const SchemeParams& p) {
    if (!in_attenuated_domain(i, j, p) || !in_attenuated_domain(r, s, p))
        throw std::invalid_argument("dual_U: index pair outside the domain");
    return dual_U_formula(r, s, i, j, p);
}

EigenGrid compute_grid(const SchemeParams& p) {
    EigenGrid g;
    g.params = p;
    g.D = attenuated_domain(p.n, p.ell, p.m);
    long nc = g.nclasses();
    g.T.resize(nc * nc);
    g.U.resize(nc * nc);
    for (long a = 0; a < nc; ++a)
        for (long b = 0; b < nc; ++b) {
            auto [i, j] = g.D[a];
            auto [r, s] = g.D[b];
            g.T[a * nc + b] = eigenvalue_T(i, j, r, s, p);
            g.U[a * nc + b] = dual_U(i, j, r, s, p);  // row label (r,s)=(i,j) of D[a]
        }
    return g;
}

CheckReport wilson_duality_check(const EigenGrid& g) {
    CheckReport rep;
    rep.name = "wilson_duality";
    long nc = g.nclasses();
    long c00 = 0;  // deg-lex puts (0,0) first
    for (long ij = 0; ij < nc; ++ij)
        for (long rs = 0; rs < nc; ++rs) {
            Rational lhs = g.Uval(rs, ij) * g.Tval(ij, c00);
            Rational rhs = g.Tval(ij, rs) * g.Uval(rs, c00);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("Wilson duality fails at ij=" + std::to_string(ij) +
                         " rs=" + std::to_string(rs));
        }
    return rep;
}

IdempotentSet idempotents(const SchemeInstance& s, const EigenGrid& g) {
    IdempotentSet e;
    e.vertex_count = s.size();
    e.D = g.D;
    long nc = g.nclasses();
    e.coef.resize(nc * nc);
    Rational inv_size = Rational(1) / Rational(s.size());
    for (long rs = 0; rs < nc; ++rs)
        for (long ij = 0; ij < nc; ++ij) e.coef[rs * nc + ij] = g.Uval(rs, ij) * inv_size;
    return e;
}

IdempotentSet::Scaled IdempotentSet::materialize(const SchemeInstance& s, long rs) const {
    long nc = nclasses();
    mpz_class lcm = 1;
    for (long ij = 0; ij < nc; ++ij) {
        mpz_class d = entry_class(rs, ij).den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> scaled(nc);
    for (long ij = 0; ij < nc; ++ij) {
        const Rational& c = entry_class(rs, ij);
        scaled[ij] = c.num() * (lcm / c.den());
    }
    long N = s.size();
    Scaled out;
    out.den = lcm;
    out.mat = ZMat(N, N);
    for (long u = 0; u < N; ++u)
        for (long v = 0; v < N; ++v) out.mat.at(u, v) = scaled[s.cls(u, v)];
    return out;
}

CheckReport verify_idempotents(const SchemeInstance& s, const EigenGrid& g, const BruteTensor& t,
                               long dense_limit) {
    CheckReport rep;
    rep.name = "idempotents";
    const long nc = g.nclasses();
    const long N = s.size();
    IdempotentSet E = idempotents(s, g);
    auto e = [&](long rs, long ij) -> const Rational& { return E.entry_class(rs, ij); };

    // multiplicities: positive integers summing to |X|
    Rational mult_sum(0);
    for (long rs = 0; rs < nc; ++rs) {
        const Rational& m = g.Uval(rs, 0);
        ++rep.checked;
        if (!m.is_integer() || m.sign() <= 0)
            rep.fail("multiplicity U_rs(0,0) not a positive integer at rs=" + std::to_string(rs));
        mult_sum += m;
    }
    if (mult_sum != Rational(N)) rep.fail("multiplicities do not sum to |X|");

    // E_00 = J/|X|
    for (long ij = 0; ij < nc; ++ij) {
        ++rep.checked;
        if (e(0, ij) != Rational(1) / Rational(N)) rep.fail("E_00 != J/|X|");
    }

    // completeness sum E = I
    for (long ij = 0; ij < nc; ++ij) {
        Rational sum(0);
        for (long rs = 0; rs < nc; ++rs) sum += e(rs, ij);
        ++rep.checked;
        if (sum != Rational(ij == 0 ? 1 : 0)) rep.fail("sum of idempotents != I on class " + std::to_string(ij));
    }

    // pairwise products in the A-basis: E_ab E_cd = delta E_ab.
    // Exact because axiom (iv) (A_ij A_kl = sum p A) was verified by explicit
    // integer matrix products.
    for (long ab = 0; ab < nc; ++ab)
        for (long cd = 0; cd < nc; ++cd) {
            for (long ef = 0; ef < nc; ++ef) {
                Rational lhs(0);
                for (long ij = 0; ij < nc; ++ij) {
                    if (e(ab, ij).is_zero()) continue;
                    for (long kl = 0; kl < nc; ++kl) {
                        long pv = t.at(ij, kl, ef);
                        if (pv == 0) continue;
                        lhs += e(ab, ij) * e(cd, kl) * Rational(pv);
                    }
                }
                Rational rhs = (ab == cd) ? e(ab, ef) : Rational(0);
                ++rep.checked;
                if (lhs != rhs)
                    rep.fail("E_ab E_cd != delta E_ab at (" + std::to_string(ab) + "," +
                             std::to_string(cd) + ")");
            }
        }

    // eigen-identity A_ij E_rs = T_ij(rs) E_rs, again through the A-basis
    for (long ij = 0; ij < nc; ++ij)
        for (long rs = 0; rs < nc; ++rs) {
            for (long ef = 0; ef < nc; ++ef) {
                Rational lhs(0);
                for (long kl = 0; kl < nc; ++kl) {
                    long pv = t.at(ij, kl, ef);
                    if (pv != 0) lhs += Rational(pv) * e(rs, kl);
                }
                ++rep.checked;
                if (lhs != g.Tval(ij, rs) * e(rs, ef))
                    rep.fail("A E != T E at ij=" + std::to_string(ij) + " rs=" + std::to_string(rs));
            }
        }

    // inverse expansion A_ij = sum_rs T_ij(rs) E_rs
    for (long ij = 0; ij < nc; ++ij)
        for (long ef = 0; ef < nc; ++ef) {
            Rational sum(0);
            for (long rs = 0; rs < nc; ++rs) sum += g.Tval(ij, rs) * e(rs, ef);
            ++rep.checked;
            if (sum != Rational(ij == ef ? 1 : 0))
                rep.fail("A != sum T E at ij=" + std::to_string(ij));
        }

    if (N <= dense_limit) {
        // literal |X| x |X| integer matrix checks; E_rs = mat/den
        std::vector<IdempotentSet::Scaled> mats;
        mats.reserve(nc);
        for (long rs = 0; rs < nc; ++rs) mats.push_back(E.materialize(s, rs));
        for (long ab = 0; ab < nc; ++ab) {
            for (long cd = 0; cd < nc; ++cd) {
                ZMat prod = mats[ab].mat * mats[cd].mat;
                // prod/(da db) == delta mat_ab/da  <=>  prod == delta db mat_ab
                ZMat rhs = (ab == cd) ? scale(mats[ab].mat, mats[cd].den)
                                      : ZMat(prod.rows, prod.cols);
                ++rep.checked;
                if (!(prod == rhs))
                    rep.fail("dense: E_ab E_cd != delta E_ab at (" + std::to_string(ab) + "," +
                             std::to_string(cd) + ")");
            }
        }
        // sum E = I with a common denominator
        mpz_class L = 1;
        for (long rs = 0; rs < nc; ++rs)
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), mats[rs].den.get_mpz_t());
        ZMat acc(N, N);
        for (long rs = 0; rs < nc; ++rs) acc = acc + scale(mats[rs].mat, L / mats[rs].den);
        ++rep.checked;
        if (!(acc == ZMat::identity(N, L))) rep.fail("dense: sum E != I");
        // A_ij E_rs = T_ij(rs) E_rs and ranks
        for (long rs = 0; rs < nc; ++rs) {
            for (long ij = 0; ij < nc; ++ij) {
                ZMat lhs = csr_mul(s.adjacency[ij], mats[rs].mat);
                const Rational& tv = g.Tval(ij, rs);
                ++rep.checked;
                if (!(scale(lhs, tv.den()) == scale(mats[rs].mat, tv.num())))
                    rep.fail("dense: A E != T E at ij=" + std::to_string(ij) +
                             " rs=" + std::to_string(rs));
            }
            long rk = bareiss_rank(mats[rs].mat);
            ++rep.checked;
            if (Rational(rk) != g.Uval(rs, 0))
                rep.fail("dense: rank E_rs != U_rs(0,0) at rs=" + std::to_string(rs));
        }
    }
    return rep;
}

KreinTensor brute_krein(const SchemeInstance& s, const EigenGrid& g, CheckReport* report) {
    CheckReport local;
    CheckReport& rep = report ? *report : local;
    rep.name = "brute_krein";
    const long nc = g.nclasses();
    const long N = s.size();
    KreinTensor k;
    k.nclasses = nc;
    k.v.assign(nc * nc * nc, Rational(0));

    // E_mn o E_rs read off in the A-basis: class value U_mn(ij)U_rs(ij)/|X|^2,
    // converted with A_ij = sum_ab T_ij(ab) E_ab.
    Rational inv_size = Rational(1) / Rational(N);
    for (long mn = 0; mn < nc; ++mn)
        for (long rs = 0; rs < nc; ++rs) {
            for (long ab = 0; ab < nc; ++ab) {
                Rational sum(0);
                for (long ij = 0; ij < nc; ++ij)
                    sum += g.Uval(mn, ij) * g.Uval(rs, ij) * g.Tval(ij, ab);
                k.at(mn, rs, ab) = sum * inv_size;
            }
            // remainder check: expansion must reproduce the Schur product exactly
            for (long ij = 0; ij < nc; ++ij) {
                Rational back(0);
                for (long ab = 0; ab < nc; ++ab) back += k.at(mn, rs, ab) * g.Uval(ab, ij);
                ++rep.checked;
                if (back != g.Uval(mn, ij) * g.Uval(rs, ij))
                    rep.fail("Krein expansion remainder nonzero at (" + std::to_string(mn) + "," +
                             std::to_string(rs) + ") class " + std::to_string(ij));
            }
            // Krein condition
            for (long ab = 0; ab < nc; ++ab) {
                ++rep.checked;
                if (k.at(mn, rs, ab).sign() < 0)
                    rep.fail("negative Krein parameter at (" + std::to_string(mn) + "," +
                             std::to_string(rs) + ")^" + std::to_string(ab));
            }
        }
    return k;
}

std::string grid_to_csv(const EigenGrid& g, bool dual) {
    std::ostringstream out;
    long nc = g.nclasses();
    out << (dual ? "r,s" : "i,j");
    for (long b = 0; b < nc; ++b)
        out << "," << (dual ? "U" : "T") << "(" << g.D[b].first << ";" << g.D[b].second << ")";
    out << "\n";
    for (long a = 0; a < nc; ++a) {
        out << g.D[a].first << "," << g.D[a].second;
        for (long b = 0; b < nc; ++b) out << "," << (dual ? g.Uval(a, b) : g.Tval(a, b)).str();
        out << "\n";
    }
    return out.str();
}

}  // namespace atn
