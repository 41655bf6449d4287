#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atn/bispectral.hpp"
#include "atn/johnson.hpp"
#include "atn/scheme.hpp"
#include "atn/spectra.hpp"
#include "atn/structure.hpp"
#include "atn/subconstituent.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

using atn::CheckReport;
using ordered_json = nlohmann::ordered_json;

// exit codes: 0 pass, 1 usage/config error, 2 verification failure, 3 internal error
enum ExitCode { kOk = 0, kUsage = 1, kVerifyFail = 2, kInternal = 3 };

struct Timings {
    bool enabled = true;
    std::vector<std::pair<std::string, double>> entries;

    template <class F>
    auto timed(const std::string& name, F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = f();
        auto t1 = std::chrono::steady_clock::now();
        entries.emplace_back(name, std::chrono::duration<double>(t1 - t0).count());
        return r;
    }
};

ordered_json check_json(const CheckReport& r) {
    ordered_json c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["checked"] = r.checked;
    c["failures"] = r.failures;
    return c;
}

ordered_json axiom_json(const char* name, const atn::AxiomReport& r) {
    ordered_json c;
    c["name"] = name;
    c["pass"] = r.pass;
    c["failures"] = r.failures;
    return c;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

struct ParamsOpt {
    long q = 2, n = 3, ell = 2, m = 2;

    atn::SchemeParams scheme_params() const {
        return atn::SchemeParams{atn::QValue::from_q(q), n, ell, m};
    }
};

void add_param_flags(CLI::App* cmd, ParamsOpt& p) {
    cmd->add_option("-q,--q", p.q, "field size (prime power)");
    cmd->add_option("-n,--n", p.n, "parameter n");
    cmd->add_option("-l,--ell", p.ell, "parameter ell");
    cmd->add_option("-m,--m", p.m, "parameter m");
}

int cmd_build(const ParamsOpt& po, const std::string& out, int threads) {
    atn::SchemeInstance s = atn::build_scheme(po.scheme_params(), threads);
    atn::AxiomReport basic = atn::verify_basic_axioms(s);
    atn::AxiomReport products;
    atn::brute_intersection_numbers(s, &products, threads);
    if (!basic.pass || !products.pass) {
        for (const auto& f : basic.failures) std::cerr << "axiom failure: " << f << "\n";
        for (const auto& f : products.failures) std::cerr << "axiom failure: " << f << "\n";
        return kVerifyFail;
    }
    if (!out.empty()) atn::save_scheme(s, out);
    std::cout << "built scheme q=" << po.q << " n=" << po.n << " ell=" << po.ell << " m=" << po.m
              << ": " << s.size() << " vertices, " << s.D.size() << " classes, axioms verified\n";
    return kOk;
}

int cmd_verify(const std::string& scope, const ParamsOpt& po, const std::string& input,
               std::vector<long> bases, const std::string& out, bool no_timings, int threads) {
    Timings tm;
    tm.enabled = !no_timings;

    atn::SchemeInstance s = input.empty()
                                ? tm.timed("build", [&] { return atn::build_scheme(po.scheme_params(), threads); })
                                : tm.timed("load", [&] { return atn::load_scheme(input); });
    const atn::SchemeParams& sp = s.params;

    ordered_json rep;
    rep["tool"] = "atnscheme";
    rep["version"] = kVersion;
    rep["schema_version"] = kSchemaVersion;
    rep["params"] = {{"q", sp.q.q_long()}, {"n", sp.n}, {"ell", sp.ell}, {"m", sp.m}};
    rep["scope"] = scope;
    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    auto push_check = [&](const ordered_json& c) {
        if (!c.at("pass").get<bool>()) all_pass = false;
        checks.push_back(c);
    };

    atn::AxiomReport basic = tm.timed("axioms_basic", [&] { return atn::verify_basic_axioms(s); });
    push_check(axiom_json("axioms_basic", basic));
    atn::AxiomReport prod_report;
    atn::BruteTensor tensor = tm.timed("axioms_products", [&] {
        return atn::brute_intersection_numbers(s, &prod_report, threads);
    });
    push_check(axiom_json("axioms_products", prod_report));

    atn::EigenGrid grid = atn::compute_grid(sp);
    const long nc = grid.nclasses();

    if (scope == "all" || scope == "spectra") {
        CheckReport val;
        val.name = "valencies";
        for (long c = 0; c < nc; ++c) {
            ++val.checked;
            long v = s.valency[c] < 0 ? 0 : s.valency[c];
            if (grid.Tval(c, 0) != atn::Rational(v))
                val.fail("T(0,0) != brute valency at class " + std::to_string(c));
        }
        push_check(check_json(val));
        push_check(check_json(tm.timed("wilson", [&] { return atn::wilson_duality_check(grid); })));
        push_check(check_json(
            tm.timed("idempotents", [&] { return atn::verify_idempotents(s, grid, tensor); })));
        CheckReport krep;
        tm.timed("brute_krein", [&] { return atn::brute_krein(s, grid, &krep); });
        push_check(check_json(krep));
    }
    if (scope == "all" || scope == "bispectral") {
        push_check(check_json(tm.timed("recurrences", [&] { return atn::verify_recurrences(grid); })));
        push_check(check_json(tm.timed("differences", [&] { return atn::verify_differences(grid); })));
        atn::OperatorQuadruple ops = atn::build_operators(grid);
        push_check(check_json(atn::verify_operator_structure(ops, grid)));
        push_check(check_json(tm.timed("algebra", [&] { return atn::verify_algebra(ops); })));
    }
    // the generator-based theory needs both e1 = (1,0) and e2 = (0,1) in D;
    // degenerate inputs (ell = 0, m = 0, m = n) fall back to the univariate case
    bool generators_in_D = sp.m >= 1 && sp.ell >= 1 && sp.n - sp.m >= 1;
    if ((scope == "all" || scope == "structure") && !generators_in_D) {
        CheckReport skip;
        skip.name = "structure_skipped_degenerate_domain";
        skip.checked = 0;
        push_check(check_json(skip));
    }
    if ((scope == "all" || scope == "structure") && generators_in_D) {
        atn::GeneratorTables pf = atn::intersection_formula(sp);
        atn::GeneratorTables qf = atn::krein_formula(sp);
        atn::GeneratorTables pb = atn::slices_from_brute(sp, s.D, tensor);
        CheckReport krep;
        atn::KreinTensor ktensor = tm.timed("krein_tensor", [&] { return atn::brute_krein(s, grid, &krep); });
        atn::GeneratorTables qb = atn::slices_from_krein(sp, s.D, ktensor);

        CheckReport pcmp;
        pcmp.name = "p_formula_vs_brute";
        for (long a = 0; a < nc * nc; ++a) {
            ++pcmp.checked;
            if (pf.e10[a] != pb.e10[a] || pf.e01[a] != pb.e01[a])
                pcmp.fail("intersection formula != brute at flat index " + std::to_string(a));
        }
        push_check(check_json(pcmp));
        CheckReport qcmp;
        qcmp.name = "q_formula_vs_brute";
        for (long a = 0; a < nc * nc; ++a) {
            ++qcmp.checked;
            if (qf.e10[a] != qb.e10[a] || qf.e01[a] != qb.e01[a])
                qcmp.fail("Krein formula != brute at flat index " + std::to_string(a));
        }
        push_check(check_json(qcmp));

        atn::OrderSpec poP =
            atn::OrderSpec::partial(atn::Rational(0), atn::Rational(1), atn::OrderSpec::Kind::DegLex);
        atn::OrderSpec poQ = atn::OrderSpec::partial(atn::Rational(1), atn::Rational(0),
                                                     atn::OrderSpec::Kind::DegLexPrime);
        atn::CompatReport pcompat = atn::check_compat(pb, poP);
        CheckReport pc;
        pc.name = "P_compatibility";
        pc.pass = pcompat.pass;
        pc.checked = pcompat.checked;
        pc.failures = pcompat.witnesses;
        push_check(check_json(pc));
        atn::CompatReport qcompat = atn::check_compat(qb, poQ);
        CheckReport qc;
        qc.name = "Q_compatibility";
        qc.pass = qcompat.pass;
        qc.checked = qcompat.checked;
        qc.failures = qcompat.witnesses;
        push_check(check_json(qc));
        push_check(check_json(atn::check_sparsity(pb, false)));
        push_check(check_json(atn::check_sparsity(qb, true)));

        std::vector<atn::BivariatePoly> v = atn::bivariate_v(pf);
        std::vector<atn::BivariatePoly> vs = atn::bivariate_v_star(qf);
        push_check(check_json(tm.timed("bivariate", [&] { return atn::verify_bivariate(grid, v, vs); })));
    }
    if ((scope == "all" || scope == "subconstituent") && !generators_in_D) {
        CheckReport skip;
        skip.name = "subconstituent_skipped_degenerate_domain";
        skip.checked = 0;
        push_check(check_json(skip));
    }
    if ((scope == "all" || scope == "subconstituent") && generators_in_D) {
        if (bases.empty())
            bases = {0, s.size() / 2, s.size() - 1};
        CheckReport krep;
        atn::KreinTensor ktensor = atn::brute_krein(s, grid, &krep);
        for (long b : bases) {
            atn::DualPair d = atn::build_dual(s, b);
            std::string tag = "_base" + std::to_string(b);
            auto tagged = [&](CheckReport r) {
                r.name += tag;
                return r;
            };
            push_check(check_json(tagged(tm.timed("dual_invariants" + tag, [&] {
                return atn::verify_dual_invariants(s, grid, d);
            }))));
            push_check(check_json(tagged(tm.timed("lemma_EAE" + tag, [&] {
                return atn::verify_lemma_EAE(s, grid, tensor, ktensor, d);
            }))));
            push_check(check_json(tagged(tm.timed("tridiagonal" + tag, [&] {
                return atn::verify_tridiagonal(s, grid, d);
            }))));
        }
    }
    if (scope == "all" || scope == "johnson") {
        atn::Rational r_j = sp.q.pow(sp.ell) + atn::Rational(1);
        atn::Rational jcount = atn::binomial(sp.n, sp.m) * (r_j - atn::Rational(1)).pow(sp.m);
        if (r_j.is_integer() && jcount <= atn::Rational(5000)) {
            atn::JohnsonParams jp{r_j.to_long(), sp.n, sp.m};
            atn::JohnsonScheme js = atn::enumerate_johnson(jp);
            atn::AxiomReport jb = atn::verify_basic_axioms(js.view());
            push_check(axiom_json("johnson_axioms_basic", jb));
            atn::AxiomReport jprod;
            atn::brute_intersection_numbers(js.view(), &jprod, threads);
            push_check(axiom_json("johnson_axioms_products", jprod));
            atn::EmbedReport er = tm.timed("embedding", [&] { return atn::embedding_phi(s, js); });
            CheckReport einj;
            einj.name = "embedding_injective";
            einj.pass = er.injective;
            einj.checked = er.image_count;
            push_check(check_json(einj));
            CheckReport eweak;
            eweak.name = "embedding_weak_preservation";
            eweak.pass = er.i_always_preserved && er.j_never_increases;
            eweak.checked = er.pairs_checked;
            push_check(check_json(eweak));
            CheckReport ec;
            ec.name = "embedding_full_preservation";
            ec.pass = er.pass;
            ec.checked = er.pairs_checked;
            ec.failures = er.failures;
            push_check(check_json(ec));
        } else {
            CheckReport skip;
            skip.name = "johnson";
            skip.fail("r = q^ell + 1 too large for exhaustive Johnson verification");
            push_check(check_json(skip));
        }
    }

    rep["checks"] = checks;
    rep["pass"] = all_pass;
    if (tm.enabled) {
        ordered_json t = ordered_json::array();
        for (const auto& [name, sec] : tm.entries) t.push_back({{"step", name}, {"seconds", sec}});
        rep["timings"] = t;
    }
    write_out(out, rep.dump(2));
    return all_pass ? kOk : kVerifyFail;
}

ordered_json grid_to_json(const atn::EigenGrid& g, bool dual) {
    ordered_json j;
    j["kind"] = dual ? "dual_eigenvalues" : "eigenvalues";
    ordered_json dom = ordered_json::array();
    for (const auto& [a, b] : g.D) dom.push_back({a, b});
    j["classes"] = dom;
    ordered_json rows = ordered_json::array();
    for (long a = 0; a < g.nclasses(); ++a) {
        ordered_json row = ordered_json::array();
        for (long b = 0; b < g.nclasses(); ++b)
            row.push_back((dual ? g.Uval(a, b) : g.Tval(a, b)).str());
        rows.push_back(std::move(row));
    }
    j["values"] = rows;
    return j;
}

ordered_json slices_to_json(const atn::GeneratorTables& t, const char* label) {
    ordered_json j;
    j["kind"] = label;
    ordered_json dom = ordered_json::array();
    for (const auto& [a, b] : t.D) dom.push_back({a, b});
    j["classes"] = dom;
    auto dump = [&](const std::vector<atn::Rational>& slice) {
        ordered_json rows = ordered_json::array();
        long nc = t.nclasses();
        for (long src = 0; src < nc; ++src) {
            ordered_json row = ordered_json::array();
            for (long tgt = 0; tgt < nc; ++tgt) row.push_back(slice[src * nc + tgt].str());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["e10"] = dump(t.e10);
    j["e01"] = dump(t.e01);
    return j;
}

int cmd_tables(const std::string& kind, const ParamsOpt& po, const std::string& format,
               const std::string& out) {
    atn::SchemeParams sp = po.scheme_params();
    bool json = format == "json";
    if (kind == "eigen" || kind == "dual") {
        atn::EigenGrid g = atn::compute_grid(sp);
        write_out(out, json ? grid_to_json(g, kind == "dual").dump(2)
                            : atn::grid_to_csv(g, kind == "dual"));
        return kOk;
    }
    if (kind == "p" || kind == "q") {
        atn::GeneratorTables t =
            kind == "p" ? atn::intersection_formula(sp) : atn::krein_formula(sp);
        write_out(out, json ? slices_to_json(t, kind == "p" ? "p" : "q").dump(2)
                            : atn::tables_to_csv(t, kind == "p" ? "p" : "q"));
        return kOk;
    }
    if (kind == "operators") {
        atn::EigenGrid g = atn::compute_grid(sp);
        atn::OperatorQuadruple ops = atn::build_operators(g);
        std::vector<atn::CheckReport> reports = {atn::verify_operator_structure(ops, g),
                                                 atn::verify_algebra(ops)};
        write_out(out, atn::operators_to_json(ops, reports));
        return kOk;
    }
    if (kind == "v" || kind == "vstar") {
        if (kind == "v") {
            auto v = atn::bivariate_v(atn::intersection_formula(sp));
            write_out(out, atn::polys_to_json(atn::attenuated_domain(sp.n, sp.ell, sp.m), v,
                                              "T10", "T01"));
        } else {
            auto v = atn::bivariate_v_star(atn::krein_formula(sp));
            write_out(out, atn::polys_to_json(atn::attenuated_domain(sp.n, sp.ell, sp.m), v,
                                              "U10", "U01"));
        }
        return kOk;
    }
    std::cerr << "unknown table kind " << kind << "\n";
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact association schemes on attenuated spaces"};
    app.require_subcommand(1);

    ParamsOpt po;
    std::string out, input, scope = "all", kind = "eigen", format = "csv";
    std::vector<long> bases;
    bool no_timings = false;
    int threads = 0;

    auto* build = app.add_subcommand("build", "construct a scheme, verify axioms, serialize");
    add_param_flags(build, po);
    build->add_option("-o,--out", out, "output scheme file (JSON)");
    build->add_option("--threads", threads, "worker threads (1 = serial reference)");

    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    add_param_flags(verify, po);
    verify->add_option("--scope", scope,
                       "all|spectra|bispectral|structure|subconstituent|johnson");
    verify->add_option("-i,--input", input, "scheme file to load instead of building");
    verify->add_option("--bases", bases, "base vertices for subconstituent checks");
    verify->add_option("-o,--out", out, "report file (default stdout)");
    verify->add_flag("--no-timings", no_timings, "omit wall-clock timings for byte-stable output");
    verify->add_option("--threads", threads, "worker threads");

    auto* tables = app.add_subcommand("tables", "emit exact tables");
    add_param_flags(tables, po);
    tables->add_option("--kind", kind, "eigen|dual|p|q|v|vstar|operators");
    tables->add_option("--format", format, "csv|json (kind-dependent default)");
    tables->add_option("-o,--out", out, "output file (default stdout)");

    long lp = 2, lr = 3, ln = 3, lm = 2;
    int kmin = 4, kmax = 20;
    long prec = 256;
    auto* limit = app.add_subcommand("limit", "q->1 limit convergence report");
    limit->add_option("-p,--p", lp, "prime p");
    limit->add_option("-r,--r", lr, "Johnson alphabet size");
    limit->add_option("-n,--n", ln, "parameter n");
    limit->add_option("-m,--m", lm, "parameter m");
    limit->add_option("--kmin", kmin, "first dyadic exponent (h = 2^-k)");
    limit->add_option("--kmax", kmax, "last dyadic exponent");
    limit->add_option("--prec", prec, "mantissa precision in bits");
    limit->add_option("-o,--out", out, "report file (default stdout)");

    auto* embed = app.add_subcommand("embed", "verify the Johnson embedding (r = q^ell + 1)");
    add_param_flags(embed, po);
    embed->add_option("-o,--out", out, "report file (default stdout)");
    embed->add_option("--threads", threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(po, out, threads);
        if (verify->parsed()) return cmd_verify(scope, po, input, bases, out, no_timings, threads);
        if (tables->parsed()) return cmd_tables(kind, po, format, out);
        if (limit->parsed()) {
            atn::LimitConfig cfg{lp, lr, kmin, kmax, prec};
            atn::LimitReport rep = atn::limit_check(cfg, ln, lm);
            write_out(out, atn::limit_report_json(rep, cfg, ln, lm));
            return rep.pass ? kOk : kVerifyFail;
        }
        if (embed->parsed()) {
            atn::SchemeParams sp = po.scheme_params();
            atn::SchemeInstance s = atn::build_scheme(sp, threads);
            atn::Rational r_j = sp.q.pow(sp.ell) + atn::Rational(1);
            atn::JohnsonParams jp{r_j.to_long(), sp.n, sp.m};
            atn::JohnsonScheme js = atn::enumerate_johnson(jp);
            atn::EmbedReport er = atn::embedding_phi(s, js);
            ordered_json j;
            j["pass"] = er.pass;
            j["images"] = er.image_count;
            j["pairs_checked"] = er.pairs_checked;
            j["failures"] = er.failures;
            write_out(out, j.dump(2));
            return er.pass ? kOk : kVerifyFail;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
