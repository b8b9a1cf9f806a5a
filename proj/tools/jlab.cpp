// jlab: exact extremal computations on generalized Johnson graphs J(n,k,L).
//
// Output contract: results are single-line JSON on stdout (keys sorted,
// rationals as "p/q" strings, big integers as strings once they leave
// int64 range), families in the repo-wide family text format, tables as
// RFC-4180 CSV. Errors are single-line JSON on stderr. Exit codes:
// 0 success, 2 validation/usage, 3 budget refusal, 4 internal error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jlab/dense_check.hpp"
#include "jlab/emit.hpp"
#include "jlab/errors.hpp"
#include "jlab/extremal.hpp"
#include "jlab/family.hpp"
#include "jlab/johnson.hpp"
#include "jlab/kset.hpp"
#include "jlab/lp.hpp"
#include "jlab/rational.hpp"
#include "jlab/search.hpp"
#include "jlab/spectra.hpp"
#include "jlab/supersat.hpp"

namespace {

using jlab::BigInt;
using jlab::BigRat;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

json big_json(const BigInt& v) {
    if (jlab::fits_int64(v)) return json(jlab::to_int64(v));
    return json(v.str());
}

json rat_json(const BigRat& r) { return json(jlab::rat_to_string(r)); }

json family_json(const jlab::SetFamily& f) {
    json arr = json::array();
    for (const auto& s : f.sets()) arr.push_back(s.elements());
    return arr;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void emit_family(const jlab::SetFamily& f, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << jlab::family_to_string(f);
        return;
    }
    jlab::write_family_file(out_path, f);
    emit(json{{"k", f.k()}, {"n", f.n()}, {"out", out_path}, {"size", f.size()}});
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join_semicolon(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i]);
    }
    return out;
}

int env_threads() {
    const char* env = std::getenv("JLAB_THREADS");
    if (!env) return 1;
    std::string s(env);
    int v = 0;
    try {
        std::size_t pos = 0;
        v = std::stoi(s, &pos);
        jlab::require(pos == s.size(), "JLAB_THREADS must be a positive integer");
    } catch (const jlab::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw jlab::ValidationError("JLAB_THREADS must be a positive integer");
    }
    jlab::require(v >= 1, "JLAB_THREADS must be a positive integer");
    return v;
}

struct GlobalOpts {
    std::uint64_t node_budget = 10'000'000;
    std::uint64_t vertex_budget = 10'000;
    int threads = 1;

    jlab::SearchOptions search(bool enumerate_all = false) const {
        jlab::SearchOptions o;
        o.node_budget = node_budget;
        o.vertex_budget = vertex_budget;
        o.enumerate_all = enumerate_all;
        return o;
    }
};

const char* kind_str(jlab::CocliqueKind k) {
    switch (k) {
        case jlab::CocliqueKind::TwoStar: return "two_star";
        case jlab::CocliqueKind::FranklR1: return "frankl_r1";
        case jlab::CocliqueKind::Other: return "other";
    }
    return "other";
}

const char* verdict_str(jlab::RefinementVerdict v) {
    switch (v) {
        case jlab::RefinementVerdict::Consistent: return "consistent";
        case jlab::RefinementVerdict::Contradiction: return "contradiction";
        case jlab::RefinementVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

json search_json(const jlab::SearchResult& r, const char* key, bool all_witnesses) {
    json out{{"L", r.spec.L()},
             {"k", r.spec.k()},
             {"n", r.spec.n()},
             {key, big_json(r.optimum)},
             {"nodes", r.nodes_explored},
             {"wall_ms", r.wall_ms},
             {"witness_count", r.witnesses.size()},
             {"witnesses_truncated", r.witnesses_truncated}};
    if (all_witnesses) {
        json ws = json::array();
        for (const auto& w : r.witnesses) ws.push_back(family_json(w));
        out["witnesses"] = ws;
    } else {
        out["witness"] = family_json(r.witnesses.front());
    }
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    jlab::require(f.is_open(), "cannot open output file: " + path);
    return f;
}

void build_cli(CLI::App& app, GlobalOpts& g) {
    app.add_option("--budget", g.node_budget, "search node budget before refusal")
        ->capture_default_str();
    app.add_option("--vertex-budget", g.vertex_budget,
                   "largest C(n,k) a search will materialize")
        ->capture_default_str();
    app.add_option("--threads", g.threads,
                   "worker cap (reserved; searches run sequentially for "
                   "reproducible node counts)")
        ->check(CLI::PositiveNumber);

    // graph ----------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "graph-level queries");
    graph->require_subcommand(1);
    graph->fallthrough();
    {
        struct A {
            int n = 0, k = 0;
            std::vector<int> L;
        };
        auto a = std::make_shared<A>();
        auto* c = graph->add_subcommand("info", "order, valency, edge count of J(n,k,L)");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--L", a->L, "intersection sizes, comma separated")->delimiter(',');
        c->callback([a] {
            jlab::JohnsonSpec spec(a->n, a->k, a->L);
            BigInt v = spec.vertex_count();
            BigInt deg = jlab::degree(spec);
            emit(json{{"L", spec.L()},
                      {"complement_L", spec.complement().L()},
                      {"degree", big_json(deg)},
                      {"edges", big_json(v * deg / 2)},
                      {"k", spec.k()},
                      {"n", spec.n()},
                      {"vertices", big_json(v)}});
        });
    }

    // spectrum ---------------------------------------------------------------
    {
        struct A {
            int n = 0, k = 0;
            std::vector<int> L;
            bool check_dense = false;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand("spectrum", "exact adjacency spectrum of J(n,k,L)");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--L", a->L, "intersection sizes, comma separated")->delimiter(',');
        c->add_flag("--check-dense", a->check_dense,
                    "cross-check against a dense floating-point eigensolve");
        c->callback([a] {
            jlab::JohnsonSpec spec(a->n, a->k, a->L);
            jlab::SchemeMatrix m = jlab::adjacency_matrix(spec);
            auto thetas = jlab::scheme_eigenvalues(m);
            json tarr = json::array();
            for (std::size_t j = 0; j < thetas.size(); ++j) {
                tarr.push_back(json{{"j", j},
                                    {"mult", big_json(thetas[j].second)},
                                    {"value", rat_json(thetas[j].first)}});
            }
            json out{{"L", spec.L()}, {"k", spec.k()}, {"n", spec.n()}, {"theta", tarr}};
            if (spec.k() == 3 && spec.L() == std::vector<int>{1} && spec.n() >= 7) {
                jlab::SpectrumN31 s = jlab::spectrum_j_n3_1(spec.n());
                json lam = json::array(), mu = json::array();
                for (const auto& l : s.lambda) lam.push_back(rat_json(l));
                for (const auto& m2 : s.mult) mu.push_back(big_json(m2));
                out["closed_form"] = json{{"lambda", lam}, {"mult", mu}};
            }
            if (a->check_dense) {
                jlab::DenseSpectrumCheck chk = jlab::dense_spectrum_check(m);
                json dj{{"clusters", chk.clusters}, {"match", chk.match}};
                if (!chk.match) dj["detail"] = chk.detail;
                out["dense"] = dj;
            }
            emit(out);
        });
    }

    // family -----------------------------------------------------------------
    auto* family = app.add_subcommand("family", "construct and verify set families");
    family->require_subcommand(1);
    family->fallthrough();
    {
        struct A {
            int n = 0, k = 0, t = 0, r = 0;
            std::string out;
        };
        auto a = std::make_shared<A>();
        auto* c = family->add_subcommand(
            "frankl", "the t-intersecting family {S : |S intersect [t+2r]| >= t+r}");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--t", a->t, "intersection threshold")->required();
        c->add_option("--r", a->r, "window parameter")->required();
        c->add_option("--out", a->out, "write to file instead of stdout");
        c->callback([a] {
            emit_family(jlab::frankl_family(jlab::FranklParams(a->n, a->k, a->t, a->r)),
                        a->out);
        });
    }
    {
        struct A {
            int n = 0, k = 0;
            std::vector<int> t_set;
            std::string out;
        };
        auto a = std::make_shared<A>();
        auto* c = family->add_subcommand("star", "all k-sets containing a fixed core");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--core", a->t_set, "core elements, comma separated")
            ->required()
            ->delimiter(',');
        c->add_option("--out", a->out, "write to file instead of stdout");
        c->callback([a] { emit_family(jlab::star(a->n, a->k, a->t_set), a->out); });
    }
    {
        struct A {
            int q = 0;
            std::string out;
        };
        auto a = std::make_shared<A>();
        auto* c = family->add_subcommand("plane", "lines of PG(2,q), prime q");
        c->fallthrough();
        c->add_option("--q", a->q, "prime order")->required();
        c->add_option("--out", a->out, "write to file instead of stdout");
        c->callback([a] { emit_family(jlab::projective_plane(a->q), a->out); });
    }
    {
        struct A {
            std::string out;
        };
        auto a = std::make_shared<A>();
        auto* c = family->add_subcommand("sts9", "the 12 lines of AG(2,3), an S(2,3,9)");
        c->fallthrough();
        c->add_option("--out", a->out, "write to file instead of stdout");
        c->callback([a] { emit_family(jlab::sts9(), a->out); });
    }
    {
        struct A {
            int t = 0;
            std::string file;
        };
        auto a = std::make_shared<A>();
        auto* c = family->add_subcommand("verify-steiner",
                                         "check a family file for the S(t,k,n) property");
        c->fallthrough();
        c->add_option("--t", a->t, "cover size t")->required();
        c->add_option("--file", a->file, "family file path")->required();
        c->callback([a] {
            jlab::SetFamily f = jlab::read_family_file(a->file);
            emit(json{{"blocks", f.size()},
                      {"divisibility", jlab::steiner_divisibility(f.n(), f.k(), a->t)},
                      {"file", a->file},
                      {"k", f.k()},
                      {"n", f.n()},
                      {"steiner", jlab::steiner_verify(f, a->t)},
                      {"t", a->t}});
        });
    }

    // def-bound ----------------------------------------------------------------
    {
        struct A {
            int n = 0, k = 0;
            std::vector<int> L;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand(
            "def-bound", "clique bound prod_{l in L} (n-l)/(k-l) with applicability flags");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--L", a->L, "intersection sizes, comma separated")
            ->required()
            ->delimiter(',');
        c->callback([a] {
            BigRat b = jlab::def_bound(a->n, a->k, a->L);
            emit(json{{"L", a->L},
                      {"asymptotic_only", jlab::def_asymptotic_only(a->n, a->k)},
                      {"bound", rat_json(b)},
                      {"chain_holds", jlab::def_chain_holds(a->k, a->L)},
                      {"floor", big_json(jlab::floor_rat(b))},
                      {"k", a->k},
                      {"n", a->n},
                      {"threshold",
                       big_json(jlab::def_threshold(a->n, a->k, static_cast<int>(a->L.size())))}});
        });
    }

    // alpha / omega --------------------------------------------------------------
    auto add_search_cmd = [&app, &g](const char* name, const char* help, bool coclique) {
        struct A {
            int n = 0, k = 0;
            std::vector<int> L;
            bool all = false;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand(name, help);
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--L", a->L, "intersection sizes, comma separated")->delimiter(',');
        c->add_flag("--all-witnesses", a->all, "enumerate every optimal solution");
        std::string key(name);
        c->callback([a, &g, coclique, key] {
            jlab::JohnsonSpec spec(a->n, a->k, a->L);
            jlab::SearchResult r = coclique ? jlab::max_coclique(spec, g.search(a->all))
                                            : jlab::max_clique(spec, g.search(a->all));
            emit(search_json(r, key.c_str(), a->all));
        });
    };
    add_search_cmd("alpha", "exact maximum coclique of J(n,k,L)", true);
    add_search_cmd("omega", "exact maximum clique of J(n,k,L)", false);

    // clique-coclique ---------------------------------------------------------------
    {
        struct A {
            int n = 0, k = 0;
            std::vector<int> L;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand("clique-coclique",
                                     "alpha, omega, and the product bound alpha*omega <= C(n,k)");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--L", a->L, "intersection sizes, comma separated")->delimiter(',');
        c->callback([a, &g] {
            jlab::JohnsonSpec spec(a->n, a->k, a->L);
            jlab::SearchResult rc = jlab::max_clique(spec, g.search());
            jlab::SearchResult ri = jlab::max_coclique(spec, g.search());
            BigInt product = rc.optimum * ri.optimum;
            BigInt vertices = spec.vertex_count();
            jlab::ensure(product <= vertices, "clique-coclique product exceeds C(n,k)");
            emit(json{{"L", spec.L()},
                      {"alpha", big_json(ri.optimum)},
                      {"equality", product == vertices},
                      {"k", spec.k()},
                      {"n", spec.n()},
                      {"nodes", rc.nodes_explored + ri.nodes_explored},
                      {"omega", big_json(rc.optimum)},
                      {"product", big_json(product)},
                      {"vertices", big_json(vertices)}});
        });
    }

    // scan-equality -------------------------------------------------------------------
    {
        struct A {
            int k = 0, n_from = 0, n_to = 0;
            std::string out;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand(
            "scan-equality", "alpha*omega = C(n,k) scan over all proper L, CSV output");
        c->fallthrough();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--n-from", a->n_from, "first ground set size")->required();
        c->add_option("--n-to", a->n_to, "last ground set size")->required();
        c->add_option("--out", a->out, "write CSV to file and a summary to stdout");
        c->callback([a, &g] {
            jlab::ScanReport rep = jlab::scan_equality(a->k, a->n_from, a->n_to, g.search());
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!a->out.empty()) {
                file = open_out(a->out);
                os = &file;
            }
            *os << jlab::csv_line({"n", "k", "L", "vertices", "alpha", "omega", "product",
                                   "equality", "prefix_form", "flagged_exception", "refusal"});
            std::uint64_t flagged = 0, refused = 0;
            for (const auto& row : rep.rows) {
                if (row.flagged_exception) ++flagged;
                if (!row.completed) ++refused;
                *os << jlab::csv_line(
                    {std::to_string(row.n), std::to_string(row.k), join_semicolon(row.L),
                     row.vertices.str(), row.completed ? row.alpha.str() : "",
                     row.completed ? row.omega.str() : "",
                     row.completed ? row.product.str() : "",
                     row.completed ? bool_str(row.equality) : "",
                     row.completed ? bool_str(row.prefix_form) : "",
                     row.completed ? bool_str(row.flagged_exception) : "", row.refusal});
            }
            if (!a->out.empty()) {
                emit(json{{"flagged_exceptions", flagged},
                          {"k", a->k},
                          {"n_from", a->n_from},
                          {"n_to", a->n_to},
                          {"out", a->out},
                          {"refused", refused},
                          {"rows", rep.rows.size()}});
            }
        });
    }

    // classify-cocliques -----------------------------------------------------------------
    {
        struct A {
            int n = 0, k = 3;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand(
            "classify-cocliques", "enumerate and classify all maximum cocliques of J(n,k,{1})");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->capture_default_str();
        c->callback([a, &g] {
            jlab::JohnsonSpec spec(a->n, a->k, {1});
            jlab::CocliqueClassification cl = jlab::classify_max_cocliques(spec, g.search(true));
            json verdicts = json::array();
            for (const auto& v : cl.verdicts) {
                verdicts.push_back(json{{"core", v.core}, {"kind", kind_str(v.kind)}});
            }
            emit(json{{"alpha", big_json(cl.alpha)},
                      {"counts",
                       json{{"frankl_r1", cl.count_frankl_r1},
                            {"other", cl.count_other},
                            {"two_star", cl.count_two_star}}},
                      {"k", a->k},
                      {"n", a->n},
                      {"truncated", cl.truncated},
                      {"verdicts", verdicts},
                      {"witness_count", cl.witnesses.size()}});
        });
    }

    // lp-bound ------------------------------------------------------------------
    {
        struct A {
            int n = 0, k = 0;
            std::vector<int> L;
            std::optional<int> probe_class;
            bool with_alpha = false;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand("lp-bound",
                                     "eigenvalue certificate upper bound for alpha(J(n,k,L))");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--L", a->L, "intersection sizes, comma separated")
            ->required()
            ->delimiter(',');
        c->add_option("--probe-class", a->probe_class,
                      "re-solve with that coefficient strictly above 1");
        c->add_flag("--with-alpha", a->with_alpha,
                    "also run the exact search and report soundness");
        c->callback([a, &g] {
            jlab::JohnsonSpec spec(a->n, a->k, a->L);
            jlab::RatioCertificate cert = jlab::ratio_lp_bound(spec);
            json xs = json::array(), ts = json::array();
            for (const auto& x : cert.coeffs.coeffs) xs.push_back(rat_json(x));
            for (const auto& t : cert.theta) ts.push_back(rat_json(t));
            json out{{"L", spec.L()},
                     {"bound", rat_json(cert.bound)},
                     {"floor", big_json(jlab::certificate_alpha_bound(cert))},
                     {"k", spec.k()},
                     {"n", spec.n()},
                     {"strict_classes", cert.strict_classes},
                     {"theta", ts},
                     {"x", xs}};
            if (a->probe_class) {
                jlab::StrictnessProbe p = jlab::strictness_probe_class(spec, *a->probe_class);
                out["probe"] = json{{"achievable", p.achievable},
                                    {"base", rat_json(p.base_bound)},
                                    {"bound", rat_json(p.probe_bound)},
                                    {"class", p.cls}};
            }
            if (a->with_alpha) {
                try {
                    jlab::SearchResult r = jlab::max_coclique(spec, g.search());
                    out["alpha"] = big_json(r.optimum);
                    out["sound"] = jlab::certificate_alpha_bound(cert) >= r.optimum;
                } catch (const jlab::BudgetExceeded& e) {
                    out["alpha"] = nullptr;
                    out["alpha_refusal"] = e.what();
                }
            }
            emit(out);
        });
    }

    // lp-refine ------------------------------------------------------------------
    {
        struct A {
            int n = 0, k = 0;
            std::vector<int> L;
        };
        auto a = std::make_shared<A>();
        auto* c = app.add_subcommand(
            "lp-refine",
            "strictness refinement over all maximum cocliques (needs bound = alpha)");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--k", a->k, "subset size")->required();
        c->add_option("--L", a->L, "intersection sizes, comma separated")
            ->required()
            ->delimiter(',');
        c->callback([a, &g] {
            jlab::JohnsonSpec spec(a->n, a->k, a->L);
            jlab::RatioCertificate cert = jlab::ratio_lp_bound(spec);
            jlab::SearchResult r = jlab::max_coclique(spec, g.search(true));
            jlab::StrictnessReport rep = jlab::strictness_refinement(cert, r.witnesses);
            std::uint64_t contradictions = 0;
            for (const auto& w : rep.witnesses)
                if (w.contradiction) ++contradictions;
            emit(json{{"L", spec.L()},
                      {"alpha", big_json(r.optimum)},
                      {"bound", rat_json(cert.bound)},
                      {"contradictions", contradictions},
                      {"k", spec.k()},
                      {"n", spec.n()},
                      {"strict_at_class0", rep.strict_at_class0},
                      {"verdict", verdict_str(rep.verdict)},
                      {"witness_count", r.witnesses.size()},
                      {"witnesses_truncated", r.witnesses_truncated}});
        });
    }

    // supersat ------------------------------------------------------------------
    auto* supersat = app.add_subcommand("supersat", "edge supersaturation in J(n,3,{1})");
    supersat->require_subcommand(1);
    supersat->fallthrough();
    {
        struct A {
            int n = 0;
            std::uint64_t size = 0;
        };
        auto a = std::make_shared<A>();
        auto* c = supersat->add_subcommand("bound",
                                           "spectral lower bound on induced edges");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--size", a->size, "subset size |U|")->required();
        c->callback([a] {
            emit(json{{"bound", rat_json(jlab::spectral_edge_lower_bound(a->n, BigInt(a->size)))},
                      {"n", a->n},
                      {"size", a->size},
                      {"vertices", big_json(jlab::binomial(a->n, 3))}});
        });
    }
    {
        struct A {
            std::string c_str;
        };
        auto a = std::make_shared<A>();
        auto* c = supersat->add_subcommand(
            "coeff", "asymptotic n^3 coefficient max(0, 9c^2/2 - c) for |U| = c*n^2");
        c->fallthrough();
        c->add_option("--c", a->c_str, "density as a rational, e.g. 1/2")->required();
        c->callback([a] {
            BigRat cval = jlab::rat_from_string(a->c_str);
            jlab::AsymptoticCoefficient ac = jlab::asymptotic_coefficient(cval);
            emit(json{{"c", rat_json(cval)},
                      {"coefficient", rat_json(ac.value)},
                      {"vacuous", ac.vacuous}});
        });
    }
    {
        struct A {
            int n = 0;
            std::string c_str;
            std::uint64_t trials = 100;
            std::uint64_t seed = 1;
            std::string sampler = "uniform";
            std::string out;
        };
        auto a = std::make_shared<A>();
        auto* c = supersat->add_subcommand(
            "sample", "per-subset bound checks over sampled subsets, CSV to --out");
        c->fallthrough();
        c->add_option("--n", a->n, "ground set size")->required();
        c->add_option("--c", a->c_str, "density: |U| = floor(c*n^2)")->required();
        c->add_option("--trials", a->trials, "number of subsets")->capture_default_str();
        c->add_option("--seed", a->seed, "base seed")->capture_default_str();
        c->add_option("--sampler", a->sampler, "uniform or greedy-dense")
            ->check(CLI::IsMember({"uniform", "greedy-dense"}))
            ->capture_default_str();
        c->add_option("--out", a->out, "CSV output path")->required();
        c->callback([a] {
            jlab::Sampler sm = a->sampler == "uniform" ? jlab::Sampler::Uniform
                                                       : jlab::Sampler::GreedyDense;
            jlab::SampleReport rep = jlab::sample_experiment(
                a->n, jlab::rat_from_string(a->c_str), a->trials, a->seed, sm);
            std::ofstream f = open_out(a->out);
            f << jlab::csv_line({"trial", "size", "edges", "bound_num", "bound_den", "holds"});
            bool all_hold = true;
            for (const auto& row : rep.rows) {
                all_hold = all_hold && row.holds;
                f << jlab::csv_line({std::to_string(row.trial), std::to_string(row.size),
                                     std::to_string(row.edges), jlab::rat_num(row.bound).str(),
                                     jlab::rat_den(row.bound).str(), bool_str(row.holds)});
            }
            bool have_ratio = rep.trials > rep.rows_with_zero_bound;
            emit(json{{"c", rat_json(rep.c)},
                      {"holds_all", all_hold},
                      {"n", rep.n},
                      {"out", a->out},
                      {"ratio_mean", have_ratio ? rat_json(rep.ratio_mean) : json(nullptr)},
                      {"ratio_min", have_ratio ? rat_json(rep.ratio_min) : json(nullptr)},
                      {"rows_with_zero_bound", rep.rows_with_zero_bound},
                      {"sampler", a->sampler},
                      {"seed", rep.seed},
                      {"trials", rep.trials}});
        });
    }
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"exact extremal computations on generalized Johnson graphs J(n,k,L)"};
    app.set_version_flag("--version", std::string("jlab ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    try {
        g.threads = env_threads();
        build_cli(app, g);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        std::cerr << json{{"error", std::string(e.what())}, {"kind", "usage"}}.dump() << '\n';
        return 2;
    } catch (const jlab::ValidationError& e) {
        std::cerr << json{{"error", std::string(e.what())}, {"kind", "validation"}}.dump()
                  << '\n';
        return 2;
    } catch (const jlab::BudgetExceeded& e) {
        std::cerr << json{{"error", std::string(e.what())}, {"kind", "budget"}}.dump() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", std::string(e.what())}, {"kind", "internal"}}.dump() << '\n';
        return 4;
    }
    return 0;
}
