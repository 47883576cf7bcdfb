// gon: geometry-of-numbers toolkit CLI.
// Subcommands: stability, reduce, covrad, mordell, minkowski, measure, orbit.
// Every report embeds the tool version, command, parameters, seed, and rng id
// so identical invocations produce byte-identical output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gon/json_io.hpp"

using namespace gon;

namespace {

struct GlobalOpts {
    std::string out_path;
    std::string gamma_path;
    std::uint64_t seed = 1;
    std::string format = "pretty";
};

json make_meta(const std::string& command, const GlobalOpts& g, json params) {
    json meta;
    meta["tool"] = kToolName;
    meta["version"] = kToolVersion;
    meta["command"] = command;
    meta["seed"] = g.seed;
    meta["rng"] = kRngId;
    meta["params"] = std::move(params);
    if (!g.gamma_path.empty()) meta["gamma_table"] = g.gamma_path;
    return meta;
}

void emit(const GlobalOpts& g, const std::string& command, json params, json result) {
    json out;
    out["meta"] = make_meta(command, g, std::move(params));
    out["result"] = std::move(result);
    std::string text = g.format == "json" ? out.dump() : out.dump(2);
    text += "\n";
    if (g.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(g.out_path);
        if (!f) throw ValidationError("cannot write output file: " + g.out_path);
        f << text;
    }
}

GammaTable load_gammas(const GlobalOpts& g) {
    if (g.gamma_path.empty()) return GammaTable::exact_defaults();
    return gamma_table_from_file(g.gamma_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometry-of-numbers toolkit: lattice stability, KZ profiles, "
                 "covering radii, Mordell constants, covering verification, and "
                 "Monte Carlo measure estimates"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master seed for randomized runs");
    app.add_option("--out", g.out_path, "write the JSON report to this file");
    app.add_option("--gamma-table", g.gamma_path, "JSON table of shortest-vector bounds");
    app.add_option("--format", g.format, "output format: pretty (default) or json")
        ->check(CLI::IsMember({"pretty", "json"}));

    int exit_code = 0;

    // ---- stability ----
    auto* stab = app.add_subcommand("stability", "alpha invariants and the stability verdict");
    std::string stab_in;
    bool stab_filtration = false;
    double stab_delta = 0.0;
    stab->add_option("--in", stab_in, "lattice JSON file")->required();
    stab->add_flag("--filtration", stab_filtration, "include the canonical flag");
    stab->add_option("--min-delta", stab_delta, "also report the delta-span at this delta");
    stab->callback([&]() {
        Lattice x = lattice_from_file(stab_in);
        GammaTable gt = load_gammas(g);
        StabilityReport rep = alpha(x, gt);
        json result = stability_to_json(rep);
        if (stab_filtration) {
            json flag = json::array();
            for (const auto& w : canonical_filtration(x, gt)) flag.push_back(witness_to_json(w));
            result["filtration"] = std::move(flag);
        }
        if (stab_delta > 0.0) {
            DeltaSpan ds = min_delta(x, stab_delta, gt);
            json sd;
            sd["delta"] = ds.delta;
            sd["dimension"] = ds.dimension;
            sd["span_basis"] = mat_to_json(ds.span_basis);
            sd["members"] = ds.members.size();
            result["delta_span"] = std::move(sd);
        }
        emit(g, "stability", {{"in", stab_in}}, std::move(result));
    });

    // ---- reduce ----
    auto* red = app.add_subcommand("reduce", "LLL and Korkine-Zolotarev reduction");
    std::string red_in;
    bool red_lll_only = false;
    double red_delta = 0.99;
    red->add_option("--in", red_in, "lattice JSON file")->required();
    red->add_flag("--lll-only", red_lll_only, "stop after LLL");
    red->add_option("--delta", red_delta, "LLL parameter in (0.25, 1)");
    red->callback([&]() {
        Lattice x = lattice_from_file(red_in);
        json result;
        if (red_lll_only) {
            Lattice r = lll_reduce(x, red_delta);
            result["lll_basis"] = mat_to_json(r.basis);
        } else {
            KZProfile p = kz_reduce(x);
            result = kz_to_json(p);
            ShortestVector sv = shortest_vector(x);
            result["shortest_length"] = checked_finite(sv.length);
        }
        emit(g, "reduce", {{"in", red_in}, {"delta", red_delta}}, std::move(result));
    });

    // ---- covrad ----
    auto* cov = app.add_subcommand("covrad", "certified covering radius");
    std::string cov_in;
    double cov_tol = 1e-4;
    cov->add_option("--in", cov_in, "lattice JSON file")->required();
    cov->add_option("--tol", cov_tol, "two-sided gap target (>= 1e-6)");
    cov->callback([&]() {
        Lattice x = lattice_from_file(cov_in);
        CoveringRadius cr = covering_radius(x, cov_tol);
        json result = covrad_to_json(cr);
        result["product_form_bound"] =
            checked_finite(std::pow(cr.value * cr.value / static_cast<double>(x.dim),
                            0.5 * static_cast<double>(x.dim)));
        emit(g, "covrad", {{"in", cov_in}, {"tol", cov_tol}}, std::move(result));
    });

    // ---- mordell ----
    auto* mord = app.add_subcommand("mordell", "admissible boxes and Mordell bounds");
    auto* mord_kappa = mord->add_subcommand("kappa", "certified lower estimate of kappa(x)");
    std::string mk_in;
    std::uint64_t mk_budget = 400;
    mord_kappa->add_option("--in", mk_in, "lattice JSON file")->required();
    mord_kappa->add_option("--budget", mk_budget, "search budget (enumeration rounds)");
    mord_kappa->callback([&]() {
        Lattice x = lattice_from_file(mk_in);
        KappaEstimate e = kappa_lower_estimate(x, mk_budget, g.seed);
        emit(g, "mordell kappa", {{"in", mk_in}, {"budget", mk_budget}}, kappa_to_json(e));
    });
    auto* mord_bounds = mord->add_subcommand("bounds", "closed-form lower bounds for kappa_n");
    int mb_dim = 0;
    mord_bounds->add_option("--dim", mb_dim, "dimension n >= 2")->required();
    mord_bounds->callback([&]() {
        emit(g, "mordell bounds", {{"dim", mb_dim}}, kappa_bounds_to_json(kappa_n_bounds(mb_dim)));
    });

    // ---- minkowski ----
    auto* mink = app.add_subcommand("minkowski", "covering-condition verification");
    auto* mink_verify = mink->add_subcommand("verify", "branch-and-bound covering certificate");
    int mv_dim = 2;
    double mv_width = 1e-3;
    double mv_deadline = 0.0;
    std::string mv_variant = "standard";
    mink_verify->add_option("--dim", mv_dim, "dimension (<= 7)")->required();
    mink_verify->add_option("--min-width", mv_width, "refinement floor for box widths");
    mink_verify->add_option("--deadline", mv_deadline, "wall-clock budget in seconds (0 = none)");
    mink_verify->add_option("--variant", mv_variant,
                            "bound reading: standard (default) or alternate")
        ->check(CLI::IsMember({"standard", "alternate"}));
    mink_verify->callback([&]() {
        GammaTable gt = load_gammas(g);
        CoverCertificate cert =
            verify_cover(mv_dim, mv_width, gt, mv_deadline, mv_variant == "alternate");
        emit(g, "minkowski verify",
             {{"dim", mv_dim}, {"min_width", mv_width}, {"variant", mv_variant}},
             certificate_to_json(cert));
        if (cert.deadline_hit) exit_code = 3;
    });
    auto* mink_check = mink->add_subcommand("check-cert", "re-validate a certificate by sampling");
    std::string mc_path;
    std::size_t mc_samples = 10000;
    double mc_exact = 0.01;
    mink_check->add_option("cert", mc_path, "certificate JSON file")->required();
    mink_check->add_option("--samples", mc_samples, "points per covered leaf");
    mink_check->add_option("--exact-fraction", mc_exact,
                           "fraction of covered leaves re-checked in exact arithmetic");
    mink_check->callback([&]() {
        CoverCertificate cert = certificate_from_file(mc_path);
        GammaTable gt = load_gammas(g);
        CertCheckReport rep = check_certificate(cert, gt, mc_samples, g.seed, mc_exact);
        emit(g, "minkowski check-cert", {{"cert", mc_path}, {"samples", mc_samples}},
             cert_check_to_json(rep));
        if (!rep.ok()) exit_code = 2;
    });

    // ---- measure ----
    auto* meas = app.add_subcommand("measure", "random lattices and measure estimates");
    auto* meas_sf = meas->add_subcommand("stable-fraction", "Monte Carlo stable fraction");
    std::size_t sf_dim = 2;
    std::uint64_t sf_samples = 10000;
    meas_sf->add_option("--dim", sf_dim, "dimension")->required();
    meas_sf->add_option("--samples", sf_samples, "sample count");
    meas_sf->callback([&]() {
        StableFractionReport rep = estimate_stable_fraction(sf_dim, sf_samples, g.seed);
        emit(g, "measure stable-fraction", {{"dim", sf_dim}, {"samples", sf_samples}},
             stable_fraction_to_json(rep));
    });
    auto* meas_sg = meas->add_subcommand("siegel-check", "primitive-vector counting check (2D)");
    double sg_t = 0.5;
    std::uint64_t sg_samples = 100000;
    int sg_dim = 2;
    meas_sg->add_option("--dim", sg_dim, "must be 2 (exact sampler)")->check(CLI::IsMember({2}));
    meas_sg->add_option("--t", sg_t, "norm threshold")->required();
    meas_sg->add_option("--samples", sg_samples, "sample count");
    meas_sg->callback([&]() {
        SiegelCheckReport rep = siegel_check_2d(sg_t, sg_samples, g.seed);
        emit(g, "measure siegel-check", {{"t", sg_t}, {"samples", sg_samples}},
             siegel_to_json(rep));
    });
    auto* meas_rk = meas->add_subcommand("rankin", "subgroup-count coefficient B(n,k)");
    int rk_n = 2, rk_k = 1;
    meas_rk->add_option("--n", rk_n)->required();
    meas_rk->add_option("--k", rk_k)->required();
    meas_rk->callback([&]() {
        json result;
        result["B"] = checked_finite(rankin_b(rk_n, rk_k));
        result["log_B"] = checked_finite(log_rankin_b(rk_n, rk_k));
        emit(g, "measure rankin", {{"n", rk_n}, {"k", rk_k}}, std::move(result));
    });
    auto* meas_rg = meas->add_subcommand("rankin-growth", "grid check of the growth inequality");
    double rg_c = 60.0;
    int rg_lo = 10, rg_hi = 60;
    meas_rg->add_option("--c", rg_c, "constant C");
    meas_rg->add_option("--n-lo", rg_lo);
    meas_rg->add_option("--n-hi", rg_hi);
    meas_rg->callback([&]() {
        RankinGrowthReport rep = rankin_growth_check(rg_lo, rg_hi, rg_c);
        emit(g, "measure rankin-growth", {{"c", rg_c}, {"n_lo", rg_lo}, {"n_hi", rg_hi}},
             rankin_growth_to_json(rep));
    });
    auto* meas_th = meas->add_subcommand("threshold", "fraction of lattices with alpha_k >= t");
    std::size_t th_dim = 2, th_k = 1;
    double th_t = 0.5;
    std::uint64_t th_samples = 2000;
    meas_th->add_option("--dim", th_dim)->required();
    meas_th->add_option("--k", th_k)->required();
    meas_th->add_option("--t", th_t)->required();
    meas_th->add_option("--samples", th_samples);
    meas_th->callback([&]() {
        ThresholdFractionReport rep = threshold_fraction(th_dim, th_k, th_t, th_samples, g.seed);
        emit(g, "measure threshold",
             {{"dim", th_dim}, {"k", th_k}, {"t", th_t}, {"samples", th_samples}},
             threshold_to_json(rep));
    });

    // ---- orbit ----
    auto* orb = app.add_subcommand("orbit", "diagonal-orbit search and diagnostics");
    auto* orb_search = orb->add_subcommand("search", "maximize alpha over the diagonal orbit");
    std::string os_in;
    std::uint64_t os_budget = 2000;
    bool os_steps = false;
    orb_search->add_option("--in", os_in, "lattice JSON file")->required();
    orb_search->add_option("--budget", os_budget, "alpha evaluations");
    orb_search->add_flag("--steps", os_steps, "include the full trace");
    orb_search->callback([&]() {
        Lattice x = lattice_from_file(os_in);
        GammaTable gt = load_gammas(g);
        OrbitTrace t = search_max_alpha(x, os_budget, g.seed, "geometric", gt);
        emit(g, "orbit search", {{"in", os_in}, {"budget", os_budget}},
             orbit_trace_to_json(t, os_steps));
    });
    auto* orb_uk = orb->add_subcommand("uk", "near-minimal rank diagnostic");
    std::string ou_in;
    double ou_eps = 0.25;
    std::string ou_at;
    orb_uk->add_option("--in", ou_in, "lattice JSON file")->required();
    orb_uk->add_option("--epsilon", ou_eps, "epsilon in (0,1)")->required();
    orb_uk->add_option("--at", ou_at, "comma-separated diagonal log coordinates");
    orb_uk->callback([&]() {
        Lattice x = lattice_from_file(ou_in);
        Vec coords(x.dim, 0.0);
        if (!ou_at.empty()) {
            std::stringstream ss(ou_at);
            std::string tok;
            std::size_t i = 0;
            while (std::getline(ss, tok, ',') && i < x.dim) coords[i++] = std::stod(tok);
        }
        GammaTable gt = load_gammas(g);
        UkDiagnostic d = uk_diagnostic(x, ou_eps, DiagonalPoint::make(coords), gt);
        emit(g, "orbit uk", {{"in", ou_in}, {"epsilon", ou_eps}}, uk_to_json(d));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
