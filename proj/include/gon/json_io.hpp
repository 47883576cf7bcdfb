#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gon/cover_verify.hpp"
#include "gon/covering.hpp"
#include "gon/lattice.hpp"
#include "gon/mordell.hpp"
#include "gon/orbit.hpp"
#include "gon/reduction.hpp"
#include "gon/rng.hpp"
#include "gon/sampling.hpp"
#include "gon/stability.hpp"
#include "gon/version.hpp"

namespace gon {

using json = nlohmann::ordered_json;

// all report numbers must serialize finite
inline double checked_finite(double v) {
    if (!std::isfinite(v)) throw ValidationError("report value is not finite");
    return v;
}

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (double x : v) a.push_back(checked_finite(x));
    return a;
}

inline json mat_to_json(const Mat& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(vec_to_json(row));
    return a;
}

// ---- lattice files: {"dim": n, "basis": [[...]], "rational": bool} ----

inline Lattice lattice_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("basis"))
        throw ValidationError("lattice json needs dim and basis");
    std::size_t n = j.at("dim").get<std::size_t>();
    bool rational = j.value("rational", false);
    const json& rows = j.at("basis");
    if (rows.size() != n) throw ValidationError("lattice json: basis must have dim rows");
    if (rational) {
        RatMat rb(n, RatVec(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw ValidationError("lattice json: row length mismatch");
            for (std::size_t k = 0; k < n; ++k) {
                const json& cell = rows[i][k];
                if (cell.is_string())
                    rb[i][k] = Rational::from_string(cell.get<std::string>());
                else
                    rb[i][k] = Rational::from_double(cell.get<double>());
            }
        }
        return Lattice::from_rational_rows(std::move(rb));
    }
    Mat b(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ValidationError("lattice json: row length mismatch");
        for (std::size_t k = 0; k < n; ++k) {
            const json& cell = rows[i][k];
            if (cell.is_string())
                b[i][k] = Rational::from_string(cell.get<std::string>()).to_double();
            else
                b[i][k] = cell.get<double>();
        }
    }
    return Lattice::from_rows(std::move(b));
}

inline Lattice lattice_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open lattice file: " + path);
    json j;
    in >> j;
    return lattice_from_json(j);
}

inline json lattice_to_json(const Lattice& x) {
    json j;
    j["dim"] = x.dim;
    if (x.rational) {
        j["rational"] = true;
        json rows = json::array();
        for (const auto& row : x.rbasis) {
            json r = json::array();
            for (const auto& cell : row) r.push_back(cell.to_string());
            rows.push_back(std::move(r));
        }
        j["basis"] = std::move(rows);
    } else {
        j["basis"] = mat_to_json(x.basis);
    }
    return j;
}

// ---- gamma table config: {"exact": {"1": v, ...}, "fallback": "minkowski"} ----

inline GammaTable gamma_table_from_json(const json& j) {
    GammaTable t; // entries beyond the listed ones fall back to Minkowski
    if (j.contains("exact")) {
        for (const auto& [key, val] : j.at("exact").items())
            t.set_exact(std::stoi(key), val.get<double>());
    }
    if (j.value("fallback", "minkowski") != std::string("minkowski"))
        throw ValidationError("gamma table: only the minkowski fallback is supported");
    return t;
}

inline GammaTable gamma_table_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open gamma table: " + path);
    json j;
    in >> j;
    return gamma_table_from_json(j);
}

// ---- reports ----

inline json witness_to_json(const SublatticeWitness& w) {
    json j;
    j["rank"] = w.rank;
    j["covolume"] = checked_finite(w.covolume);
    j["generators"] = mat_to_json(w.generators);
    json coeffs = json::array();
    for (const auto& row : w.coeffs) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        coeffs.push_back(std::move(r));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

inline json stability_to_json(const StabilityReport& rep) {
    json j;
    j["alpha"] = checked_finite(rep.alpha);
    j["alpha_by_rank"] = vec_to_json(rep.alpha_by_rank);
    j["stable"] = rep.stable;
    j["mode"] = rep.mode;
    j["witness"] = witness_to_json(rep.witness);
    return j;
}

inline json kz_to_json(const KZProfile& p) {
    json j;
    j["coefficients"] = vec_to_json(p.coefficients);
    j["reduced_basis"] = mat_to_json(p.reduced_basis);
    return j;
}

inline json covrad_to_json(const CoveringRadius& c) {
    json j;
    j["covrad"] = checked_finite(c.value);
    j["tol"] = checked_finite(c.tol);
    j["deep_hole"] = vec_to_json(c.deep_hole);
    return j;
}

inline json kappa_to_json(const KappaEstimate& e) {
    json j;
    j["value"] = checked_finite(e.value);
    j["half_widths"] = vec_to_json(e.box.half_widths);
    j["budget_used"] = e.budget_used;
    return j;
}

inline json kappa_bounds_to_json(const KappaBounds& b) {
    json j;
    j["general"] = checked_finite(b.general);
    j["unbounded_orbit"] = checked_finite(b.unbounded_orbit);
    if (b.mod4_1) j["mod4_1"] = checked_finite(*b.mod4_1);
    j["hadamard"] = checked_finite(b.hadamard);
    return j;
}

inline json certificate_to_json(const CoverCertificate& c) {
    json j;
    j["dim"] = c.dim;
    j["variant"] = c.variant;
    j["gamma_provenance"] = c.gamma_provenance;
    j["min_width"] = checked_finite(c.min_width);
    j["covered"] = c.covered;
    j["deadline_hit"] = c.deadline_hit;
    j["bounds_derivation"] = c.bounds_derivation;
    json leaves = json::array();
    for (const auto& leaf : c.leaves) {
        json l;
        json box = json::array();
        for (const auto& ivl : leaf.box.iv)
            box.push_back(json::array({checked_finite(ivl.lo), checked_finite(ivl.hi)}));
        l["box"] = std::move(box);
        l["verdict"] = leaf.verdict == LeafVerdict::Covered        ? "covered"
                       : leaf.verdict == LeafVerdict::OutsideRegion ? "outside"
                                                                     : "unresolved";
        if (leaf.verdict == LeafVerdict::Covered) l["composition"] = leaf.composition;
        leaves.push_back(std::move(l));
    }
    j["leaves"] = std::move(leaves);
    return j;
}

inline CoverCertificate certificate_from_json(const json& j) {
    CoverCertificate c;
    c.dim = j.at("dim").get<int>();
    c.variant = j.value("variant", "standard");
    c.gamma_provenance = j.value("gamma_provenance", "");
    c.min_width = j.value("min_width", 0.0);
    c.covered = j.value("covered", false);
    c.deadline_hit = j.value("deadline_hit", false);
    c.bounds_derivation = j.value("bounds_derivation", "");
    for (const auto& l : j.at("leaves")) {
        CoverLeaf leaf;
        for (const auto& ivl : l.at("box"))
            leaf.box.iv.push_back(Interval::bounds(ivl[0].get<double>(), ivl[1].get<double>()));
        std::string v = l.at("verdict").get<std::string>();
        leaf.verdict = v == "covered"  ? LeafVerdict::Covered
                       : v == "outside" ? LeafVerdict::OutsideRegion
                                        : LeafVerdict::Unresolved;
        if (l.contains("composition"))
            leaf.composition = l.at("composition").get<std::vector<int>>();
        c.leaves.push_back(std::move(leaf));
    }
    return c;
}

inline CoverCertificate certificate_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open certificate: " + path);
    json j;
    in >> j;
    // accept both the bare certificate and the CLI's meta-wrapped report
    if (!j.contains("dim") && j.contains("result")) return certificate_from_json(j.at("result"));
    return certificate_from_json(j);
}

inline json cert_check_to_json(const CertCheckReport& r) {
    json j;
    j["partition_ok"] = r.partition_ok;
    j["covered_leaves"] = r.covered_leaves;
    j["outside_leaves"] = r.outside_leaves;
    j["unresolved_leaves"] = r.unresolved_leaves;
    j["points_checked"] = r.points_checked;
    j["violations"] = r.violations;
    j["exact_rechecked"] = r.exact_rechecked;
    j["exact_failures"] = r.exact_failures;
    j["ok"] = r.ok();
    return j;
}

inline json stable_fraction_to_json(const StableFractionReport& r) {
    json j;
    j["dim"] = r.dim;
    j["samples"] = r.samples;
    j["stable_count"] = r.stable_count;
    j["fraction"] = checked_finite(r.fraction);
    j["ci95"] = json::array({checked_finite(r.ci95_lo), checked_finite(r.ci95_hi)});
    j["sampler"] = r.sampler;
    j["seed"] = r.seed;
    return j;
}

inline json siegel_to_json(const SiegelCheckReport& r) {
    json j;
    j["t"] = checked_finite(r.t);
    j["samples"] = r.samples;
    j["mean_count"] = checked_finite(r.mean_count);
    j["expected"] = checked_finite(r.expected);
    j["std_error"] = checked_finite(r.std_error);
    j["seed"] = r.seed;
    j["count_convention"] = "primitive vectors below t, both signs counted";
    return j;
}

inline json threshold_to_json(const ThresholdFractionReport& r) {
    json j;
    j["dim"] = r.dim;
    j["k"] = r.k;
    j["t"] = checked_finite(r.t);
    j["samples"] = r.samples;
    j["fraction"] = checked_finite(r.fraction);
    j["complement"] = checked_finite(r.complement);
    j["bound"] = checked_finite(r.bound);
    j["std_error"] = checked_finite(r.std_error);
    j["sampler"] = r.sampler;
    j["seed"] = r.seed;
    return j;
}

inline json rankin_growth_to_json(const RankinGrowthReport& r) {
    json j;
    j["max_ratio"] = checked_finite(r.max_ratio);
    j["argmax_n"] = r.argmax_n;
    j["argmax_k"] = r.argmax_k;
    j["c"] = checked_finite(r.c);
    j["n_lo"] = r.n_lo;
    j["n_hi"] = r.n_hi;
    j["holds"] = r.max_ratio <= 1.0;
    return j;
}

inline json orbit_trace_to_json(const OrbitTrace& t, bool include_steps = false) {
    json j;
    j["best"] = {{"log_coords", vec_to_json(t.best.point.log_coords)},
                 {"alpha", checked_finite(t.best.alpha)}};
    j["budget_used"] = t.budget_used;
    j["divergence_warning"] = t.divergence_warning;
    if (include_steps) {
        json steps = json::array();
        for (const auto& s : t.steps)
            steps.push_back({{"log_coords", vec_to_json(s.point.log_coords)},
                             {"alpha", checked_finite(s.alpha)}});
        j["steps"] = std::move(steps);
    } else {
        j["steps_recorded"] = t.steps.size();
    }
    return j;
}

inline json uk_to_json(const UkDiagnostic& d) {
    json j;
    j["k"] = d.k;
    j["delta_interval"] = json::array({checked_finite(d.delta_lo), checked_finite(d.delta_hi)});
    j["delta_dims"] = d.dims;
    j["note"] = "delta sampled at k*eps*(1 -+ 1/8); finite proxy for the open neighborhood";
    return j;
}

} // namespace gon
