// Command-line front end: every verification as a reproducible batch.
//
// Subcommands: potential, eigen, qhj, swkb, ledger, sweep.  Common flags:
//   --g <real> --ell <int> --n <int> | --n-max <int> --energy <real>
//   --format json|csv --out <path> --seed <int> --tol-<name> <real>
// XLQ_THREADS caps sweep parallelism.  Exit codes: 0 success, 1 module error
// (structured error record emitted), 2 invariant failure (some check failed).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "xlq/contour.hpp"
#include "xlq/deform.hpp"
#include "xlq/errors.hpp"
#include "xlq/grid.hpp"
#include "xlq/hamiltonian.hpp"
#include "xlq/oracle.hpp"
#include "xlq/qmf.hpp"
#include "xlq/report.hpp"
#include "xlq/spectrum.hpp"
#include "xlq/swkb.hpp"

namespace {

using xlq::cplx;
using xlq::make_check;
using xlq::ordered_json;
using xlq::Params;
using xlq::Report;

struct Options {
    double g = 1.0;
    int ell = 1;
    int n = -1;
    int n_max = 5;
    double energy = std::numeric_limits<double>::quiet_NaN();
    std::string format = "json";
    std::string out;
    std::string plot_data;
    long long seed = 42;
    // tolerances, overridable via --tol-<name>
    double tol_eigen = 1e-5;
    double tol_swkb = 1e-8;
    double tol_residue = 1e-8;
    double tol_ledger = 1e-6;
    double tol_quantization = 0.05;
    double tol_identity = 1e-9;
    double tol_orthogonality = 1e-8;
    double tol_wavefunction = 1e-4;

    Params params() const { return {g, ell}; }
};

void emit(const Report& rep, const Options& opt) {
    std::string payload = opt.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw xlq::Error("cannot open output path " + opt.out);
        f << payload;
    }
}

std::vector<double> seeded_points(long long seed, int count, double lo, double hi) {
    std::mt19937_64 rng(static_cast<unsigned long long>(seed));
    std::uniform_real_distribution<double> uni(lo, hi);
    std::vector<double> pts(count);
    for (double& x : pts) x = uni(rng);
    return pts;
}

ordered_json params_json(const Options& opt) {
    return {{"g", opt.g}, {"ell", opt.ell}};
}

// ---------------------------------------------------------------- potential
Report run_potential(const Options& opt) {
    const Params p = opt.params();
    Report rep;
    rep.command = "potential";
    rep.params = params_json(opt);
    rep.seed = opt.seed;

    const xlq::Rational W = xlq::superpotential(p);
    const xlq::Rational V = xlq::potential(p);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 30; ++i) {
        const double x = 0.2 + 0.2 * i;
        rows.push_back({{"x", x}, {"W", W(x)}, {"V", V(x)}});
    }
    rep.results = std::move(rows);

    const auto pts = seeded_points(opt.seed, 20, 0.3, 4.0);
    double max_curv = 0.0, max_ground = 0.0;
    for (double x : pts) {
        max_curv = std::max(max_curv, xlq::curvature_identity_residual(p, x));
        const double w_ref = W(x);
        const double w_gs = xlq::superpotential_from_ground_state(p, x);
        max_ground = std::max(max_ground, std::abs(w_gs - w_ref) / (1.0 + std::abs(w_ref)));
    }
    rep.checks.push_back(make_check("curvature_identity_max_residual", max_curv, opt.tol_identity));
    rep.checks.push_back(make_check("shift_identity_residual", xlq::shift_identity_residual(p),
                                    opt.tol_identity));
    rep.checks.push_back(make_check("superpotential_from_ground_state_max_residual", max_ground,
                                    opt.tol_identity));
    rep.checks.push_back(make_check(
        "potential_forms_gauge_vs_closed",
        xlq::rational_mismatch(xlq::potential_gauge_form(p), xlq::potential_closed_form(p)),
        opt.tol_identity));
    rep.checks.push_back(make_check("potential_forms_factorized_vs_closed",
                                    xlq::rational_mismatch(V, xlq::potential_closed_form(p)),
                                    opt.tol_identity));
    return rep;
}

// -------------------------------------------------------------------- eigen
Report run_eigen(const Options& opt) {
    const Params p = opt.params();
    Report rep;
    rep.command = "eigen";
    rep.params = params_json(opt);
    rep.seed = opt.seed;

    const int k = opt.n_max + 1;
    const auto spec = xlq::solve_spectrum(p, k, {}, opt.tol_eigen);
    ordered_json rows = ordered_json::array();
    double max_delta = 0.0;
    int node_mismatches = 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : spec) {
        const double delta = r.energy - 4.0 * r.index;
        max_delta = std::max(max_delta, std::abs(delta));
        if (r.node_count != r.index) ++node_mismatches;
        sx += r.index;
        sy += r.energy;
        sxx += double(r.index) * r.index;
        sxy += double(r.index) * r.energy;
        rows.push_back({{"n", r.index},
                        {"energy", r.energy},
                        {"energy_coarse", r.energy_coarse},
                        {"energy_fine", r.energy_fine},
                        {"node_count", r.node_count},
                        {"delta_vs_4n", delta}});
    }
    rep.results = std::move(rows);
    const double denom = k * sxx - sx * sx;
    const double slope = (k * sxy - sx * sy) / denom;
    const double intercept = (sy * sxx - sx * sxy) / denom;
    rep.checks.push_back(make_check("eigenvalue_max_deviation_from_4n", max_delta, opt.tol_eigen));
    rep.checks.push_back(make_check("node_count_mismatches", node_mismatches, 0.5));
    rep.checks.push_back(make_check("spectrum_slope_relative_error", (slope - 4.0) / 4.0, 1e-5));
    rep.checks.push_back(make_check("spectrum_intercept", intercept, 1e-5));
    return rep;
}

// ---------------------------------------------------------------------- qhj
Report run_qhj(const Options& opt) {
    const Params p = opt.params();
    const int n = opt.n >= 0 ? opt.n : 2;
    Report rep;
    rep.command = "qhj";
    rep.params = params_json(opt);
    rep.params["n"] = n;
    rep.seed = opt.seed;

    const auto m = xlq::momentum_function(p, n);
    ordered_json rows = ordered_json::array();
    auto push_pole = [&](const char* kind, cplx z, cplx res) {
        rows.push_back({{"kind", kind},
                        {"re", z.real()},
                        {"im", z.imag()},
                        {"residue_re", res.real()},
                        {"residue_im", res.imag()}});
    };
    double max_res_dev = 0.0;
    {
        const cplx r = xlq::qmf_residue_measured(m, cplx(0.0));
        push_pole("origin", cplx(0.0), r);
        max_res_dev = std::max(max_res_dev, std::abs(r - cplx(p.g + p.ell)));
    }
    for (cplx z : m.fixed_poles()) {
        const cplx r = xlq::qmf_residue_measured(m, z);
        push_pole("fixed", z, r);
        max_res_dev = std::max(max_res_dev, std::abs(r - cplx(-1.0)));
    }
    for (cplx z : m.moving_poles()) {
        const cplx r = xlq::qmf_residue_measured(m, z);
        push_pole("moving", z, r);
        max_res_dev = std::max(max_res_dev, std::abs(r - cplx(1.0)));
    }
    rep.results = std::move(rows);

    const auto census = xlq::singularity_census(m);
    int census_violations = 0;
    if (census.moving_real_positive != n) ++census_violations;
    if (census.moving_real_negative != n) ++census_violations;
    if (census.moving_off_axis != 2 * p.ell) ++census_violations;
    if (census.fixed_total != 2 * p.ell) ++census_violations;
    if (census.fixed_max_abs_real > 1e-8) ++census_violations;

    // seeded sample, redrawing any point too close to a pole of q (the
    // residual there is dominated by cancellation noise, not by the identity)
    double max_riccati = 0.0;
    std::mt19937_64 rng(static_cast<unsigned long long>(opt.seed));
    std::uniform_real_distribution<double> uni(0.3, 4.0);
    const auto conditioning = [&](double x) {
        double s = 0.0;
        for (auto it = m.q.den.c.rbegin(); it != m.q.den.c.rend(); ++it)
            s = s * x + std::abs(*it);
        return std::abs(m.q.den(x)) / s;
    };
    for (int kept = 0, attempts = 0; kept < 20 && attempts < 400; ++attempts) {
        const double x = uni(rng);
        if (conditioning(x) < 1e-5) continue;
        max_riccati = std::max(max_riccati, xlq::riccati_residual(m, x));
        ++kept;
    }

    const double idx = xlq::quantization_index(m);
    rep.checks.push_back(make_check("quantization_index_deviation", idx - n, opt.tol_quantization));
    rep.checks.push_back(make_check("residue_max_deviation", max_res_dev, opt.tol_residue));
    rep.checks.push_back(make_check("census_violations", census_violations, 0.5));
    rep.checks.push_back(make_check("riccati_max_residual", max_riccati, opt.tol_identity));

    if (!opt.plot_data.empty()) {
        std::ofstream f(opt.plot_data);
        if (!f) throw xlq::Error("cannot open plot data path " + opt.plot_data);
        f << "kind,index,point,re,im\n";
        char buf[128];
        size_t i = 0;
        for (const auto& row : rep.results) {
            std::snprintf(buf, sizeof buf, "%s,%zu,0,%.17g,%.17g\n",
                          row["kind"].get<std::string>().c_str(), i++,
                          row["re"].get<double>(), row["im"].get<double>());
            f << buf;
        }
    }
    return rep;
}

// --------------------------------------------------------------------- swkb
Report run_swkb(const Options& opt) {
    const Params p = opt.params();
    Report rep;
    rep.command = "swkb";
    rep.params = params_json(opt);
    rep.seed = opt.seed;

    ordered_json rows = ordered_json::array();
    double max_turning_residual = 0.0;
    const xlq::Rational W = xlq::superpotential(p);
    auto add_row = [&](double E, int n_label, bool solve) {
        double x1 = 0.0, x2 = 0.0, I = 0.0;
        if (E > 0.0) {
            const auto tp = xlq::turning_points(p, E);
            x1 = tp.x1;
            x2 = tp.x2;
            I = xlq::swkb_integral(p, E);
            const double w1 = W(x1);
            max_turning_residual =
                std::max(max_turning_residual, std::abs(w1 * w1 - E) / std::max(1.0, E));
        }
        ordered_json row = {{"n", n_label}, {"energy", E}, {"x1", x1}, {"x2", x2},
                            {"integral", I}};
        if (n_label >= 0) {
            row["deviation"] = I - n_label;
            if (solve) {
                const double es = xlq::swkb_energy_solve(p, n_label);
                row["energy_solve"] = es;
                row["energy_solve_delta"] = es - 4.0 * n_label;
            }
        }
        rows.push_back(row);
    };
    if (!std::isnan(opt.energy)) {
        add_row(opt.energy, -1, false);
    } else if (opt.n >= 0) {
        add_row(4.0 * opt.n, opt.n, true);
    } else {
        for (int n = 0; n <= opt.n_max; ++n) add_row(4.0 * n, n, true);
    }
    rep.results = std::move(rows);
    rep.checks.push_back(
        make_check("turning_point_max_residual", max_turning_residual, 1e-8));
    // monotonicity probe of the integral in E
    const double e0 = std::isnan(opt.energy) ? 6.0 : std::max(opt.energy, 1.0);
    const double dI = xlq::swkb_integral(p, e0 + 0.1) - xlq::swkb_integral(p, e0);
    xlq::Check mono{"integral_monotone_in_E", dI, 0.0, dI > 0.0};
    rep.checks.push_back(mono);
    return rep;
}

// ------------------------------------------------------------------- ledger
Report run_ledger(const Options& opt) {
    const Params p = opt.params();
    if (std::isnan(opt.energy)) throw xlq::Error("ledger requires --energy");
    Report rep;
    rep.command = "ledger";
    rep.params = params_json(opt);
    rep.params["energy"] = opt.energy;
    rep.seed = opt.seed;

    // the ledger is invariant under re-pairing of the off-axis cuts, so a
    // near-tie in the matching only forces the minimal choice
    const auto field = [&] {
        try {
            return xlq::make_branch_field(p, opt.energy);
        } catch (const xlq::PairingError&) {
            return xlq::make_branch_field(p, opt.energy, 1.0);
        }
    }();
    const auto L = xlq::contour_ledger(field);

    ordered_json rows = ordered_json::array();
    auto add = [&](const std::string& term, double re, double im) {
        rows.push_back({{"term", term}, {"re", re}, {"im", im}});
    };
    add("energy", L.E, 0.0);
    add("x1", L.x1, 0.0);
    add("x2", L.x2, 0.0);
    add("principal_integral", L.I_C, 0.0);
    add("mirror_integral", L.I_C2, 0.0);
    add("residue_origin", L.res_origin.real(), L.res_origin.imag());
    for (size_t i = 0; i < L.res_xi0.size(); ++i)
        add("residue_xi_g_" + std::to_string(i), L.res_xi0[i].real(), L.res_xi0[i].imag());
    for (size_t i = 0; i < L.res_xi1.size(); ++i)
        add("residue_xi_g1_" + std::to_string(i), L.res_xi1[i].real(), L.res_xi1[i].imag());
    add("residue_infinity_series", L.res_infinity_series.real(), L.res_infinity_series.imag());
    add("residue_infinity_circle", L.res_infinity_circle.real(), L.res_infinity_circle.imag());
    for (size_t i = 0; i < L.omega.size(); ++i)
        add("omega_" + std::to_string(i), L.omega[i].real(), L.omega[i].imag());
    add("omega_sum", L.omega_sum, 0.0);
    add("reconstructed_n", L.reconstructed_index, 0.0);
    add("closure_defect", L.closure_defect, 0.0);
    add("cluster_defect", L.cluster_defect, 0.0);
    add("pairing_margin", L.pairing_margin, 0.0);
    rep.results = std::move(rows);

    const double gl = p.g + p.ell;
    double fixed_dev = 0.0;
    for (cplx r : L.res_xi0) fixed_dev = std::max(fixed_dev, std::abs(r - cplx(0.0, 1.0)));
    for (cplx r : L.res_xi1) fixed_dev = std::max(fixed_dev, std::abs(r - cplx(0.0, -1.0)));
    rep.checks.push_back(make_check("ledger_closure_defect", L.closure_defect, opt.tol_ledger));
    rep.checks.push_back(make_check("reconstructed_n_vs_E_over_4",
                                    L.reconstructed_index - L.E / 4.0, 1e-6));
    rep.checks.push_back(make_check("residue_origin_deviation",
                                    std::abs(L.res_origin - cplx(0.0, -gl)), opt.tol_residue));
    rep.checks.push_back(make_check("residue_fixed_max_deviation", fixed_dev, opt.tol_residue));
    rep.checks.push_back(make_check(
        "residue_infinity_deviation",
        std::abs(L.res_infinity_circle - cplx(0.0, L.E / 2.0 + gl)), opt.tol_residue));
    rep.checks.push_back(make_check(
        "residue_infinity_two_method_gap",
        std::abs(L.res_infinity_circle - L.res_infinity_series), opt.tol_residue));
    rep.checks.push_back(make_check("half_plane_cluster_defect", L.cluster_defect, 1e-7));

    if (!opt.plot_data.empty()) {
        std::ofstream f(opt.plot_data);
        if (!f) throw xlq::Error("cannot open plot data path " + opt.plot_data);
        f << "kind,index,point,re,im\n";
        char buf[128];
        auto row = [&](const char* kind, size_t idx, size_t pt, cplx z) {
            std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.17g,%.17g\n", kind, idx, pt, z.real(),
                          z.imag());
            f << buf;
        };
        row("pole", 0, 0, cplx(0.0));
        for (size_t i = 0; i < field.poles_xi0.size(); ++i) row("pole_xi_g", i, 0, field.poles_xi0[i]);
        for (size_t i = 0; i < field.poles_xi1.size(); ++i)
            row("pole_xi_g1", i, 0, field.poles_xi1[i]);
        for (size_t i = 0; i < field.cuts.size(); ++i) {
            const auto pts =
                xlq::detail::stadium_samples(field.cuts[i].a, field.cuts[i].b,
                                             xlq::stadium_height(field, i), 32);
            for (size_t j = 0; j < pts.size(); ++j) row("contour", i, j, pts[j]);
        }
    }
    return rep;
}

// -------------------------------------------------------------------- sweep
struct SweepCell {
    ordered_json rows = ordered_json::array();
    double oracle_max = 0.0;
    int node_mismatches = 0;
    double swkb_max = 0.0;
    double solve_max = 0.0;
    double quant_max = 0.0;
    int census_violations = 0;
    double closure_max = 0.0;
    double cluster_max = 0.0;
    double recon_max = 0.0;
    double omega_eig_max = 0.0;
    double omega_mid_min = 1e300;
    double ortho_max = 0.0;
    double wave_max = 0.0;
};

SweepCell sweep_cell(const Params& p, int n_max, const Options& opt) {
    SweepCell cell;
    const int k = n_max + 1;
    const auto spec = xlq::solve_spectrum(p, k, {}, opt.tol_eigen);

    std::vector<xlq::Wavefunction> wfs;
    for (int n = 0; n <= n_max; ++n) wfs.push_back(xlq::wavefunction(p, n));

    for (int n = 0; n <= n_max; ++n) {
        const double E = 4.0 * n;
        const auto& orc = spec[n];
        cell.oracle_max = std::max(cell.oracle_max, std::abs(orc.energy - E));
        if (orc.node_count != n) ++cell.node_mismatches;

        const double I = xlq::swkb_integral(p, E);
        cell.swkb_max = std::max(cell.swkb_max, std::abs(I - n));
        const double es = xlq::swkb_energy_solve(p, n);
        cell.solve_max = std::max(cell.solve_max, std::abs(es - E));

        const auto m = xlq::momentum_function(p, n);
        const double qi = xlq::quantization_index(m);
        cell.quant_max = std::max(cell.quant_max, std::abs(qi - n));
        const auto census = xlq::singularity_census(m);
        if (census.moving_real_positive != n) ++cell.census_violations;
        if (census.moving_off_axis != 2 * p.ell) ++cell.census_violations;
        if (census.fixed_total != 2 * p.ell) ++cell.census_violations;
        if (census.fixed_max_abs_real > 1e-8) ++cell.census_violations;

        double omega_sum = 0.0, closure = 0.0, recon = 0.0;
        int ledger_valid = 0;
        if (E > 0.0) {
            const auto L = xlq::contour_ledger(p, E);
            omega_sum = L.omega_sum;
            closure = L.closure_defect;
            recon = L.reconstructed_index;
            ledger_valid = 1;
            cell.closure_max = std::max(cell.closure_max, L.closure_defect);
            cell.cluster_max = std::max(cell.cluster_max, L.cluster_defect);
            cell.recon_max = std::max(cell.recon_max, std::abs(recon - E / 4.0));
            cell.omega_eig_max = std::max(cell.omega_eig_max, std::abs(omega_sum));
        }
        double omega_mid = 0.0;
        if (n < n_max) {  // midpoint energies 2, 6, ..., between consecutive levels
            const auto Lm = xlq::contour_ledger(p, E + 2.0);
            omega_mid = Lm.omega_sum;
            cell.closure_max = std::max(cell.closure_max, Lm.closure_defect);
            cell.omega_mid_min = std::min(cell.omega_mid_min, std::abs(omega_mid));
        }

        const double wave_dist =
            xlq::compare_wavefunction([&](double x) { return wfs[n].unnormalized(x); }, orc);
        cell.wave_max = std::max(cell.wave_max, wave_dist);

        cell.rows.push_back({{"g", p.g},
                             {"ell", p.ell},
                             {"n", n},
                             {"energy", E},
                             {"oracle_energy", orc.energy},
                             {"oracle_delta", orc.energy - E},
                             {"node_count", orc.node_count},
                             {"swkb_integral", I},
                             {"swkb_deviation", I - n},
                             {"energy_solve", es},
                             {"energy_solve_delta", es - E},
                             {"quantization_index", qi},
                             {"ledger_valid", ledger_valid},
                             {"omega_sum", omega_sum},
                             {"closure_defect", closure},
                             {"reconstructed_n", recon},
                             {"midpoint_omega_sum", omega_mid},
                             {"wavefunction_distance", wave_dist}});
    }

    for (int a = 0; a <= std::min(4, n_max); ++a)
        for (int b = a + 1; b <= std::min(4, n_max); ++b)
            cell.ortho_max = std::max(cell.ortho_max, std::abs(xlq::overlap(wfs[a], wfs[b])));
    return cell;
}

Report run_sweep(const Options& opt) {
    Report rep;
    rep.command = "sweep";
    rep.params = {{"n_max", opt.n_max}};
    rep.seed = opt.seed;

    const auto& grid = xlq::verification_grid();
    std::vector<SweepCell> cells(grid.size());

    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("XLQ_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) threads = static_cast<unsigned>(v);
    }
    threads = std::min<unsigned>(threads, grid.size());

    std::atomic<size_t> next{0};
    std::vector<std::string> cell_errors(grid.size());
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
            try {
                cells[i] = sweep_cell(grid[i], opt.n_max, opt);
            } catch (const std::exception& e) {
                cell_errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < grid.size(); ++i)
        if (!cell_errors[i].empty())
            throw xlq::Error("sweep cell (g=" + std::to_string(grid[i].g) +
                             ", ell=" + std::to_string(grid[i].ell) + "): " + cell_errors[i]);

    ordered_json rows = ordered_json::array();
    SweepCell agg;
    agg.omega_mid_min = 1e300;
    for (const auto& c : cells) {
        for (const auto& r : c.rows) rows.push_back(r);
        agg.oracle_max = std::max(agg.oracle_max, c.oracle_max);
        agg.node_mismatches += c.node_mismatches;
        agg.swkb_max = std::max(agg.swkb_max, c.swkb_max);
        agg.solve_max = std::max(agg.solve_max, c.solve_max);
        agg.quant_max = std::max(agg.quant_max, c.quant_max);
        agg.census_violations += c.census_violations;
        agg.closure_max = std::max(agg.closure_max, c.closure_max);
        agg.cluster_max = std::max(agg.cluster_max, c.cluster_max);
        agg.recon_max = std::max(agg.recon_max, c.recon_max);
        agg.omega_eig_max = std::max(agg.omega_eig_max, c.omega_eig_max);
        agg.omega_mid_min = std::min(agg.omega_mid_min, c.omega_mid_min);
        agg.ortho_max = std::max(agg.ortho_max, c.ortho_max);
        agg.wave_max = std::max(agg.wave_max, c.wave_max);
    }
    rep.results = std::move(rows);

    rep.checks.push_back(make_check("oracle_max_deviation_from_4n", agg.oracle_max, opt.tol_eigen));
    rep.checks.push_back(make_check("node_count_mismatches", agg.node_mismatches, 0.5));
    rep.checks.push_back(make_check("swkb_max_deviation", agg.swkb_max, opt.tol_swkb));
    rep.checks.push_back(make_check("energy_solve_max_deviation", agg.solve_max, 1e-6));
    rep.checks.push_back(
        make_check("quantization_max_deviation", agg.quant_max, opt.tol_quantization));
    rep.checks.push_back(make_check("census_violations", agg.census_violations, 0.5));
    rep.checks.push_back(make_check("ledger_max_closure_defect", agg.closure_max, opt.tol_ledger));
    rep.checks.push_back(make_check("half_plane_cluster_max_defect", agg.cluster_max, 1e-7));
    rep.checks.push_back(make_check("reconstructed_n_max_deviation", agg.recon_max, 1e-6));
    // the two omega checks are stated for the raw contour integral, i.e.
    // 2 pi times the ledger rows
    rep.checks.push_back(
        make_check("omega_sum_max_at_eigenvalues", 2.0 * M_PI * agg.omega_eig_max, 1e-6));
    const double mid_raw = 2.0 * M_PI * agg.omega_mid_min;
    xlq::Check mid{"omega_sum_min_at_midpoints_above_1e-3", mid_raw, 1e-3, mid_raw >= 1e-3};
    rep.checks.push_back(mid);
    rep.checks.push_back(make_check("orthogonality_max", agg.ortho_max, opt.tol_orthogonality));
    rep.checks.push_back(
        make_check("wavefunction_max_distance", agg.wave_max, opt.tol_wavefunction));
    return rep;
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const xlq::NullspaceDimensionError*>(&e)) return "NullspaceDimensionError";
    if (dynamic_cast<const xlq::ConvergenceError*>(&e)) return "ConvergenceError";
    if (dynamic_cast<const xlq::PolePointError*>(&e)) return "PolePointError";
    if (dynamic_cast<const xlq::BranchJumpError*>(&e)) return "BranchJumpError";
    if (dynamic_cast<const xlq::TurningPointError*>(&e)) return "TurningPointError";
    if (dynamic_cast<const xlq::PairingError*>(&e)) return "PairingError";
    if (dynamic_cast<const xlq::BracketError*>(&e)) return "BracketError";
    if (dynamic_cast<const xlq::AmbiguityError*>(&e)) return "AmbiguityError";
    if (dynamic_cast<const xlq::GridError*>(&e)) return "GridError";
    if (dynamic_cast<const xlq::Error*>(&e)) return "Error";
    return "InternalError";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed radial oscillator: spectra, momentum-function poles, and "
                 "quantization-integral contour ledger"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_params) {
        if (needs_params) {
            cmd->add_option("--g", opt.g, "coupling strength (> 1/2)");
            cmd->add_option("--ell", opt.ell, "deformation degree (>= 0)");
        }
        cmd->add_option("--format", opt.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opt.out, "output path (default stdout)");
        cmd->add_option("--seed", opt.seed, "seed for random identity-check points");
        cmd->add_option("--tol-eigen", opt.tol_eigen, "");
        cmd->add_option("--tol-swkb", opt.tol_swkb, "");
        cmd->add_option("--tol-residue", opt.tol_residue, "");
        cmd->add_option("--tol-ledger", opt.tol_ledger, "");
        cmd->add_option("--tol-quantization", opt.tol_quantization, "");
        cmd->add_option("--tol-identity", opt.tol_identity, "");
        cmd->add_option("--tol-orthogonality", opt.tol_orthogonality, "");
        cmd->add_option("--tol-wavefunction", opt.tol_wavefunction, "");
    };

    auto* c_pot = app.add_subcommand("potential", "sampled W, V and structural identity checks");
    add_common(c_pot, true);
    auto* c_eig = app.add_subcommand("eigen", "finite-difference oracle spectrum vs 4n");
    add_common(c_eig, true);
    c_eig->add_option("--n-max", opt.n_max, "highest level (default 5)");
    auto* c_qhj = app.add_subcommand("qhj", "momentum-function poles, residues, quantization");
    add_common(c_qhj, true);
    c_qhj->add_option("--n", opt.n, "level (default 2)");
    c_qhj->add_option("--plot-data", opt.plot_data, "write singularity positions CSV here");
    auto* c_swkb = app.add_subcommand("swkb", "quantization integral at E or across levels");
    add_common(c_swkb, true);
    c_swkb->add_option("--n", opt.n, "single level");
    c_swkb->add_option("--n-max", opt.n_max, "levels 0..n_max (default 5)");
    c_swkb->add_option("--energy", opt.energy, "evaluate at this energy instead");
    auto* c_led = app.add_subcommand("ledger", "full contour decomposition at one energy");
    add_common(c_led, true);
    c_led->add_option("--energy", opt.energy, "energy (required)");
    c_led->add_option("--plot-data", opt.plot_data, "write singularities + contours CSV here");
    auto* c_swp = app.add_subcommand("sweep", "full verification grid, all invariants");
    add_common(c_swp, false);
    c_swp->add_option("--n-max", opt.n_max, "highest level (default 5)");

    CLI11_PARSE(app, argc, argv);

    try {
        Report rep;
        if (c_pot->parsed())
            rep = run_potential(opt);
        else if (c_eig->parsed())
            rep = run_eigen(opt);
        else if (c_qhj->parsed())
            rep = run_qhj(opt);
        else if (c_swkb->parsed())
            rep = run_swkb(opt);
        else if (c_led->parsed())
            rep = run_ledger(opt);
        else
            rep = run_sweep(opt);
        emit(rep, opt);
        return rep.all_pass() ? 0 : 2;
    } catch (const std::exception& e) {
        ordered_json err = {{"meta", {{"version", xlq::version_string()}}},
                            {"error", {{"type", error_kind(e)}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
