// Command-line front end: reproduces the potential landscape, trajectory
// ensembles, the crossing radiation spectrum and report, the photon screen
// pattern, and the rival-bound comparison as plain CSV / key=value files.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohmrad/config.hpp"
#include "bohmrad/constants.hpp"
#include "bohmrad/copenhagen.hpp"
#include "bohmrad/dynamics.hpp"
#include "bohmrad/io.hpp"
#include "bohmrad/qpotential.hpp"
#include "bohmrad/radiation.hpp"
#include "bohmrad/rng.hpp"
#include "bohmrad/specfun.hpp"
#include "bohmrad/wavefield.hpp"

namespace {

using namespace bohmrad;

struct CommonOpts {
    std::string config_path;
    std::string out_prefix;
    std::uint64_t seed = 0;
};

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string status_name(qpotential::SampleStatus s) {
    switch (s) {
        case qpotential::SampleStatus::ok: return "ok";
        case qpotential::SampleStatus::near_node: return "near_node";
        default: return "non_converged";
    }
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1.0);
    return v;
}

int cmd_field(const ExperimentConfig& cfg, const CommonOpts& common, double cross_x,
              double y_span, int n_samples) {
    if (cross_x <= 0.0) cross_x = cfg.screen_x;
    if (y_span <= 0.0) y_span = 7.0 * wavefield::fringe_spacing(cfg, cross_x);
    io::CsvWriter csv(common.out_prefix + "_field.csv",
                      {"x_cm", "y_cm", "P", "R", "S_erg_s", "near_node"});
    const auto ys = linspace(-0.5 * y_span, 0.5 * y_span, n_samples);
    const auto pts = wavefield::field_sweep(cfg, cross_x, ys);
    for (size_t i = 0; i < pts.size(); ++i) {
        csv.row_mixed({io::format_number(cross_x), io::format_number(ys[i]),
                       io::format_number(pts[i].P), io::format_number(pts[i].R),
                       io::format_number(pts[i].S), pts[i].near_node ? "1" : "0"});
    }
    return 0;
}

int cmd_potential(const ExperimentConfig& cfg, const CommonOpts& common, double cross_x,
                  double y_span, int nx, int ny, int n_max) {
    const double x_hi = cfg.screen_x;
    const double x_lo = 0.05 * cfg.screen_x;
    if (y_span <= 0.0) y_span = 7.0 * wavefield::fringe_spacing(cfg, x_hi);
    const auto xs = linspace(x_lo, x_hi, nx);
    const auto ys = linspace(-0.5 * y_span, 0.5 * y_span, ny);

    io::CsvWriter csv(common.out_prefix + "_potential.csv",
                      {"x_cm", "y_cm", "Q_erg", "provenance", "status"});
    for (auto prov : {qpotential::Provenance::exact, qpotential::Provenance::approx}) {
        const auto grid = qpotential::potential_grid(cfg, xs, ys, prov, n_max);
        const char* name = prov == qpotential::Provenance::exact ? "exact" : "approx";
        for (const auto& s : grid.samples) {
            csv.row_mixed({io::format_number(s.x), io::format_number(s.y),
                           io::format_number(s.q), name, status_name(s.status)});
        }
    }

    if (cross_x <= 0.0) cross_x = 13.0 <= cfg.screen_x ? 13.0 : 0.5 * cfg.screen_x;
    const double f = wavefield::fringe_spacing(cfg, cross_x);
    const auto cs = qpotential::cross_section(cfg, cross_x, 0.15 * f, 3.4 * f, 481, n_max);
    io::CsvWriter ccsv(common.out_prefix + "_cross_section.csv",
                       {"x_cm", "y_cm", "Q_erg", "provenance", "status"});
    for (const auto& s : cs.exact)
        ccsv.row_mixed({io::format_number(s.x), io::format_number(s.y),
                        io::format_number(s.q), "exact", status_name(s.status)});
    for (const auto& s : cs.approx)
        ccsv.row_mixed({io::format_number(s.x), io::format_number(s.y),
                        io::format_number(s.q), "approx", status_name(s.status)});
    return 0;
}

int cmd_trajectories(const ExperimentConfig& cfg, const CommonOpts& common,
                     std::int64_t n_samples, int export_n) {
    const auto hist = dynamics::default_histogram(cfg);
    const auto ens = dynamics::ensemble_run(cfg, n_samples, common.seed, hist);

    io::CsvWriter csv(common.out_prefix + "_histogram.csv",
                      {"bin_left_cm", "bin_right_cm", "count"});
    for (size_t i = 0; i < ens.histogram.counts.size(); ++i) {
        csv.row_mixed({io::format_number(ens.histogram.bin_edges[i]),
                       io::format_number(ens.histogram.bin_edges[i + 1]),
                       std::to_string(ens.histogram.counts[i])});
    }

    const double t0 = dynamics::launch_time(cfg);
    const double center = cfg.a * (1.0 + t0 / cfg.T);
    for (int k = 0; k < export_n; ++k) {
        SplitMix64 rng = rng_stream(common.seed, static_cast<std::uint64_t>(k));
        const double sign = (rng.next() & 1u) ? 1.0 : -1.0;
        const double y0 = sign * center + cfg.b * rng.normal();
        const auto traj = dynamics::integrate_trajectory(cfg, y0);
        io::CsvWriter tcsv(common.out_prefix + "_trajectory_" + std::to_string(k) + ".csv",
                           {"t_s", "x_cm", "y_cm", "vy_cm_s", "ay_cm_s2"});
        for (const auto& s : traj.samples)
            tcsv.row({s.t, s.x, s.y, s.v_y, s.a_y});
    }
    return 0;
}

int cmd_spectrum(const ExperimentConfig& cfg, const CommonOpts& common, int canyon_n,
                 double omega_lo, double omega_hi, int n_omega, bool with_numeric,
                 const std::string& time_map) {
    const auto cm = qpotential::canyon(cfg, canyon_n, cfg.screen_x);
    io::CsvWriter csv(common.out_prefix + "_spectrum.csv",
                      {"omega_rad_s", "dE_domega_erg_s", "provenance"});
    for (int i = 0; i < n_omega; ++i) {
        const double x = omega_lo * std::pow(omega_hi / omega_lo, i / (n_omega - 1.0));
        const double omega = x / cm.tau_n;
        const auto s = radiation::spectrum_closed(cm, omega);
        csv.row_mixed({io::format_number(s.omega), io::format_number(s.dE_domega),
                       "closed_form"});
    }
    if (with_numeric) {
        const auto map = time_map == "exact" ? radiation::TimeMap::exact
                                             : radiation::TimeMap::sinh_approx;
        const int n_num = std::max(8, n_omega / 4);
        for (int i = 0; i < n_num; ++i) {
            const double x = omega_lo * std::pow(omega_hi / omega_lo, i / (n_num - 1.0));
            const double omega = x / cm.tau_n;
            const auto s = radiation::spectrum_numeric(cm, omega, map);
            csv.row_mixed({io::format_number(s.omega), io::format_number(s.dE_domega),
                           "numeric_fourier"});
        }
    }

    const auto pc = constants();
    const auto rep = radiation::emission_summary(cfg, canyon_n);
    io::ReportWriter out(common.out_prefix + "_report.txt");
    out.field("energy_closed_eV", pc.erg_to_eV(rep.energy_closed));
    out.field("energy_quadrature_eV", pc.erg_to_eV(rep.energy_quadrature));
    out.field("energy_spectral_eV", pc.erg_to_eV(rep.energy_spectral));
    out.field("hbar_omega_max_eV", pc.erg_to_eV(pc.hbar * rep.omega_max));
    out.field("lambda_max_angstrom", 2.0 * M_PI * pc.c_light / rep.omega_max * 1e8);
    out.field("emission_probability", rep.emission_probability);
    out.field("beta_max", rep.beta_max);
    return 0;
}

int cmd_pattern(const ExperimentConfig& cfg, const CommonOpts& common,
                std::int64_t n_electrons) {
    const auto pat = radiation::photon_pattern(cfg, n_electrons, common.seed);
    io::CsvWriter csv(common.out_prefix + "_pattern.csv",
                      {"bin_left_cm", "bin_right_cm", "electron_count", "photon_weight"});
    for (size_t i = 0; i < pat.photon_weight.size(); ++i) {
        csv.row_mixed({io::format_number(pat.screen_edges[i]),
                       io::format_number(pat.screen_edges[i + 1]),
                       std::to_string(pat.electrons.counts[i]),
                       io::format_number(pat.photon_weight[i])});
    }
    io::CsvWriter acsv(common.out_prefix + "_angular.csv",
                       {"psi_left_rad", "psi_right_rad", "weight"});
    for (size_t i = 0; i < pat.angular_weight.size(); ++i) {
        acsv.row({pat.angular_edges[i], pat.angular_edges[i + 1], pat.angular_weight[i]});
    }
    return 0;
}

int cmd_compare(const ExperimentConfig& cfg, const CommonOpts& common) {
    const auto pc = constants();
    const auto rep = copenhagen::compare(cfg);
    io::ReportWriter out(common.out_prefix + "_compare.txt");
    out.field("bohm_energy_eV", pc.erg_to_eV(rep.bohm_energy));
    out.field("copenhagen_bound_eV", pc.erg_to_eV(rep.copenhagen_bound));
    out.field("bohm_to_copenhagen_ratio", rep.ratio);
    out.field("bohm_scaling_a_exponent", std::to_string(rep.bohm_scaling_a));
    out.field("bohm_scaling_b_exponent", std::to_string(rep.bohm_scaling_b));
    out.field("copenhagen_scaling_a_exponent", std::to_string(rep.copenhagen_scaling_a));
    out.field("copenhagen_scaling_b_exponent", std::to_string(rep.copenhagen_scaling_b));
    return 0;
}

// compact invariant sweep; returns the number of failed checks
int cmd_validate(const ExperimentConfig& cfg) {
    const auto pc = constants();
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::printf("%-58s %s\n", name, ok ? "PASS" : "FAIL");
        if (!ok) ++failures;
    };

    check("constants: alpha within 1e-4 of 7.2974e-3",
          std::fabs(pc.fine_structure() / 7.2974e-3 - 1.0) < 1e-4);
    check("constants: r_e, lambdabar_c definitional identities",
          std::fabs(pc.r_e * pc.mc2() / (pc.e_charge * pc.e_charge) - 1.0) < 1e-12 &&
              std::fabs(pc.lambdabar_c * pc.m_e * pc.c_light / pc.hbar - 1.0) < 1e-12);
    check("specfun: K0(1), K1(1) reference values",
          std::fabs(specfun::k0(1.0) / 0.42102443824070834 - 1.0) < 1e-12 &&
              std::fabs(specfun::k1(1.0) / 0.60190723019723458 - 1.0) < 1e-12);
    check("specfun: derivative identity K1 = -dK0/dx at x=1",
          std::fabs((specfun::k0(0.999999) - specfun::k0(1.000001)) / 2e-6 /
                        specfun::k1(1.0) -
                    1.0) < 1e-6);

    const double probe_x = 0.5 * cfg.screen_x;
    const auto wp = wavefield::total_field(cfg, probe_x, 0.0);
    const auto amp = wavefield::slit_amplitude(cfg, wavefield::Slit::A, probe_x, 0.0);
    check("wavefield: on-axis constructive interference",
          std::fabs(wp.P / (4.0 * std::norm(amp)) - 1.0) < 1e-12);
    const double yprobe = 1.3 * wavefield::fringe_spacing(cfg, probe_x);
    check("wavefield: mirror symmetry of P",
          std::fabs(wavefield::total_field(cfg, probe_x, yprobe).P /
                        wavefield::total_field(cfg, probe_x, -yprobe).P -
                    1.0) < 1e-10);

    const auto c1 = qpotential::canyon(cfg, 1, cfg.screen_x);
    check("qpotential: depth relation 0.64 hbar omega_max",
          std::fabs(c1.depth / (pc.hbar * radiation::peak_frequency(c1)) - 0.6415) < 0.0129);
    check("radiation: quadrature oracle vs closed form (0.1%)",
          std::fabs(radiation::crossing_energy_quadrature(c1) /
                        radiation::crossing_energy_closed(c1) -
                    1.0) < 1e-3);
    check("radiation: spectral/closed prefactor ratio 0.8634",
          std::fabs(radiation::spectral_energy(c1) / radiation::crossing_energy_closed(c1) -
                    0.863431) < 1e-3);
    check("radiation: omega_max * tau = 3/5",
          std::fabs(radiation::peak_frequency(c1) * c1.tau_n - 0.6) < 1e-12);
    check("radiation: true spectral peak at x = 0.595047",
          std::fabs(specfun::k0_k1_crossing() - 0.595047) < 1e-4);
    check("copenhagen: bound positive and below electron rest energy",
          copenhagen::compare(cfg).copenhagen_bound > 0.0 &&
              copenhagen::compare(cfg).copenhagen_bound < pc.mc2());

    std::printf("validate: %d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-slit pilot-wave radiation simulator"};
    app.require_subcommand(1);

    CommonOpts common;
    std::int64_t n_samples = 100000;
    int canyon_n = 1;
    double omega_lo = 0.05, omega_hi = 6.0;
    int n_omega = 200;
    double cross_x = -1.0, y_span = -1.0;
    int grid_nx = 48, grid_ny = 257, n_field = 801, n_max = 5;
    int export_trajectories = 0;
    bool with_numeric = false;
    std::string time_map = "sinh";

    auto add_common = [&](CLI::App* sub, bool needs_out, bool needs_seed) {
        sub->add_option("--config", common.config_path, "key=value experiment config")
            ->required();
        auto* out = sub->add_option("--out", common.out_prefix, "output path prefix");
        if (needs_out) out->required();
        auto* seed = sub->add_option("--seed", common.seed, "RNG seed");
        if (needs_seed) seed->required();
    };

    auto* field = app.add_subcommand("field", "wavefunction sweep at a plane");
    add_common(field, true, false);
    field->add_option("--cross-x", cross_x, "plane position [cm], default screen");
    field->add_option("--y-span", y_span, "sweep width [cm]");
    field->add_option("--n-field", n_field, "samples across the sweep")
        ->check(CLI::Range(8, 2000000));

    auto* potential = app.add_subcommand("potential", "quantum potential surface + section");
    add_common(potential, true, false);
    potential->add_option("--cross-x", cross_x, "cross-section plane [cm], default 13");
    potential->add_option("--y-span", y_span, "grid width [cm]");
    potential->add_option("--grid-nx", grid_nx, "grid x resolution")->check(CLI::Range(8, 4096));
    potential->add_option("--grid-ny", grid_ny, "grid y resolution")->check(CLI::Range(8, 65536));
    potential->add_option("--n-max", n_max, "canyon terms in the model")->check(CLI::Range(1, 64));

    auto* traj = app.add_subcommand("trajectories", "ensemble landing histogram");
    add_common(traj, true, true);
    traj->add_option("--n-samples", n_samples, "ensemble size")->check(CLI::Range(1, 100000000));
    traj->add_option("--export-trajectories", export_trajectories,
                     "also dump this many individual paths")
        ->check(CLI::Range(0, 1024));

    auto* spectrum = app.add_subcommand("spectrum", "crossing radiation spectrum + report");
    add_common(spectrum, true, false);
    spectrum->add_option("--canyon", canyon_n, "canyon index n != 0");
    spectrum->add_option("--omega-min", omega_lo, "low end in units of 1/tau_n");
    spectrum->add_option("--omega-max", omega_hi, "high end in units of 1/tau_n");
    spectrum->add_option("--n-omega", n_omega, "sample count")->check(CLI::Range(8, 100000));
    spectrum->add_flag("--with-numeric", with_numeric, "add numeric-Fourier rows");
    spectrum->add_option("--time-map", time_map, "crossing time map for the numeric rows")
        ->check(CLI::IsMember({"sinh", "exact"}));

    auto* pattern = app.add_subcommand("pattern", "electron vs photon screen pattern");
    add_common(pattern, true, true);
    pattern->add_option("--n-samples", n_samples, "electron count")
        ->check(CLI::Range(1, 100000000));

    auto* compare = app.add_subcommand("compare", "rival-interpretation report");
    add_common(compare, true, false);

    auto* validate = app.add_subcommand("validate", "run the invariant sweep");
    add_common(validate, false, false);

    CLI11_PARSE(app, argc, argv);

    try {
        const ExperimentConfig cfg = load_config(common.config_path);
        if (app.got_subcommand(field))
            return cmd_field(cfg, common, cross_x, y_span, n_field);
        if (app.got_subcommand(potential))
            return cmd_potential(cfg, common, cross_x, y_span, grid_nx, grid_ny, n_max);
        if (app.got_subcommand(traj))
            return cmd_trajectories(cfg, common, n_samples, export_trajectories);
        if (app.got_subcommand(spectrum))
            return cmd_spectrum(cfg, common, canyon_n, omega_lo, omega_hi, n_omega,
                                with_numeric, time_map);
        if (app.got_subcommand(pattern)) return cmd_pattern(cfg, common, n_samples);
        if (app.got_subcommand(compare)) return cmd_compare(cfg, common);
        if (app.got_subcommand(validate)) return cmd_validate(cfg);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
