#pragma once

#include "ncgqw/bounds.hpp"
#include "ncgqw/constants.hpp"
#include "ncgqw/fdcheck.hpp"
#include "ncgqw/reps.hpp"
#include "ncgqw/spectrum.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ncgqw::cli {

inline constexpr const char* kBanner = "# ncgqw 1.0";

/// %.12e rendering, locale-independent; every numeric data stream goes
/// through here so repeated runs are byte-identical.
inline std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

namespace detail {

inline std::pair<Constants, Experiment> load_inputs(const std::string& config_path) {
    if (config_path.empty()) return {Constants{}, Experiment{}};
    return load_config(config_path);
}

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void emit_verify_table(std::ostream& out, const VerificationReport& report) {
    std::size_t width = 0;
    for (const auto& c : report.claims) width = std::max(width, c.label.size());
    for (const auto& c : report.claims) {
        const char* status = c.must_pass ? (c.pass ? "PASS" : "FAIL")
                                         : (c.pass ? "INFO" : "INFO");
        out << std::left << std::setw(static_cast<int>(width) + 2) << c.label << status
            << "  residual: " << c.residual.to_string() << "\n";
    }
}

inline int run_verify(std::ostream& out, const std::string& suite) {
    VerificationReport must;
    VerificationReport info;

    const bool all = suite == "all";
    if (all || suite == "flat") {
        must.merge(verify_algebra(rep_bopp_x(), flat_relations()));
        must.merge(verify_algebra(rep_bopp_y(), flat_relations()));
        must.merge(verify_algebra(rep_bopp_sym(), flat_relations()));
    }
    if (all || suite == "posdep") {
        must.merge(verify_algebra(rep_posdep_in_flat(), posdep_relations()));
        must.merge(verify_algebra(rep_posdep_in_canonical_composed(), posdep_relations()));
    }
    if (all || suite == "jacobi") {
        must.merge(verify_jacobi(heisenberg_context()));
        must.merge(verify_jacobi(flat_nc_context()));
        must.merge(verify_jacobi(rep_posdep_in_flat()));
    }
    if (all || suite == "hermiticity") {
        must.merge(verify_hermiticity(rep_bopp_x()));
        must.merge(verify_hermiticity(rep_bopp_y()));
        must.merge(verify_hermiticity(rep_bopp_sym()));
        must.merge(verify_hermiticity(rep_posdep_in_flat()));
        must.merge(verify_hermiticity(rep_posdep_in_canonical_composed()));
    }
    if (all || suite == "compare") {
        info.merge(compare_reps(rep_posdep_in_canonical_composed(),
                                rep_posdep_in_canonical_direct()));
        VerificationReport direct_herm = verify_hermiticity(rep_posdep_in_canonical_direct());
        for (auto& c : direct_herm.claims) c.must_pass = false;
        info.merge(std::move(direct_herm));
    }

    out << kBanner << "\n";
    emit_verify_table(out, must);
    emit_verify_table(out, info);
    const int checked = static_cast<int>(must.claims.size());
    const int failed = [&] {
        int f = 0;
        for (const auto& c : must.claims)
            if (!c.pass) ++f;
        return f;
    }();
    out << "# " << checked << " must-pass claims, " << failed << " failed, "
        << info.claims.size() << " report-only rows\n";
    return must.must_pass_ok() ? 0 : 1;
}

inline void run_spectrum(std::ostream& out, const std::string& format, int n_max, double k,
                         const DeformationParams& p, const Constants& c) {
    const auto rows = spectrum_table(n_max, k, p, c);
    const NeglectPolicy policy = NeglectPolicy::leading_order();
    if (format == "csv") {
        out << kBanner << "\n";
        out << "n,k,e_commutative_J,shift_theta_J,shift_tau_J,e_total_J\n";
        for (const auto& r : rows) {
            out << r.n << "," << sci(r.k) << "," << sci(r.e_commutative) << ","
                << sci(r.shift_theta) << "," << sci(r.shift_tau) << "," << sci(r.e_total)
                << "\n";
        }
        out << "# neglect_policy: " << policy.describe() << "\n";
    } else if (format == "table") {
        out << kBanner << "\n";
        out << std::left << std::setw(4) << "n" << std::setw(22) << "e_commutative_J"
            << std::setw(22) << "shift_theta_J" << std::setw(22) << "shift_tau_J"
            << std::setw(22) << "e_total_J" << "\n";
        for (const auto& r : rows) {
            out << std::left << std::setw(4) << r.n << std::setw(22) << sci(r.e_commutative)
                << std::setw(22) << sci(r.shift_theta) << std::setw(22) << sci(r.shift_tau)
                << std::setw(22) << sci(r.e_total) << "\n";
        }
        out << "# neglect_policy: " << policy.describe() << "\n";
    } else {
        throw FormatError("spectrum supports --format csv|table");
    }
}

inline void emit_bound_kv(std::ostream& out, const BoundReport& r) {
    out << "theta_max=" << sci(r.theta_max) << "\n";
    out << "tau_max=" << sci(r.tau_max) << "\n";
    out << "tau_convention=" << r.tau_convention << "\n";
    out << "min_length_bound=" << sci(r.min_length_bound) << "\n";
    out << "coeff_theta=" << sci(r.coeff_theta) << "\n";
    out << "coeff_tau=" << sci(r.coeff_tau) << "\n";
}

inline void run_bounds(std::ostream& out, const std::string& format, TauConvention conv,
                       std::optional<double> theta_star, const Constants& c,
                       const Experiment& e) {
    const BoundReport r = bound_report(c, e, conv, theta_star);
    if (format == "table") {
        out << kBanner << "\n";
        out << std::left << std::setw(20) << "quantity" << std::setw(22) << "value"
            << "unit\n";
        out << std::left << std::setw(20) << "theta_max" << std::setw(22) << sci(r.theta_max)
            << "m^2\n";
        out << std::left << std::setw(20) << "tau_max" << std::setw(22) << sci(r.tau_max)
            << "m^-2\n";
        out << std::left << std::setw(20) << "tau_convention" << r.tau_convention << "\n";
        out << std::left << std::setw(20) << "min_length_bound" << std::setw(22)
            << sci(r.min_length_bound) << "m\n";
        out << std::left << std::setw(20) << "coeff_theta" << std::setw(22)
            << sci(r.coeff_theta) << "J/m^2\n";
        out << std::left << std::setw(20) << "coeff_tau" << std::setw(22) << sci(r.coeff_tau)
            << "J*m^2\n";
        out << "#\n";
        emit_bound_kv(out, r);
    } else if (format == "kv") {
        emit_bound_kv(out, r);
    } else {
        throw FormatError("bounds supports --format table|kv");
    }
}

inline void run_minlength(std::ostream& out, const std::string& format,
                          std::optional<double> theta, std::optional<double> tau,
                          double y_mean, TauConvention conv, const Constants& c,
                          const Experiment& e) {
    DeformationParams p;
    std::string source;
    if (theta && tau) {
        p = {*theta, *tau};
        source = "explicit";
    } else if (!theta && !tau) {
        const BoundReport r = bound_report(c, e, conv);
        p = {r.theta_max, r.tau_max};
        source = std::string("bound_report/") + r.tau_convention;
    } else {
        throw FormatError("minlength needs both --theta and --tau, or neither");
    }
    const double dx = min_uncertainty_x(p, y_mean);
    if (format == "kv") {
        out << "theta=" << sci(p.theta) << "\n";
        out << "tau=" << sci(p.tau) << "\n";
        out << "y_mean=" << sci(y_mean) << "\n";
        out << "source=" << source << "\n";
        out << "min_uncertainty_x=" << sci(dx) << "\n";
    } else if (format == "table") {
        out << kBanner << "\n";
        out << "min_uncertainty_x = " << sci(dx) << " m   (theta=" << sci(p.theta)
            << " m^2, tau=" << sci(p.tau) << " m^-2, y_mean=" << sci(y_mean) << " m, "
            << source << ")\n";
    } else {
        throw FormatError("minlength supports --format kv|table");
    }
}

inline void run_check(std::ostream& out, const std::string& format, int levels, int points,
                      double x_max, const Constants& c) {
    if (format != "table") throw FormatError("check supports --format table");
    const Grid1D grid{x_max, points};
    const auto fd = fd_eigenvalues(levels, grid, c);
    out << kBanner << "\n";
    out << std::left << std::setw(7) << "level" << std::setw(22) << "fd_J" << std::setw(22)
        << "airy_J" << "rel_error\n";
    for (int n = 1; n <= levels; ++n) {
        const double reference = energy_level(n, 0.0, c);
        const double rel = std::abs(fd[n - 1] - reference) / reference;
        out << std::left << std::setw(7) << n << std::setw(22) << sci(fd[n - 1])
            << std::setw(22) << sci(reference) << sci(rel) << "\n";
    }
}

}  // namespace detail

/// Parses and dispatches one command line. Exit codes: 0 success, 1 must-pass
/// verification failure, 2 usage or configuration errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"deformed-algebra gravitational quantum well toolkit", "ncgqw"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format;

    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "energy table with deformation shifts (CSV by default)");
    int n_max = 5;
    std::optional<double> k_opt;
    double theta = 0.0, tau = 0.0;
    spectrum_cmd->add_option("--config", config_path, "config file (key = value)");
    spectrum_cmd->add_option("--format", format, "csv|table")->default_str("csv");
    spectrum_cmd->add_option("--nmax", n_max, "highest level index");
    spectrum_cmd->add_option("--k", k_opt, "wavenumber 1/m (default m*v_mean/hbar)");
    spectrum_cmd->add_option("--theta", theta, "flat deformation parameter, m^2");
    spectrum_cmd->add_option("--tau", tau, "position-dependent deformation, m^-2");

    auto* bounds_cmd =
        app.add_subcommand("bounds", "experimental upper bounds and minimal length");
    std::string tau_conv = "residual";
    std::optional<double> theta_star;
    bounds_cmd->add_option("--config", config_path, "config file");
    bounds_cmd->add_option("--format", format, "table|kv")->default_str("table");
    bounds_cmd->add_option("--tau-convention", tau_conv, "full|residual|paper");
    bounds_cmd->add_option("--theta-star", theta_star,
                           "theta value consuming budget under the residual convention");

    auto* verify_cmd =
        app.add_subcommand("verify", "exact verification of the deformed algebras");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "all|flat|posdep|jacobi|hermiticity|compare");

    auto* minlength_cmd = app.add_subcommand("minlength", "minimal position uncertainty");
    std::optional<double> ml_theta, ml_tau;
    double y_mean = 0.0;
    minlength_cmd->add_option("--config", config_path, "config file");
    minlength_cmd->add_option("--format", format, "kv|table")->default_str("kv");
    minlength_cmd->add_option("--theta", ml_theta, "theta, m^2");
    minlength_cmd->add_option("--tau", ml_tau, "tau, m^-2");
    minlength_cmd->add_option("--y-mean", y_mean, "mean transverse position, m");
    minlength_cmd->add_option("--tau-convention", tau_conv, "full|residual|paper");

    auto* check_cmd =
        app.add_subcommand("check", "finite-difference cross-check of the Airy spectrum");
    int levels = 3, points = 4000;
    double x_max = 9e-5;
    check_cmd->add_option("--config", config_path, "config file");
    check_cmd->add_option("--format", format, "table")->default_str("table");
    check_cmd->add_option("--levels", levels, "levels to compare");
    check_cmd->add_option("--points", points, "grid points");
    check_cmd->add_option("--xmax", x_max, "wall position, m (default 90 um)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11's own path.
            std::stringstream help;
            int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const auto [constants, experiment] = detail::load_inputs(config_path);
        if (spectrum_cmd->parsed()) {
            if (format.empty()) format = "csv";
            const double k = k_opt ? *k_opt : wavenumber(constants, experiment);
            detail::run_spectrum(out, format, n_max, k, DeformationParams{theta, tau},
                                 constants);
            return 0;
        }
        if (bounds_cmd->parsed()) {
            if (format.empty()) format = "table";
            auto conv = tau_convention_from_label(tau_conv);
            if (!conv) throw detail::FormatError("--tau-convention must be full|residual|paper");
            detail::run_bounds(out, format, *conv, theta_star, constants, experiment);
            return 0;
        }
        if (verify_cmd->parsed()) {
            return detail::run_verify(out, suite);
        }
        if (minlength_cmd->parsed()) {
            if (format.empty()) format = "kv";
            auto conv = tau_convention_from_label(tau_conv);
            if (!conv) throw detail::FormatError("--tau-convention must be full|residual|paper");
            detail::run_minlength(out, format, ml_theta, ml_tau, y_mean, *conv, constants,
                                  experiment);
            return 0;
        }
        if (check_cmd->parsed()) {
            if (format.empty()) format = "table";
            detail::run_check(out, format, levels, points, x_max, constants);
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const detail::FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ncgqw::cli
