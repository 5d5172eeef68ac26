#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sinespec/bench.hpp"

namespace bench = sinespec::bench;

int run_selftest(std::ostream& out);  // selftest.cpp

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoConvergence = 2;

bench::ReportFormat parse_format(const std::string& name) {
    return name == "json" ? bench::ReportFormat::Json : bench::ReportFormat::Csv;
}

int run_convergence(const std::string& case_name, double k, double h, double gamma,
                    const std::vector<int>& n_list, const std::string& parity, int samples,
                    const std::string& format, const std::string& out_path) {
    const bench::BenchCase1D bc =
        bench::make_bench_case(bench::parse_decay_class(case_name), k, h, gamma);
    const bool use_parity = parity == "auto";
    const auto records =
        bench::run_convergence_1d(bc, std::span<const int>(n_list), samples, use_parity);

    std::vector<bench::ReportRecord> report;
    bool any_failed = false;
    for (const auto& r : records) {
        bench::ReportRecord rec;
        rec.case_id = bc.id;
        rec.basis_size = r.basis_size;
        rec.error = r.max_norm_error;
        rec.wall_time_s = r.wall_time_s;
        report.push_back(rec);
        if (!std::isfinite(r.max_norm_error)) any_failed = true;
    }
    bench::emit_report(report, parse_format(format), out_path);
    return any_failed ? kExitNoConvergence : kExitOk;
}

int run_table(double ksq, const std::vector<int>& n_list, double tol, long max_iter,
              const std::string& format, const std::string& out_path) {
    const auto rows = bench::run_table_3d(ksq, std::span<const int>(n_list), tol, max_iter);

    std::string case_id = "table3d_k";
    case_id += ksq == 0.0 ? "0" : (ksq == 1.0 ? "1" : "-1");

    std::vector<bench::ReportRecord> report;
    bool any_failed = false;
    for (const auto& r : rows) {
        bench::ReportRecord rec;
        rec.case_id = case_id;
        rec.basis_size = r.basis_size;
        rec.value = r.hartree_energy;
        if (!r.report.converged) {
            rec.error = std::numeric_limits<double>::quiet_NaN();  // flags the row
            any_failed = true;
        }
        rec.iterations = r.report.iterations;
        rec.wall_time_s = r.report.wall_time_s;
        report.push_back(rec);
    }
    bench::emit_report(report, parse_format(format), out_path);
    return any_failed ? kExitNoConvergence : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sinespec-bench: spectral sine-basis solver benchmarks on unbounded domains.\n"
        "Exit codes: 0 success, 1 usage or I/O error, 2 solver non-convergence."};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help message and exit");  // frees -h for --h

    // convergence1d
    auto* conv = app.add_subcommand(
        "convergence1d", "1D Helmholtz convergence sweep against a manufactured exact solution");
    conv->set_help_flag("--help", "print this help message and exit");
    std::string case_name;
    double k = 2.0, h = 3.5, gamma = 2.0;
    std::vector<int> n_list_1d{16, 32, 64, 128, 256};
    std::string parity = "auto";
    int samples = 1000;
    std::string format_1d = "csv";
    std::string out_1d = "-";
    conv->add_option("--case", case_name, "decay class of the exact solution")
        ->required()
        ->check(CLI::IsMember({"exp-osc", "alg", "alg-osc"}));
    conv->add_option("--k", k, "oscillation wavenumber")->capture_default_str();
    conv->add_option("--h", h, "algebraic decay exponent")->capture_default_str();
    conv->add_option("--gamma", gamma, "screening constant in -u'' + gamma u = f")
        ->capture_default_str();
    conv->add_option("--n", n_list_1d, "ascending basis sizes (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    conv->add_option("--parity", parity,
                     "auto: solve the parity-restricted system; full: all indices")
        ->check(CLI::IsMember({"auto", "full"}))
        ->capture_default_str();
    conv->add_option("--samples", samples, "error-grid points, uniform in y (>= 100)")
        ->capture_default_str();
    conv->add_option("--format", format_1d, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    conv->add_option("--out", out_1d, "output path ('-' for stdout)")->capture_default_str();

    // table3d
    auto* table = app.add_subcommand(
        "table3d", "3D Hartree-energy benchmark for the separable Gaussian-type density");
    double ksq = 0.0;
    std::vector<int> n_list_3d{15, 25, 37};
    double tol = 1e-12;
    long max_iter = 5000;
    std::string format_3d = "csv";
    std::string out_3d = "-";
    table->add_option("--ksq", ksq, "screening constant k^2 (-1 demonstrates the indefinite case)")
        ->check(CLI::IsMember({0.0, 1.0, -1.0}))
        ->capture_default_str();
    table->add_option("--n", n_list_3d, "basis sizes per axis (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    table->add_option("--tol", tol, "relative residual tolerance of the 3D solve")
        ->capture_default_str();
    table->add_option("--max-iter", max_iter, "iteration cap of the 3D solve")
        ->capture_default_str();
    table->add_option("--format", format_3d, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    table->add_option("--out", out_3d, "output path ('-' for stdout)")->capture_default_str();

    auto* self = app.add_subcommand("selftest", "run the built-in oracle and property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (conv->parsed()) {
            return run_convergence(case_name, k, h, gamma, n_list_1d, parity, samples, format_1d,
                                   out_1d);
        }
        if (table->parsed()) {
            return run_table(ksq, n_list_3d, tol, max_iter, format_3d, out_3d);
        }
        if (self->parsed()) {
            return run_selftest(std::cout);
        }
    } catch (const sinespec::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
