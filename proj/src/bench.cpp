#include "sinespec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>

#include "sinespec/hartree.hpp"
#include "sinespec/mapping.hpp"

namespace sinespec::bench {

namespace {
constexpr double kPi = std::numbers::pi;

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Quadrature sized for moment integrands oscillating at frequency ~N.
QuadratureRule moment_rule(int basis_size) {
    return build_quadrature(std::max(128, 4 * basis_size + 64));
}

// Solve M c = f keeping only the basis indices allowed by the symmetry.
// The Poisson/Helmholtz matrices couple equal parities only, so this is
// the same solution with roughly half the unknowns.
SineExpansion1D solve_restricted(const GalerkinMatrix1D& m, const MomentVector& f,
                                 Symmetry symmetry) {
    const int n = m.dimension();
    std::vector<int> keep;  // 0-based kept indices
    keep.reserve(static_cast<size_t>(n));
    std::vector<int> remap(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (parity_keeps_index(i + 1, symmetry)) {
            remap[static_cast<size_t>(i)] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    }
    std::vector<MatrixEntry> sub_entries;
    for (const auto& e : m.entries()) {
        const int r = remap[static_cast<size_t>(e.row)];
        const int c = remap[static_cast<size_t>(e.col)];
        if (r >= 0 && c >= 0) sub_entries.push_back({r, c, e.value});
    }
    MomentVector sub_f(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        sub_f.values[i] = f.values[static_cast<size_t>(keep[i])];
    }
    const SineExpansion1D sub_c =
        solve_1d(GalerkinMatrix1D(static_cast<int>(keep.size()), std::move(sub_entries)), sub_f);

    SineExpansion1D full(n);
    for (size_t i = 0; i < keep.size(); ++i) {
        full.c[static_cast<size_t>(keep[i])] = sub_c.c[i];
    }
    return full;
}
}  // namespace

BenchCase1D make_bench_case(DecayClass decay, double k, double h, double gamma) {
    BenchCase1D bc;
    bc.k = k;
    bc.h = h;
    bc.gamma = gamma;
    switch (decay) {
        case DecayClass::ExpOsc:
            bc.id = "exp-osc";
            bc.symmetry = Symmetry::AntisymmetricAboutCenter;
            bc.exact = [k](double x) { return std::sin(k * x) * std::exp(-x * x); };
            // -u'' = exp(-x^2) [(k^2 + 2 - 4x^2) sin(kx) + 4kx cos(kx)]
            bc.forcing = [k, gamma](double x) {
                return std::exp(-x * x) * ((k * k + 2.0 + gamma - 4.0 * x * x) * std::sin(k * x) +
                                           4.0 * k * x * std::cos(k * x));
            };
            break;
        case DecayClass::Alg:
            bc.id = "alg";
            bc.symmetry = Symmetry::SymmetricAboutCenter;
            bc.exact = [h](double x) { return std::pow(1.0 + x * x, -h); };
            bc.forcing = [h, gamma](double x) {
                const double q = 1.0 + x * x;
                return 2.0 * h * std::pow(q, -h - 1) -
                       4.0 * h * (h + 1.0) * x * x * std::pow(q, -h - 2) + gamma * std::pow(q, -h);
            };
            break;
        case DecayClass::AlgOsc:
            bc.id = "alg-osc";
            bc.symmetry = Symmetry::AntisymmetricAboutCenter;
            bc.exact = [k, h](double x) { return std::sin(k * x) * std::pow(1.0 + x * x, -h); };
            bc.forcing = [k, h, gamma](double x) {
                const double q = 1.0 + x * x;
                const double s = std::sin(k * x);
                const double g = std::pow(q, -h);
                const double gp = -2.0 * h * x * std::pow(q, -h - 1);
                const double gpp = -2.0 * h * std::pow(q, -h - 1) +
                                   4.0 * h * (h + 1.0) * x * x * std::pow(q, -h - 2);
                const double upp = -k * k * s * g + 2.0 * k * std::cos(k * x) * gp + s * gpp;
                return -upp + gamma * s * g;
            };
            break;
    }
    return bc;
}

DecayClass parse_decay_class(const std::string& name) {
    if (name == "exp-osc") return DecayClass::ExpOsc;
    if (name == "alg") return DecayClass::Alg;
    if (name == "alg-osc") return DecayClass::AlgOsc;
    throw InvalidInputError("unknown 1D case '" + name + "'");
}

std::vector<ConvergenceRecord> run_convergence_1d(const BenchCase1D& bench_case,
                                                  std::span<const int> n_list, int sample_count,
                                                  bool use_parity) {
    if (n_list.empty()) throw InvalidInputError("run_convergence_1d: empty basis-size list");
    if (!std::is_sorted(n_list.begin(), n_list.end())) {
        throw InvalidInputError("run_convergence_1d: basis-size list must be ascending");
    }
    if (sample_count < 100) {
        throw InvalidInputError("run_convergence_1d: sample_count must be >= 100");
    }

    // Interior sample grid, uniform in y; uniform-in-y weights the far field
    // fairly under the map.
    std::vector<double> xs(static_cast<size_t>(sample_count));
    std::vector<double> u_exact(xs.size());
    for (int i = 1; i <= sample_count; ++i) {
        const double y = kPi * i / (sample_count + 1);
        xs[static_cast<size_t>(i - 1)] = to_physical(y);
        u_exact[static_cast<size_t>(i - 1)] = bench_case.exact(xs[static_cast<size_t>(i - 1)]);
    }

    std::vector<ConvergenceRecord> records;
    records.reserve(n_list.size());
    for (int n : n_list) {
        const auto t0 = std::chrono::steady_clock::now();
        ConvergenceRecord rec;
        rec.basis_size = n;
        rec.restricted = use_parity;
        try {
            const GalerkinMatrix1D m = assemble_helmholtz_1d(n, bench_case.gamma);
            const MomentVector f = project_1d_physical(bench_case.forcing, moment_rule(n), n);
            const SineExpansion1D c = use_parity
                                          ? solve_restricted(m, f, bench_case.symmetry)
                                          : solve_1d(m, f);
            double err = 0.0;
            for (size_t i = 0; i < xs.size(); ++i) {
                err = std::max(err, std::abs(eval_expansion_physical(c, xs[i]) - u_exact[i]));
            }
            rec.max_norm_error = err;
        } catch (const SingularSystemError&) {
            rec.max_norm_error = std::numeric_limits<double>::quiet_NaN();
        }
        rec.wall_time_s = elapsed_since(t0);
        records.push_back(rec);
    }
    return records;
}

std::vector<Table3dRow> run_table_3d(double ksq, std::span<const int> n_list, double tol,
                                     long max_iter) {
    if (!(ksq == 0.0 || ksq == 1.0 || ksq == -1.0)) {
        throw InvalidInputError("run_table_3d: ksq must be 0, 1 or -1");
    }
    if (n_list.empty()) throw InvalidInputError("run_table_3d: empty basis-size list");

    // rho = x1 x2 x3 (6 + 4 r^2) e^{-r^2} split into four separable products
    // using 6 + 4 r^2 = 6 + 4 x1^2 + 4 x2^2 + 4 x3^2.
    const auto a = [](double y) {
        const double x = to_physical(y);
        return x * std::exp(-x * x);
    };
    const auto b = [](double y) {
        const double x = to_physical(y);
        return x * x * x * std::exp(-x * x);
    };

    // Coefficients of rho are (2/pi)^3 times its moments; the energy
    // contraction consumes raw rho moments with this fixed scale.
    const double kappa = std::pow(2.0 / kPi, 3);

    std::vector<Table3dRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        const auto t0 = std::chrono::steady_clock::now();
        const QuadratureRule rule = build_quadrature(std::max(256, 8 * n));

        MomentTensor3D rho_moments = project_3d_separable(a, a, a, rule, n);
        {
            const MomentTensor3D baa = project_3d_separable(b, a, a, rule, n);
            const MomentTensor3D aba = project_3d_separable(a, b, a, rule, n);
            const MomentTensor3D aab = project_3d_separable(a, a, b, rule, n);
            auto r = rho_moments.flat();
            for (size_t i = 0; i < r.size(); ++i) {
                r[i] = 6.0 * r[i] +
                       4.0 * (baa.flat()[i] + aba.flat()[i] + aab.flat()[i]);
            }
        }

        // Galerkin system for -lap(V) + ksq V = rho: the mass term splits as
        // ksq/3 per axis, and projecting over the two passive axes leaves a
        // factor (pi/2)^2 that moves to the right-hand side.
        const GalerkinMatrix1D m = assemble_helmholtz_1d(n, ksq / 3.0);
        MomentTensor3D rhs(n);
        {
            auto dst = rhs.flat();
            auto src = rho_moments.flat();
            const double scale = (2.0 / kPi) * (2.0 / kPi);
            for (size_t i = 0; i < dst.size(); ++i) dst[i] = scale * src[i];
        }

        Solve3dResult solved = solve_3d(m, rhs, tol, max_iter);
        Table3dRow row;
        row.basis_size = n;
        row.hartree_energy = hartree_energy(solved.solution, rho_moments, kappa);
        row.report = solved.report;
        row.report.wall_time_s = elapsed_since(t0);  // include projection + contraction
        rows.push_back(row);
    }
    return rows;
}

namespace {
std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11g", v);
    return buf;
}

void emit_csv(std::span<const ReportRecord> records, std::ostream& out) {
    out << "case,N,value,error,iterations,wall_time_s\n";
    for (const auto& r : records) {
        out << r.case_id << ',' << r.basis_size << ',';
        if (r.value) out << format_number(*r.value);
        out << ',';
        if (r.error) out << format_number(*r.error);
        out << ',';
        if (r.iterations) out << *r.iterations;
        out << ',' << format_number(r.wall_time_s) << '\n';
    }
}

void emit_json(std::span<const ReportRecord> records, std::ostream& out) {
    out << "[\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << "  {\"case\": \"" << r.case_id << "\", \"N\": " << r.basis_size << ", \"value\": ";
        if (r.value && std::isfinite(*r.value)) out << format_number(*r.value);
        else if (r.value) out << '"' << format_number(*r.value) << '"';
        else out << "null";
        out << ", \"error\": ";
        if (r.error && std::isfinite(*r.error)) out << format_number(*r.error);
        else if (r.error) out << '"' << format_number(*r.error) << '"';
        else out << "null";
        out << ", \"iterations\": ";
        if (r.iterations) out << *r.iterations;
        else out << "null";
        out << ", \"wall_time_s\": " << format_number(r.wall_time_s) << "}";
        out << (i + 1 < records.size() ? ",\n" : "\n");
    }
    out << "]\n";
}
}  // namespace

void emit_report(std::span<const ReportRecord> records, ReportFormat format, std::ostream& out) {
    if (records.empty()) throw InvalidInputError("emit_report: no records to write");
    if (format == ReportFormat::Csv) emit_csv(records, out);
    else emit_json(records, out);
    if (!out) throw IoError("emit_report: write failed");
}

void emit_report(std::span<const ReportRecord> records, ReportFormat format,
                 const std::string& destination) {
    if (records.empty()) throw InvalidInputError("emit_report: no records to write");
    if (destination.empty() || destination == "-") {
        emit_report(records, format, std::cout);
        return;
    }
    std::ofstream out(destination);
    if (!out) throw IoError("emit_report: cannot open '" + destination + "' for writing");
    emit_report(records, format, out);
    if (!out) throw IoError("emit_report: write to '" + destination + "' failed");
}

}  // namespace sinespec::bench
