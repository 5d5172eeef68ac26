#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sinespec/projection.hpp"
#include "sinespec/solvers.hpp"

namespace sinespec::bench {

/// Decay behavior of the manufactured 1D solutions.
enum class DecayClass {
    ExpOsc,  ///< u(x) = sin(kx) exp(-x^2)
    Alg,     ///< u(x) = (1 + x^2)^-h
    AlgOsc,  ///< u(x) = sin(kx) (1 + x^2)^-h
};

/// A manufactured 1D test case for -u'' + gamma u = f with closed-form
/// exact solution and forcing.
struct BenchCase1D {
    std::string id;
    double k = 2.0;
    double h = 3.5;
    double gamma = 2.0;
    ScalarFunction exact;    ///< u(x)
    ScalarFunction forcing;  ///< f(x) = -u''(x) + gamma u(x)
    Symmetry symmetry;       ///< parity of u about y = pi/2
};

BenchCase1D make_bench_case(DecayClass decay, double k, double h, double gamma);

/// Parse "exp-osc" / "alg" / "alg-osc".
DecayClass parse_decay_class(const std::string& name);

struct ConvergenceRecord {
    int basis_size = 0;
    double max_norm_error = 0.0;  ///< NaN flags a failed solve
    double wall_time_s = 0.0;
    bool restricted = false;  ///< parity-restricted system was solved
};

/// Assemble, project, solve and measure the max-norm error against the
/// exact solution on a sample grid uniform in y, for each basis size in
/// ascending n_list. use_parity solves the parity-restricted subsystem.
/// Solver failures yield a NaN record; the sweep continues.
std::vector<ConvergenceRecord> run_convergence_1d(const BenchCase1D& bench_case,
                                                  std::span<const int> n_list, int sample_count,
                                                  bool use_parity);

struct Table3dRow {
    int basis_size = 0;
    double hartree_energy = 0.0;
    SolveReport report;
};

/// Hartree-energy benchmark: solve -lap(V) + ksq V = rho for the separable
/// test density rho = x1 x2 x3 (6 + 4 r^2) exp(-r^2) and contract with the
/// overlap matrix. ksq in {0, 1}; ksq = -1 is accepted to demonstrate the
/// indefinite case (expected not to converge at useful sizes).
std::vector<Table3dRow> run_table_3d(double ksq, std::span<const int> n_list, double tol,
                                     long max_iter);

/// One line of a benchmark report. Unset optionals print as empty fields.
struct ReportRecord {
    std::string case_id;
    int basis_size = 0;
    std::optional<double> value;
    std::optional<double> error;
    std::optional<long> iterations;
    double wall_time_s = 0.0;
};

enum class ReportFormat { Csv, Json };

/// Write records as CSV (header case,N,value,error,iterations,wall_time_s)
/// or as a JSON array of objects with the same keys. Byte-deterministic for
/// identical records. Throws InvalidInputError for an empty record list.
void emit_report(std::span<const ReportRecord> records, ReportFormat format, std::ostream& out);

/// Same, writing to a file path ("-" means standard output). Throws IoError
/// if the destination cannot be written.
void emit_report(std::span<const ReportRecord> records, ReportFormat format,
                 const std::string& destination);

}  // namespace sinespec::bench
