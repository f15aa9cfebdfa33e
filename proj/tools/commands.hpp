#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nhrlc/circuit.hpp"
#include "report.hpp"

namespace nhrlc::cli {

/// Process exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceViolation = 1;
inline constexpr int kExitBadParameters = 2;

struct AnalyzeOptions {
  std::optional<double> alpha;
  std::optional<double> omega0;
  std::optional<double> resistance;
  std::optional<double> inductance;
  std::optional<double> capacitance;
};

/// Exactly one of the groups (alpha, omega0) and (R, L, C), complete.
/// Throws InvalidParameters otherwise.
CircuitParams resolve_params(const AnalyzeOptions& opts);

Report analyze(const CircuitParams& p);

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
  double omega0 = 1.0;
  double alpha_min = 0.0;
  double alpha_max = 2.0;
  int steps = 201;
};

struct SweepRow {
  double alpha;
  Complex lambda_plus;
  Complex lambda_minus;
  Phase phase;
};

/// Rows on the inclusive grid alpha_min + k (alpha_max - alpha_min) / (steps - 1).
/// From the second row on, the two eigenvalues are assigned to the branches
/// that minimize the jump from the previous row.
std::vector<SweepRow> sweep(const SweepOptions& opts);

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

struct EvolveOptions {
  double alpha = 0.0;
  double omega0 = 1.0;
  double i0 = 1.0;
  double v0 = 0.0;
  double inductance = 1.0;
  double t_max = 10.0;
  double dt = 0.01;
  double step = 1e-3;
  std::string method = "all";  // all | closed | spectral | rk
};

/// CSV on `out`, agreement summary on `err`. With method "all" the last
/// summary line is "max_error <value>", the largest pairwise error.
int cmd_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err);

struct MequivOptions {
  std::vector<double> matrix_a;  // re/im pairs, row-major
  std::vector<double> matrix_b;
};

/// JSON {"m_equivalent", "similar", "intertwiner_dim"} on `out`.
int cmd_mequiv(const MequivOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace nhrlc::cli
