#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhrlc/cxmat.hpp"

namespace nhrlc::cli {

inline constexpr int kSchemaVersion = 1;

/// Tolerances behind the exit code of `analyze`. Residuals that scale with
/// the metric (which diverges next to the EP) are stored relative to the
/// norms of the products involved; the others are absolute.
struct Tolerances {
  static constexpr double kBiorthogonality = 1e-12;
  static constexpr double kSelfOrthogonality = 1e-12;
  static constexpr double kMetricRelative = 1e-11;
  static constexpr double kAlgebraRelative = 1e-11;
  static constexpr double kExactMethods = 1e-10;
  static constexpr double kIntegrator = 1e-6;
};

struct InputBlock {
  std::optional<double> resistance;
  std::optional<double> inductance;
  std::optional<double> capacitance;
  double alpha = 0.0;
  double omega0 = 0.0;
  std::string phase;

  friend bool operator==(const InputBlock&, const InputBlock&) = default;
};

struct EpBlock {
  Complex lambda;
  CVec2 phi;
  CVec2 psi;
  double self_orthogonality_residual = 0.0;

  friend bool operator==(const EpBlock&, const EpBlock&) = default;
};

struct SpectralBlock {
  /// (lambda_+, lambda_-) away from the EP, empty at it.
  std::vector<Complex> eigenvalues;
  /// conj(N_phi_a) N_psi_dual(a) for a = +, -.
  std::vector<Complex> normalization_products;
  /// max |<phi_a, psi_b> - expected pairing|
  double biorthogonality_residual = 0.0;
  std::optional<EpBlock> ep;

  friend bool operator==(const SpectralBlock&, const SpectralBlock&) = default;
};

struct MetricBlock {
  std::string kind;  // "S" or "T"
  CMat2 s_phi;
  CMat2 s_psi;
  CMat2 h;
  /// ||S_phi S_psi - 1|| / (||S_phi|| ||S_psi||)
  double inverse_residual = 0.0;
  /// The three intertwining relations, relative to the norms of their products.
  double residual_h_sphi = 0.0;
  double residual_spsi_h = 0.0;
  double residual_adjoint = 0.0;

  friend bool operator==(const MetricBlock&, const MetricBlock&) = default;
};

struct PseudofermionValues {
  Complex a;
  Complex b;
  Complex gamma;
  Complex omega;
  Complex rho;
  /// Algebra residuals divided by 1 + ||c|| ||C||.
  double anticommutator_residual = 0.0;
  double nilpotency_residual = 0.0;
  /// ||H_PF - H|| / (1 + ||H||), worst branch.
  double hamiltonian_residual = 0.0;
  double ladder_residual = 0.0;

  friend bool operator==(const PseudofermionValues&, const PseudofermionValues&) = default;
};

struct PseudofermionBlock {
  std::optional<PseudofermionValues> values;
  /// Set instead of `values` when no pair exists (the EP).
  std::optional<std::string> existence_violation;
  bool pt_symmetric = false;

  friend bool operator==(const PseudofermionBlock&, const PseudofermionBlock&) = default;
};

struct EquivalenceBlock {
  Complex trace;
  Complex det;

  friend bool operator==(const EquivalenceBlock&, const EquivalenceBlock&) = default;
};

struct DynamicsBlock {
  double t_max = 0.0;
  double dt = 0.0;
  double step = 0.0;
  /// "closed-form/spectral" etc. -> max state error over the grid divided by
  /// 1 + the largest state norm.
  std::map<std::string, double> errors;

  friend bool operator==(const DynamicsBlock&, const DynamicsBlock&) = default;
};

struct Report {
  int schema = kSchemaVersion;
  InputBlock input;
  std::optional<SpectralBlock> spectral;
  std::optional<MetricBlock> metric;
  std::optional<PseudofermionBlock> pseudofermion;
  EquivalenceBlock equivalence;
  std::optional<DynamicsBlock> dynamics;
  std::vector<std::string> notes;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Names of the residual fields above their tolerance; empty means exit 0.
std::vector<std::string> tolerance_violations(const Report& r);

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

}  // namespace nhrlc::cli

namespace nlohmann {

template <>
struct adl_serializer<nhrlc::Complex> {
  static void to_json(json& j, const nhrlc::Complex& z) { j = {{"re", z.real()}, {"im", z.imag()}}; }
  static void from_json(const json& j, nhrlc::Complex& z) {
    z = {j.at("re").get<double>(), j.at("im").get<double>()};
  }
};

}  // namespace nlohmann
