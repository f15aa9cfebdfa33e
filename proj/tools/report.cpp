#include "report.hpp"

#include <stdexcept>

namespace nhrlc::cli {

using nlohmann::json;

namespace {

json matrix_json(const CMat2& m) {
  return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})});
}

CMat2 matrix_from(const json& j) {
  CMat2 m;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(r, c) = j.at(r).at(c).get<Complex>();
  return m;
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const InputBlock& b) {
  j = {{"alpha", b.alpha}, {"omega0", b.omega0}, {"phase", b.phase}};
  put_optional(j, "R", b.resistance);
  put_optional(j, "L", b.inductance);
  put_optional(j, "C", b.capacitance);
}

void from_json(const json& j, InputBlock& b) {
  b.alpha = j.at("alpha").get<double>();
  b.omega0 = j.at("omega0").get<double>();
  b.phase = j.at("phase").get<std::string>();
  b.resistance = get_optional<double>(j, "R");
  b.inductance = get_optional<double>(j, "L");
  b.capacitance = get_optional<double>(j, "C");
}

void to_json(json& j, const EpBlock& b) {
  j = {{"lambda", b.lambda},
       {"phi", b.phi},
       {"psi", b.psi},
       {"self_orthogonality_residual", b.self_orthogonality_residual}};
}

void from_json(const json& j, EpBlock& b) {
  b.lambda = j.at("lambda").get<Complex>();
  b.phi = j.at("phi").get<CVec2>();
  b.psi = j.at("psi").get<CVec2>();
  b.self_orthogonality_residual = j.at("self_orthogonality_residual").get<double>();
}

void to_json(json& j, const SpectralBlock& b) {
  j = {{"eigenvalues", b.eigenvalues},
       {"normalization_products", b.normalization_products},
       {"biorthogonality_residual", b.biorthogonality_residual}};
  put_optional(j, "ep_system", b.ep);
}

void from_json(const json& j, SpectralBlock& b) {
  b.eigenvalues = j.at("eigenvalues").get<std::vector<Complex>>();
  b.normalization_products = j.at("normalization_products").get<std::vector<Complex>>();
  b.biorthogonality_residual = j.at("biorthogonality_residual").get<double>();
  b.ep = get_optional<EpBlock>(j, "ep_system");
}

void to_json(json& j, const MetricBlock& b) {
  j = {{"kind", b.kind},
       {"s_phi", matrix_json(b.s_phi)},
       {"s_psi", matrix_json(b.s_psi)},
       {"h", matrix_json(b.h)},
       {"inverse_residual", b.inverse_residual},
       {"intertwining_residuals",
        {{"h_sphi", b.residual_h_sphi}, {"spsi_h", b.residual_spsi_h}, {"adjoint", b.residual_adjoint}}}};
}

void from_json(const json& j, MetricBlock& b) {
  b.kind = j.at("kind").get<std::string>();
  b.s_phi = matrix_from(j.at("s_phi"));
  b.s_psi = matrix_from(j.at("s_psi"));
  b.h = matrix_from(j.at("h"));
  b.inverse_residual = j.at("inverse_residual").get<double>();
  const json& ir = j.at("intertwining_residuals");
  b.residual_h_sphi = ir.at("h_sphi").get<double>();
  b.residual_spsi_h = ir.at("spsi_h").get<double>();
  b.residual_adjoint = ir.at("adjoint").get<double>();
}

void to_json(json& j, const PseudofermionValues& v) {
  j = {{"a", v.a},
       {"b", v.b},
       {"gamma", v.gamma},
       {"omega", v.omega},
       {"rho", v.rho},
       {"anticommutator_residual", v.anticommutator_residual},
       {"nilpotency_residual", v.nilpotency_residual},
       {"hamiltonian_residual", v.hamiltonian_residual},
       {"ladder_residual", v.ladder_residual}};
}

void from_json(const json& j, PseudofermionValues& v) {
  v.a = j.at("a").get<Complex>();
  v.b = j.at("b").get<Complex>();
  v.gamma = j.at("gamma").get<Complex>();
  v.omega = j.at("omega").get<Complex>();
  v.rho = j.at("rho").get<Complex>();
  v.anticommutator_residual = j.at("anticommutator_residual").get<double>();
  v.nilpotency_residual = j.at("nilpotency_residual").get<double>();
  v.hamiltonian_residual = j.at("hamiltonian_residual").get<double>();
  v.ladder_residual = j.at("ladder_residual").get<double>();
}

void to_json(json& j, const PseudofermionBlock& b) {
  j = {{"pt_symmetric", b.pt_symmetric}};
  put_optional(j, "values", b.values);
  put_optional(j, "existence_violation", b.existence_violation);
}

void from_json(const json& j, PseudofermionBlock& b) {
  b.pt_symmetric = j.at("pt_symmetric").get<bool>();
  b.values = get_optional<PseudofermionValues>(j, "values");
  b.existence_violation = get_optional<std::string>(j, "existence_violation");
}

void to_json(json& j, const EquivalenceBlock& b) { j = {{"trace", b.trace}, {"det", b.det}}; }

void from_json(const json& j, EquivalenceBlock& b) {
  b.trace = j.at("trace").get<Complex>();
  b.det = j.at("det").get<Complex>();
}

void to_json(json& j, const DynamicsBlock& b) {
  j = {{"t_max", b.t_max}, {"dt", b.dt}, {"step", b.step}, {"errors", b.errors}};
}

void from_json(const json& j, DynamicsBlock& b) {
  b.t_max = j.at("t_max").get<double>();
  b.dt = j.at("dt").get<double>();
  b.step = j.at("step").get<double>();
  b.errors = j.at("errors").get<std::map<std::string, double>>();
}

void to_json(json& j, const Report& r) {
  j = {{"schema", r.schema}, {"input", r.input}, {"equivalence", r.equivalence}, {"notes", r.notes}};
  put_optional(j, "spectral", r.spectral);
  put_optional(j, "metric", r.metric);
  put_optional(j, "pseudofermion", r.pseudofermion);
  put_optional(j, "dynamics", r.dynamics);
}

void from_json(const json& j, Report& r) {
  r.schema = j.at("schema").get<int>();
  if (r.schema != kSchemaVersion) throw std::runtime_error("unsupported report schema " + std::to_string(r.schema));
  r.input = j.at("input").get<InputBlock>();
  r.equivalence = j.at("equivalence").get<EquivalenceBlock>();
  r.notes = j.value("notes", std::vector<std::string>{});
  r.spectral = get_optional<SpectralBlock>(j, "spectral");
  r.metric = get_optional<MetricBlock>(j, "metric");
  r.pseudofermion = get_optional<PseudofermionBlock>(j, "pseudofermion");
  r.dynamics = get_optional<DynamicsBlock>(j, "dynamics");
}

std::vector<std::string> tolerance_violations(const Report& r) {
  std::vector<std::string> out;
  auto check = [&](const std::string& name, double value, double tol) {
    // Negated so that NaN counts as a violation.
    if (!(value < tol)) out.push_back(name);
  };
  if (r.spectral) {
    check("spectral.biorthogonality_residual", r.spectral->biorthogonality_residual,
          Tolerances::kBiorthogonality);
    if (r.spectral->ep)
      check("spectral.ep_system.self_orthogonality_residual",
            r.spectral->ep->self_orthogonality_residual, Tolerances::kSelfOrthogonality);
  }
  if (r.metric) {
    check("metric.inverse_residual", r.metric->inverse_residual, Tolerances::kMetricRelative);
    check("metric.intertwining_residuals.h_sphi", r.metric->residual_h_sphi, Tolerances::kMetricRelative);
    check("metric.intertwining_residuals.spsi_h", r.metric->residual_spsi_h, Tolerances::kMetricRelative);
    check("metric.intertwining_residuals.adjoint", r.metric->residual_adjoint, Tolerances::kMetricRelative);
  }
  if (r.pseudofermion && r.pseudofermion->values) {
    const PseudofermionValues& v = *r.pseudofermion->values;
    check("pseudofermion.anticommutator_residual", v.anticommutator_residual, Tolerances::kAlgebraRelative);
    check("pseudofermion.nilpotency_residual", v.nilpotency_residual, Tolerances::kAlgebraRelative);
    check("pseudofermion.hamiltonian_residual", v.hamiltonian_residual, Tolerances::kAlgebraRelative);
    check("pseudofermion.ladder_residual", v.ladder_residual, Tolerances::kAlgebraRelative);
  }
  if (r.dynamics) {
    for (const auto& [pair, err] : r.dynamics->errors) {
      const bool integrated = pair.find("integrated") != std::string::npos;
      check("dynamics.errors." + pair, err, integrated ? Tolerances::kIntegrator : Tolerances::kExactMethods);
    }
  }
  return out;
}

}  // namespace nhrlc::cli
