#include "convexdom/report_io.hpp"

#include <cmath>
#include <iomanip>

namespace convexdom {

namespace {

// NaN and infinities have no JSON literal.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json complex_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json params_json(const ParamSet& p) {
  return {{"operator", to_string(p.op)},
          {"alpha", p.alpha},
          {"beta", complex_json(p.beta)},
          {"gamma", complex_json(p.gamma)},
          {"n", p.n}};
}

Json target_json(const AnalyticTarget& t) {
  Json params = Json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  Json j{{"label", t.label}, {"constraint", t.constraint_note}, {"parameters", params}};
  j["bound_case"] = t.bound_case ? Json(case_id(*t.bound_case)) : Json(nullptr);
  return j;
}

Json bound_json(const BoundReport& r) {
  Json case_params = Json::object();
  for (const auto& [k, v] : r.case_parameters) case_params[k] = v;
  Json j{{"case_id", r.case_id},
         {"params", params_json(r.params)},
         {"target", r.target_label},
         {"case_parameters", case_params},
         {"lambda", number(r.lambda.value.real())},
         {"lambda_imag", number(r.lambda.value.imag())},
         {"convergence",
          {{"method", r.lambda.method},
           {"terms", r.lambda.terms},
           {"error_estimate", number(r.lambda.error_estimate)},
           {"quadrature_gap", number(r.quadrature_lambda_gap)}}},
         {"tags", r.tags}};
  j["zeta"] = r.zeta ? number(*r.zeta) : Json(nullptr);
  j["xi"] = r.xi ? number(*r.xi) : Json(nullptr);
  if (r.min_location) {
    j["min_location"] = {{"min_real", number(r.min_location->min_real)},
                         {"argmin_theta", number(r.min_location->argmin_theta)},
                         {"real_at_minus_one", number(r.min_location->real_at_minus)},
                         {"at_minus_one", r.min_location->at_minus_one}};
  } else {
    j["min_location"] = nullptr;
  }
  return j;
}

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"value", number(c.value)},
                      {"threshold", number(c.threshold)},
                      {"relation", c.relation},
                      {"detail", c.detail}});
  }
  Json table = Json::array();
  for (const auto& row : r.sharpness_table) {
    table.push_back({{"r", row.r},
                     {"min_real", number(row.min_real)},
                     {"argmin_theta", number(row.argmin_theta)}});
  }
  Json counter = Json::array();
  for (const auto& c : r.counterexamples) {
    counter.push_back({{"check", c.check},
                       {"configuration", c.configuration},
                       {"omega_theta", number(c.theta)},
                       {"omega_c", complex_json(c.c)},
                       {"z", complex_json(c.z)},
                       {"value", number(c.value)}});
  }
  auto opt = [](const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); };
  return {{"suite", r.suite},
          {"passed", r.passed()},
          {"checks", checks},
          {"convexity_margin_q", opt(r.convexity_margin_q)},
          {"convexity_margin_H", opt(r.convexity_margin_H)},
          {"chain_ok", r.chain_ok ? Json(*r.chain_ok) : Json(nullptr)},
          {"sharpness_table", table},
          {"ode_max_residual", opt(r.ode_max_residual)},
          {"rays_off_principal", r.rays_off_principal ? Json(*r.rays_off_principal) : Json(nullptr)},
          {"counterexamples", counter},
          {"skipped", r.skipped}};
}

Json field_json(const DominantField& f) {
  Json flagged = Json::array();
  for (std::size_t i = 0; i < f.off_principal.size(); ++i) {
    if (f.off_principal[i]) flagged.push_back(i);
  }
  return {{"kind", f.kind == DominantKind::best_dominant ? "q" : "H"},
          {"a0", complex_json(f.a0)},
          {"center_gap", number(f.center_gap)},
          {"rays_off_principal", flagged},
          {"grid", {{"r_max", f.grid.r_max()}, {"rings", f.grid.rings()}, {"thetas", f.grid.thetas()}}}};
}

void write_grid_csv(const DominantField& f, std::ostream& out) {
  out << "r,theta,re_q,im_q,re_dq,im_dq,re_ddq,im_ddq\n";
  out << std::setprecision(17);
  for (std::size_t ray = 0; ray < f.grid.thetas(); ++ray) {
    for (std::size_t ring = 0; ring < f.grid.rings(); ++ring) {
      const std::size_t i = f.grid.index(ray, ring);
      const Complex d1 = f.has_derivatives() ? f.d1[i] : Complex(NAN, NAN);
      const Complex d2 = f.has_derivatives() ? f.d2[i] : Complex(NAN, NAN);
      out << f.grid.levels()[ring] << ',' << f.grid.theta(ray) << ',' << f.values[i].real() << ','
          << f.values[i].imag() << ',' << d1.real() << ',' << d1.imag() << ',' << d2.real() << ','
          << d2.imag() << '\n';
    }
  }
}

void write_sharpness_csv(const std::vector<SharpnessRow>& rows, std::ostream& out) {
  out << "r,min_re,argmin_theta\n" << std::setprecision(17);
  for (const auto& row : rows) out << row.r << ',' << row.min_real << ',' << row.argmin_theta << '\n';
}

}  // namespace convexdom
