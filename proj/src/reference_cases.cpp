#include "convexdom/reference_cases.hpp"

namespace convexdom {

std::vector<WorkedExample> worked_examples() {
  std::vector<WorkedExample> out;

  {
    WorkedExample e;
    e.name = "halfplane";
    e.target = make_janowski(1.0, -1.0);
    e.a0 = 1.0;
    e.q = [](Complex z) { return -2.0 * std::log(1.0 - z) / z - 1.0; };
    e.H = [](Complex z) { return (1.0 + z) / (1.0 - z); };
    out.push_back(std::move(e));
  }
  {
    WorkedExample e;
    e.name = "exponential";
    e.params.alpha = -1.0 / 3.0;
    e.params.beta = 0.5;
    e.params.gamma = 1.0;
    e.target = make_exp(1.0);
    e.a0 = 2.0 * (std::pow(2.0 / 3.0, 0.75) - 1.0);
    e.q = [](Complex z) {
      return 2.0 * (std::pow(2.0 * (std::exp(z) - 1.0) / (3.0 * z), 0.75) - 1.0);
    };
    e.H = [](Complex z) { return 2.0 * (std::pow(2.0 * std::exp(z) / 3.0, 0.75) - 1.0); };
    out.push_back(std::move(e));
  }
  {
    WorkedExample e;
    e.name = "tangent";
    e.params.op = Operator::psi2;
    e.params.alpha = -2.0 / 3.0;
    e.params.beta = 1.0;
    e.params.gamma = 0.25;
    e.target = make_shifted_halfplane(2.0);
    e.a0 = std::pow(0.5 * std::tan(0.5), 0.6);
    e.q = [](Complex z) {
      return std::pow(std::tan(-0.5 - (2.0 / z) * std::log((2.0 - z) / 2.0)) / 2.0, 0.6);
    };
    e.H = [](Complex z) { return std::pow(0.5 * std::tan(0.5 * (2.0 + z) / (2.0 - z)), 0.6); };
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace convexdom
