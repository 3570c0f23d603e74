#pragma once

// Three configurations whose dominants have closed forms, used as end-to-end
// oracles:
//   halfplane    h = (1+z)/(1-z),  psi1 alpha=0, beta=1, gamma=0:
//                q = -2 log(1-z)/z - 1
//   exponential  h = e^z,          psi1 alpha=-1/3, beta=1/2, gamma=1:
//                q = 2((2(e^z-1)/(3z))^{3/4} - 1),  H = 2((2e^z/3)^{3/4} - 1)
//   tangent      h = (2+z)/(2-z),  psi2 alpha=-2/3, beta=1, gamma=1/4:
//                q = (tan(-1/2 - (2/z) log((2-z)/2))/2)^{3/5},
//                H = (tan((2+z)/(2(2-z)))/2)^{3/5}

#include <string>
#include <vector>

#include "convexdom/complex_core.hpp"
#include "convexdom/targets.hpp"

namespace convexdom {

struct WorkedExample {
  std::string name;
  ParamSet params;
  AnalyticTarget target;
  Complex a0;
  ComplexMap q;  // closed form, z != 0
  ComplexMap H;
};

std::vector<WorkedExample> worked_examples();

}  // namespace convexdom
