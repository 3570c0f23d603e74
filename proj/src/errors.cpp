#include "convexdom/errors.hpp"

namespace convexdom {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string out = "validation failed";
  for (const auto& s : v) {
    out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

BranchCollapseError::BranchCollapseError(std::size_t ray, std::size_t index,
                                         const std::string& what)
    : NumericError(what + " (ray " + std::to_string(ray) + ", index " +
                   std::to_string(index) + ")"),
      ray_(ray),
      index_(index) {}

StiffnessError::StiffnessError(std::size_t ray, double radius, const std::string& what)
    : NumericError(what + " (ray " + std::to_string(ray) + ", r = " +
                   std::to_string(radius) + ")"),
      ray_(ray),
      radius_(radius) {}

}  // namespace convexdom
