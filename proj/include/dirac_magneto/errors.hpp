#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace dmag {

/// A bilinear that must be real came out with an imaginary part above tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, double residue)
      : std::runtime_error(what + " (imaginary residue " + std::to_string(residue) + ")"), residue_(residue) {}

  double residue() const noexcept { return residue_; }

 private:
  double residue_;
};

/// A quadrature sampler returned a non-finite value.
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(const std::array<double, 3>& point)
      : std::runtime_error("non-finite integrand at (" + std::to_string(point[0]) + ", " +
                           std::to_string(point[1]) + ", " + std::to_string(point[2]) + ")"),
        point_(point) {}

  const std::array<double, 3>& point() const noexcept { return point_; }

 private:
  std::array<double, 3> point_;
};

}  // namespace dmag
