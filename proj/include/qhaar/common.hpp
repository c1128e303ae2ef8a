#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qhaar {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// exp(i*phi)
inline cplx unit_phase(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// q = exp(i*pi/n), the basic deformation phase of order 2n.
inline cplx q_phase(int n) { return unit_phase(pi / static_cast<double>(n)); }

/// lambda = q^2 = exp(2*pi*i/n).
inline cplx lambda_phase(int n) { return unit_phase(2.0 * pi / static_cast<double>(n)); }

/// Integer power of a complex unit, exact for negative exponents as well.
inline cplx unit_pow(cplx z, long long k) {
  if (k == 0) return {1.0, 0.0};
  // |z| = 1, so z^{-1} = conj(z); keep phases exact via arg arithmetic.
  double phi = std::arg(z) * static_cast<double>(k);
  return unit_phase(phi);
}

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct SingularInput : std::runtime_error {
  explicit SingularInput(const std::string& m) : std::runtime_error(m) {}
};
struct NotNormal : std::runtime_error {
  explicit NotNormal(const std::string& m) : std::runtime_error(m) {}
};
struct MarginViolation : std::runtime_error {
  explicit MarginViolation(const std::string& m) : std::runtime_error(m) {}
};
struct MarginExceeded : std::runtime_error {
  explicit MarginExceeded(const std::string& m) : std::runtime_error(m) {}
};
struct RelationViolated : std::runtime_error {
  explicit RelationViolated(const std::string& m) : std::runtime_error(m) {}
};
struct UnsupportedOperand : std::runtime_error {
  explicit UnsupportedOperand(const std::string& m) : std::runtime_error(m) {}
};
struct NotAHeisenbergPair : std::runtime_error {
  explicit NotAHeisenbergPair(const std::string& m) : std::runtime_error(m) {}
};
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& m) : std::runtime_error(m) {}
};
struct OddOrderRequired : std::runtime_error {
  explicit OddOrderRequired(const std::string& m) : std::runtime_error(m) {}
};
struct NearPole : std::runtime_error {
  explicit NearPole(const std::string& m) : std::runtime_error(m) {}
};
struct NotPositive : std::runtime_error {
  explicit NotPositive(const std::string& m) : std::runtime_error(m) {}
};
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace qhaar
