// Dirac plane-wave fields and the densities built from them: spin current,
// rho_E and the Hamiltonian density in component-expanded and matrix form.
#pragma once

#include "dirac_magneto/errors.hpp"
#include "dirac_magneto/grid_quadrature.hpp"
#include "dirac_magneto/spinor_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace dmag {

template <typename Real>
struct FieldSample {
  Spinor<Real> value = Spinor<Real>::Zero();
  std::array<Spinor<Real>, 3> gradient{Spinor<Real>::Zero(), Spinor<Real>::Zero(), Spinor<Real>::Zero()};
};

/// Plane wave psi(t, x) = chi exp(-i(E t - k.x)) with the state's spinor
/// precomputed. Gradients are analytic: d_j psi = i k_j psi.
template <typename Real>
class PlaneWaveField {
 public:
  explicit PlaneWaveField(const PlaneWaveState<Real>& state)
      : spinor_(superposed_spinor(state)), k_(state.momentum()), energy_(state.energy()) {}

  FieldSample<Real> at(Real t, const Vector3<Real>& x) const {
    using std::cos;
    using std::sin;
    const Real phase = k_.dot(x) - energy_ * t;
    FieldSample<Real> s;
    s.value = Complex<Real>(cos(phase), sin(phase)) * spinor_;
    for (int j = 0; j < 3; ++j) s.gradient[static_cast<std::size_t>(j)] = Complex<Real>(Real(0), k_(j)) * s.value;
    return s;
  }

  Spinor<Real> value(const Vector3<Real>& x) const { return at(Real(0), x).value; }

 private:
  Spinor<Real> spinor_;
  Vector3<Real> k_;
  Real energy_;
};

template <typename Real>
FieldSample<Real> evaluate_field(const PlaneWaveState<Real>& state, Real t, const Vector3<Real>& x) {
  return PlaneWaveField<Real>(state).at(t, x);
}

/// Cube [0, V^(1/3)]^3 holding the unit probability of the state.
template <typename Real>
BoxRegion<Real> normalization_box(const PlaneWaveState<Real>& state, int samples) {
  using std::cbrt;
  return BoxRegion<Real>::cube(Vector3<Real>::Zero(), cbrt(state.norm_volume()), samples);
}

/// Spin current:
///   s1 = Re(psi1* psi2 + psi3* psi4), s2 = Im(psi1* psi2 + psi3* psi4),
///   s3 = (|psi1|^2 - |psi2|^2 + |psi3|^2 - |psi4|^2) / 2.
template <typename Real>
Vector3<Real> spin_density(const Spinor<Real>& psi) {
  const Complex<Real> z = std::conj(psi(0)) * psi(1) + std::conj(psi(2)) * psi(3);
  const Real s3 = (std::norm(psi(0)) - std::norm(psi(1)) + std::norm(psi(2)) - std::norm(psi(3))) / Real(2);
  return Vector3<Real>(z.real(), z.imag(), s3);
}

/// Spin current with the lower pair psi3, psi4 dropped.
template <typename Real>
Vector3<Real> spin_density_nrl(const Spinor<Real>& psi) {
  Spinor<Real> upper = psi;
  upper(2) = Complex<Real>(0);
  upper(3) = Complex<Real>(0);
  return spin_density(upper);
}

template <typename Real>
Real probability_density(const Spinor<Real>& psi) {
  return psi.squaredNorm();
}

namespace detail {

// Shared tolerance for bilinears that are real by construction: 1e-12 in
// units of the input's own scale (never below absolute 1e-12).
template <typename Real>
Real reality_tolerance(Real scale) {
  return Real(1e-12) * std::max(Real(1), scale);
}

}  // namespace detail

/// rho_E = (i/m) psi^dagger gamma^k psi, k = 1..3. Real because gamma^k is
/// anti-hermitian; throws ConsistencyError if the discarded imaginary part
/// exceeds tolerance.
template <typename Real>
Vector3<Real> rho_E(const Spinor<Real>& psi, Real mass) {
  if (!(mass > Real(0))) throw std::domain_error("rho_E: mass must be positive");
  const auto& g = chiral_gammas<Real>();
  const Real tol = detail::reality_tolerance(psi.squaredNorm() / mass);
  Vector3<Real> rho;
  for (int k = 0; k < 3; ++k) {
    const Complex<Real> c = Complex<Real>(Real(0), Real(1) / mass) *
                            psi.dot(g.gamma[static_cast<std::size_t>(k)] * psi);  // dot() conjugates the left side
    if (std::abs(c.imag()) > tol) throw ConsistencyError("rho_E component is not real", static_cast<double>(c.imag()));
    rho(k) = c.real();
  }
  return rho;
}

/// Largest |Im| of the three rho_E components before they are discarded.
template <typename Real>
Real rho_E_residue(const Spinor<Real>& psi, Real mass) {
  const auto& g = chiral_gammas<Real>();
  Real worst = 0;
  for (int k = 0; k < 3; ++k) {
    const Complex<Real> c =
        Complex<Real>(Real(0), Real(1) / mass) * psi.dot(g.gamma[static_cast<std::size_t>(k)] * psi);
    worst = std::max(worst, std::abs(c.imag()));
  }
  return worst;
}

/// The three groups of the component-expanded Hamiltonian density.
template <typename Real>
struct HamiltonianTerms {
  Real mass{0};   // 2m Re(psi1* psi3 + psi2* psi4)
  Real upper{0};  // -Im(psi1* d3 psi1 + psi1* (d1 - i d2) psi2 + psi2* (d1 + i d2) psi1 - psi2* d3 psi2)
  Real lower{0};  // +Im(same pattern on psi3, psi4)

  Real total() const { return mass + upper + lower; }
};

template <typename Real>
HamiltonianTerms<Real> hamiltonian_terms_expanded(const FieldSample<Real>& sample, Real mass) {
  using C = Complex<Real>;
  const auto& p = sample.value;
  const auto& d1 = sample.gradient[0];
  const auto& d2 = sample.gradient[1];
  const auto& d3 = sample.gradient[2];
  const C i(0, 1);
  auto block = [&](int a, int b) {
    return std::conj(p(a)) * d3(a) + std::conj(p(a)) * (d1(b) - i * d2(b)) + std::conj(p(b)) * (d1(a) + i * d2(a)) -
           std::conj(p(b)) * d3(b);
  };
  HamiltonianTerms<Real> t;
  t.mass = Real(2) * mass * (std::conj(p(0)) * p(2) + std::conj(p(1)) * p(3)).real();
  t.upper = -block(0, 1).imag();
  t.lower = block(2, 3).imag();
  return t;
}

template <typename Real>
Real hamiltonian_density_expanded(const FieldSample<Real>& sample, Real mass) {
  return hamiltonian_terms_expanded(sample, mass).total();
}

/// psibar [-(i/2) gamma^k d_k + m] psi + (i/2) (d_k psibar) gamma^k psi,
/// evaluated with the matrices directly.
template <typename Real>
Real hamiltonian_density_direct(const FieldSample<Real>& sample, Real mass) {
  using C = Complex<Real>;
  const auto& g = chiral_gammas<Real>();
  const C half_i(0, Real(0.5));
  const auto& psi = sample.value;
  // psibar x = psi^dagger gamma0 x
  const Spinor<Real> g0psi = g.gamma0 * psi;
  C h = C(mass) * g0psi.dot(psi);
  Real scale = mass * psi.squaredNorm();
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& dpsi = sample.gradient[k];
    const Spinor<Real> gk_dpsi = g.gamma[k] * dpsi;
    const Spinor<Real> gk_psi = g.gamma[k] * psi;
    h += -half_i * g0psi.dot(gk_dpsi);
    h += half_i * (g.gamma0 * dpsi).dot(gk_psi);
    scale += psi.norm() * dpsi.norm();
  }
  if (std::abs(h.imag()) > detail::reality_tolerance(scale)) {
    throw ConsistencyError("Hamiltonian density is not real", static_cast<double>(h.imag()));
  }
  return h.real();
}

template <typename Real>
IntegralResult<Vector3<Real>, Real> spin_vector(const PlaneWaveState<Real>& state, const BoxRegion<Real>& region,
                                                const QuadratureRule& rule) {
  const PlaneWaveField<Real> field(state);
  return integrate_vector([&](const Vector3<Real>& x) { return spin_density(field.value(x)); }, region, rule);
}

template <typename Real>
struct ObservableReport {
  Real total_energy{0};
  Real energy_error{0};
  Vector3<Real> spin_vector = Vector3<Real>::Zero();
  Real spin_error{0};
  Real norm_check{0};
  Real norm_error{0};
  HamiltonianTerms<Real> energy_terms;
};

/// Energy (with its term breakdown), spin vector and total probability.
template <typename Real>
ObservableReport<Real> observable_report(const PlaneWaveState<Real>& state, const BoxRegion<Real>& region,
                                         const QuadratureRule& rule) {
  const PlaneWaveField<Real> field(state);
  const Real mass = state.mass();
  ObservableReport<Real> report;

  const auto terms = integrate_vector(
      [&](const Vector3<Real>& x) {
        const auto t = hamiltonian_terms_expanded(field.at(Real(0), x), mass);
        return Vector3<Real>(t.mass, t.upper, t.lower);
      },
      region, rule);
  report.energy_terms = {terms.value(0), terms.value(1), terms.value(2)};
  report.total_energy = report.energy_terms.total();
  report.energy_error = Real(3) * terms.error_estimate;

  const auto spin = spin_vector(state, region, rule);
  report.spin_vector = spin.value;
  report.spin_error = spin.error_estimate;

  const auto norm =
      integrate_scalar([&](const Vector3<Real>& x) { return probability_density(field.value(x)); }, region, rule);
  report.norm_check = norm.value;
  report.norm_error = norm.error_estimate;
  return report;
}

}  // namespace dmag
