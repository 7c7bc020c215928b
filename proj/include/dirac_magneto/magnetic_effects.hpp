// Vector-potential models and the magnetic variations of spin and energy of
// a free electron: brute-force quadratures of the field expressions and the
// closed-form expectation values, with the chirality index
//
//   CI(l+, l-) = Re(l+ l-*) + Im(l+ l-*).
#pragma once

#include "dirac_magneto/errors.hpp"
#include "dirac_magneto/exact_sum.hpp"
#include "dirac_magneto/field_observables.hpp"
#include "dirac_magneto/grid_quadrature.hpp"
#include "dirac_magneto/spinor_core.hpp"

#include <cmath>
#include <concepts>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

namespace dmag {

/// Constant A inside the support.
template <typename Real>
struct UniformPotential {
  Vector3<Real> value = Vector3<Real>::Zero();
};

/// A = (1/2) B x (x - center), B = (0, 0, B3).
template <typename Real>
struct SymmetricGauge {
  Real B3{0};
  Vector3<Real> center = Vector3<Real>::Zero();
};

/// A = (0, B3 (x - x0), 0).
template <typename Real>
struct LandauGauge {
  Real B3{0};
  Real x0{0};
};

template <typename Real>
using PotentialModel = std::variant<UniformPotential<Real>, SymmetricGauge<Real>, LandauGauge<Real>>;

/// A potential that vanishes outside its support box.
template <typename Real>
struct VectorPotential {
  PotentialModel<Real> model;
  BoxRegion<Real> support;
};

template <typename Real>
Vector3<Real> model_value(const PotentialModel<Real>& model, const Vector3<Real>& x) {
  return std::visit(
      [&](const auto& m) -> Vector3<Real> {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, UniformPotential<Real>>) {
          return m.value;
        } else if constexpr (std::is_same_v<M, SymmetricGauge<Real>>) {
          const Vector3<Real> r = x - m.center;
          return Vector3<Real>(-m.B3 * r(1), m.B3 * r(0), Real(0)) / Real(2);
        } else {
          return Vector3<Real>(Real(0), m.B3 * (x(0) - m.x0), Real(0));
        }
      },
      model);
}

template <typename Real>
Vector3<Real> vector_potential_at(const VectorPotential<Real>& potential, const Vector3<Real>& x) {
  if (!potential.support.contains(x)) return Vector3<Real>::Zero();
  return model_value(potential.model, x);
}

/// Uniform potential equal to the average of `potential` over its support.
/// Both gauges are linear in x, so the average is the value at the support
/// center.
template <typename Real>
VectorPotential<Real> averaged_uniform(const VectorPotential<Real>& potential) {
  return {UniformPotential<Real>{model_value(potential.model, potential.support.center())}, potential.support};
}

/// Field strength, interaction dimension d and physical constants.
template <typename Real>
struct MagneticScenario {
  Real B3{1};
  Real d{1};
  Real e_abs{1};
  Real m_e{1};
  Real g_s{2};

  void validate() const {
    if (!std::isfinite(static_cast<double>(B3))) throw std::invalid_argument("scenario: B3 must be finite");
    if (!(d > Real(0))) throw std::invalid_argument("scenario: d must be positive");
    if (!(e_abs > Real(0))) throw std::invalid_argument("scenario: e_abs must be positive");
    if (!(m_e > Real(0))) throw std::invalid_argument("scenario: m_e must be positive");
    if (!std::isfinite(static_cast<double>(g_s))) throw std::invalid_argument("scenario: g_s must be finite");
  }
};

// -- brute-force quadratures -------------------------------------------------

/// -4|e| integral of A . s', with s' the spin current of the upper pair.
/// `field` maps a point to a DiracSpinor.
template <typename Real, typename Field>
  requires std::invocable<Field&, const Vector3<Real>&>
IntegralResult<Real, Real> delta_H_nrl(Field&& field, const VectorPotential<Real>& potential,
                                       const BoxRegion<Real>& region, const QuadratureRule& rule, Real e_abs) {
  const Real coupling = Real(-4) * e_abs;
  auto r = integrate_scalar(
      [&](const Vector3<Real>& x) {
        return coupling * vector_potential_at(potential, x).dot(spin_density_nrl<Real>(field(x)));
      },
      region, rule);
  return r;
}

template <typename Real>
IntegralResult<Real, Real> delta_H_nrl(const PlaneWaveState<Real>& state, const VectorPotential<Real>& potential,
                                       const BoxRegion<Real>& region, const QuadratureRule& rule, Real e_abs) {
  const PlaneWaveField<Real> f(state);
  return delta_H_nrl<Real>([&](const Vector3<Real>& x) { return f.value(x); }, potential, region, rule, e_abs);
}

/// Minimal-coupling interaction energy q psi^dagger alpha^k psi A_k with
/// alpha^k = gamma^0 gamma^k, electron charge q = -|e| and the lowered index
/// A_k = -A^k, i.e. |e| psi^dagger (alpha . A) psi.
template <typename Real>
Real interaction_density_exact(const Spinor<Real>& psi, const Vector3<Real>& a, Real e_abs) {
  const auto& g = chiral_gammas<Real>();
  Matrix4c<Real> alpha_dot_a = Matrix4c<Real>::Zero();
  for (std::size_t k = 0; k < 3; ++k) alpha_dot_a += Complex<Real>(a(static_cast<int>(k))) * (g.gamma0 * g.gamma[k]);
  const Complex<Real> c = Complex<Real>(e_abs) * psi.dot(alpha_dot_a * psi);
  const Real tol = detail::reality_tolerance(e_abs * a.norm() * psi.squaredNorm());
  if (std::abs(c.imag()) > tol) throw ConsistencyError("interaction energy density is not real", static_cast<double>(c.imag()));
  return c.real();
}

template <typename Real, typename Field>
  requires std::invocable<Field&, const Vector3<Real>&>
IntegralResult<Real, Real> delta_H_exact(Field&& field, const VectorPotential<Real>& potential,
                                         const BoxRegion<Real>& region, const QuadratureRule& rule, Real e_abs) {
  return integrate_scalar(
      [&](const Vector3<Real>& x) {
        return interaction_density_exact<Real>(field(x), vector_potential_at(potential, x), e_abs);
      },
      region, rule);
}

template <typename Real>
IntegralResult<Real, Real> delta_H_exact(const PlaneWaveState<Real>& state, const VectorPotential<Real>& potential,
                                         const BoxRegion<Real>& region, const QuadratureRule& rule, Real e_abs) {
  const PlaneWaveField<Real> f(state);
  return delta_H_exact<Real>([&](const Vector3<Real>& x) { return f.value(x); }, potential, region, rule, e_abs);
}

/// |e| integral of A x rho_E.
template <typename Real, typename Field>
  requires std::invocable<Field&, const Vector3<Real>&>
IntegralResult<Vector3<Real>, Real> delta_S(Field&& field, Real mass, const VectorPotential<Real>& potential,
                                            const BoxRegion<Real>& region, const QuadratureRule& rule, Real e_abs) {
  return integrate_vector(
      [&](const Vector3<Real>& x) -> Vector3<Real> {
        return e_abs * vector_potential_at(potential, x).cross(rho_E<Real>(field(x), mass));
      },
      region, rule);
}

template <typename Real>
IntegralResult<Vector3<Real>, Real> delta_S(const PlaneWaveState<Real>& state, const VectorPotential<Real>& potential,
                                            const BoxRegion<Real>& region, const QuadratureRule& rule, Real e_abs) {
  const PlaneWaveField<Real> f(state);
  return delta_S<Real>([&](const Vector3<Real>& x) { return f.value(x); }, state.mass(), potential, region, rule,
                       e_abs);
}

// -- closed forms --------------------------------------------------------------

template <typename Real>
Real chirality_index(const SpinAmplitudes<Real>& a) {
  const Complex<Real> w = a.lambda_plus * std::conj(a.lambda_minus);
  return w.real() + w.imag();
}

/// <Delta S3> = (|e|/m_e) B3 d CI.
template <typename Real>
Real expect_delta_S3_closed(const MagneticScenario<Real>& s, const SpinAmplitudes<Real>& a) {
  return (s.e_abs / s.m_e) * s.B3 * s.d * chirality_index(a);
}

/// <Delta H> = (2 m_e |e| / E0) B3 d CI, defined for E0 >= m_e.
template <typename Real>
Real expect_delta_H_closed(const MagneticScenario<Real>& s, const SpinAmplitudes<Real>& a, Real E0) {
  if (!(E0 >= s.m_e)) throw std::domain_error("expect_delta_H_closed: E0 must be at least m_e");
  return (Real(2) * s.m_e * s.e_abs / E0) * s.B3 * s.d * chirality_index(a);
}

/// Amplitudes at which the electron absorbs the most energy from the field.
/// Real amplitudes: l+ = l- = 1/sqrt(2), CI = 1/2. Without that restriction
/// the supremum 1/sqrt(2) is reached at a relative phase of pi/4,
/// l+ l-* = exp(i pi/4) / 2.
template <typename Real>
SpinAmplitudes<Real> maximal_absorption_amplitudes(bool require_real) {
  const Real r = std::numbers::sqrt2_v<Real> / Real(2);
  if (require_real) return SpinAmplitudes<Real>{Complex<Real>(r), Complex<Real>(r)};
  return SpinAmplitudes<Real>{Complex<Real>(r), std::polar(r, -std::numbers::pi_v<Real> / Real(4))};
}

// -- non-interacting ensemble ------------------------------------------------

template <typename Real>
struct ElectronResult {
  Real delta_S3{0};
  Real delta_H{0};
  Real ci{0};
  bool equal_spin_probability{false};  // |l+| == |l-| within 1e-12
};

template <typename Real>
struct EnsembleResult {
  std::vector<ElectronResult<Real>> per_electron;
  Real total_delta_S3{0};
  Real total_delta_H{0};
};

/// Applies the closed forms to each electron independently; totals are
/// correctly rounded sums of the per-electron values.
template <typename Real>
EnsembleResult<Real> ensemble_apply(std::span<const PlaneWaveState<Real>> states, const MagneticScenario<Real>& s) {
  EnsembleResult<Real> out;
  out.per_electron.reserve(states.size());
  ExactSum<Real> dS3;
  ExactSum<Real> dH;
  for (const auto& st : states) {
    const auto& a = st.amplitudes();
    ElectronResult<Real> e;
    e.ci = chirality_index(a);
    e.delta_S3 = expect_delta_S3_closed(s, a);
    e.delta_H = expect_delta_H_closed(s, a, st.energy());
    e.equal_spin_probability = std::abs(std::abs(a.lambda_plus) - std::abs(a.lambda_minus)) <= Real(1e-12);
    dS3.add(e.delta_S3);
    dH.add(e.delta_H);
    out.per_electron.push_back(e);
  }
  out.total_delta_S3 = dS3.result();
  out.total_delta_H = dH.result();
  return out;
}

}  // namespace dmag
