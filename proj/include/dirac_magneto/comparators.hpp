// Quantum-mechanical (Zeeman) and classical (Larmor) counterparts of the
// field-theory spin variation.
#pragma once

#include "dirac_magneto/magnetic_effects.hpp"
#include "dirac_magneto/spinor_core.hpp"

#include <stdexcept>

namespace dmag {

template <typename Real>
struct ClassicalMomentSpec {
  Real M{1};  // mass of the moment carrier
  Real r{1};  // orbit radius

  void validate() const {
    if (!(M > Real(0))) throw std::invalid_argument("classical moment: M must be positive");
    if (!(r > Real(0))) throw std::invalid_argument("classical moment: r must be positive");
  }
};

/// mu_B = |e| / (2 m_e).
template <typename Real>
Real bohr_magneton(Real e_abs, Real m_e) {
  return e_abs / (Real(2) * m_e);
}

/// Spin part of the Zeeman shift, -g_s mu_B B . S.
template <typename Real>
Real zeeman_shift(const Vector3<Real>& B, const Vector3<Real>& S, Real g_s, Real mu_B) {
  return -g_s * mu_B * B.dot(S);
}

/// omega_L = g_s mu_B B.
template <typename Real>
Real larmor_frequency(Real g_s, Real mu_B, Real B) {
  return (g_s * mu_B) * B;
}

template <typename Real>
Real circular_velocity(Real r, Real omega) {
  if (r < Real(0)) throw std::domain_error("circular_velocity: radius must be non-negative");
  return r * omega;
}

/// L_z = M v r = (M r^2) omega.
template <typename Real>
Real classical_Lz(const ClassicalMomentSpec<Real>& spec, Real omega) {
  return (spec.M * spec.r * spec.r) * omega;
}

/// <Delta S3> written as omega_L d f(l+, l-). Multiplication order matches
/// expect_delta_S3_closed so that g_s = 2 reproduces it bit for bit.
template <typename Real>
Real larmor_form_delta_S3(Real omega_L, Real d, const SpinAmplitudes<Real>& a) {
  if (!(d > Real(0))) throw std::domain_error("larmor_form_delta_S3: d must be positive");
  return omega_L * d * chirality_index(a);
}

}  // namespace dmag
