// Gamma matrices, Dirac spinors and plane-wave electron states.
//
// Conventions: natural units (hbar = c = 1), metric (+,-,-,-), chiral (Weyl)
// representation
//
//   gamma^0 = [[0, 1], [1, 0]],   gamma^k = [[0, sigma^k], [-sigma^k, 0]],
//
// so a spinor splits as psi = (psi_L, psi_R) = (psi1, psi2, psi3, psi4).
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace dmag {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Spinor = Eigen::Matrix<Complex<Real>, 4, 1>;

template <typename Real>
using Matrix4c = Eigen::Matrix<Complex<Real>, 4, 4>;

template <typename Real>
using Matrix2c = Eigen::Matrix<Complex<Real>, 2, 2>;

template <typename Real>
using Vector2c = Eigen::Matrix<Complex<Real>, 2, 1>;

template <typename Real>
using Vector3 = Eigen::Matrix<Real, 3, 1>;

enum class Spin { up, down };

/// Pauli matrix sigma^k for k = 1, 2, 3.
template <typename Real>
Matrix2c<Real> pauli(int k) {
  using C = Complex<Real>;
  Matrix2c<Real> s = Matrix2c<Real>::Zero();
  switch (k) {
    case 1:
      s(0, 1) = C(1);
      s(1, 0) = C(1);
      break;
    case 2:
      s(0, 1) = C(0, -1);
      s(1, 0) = C(0, 1);
      break;
    case 3:
      s(0, 0) = C(1);
      s(1, 1) = C(-1);
      break;
    default:
      throw std::out_of_range("pauli: index must be 1, 2 or 3");
  }
  return s;
}

/// Minkowski metric eta^{mu nu}, signature (+,-,-,-).
template <typename Real>
constexpr Real minkowski(int mu, int nu) {
  if (mu != nu) return Real(0);
  return mu == 0 ? Real(1) : Real(-1);
}

template <typename Real>
struct GammaSet {
  Matrix4c<Real> gamma0;
  std::array<Matrix4c<Real>, 3> gamma;       // gamma^1, gamma^2, gamma^3
  std::array<Matrix4c<Real>, 3> sigma_spin;  // Sigma^k = diag(sigma^k, sigma^k)

  /// gamma^mu for mu = 0..3.
  const Matrix4c<Real>& operator[](int mu) const {
    return mu == 0 ? gamma0 : gamma.at(static_cast<std::size_t>(mu - 1));
  }
};

/// Chiral-representation gamma matrices and block-diagonal spin matrices.
template <typename Real = double>
GammaSet<Real> gamma_matrices() {
  const Matrix2c<Real> id = Matrix2c<Real>::Identity();
  GammaSet<Real> g;
  g.gamma0.setZero();
  g.gamma0.template topRightCorner<2, 2>() = id;
  g.gamma0.template bottomLeftCorner<2, 2>() = id;
  for (int k = 1; k <= 3; ++k) {
    const Matrix2c<Real> s = pauli<Real>(k);
    auto& gk = g.gamma[static_cast<std::size_t>(k - 1)];
    gk.setZero();
    gk.template topRightCorner<2, 2>() = s;
    gk.template bottomLeftCorner<2, 2>() = -s;
    auto& sk = g.sigma_spin[static_cast<std::size_t>(k - 1)];
    sk.setZero();
    sk.template topLeftCorner<2, 2>() = s;
    sk.template bottomRightCorner<2, 2>() = s;
  }
  return g;
}

/// Process-wide immutable copy of the chiral set.
template <typename Real = double>
const GammaSet<Real>& chiral_gammas() {
  static const GammaSet<Real> set = gamma_matrices<Real>();
  return set;
}

/// Relativistic dispersion sqrt(|k|^2 + m^2).
template <typename Real>
Real energy_of(const Vector3<Real>& k, Real mass) {
  if (!(mass > Real(0))) throw std::domain_error("energy_of: mass must be positive");
  using std::sqrt;
  return sqrt(k.squaredNorm() + mass * mass);
}

/// Complex spin-up / spin-down coefficients of a superposed state.
template <typename Real>
struct SpinAmplitudes {
  Complex<Real> lambda_plus{1};
  Complex<Real> lambda_minus{0};

  static constexpr double completeness_tolerance = 1e-12;

  /// Throws std::invalid_argument unless |l+|^2 + |l-|^2 = 1 within 1e-12.
  static SpinAmplitudes make(Complex<Real> plus, Complex<Real> minus) {
    SpinAmplitudes a{plus, minus};
    a.validate();
    return a;
  }

  Real probability() const { return std::norm(lambda_plus) + std::norm(lambda_minus); }

  void validate() const {
    using std::abs;
    const Real p = probability();
    if (!std::isfinite(static_cast<double>(p)) ||
        abs(p - Real(1)) > Real(completeness_tolerance)) {
      throw std::invalid_argument("spin amplitudes violate |lambda_plus|^2 + |lambda_minus|^2 = 1 (got " +
                                  std::to_string(static_cast<double>(p)) + ")");
    }
  }

  Vector2c<Real> as_two_spinor() const { return Vector2c<Real>(lambda_plus, lambda_minus); }
};

/// Unit 2-spinor for the given spin along z.
template <typename Real>
Vector2c<Real> basis_two_spinor(Spin spin) {
  return spin == Spin::up ? Vector2c<Real>(Real(1), Real(0)) : Vector2c<Real>(Real(0), Real(1));
}

/// Positive-energy u-spinor for momentum k, normalized to u^dagger u = 2E.
///
/// sqrt(p.sigma) = ((E + m) - k.sigma) / sqrt(2(E + m)) and
/// sqrt(p.sigmabar) = ((E + m) + k.sigma) / sqrt(2(E + m)).
template <typename Real>
Spinor<Real> boosted_spinor(Spin spin, const Vector3<Real>& k, Real mass) {
  using std::sqrt;
  const Real energy = energy_of(k, mass);
  Matrix2c<Real> k_dot_sigma = Matrix2c<Real>::Zero();
  for (int j = 1; j <= 3; ++j) k_dot_sigma += Complex<Real>(k(j - 1)) * pauli<Real>(j);
  const Matrix2c<Real> shifted = Complex<Real>(energy + mass) * Matrix2c<Real>::Identity();
  const Complex<Real> scale(Real(1) / sqrt(Real(2) * (energy + mass)));
  const Vector2c<Real> xi = basis_two_spinor<Real>(spin);
  Spinor<Real> u;
  u.template head<2>() = scale * ((shifted - k_dot_sigma) * xi);
  u.template tail<2>() = scale * ((shifted + k_dot_sigma) * xi);
  return u;
}

/// Rest-frame u-spinor, u^dagger u = 2m; upper and lower blocks coincide.
template <typename Real>
Spinor<Real> rest_spinor(Spin spin, Real mass) {
  if (!(mass > Real(0))) throw std::domain_error("rest_spinor: mass must be positive");
  return boosted_spinor<Real>(spin, Vector3<Real>::Zero(), mass);
}

/// (gamma^mu p_mu - m) with p = (E, k); annihilates positive-energy u-spinors.
template <typename Real>
Matrix4c<Real> dirac_operator(Real energy, const Vector3<Real>& k, Real mass) {
  const auto& g = chiral_gammas<Real>();
  Matrix4c<Real> op = Complex<Real>(energy) * g.gamma0 - Complex<Real>(mass) * Matrix4c<Real>::Identity();
  for (int j = 0; j < 3; ++j) op -= Complex<Real>(k(j)) * g.gamma[static_cast<std::size_t>(j)];
  return op;
}

/// Single-electron plane wave normalized to unit probability in a box of
/// volume norm_volume.
template <typename Real>
class PlaneWaveState {
 public:
  PlaneWaveState(const Vector3<Real>& k, Real mass, SpinAmplitudes<Real> amplitudes, Real norm_volume)
      : k_(k), mass_(mass), amplitudes_(amplitudes), norm_volume_(norm_volume) {
    if (!k.allFinite()) throw std::invalid_argument("plane wave: momentum must be finite");
    if (!(mass > Real(0))) throw std::invalid_argument("plane wave: mass must be positive");
    if (!(norm_volume > Real(0)) || !std::isfinite(static_cast<double>(norm_volume))) {
      throw std::invalid_argument("plane wave: norm_volume must be positive");
    }
    amplitudes_.validate();
    energy_ = energy_of(k_, mass_);
  }

  /// Momentum along z, the configuration used throughout the analysis.
  static PlaneWaveState along_z(Real k3, Real mass, SpinAmplitudes<Real> amplitudes, Real norm_volume) {
    return PlaneWaveState(Vector3<Real>(Real(0), Real(0), k3), mass, amplitudes, norm_volume);
  }

  const Vector3<Real>& momentum() const { return k_; }
  Real mass() const { return mass_; }
  Real energy() const { return energy_; }
  const SpinAmplitudes<Real>& amplitudes() const { return amplitudes_; }
  Real norm_volume() const { return norm_volume_; }

 private:
  Vector3<Real> k_;
  Real mass_;
  SpinAmplitudes<Real> amplitudes_;
  Real norm_volume_;
  Real energy_{};
};

/// lambda_plus u(k, up) + lambda_minus u(k, down), scaled so that
/// psi^dagger psi * norm_volume = 1.
template <typename Real>
Spinor<Real> superposed_spinor(const PlaneWaveState<Real>& state) {
  using std::sqrt;
  const auto& a = state.amplitudes();
  const Spinor<Real> chi = a.lambda_plus * boosted_spinor<Real>(Spin::up, state.momentum(), state.mass()) +
                           a.lambda_minus * boosted_spinor<Real>(Spin::down, state.momentum(), state.mass());
  // u(k,r)^dagger u(k,s) = 2E delta_rs, so chi^dagger chi = 2E.
  const Real scale = Real(1) / sqrt(Real(2) * state.energy() * state.norm_volume());
  return Complex<Real>(scale) * chi;
}

}  // namespace dmag
