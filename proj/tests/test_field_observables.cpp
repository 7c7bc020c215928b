#include "dirac_magneto/field_observables.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace dmag;
using dmag::testing::Rng;
using V3 = Vector3<double>;

namespace {

const QuadratureRule kSimpson{QuadratureKind::simpson, 2};

PlaneWaveState<double> state_z(double k3, std::complex<double> lp, std::complex<double> lm, double volume = 1.0) {
  return PlaneWaveState<double>::along_z(k3, 1.0, SpinAmplitudes<double>::make(lp, lm), volume);
}

Spinor<double> spinor(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                      std::complex<double> d) {
  Spinor<double> s;
  s << a, b, c, d;
  return s;
}

// rho_E written out in chiral blocks: psi^dagger gamma^k psi = psi_L^dagger sigma^k psi_R - psi_R^dagger sigma^k psi_L.
V3 rho_E_blocks(const Spinor<double>& psi, double mass) {
  const Vector2c<double> left = psi.head<2>();
  const Vector2c<double> right = psi.tail<2>();
  V3 out;
  for (int k = 1; k <= 3; ++k) {
    const auto s = pauli<double>(k);
    const std::complex<double> b = left.dot(s * right) - right.dot(s * left);
    out(k - 1) = (std::complex<double>(0, 1.0 / mass) * b).real();
  }
  return out;
}

}  // namespace

TEST(EvaluateField, ZeroMomentumIsUniform) {
  const auto s = state_z(0.0, 0.6, std::complex<double>(0, 0.8));
  const auto a = evaluate_field(s, 0.3, V3(0, 0, 0)).value;
  const auto b = evaluate_field(s, 0.3, V3(1.5, -2, 7)).value;
  EXPECT_LE((a - b).norm(), 1e-15);
}

TEST(EvaluateField, DensityIsTimeIndependentAndGradientIsAnalytic) {
  const auto s = state_z(0.37, 0.6, std::complex<double>(0, 0.8), 2.0);
  const V3 x(0.2, 0.4, 0.9);
  const double rho0 = probability_density(evaluate_field(s, 0.0, x).value);
  for (double t : {0.5, 3.0, 100.0}) {
    EXPECT_NEAR(probability_density(evaluate_field(s, t, x).value), rho0, 1e-15);
  }
  const auto f = evaluate_field(s, 1.0, x);
  for (int c = 0; c < 4; ++c) {
    const std::complex<double> ratio = f.gradient[2](c) / f.value(c);
    EXPECT_NEAR(ratio.real(), 0.0, 1e-12);
    EXPECT_NEAR(ratio.imag(), 0.37, 1e-12);
    EXPECT_LE(std::abs(f.gradient[0](c)), 0.0);
  }
}

TEST(SpinDensity, Examples) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_LE((spin_density(spinor(1, 0, 0, 0)) - V3(0, 0, 0.5)).norm(), 0.0);
  EXPECT_LE((spin_density(spinor(r, r, 0, 0)) - V3(0.5, 0, 0)).norm(), 1e-15);
  EXPECT_LE((spin_density(spinor(r, std::complex<double>(0, r), 0, 0)) - V3(0, 0.5, 0)).norm(), 1e-15);
}

TEST(SpinDensity, MatchesHalfSigmaExpectation) {
  Rng rng(11);
  const auto g = gamma_matrices<double>();
  for (int i = 0; i < 100; ++i) {
    const auto psi = dmag::testing::random_spinor(rng);
    const V3 s = spin_density(psi);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(s(k), 0.5 * psi.dot(g.sigma_spin[static_cast<std::size_t>(k)] * psi).real(), 1e-14);
    }
  }
}

TEST(SpinDensityNrl, Examples) {
  EXPECT_LE((spin_density_nrl(spinor(1, 0, 0, 0)) - V3(0, 0, 0.5)).norm(), 0.0);
  EXPECT_LE(spin_density_nrl(spinor(0, 0, std::complex<double>(0.3, 2), -1.7)).norm(), 0.0);
  EXPECT_LE((spin_density_nrl(spinor(0.5, 0.5, 0.5, 0.5)) - V3(0.25, 0, 0)).norm(), 1e-16);
}

TEST(SpinDensityNrl, AgreesWithFullDensityWithoutLowerPair) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto psi = dmag::testing::random_spinor(rng);
    psi(2) = psi(3) = 0.0;
    EXPECT_EQ(spin_density(psi), spin_density_nrl(psi));
  }
}

TEST(SpinVector, Examples) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto box = BoxRegion<double>::cube(V3::Zero(), 1.0, 5);
  EXPECT_LE((spin_vector(state_z(0, 1, 0), box, kSimpson).value - V3(0, 0, 0.5)).norm(), 1e-10);
  EXPECT_NEAR(spin_vector(state_z(0, r, r), box, kSimpson).value(2), 0.0, 1e-10);

  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto a = dmag::testing::random_amplitudes(rng);
    const PlaneWaveState<double> s(V3::Zero(), 1.0, a, 1.0);
    const double expected = (std::norm(a.lambda_plus) - std::norm(a.lambda_minus)) / 2;
    EXPECT_NEAR(spin_vector(s, box, kSimpson).value(2), expected, 1e-10);
  }
}

TEST(RhoE, RestSpinUpPointsAlongZ) {
  const auto s = state_z(0, 1, 0);
  const auto psi = superposed_spinor(s);
  const V3 rho = rho_E(psi, 1.0);
  EXPECT_NEAR(rho(0), 0.0, 1e-15);
  EXPECT_NEAR(rho(1), 0.0, 1e-15);
  EXPECT_LE((rho - rho_E_blocks(psi, 1.0)).norm(), 1e-15);
}

TEST(RhoE, RealPhaseInvariantAndMatchesBlockExpansion) {
  Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    const auto psi = dmag::testing::random_spinor(rng);
    const double m = dmag::testing::uniform(rng, 0.5, 2.0);
    EXPECT_LE(rho_E_residue(psi, m), 1e-12);
    const V3 rho = rho_E(psi, m);
    EXPECT_LE((rho - rho_E_blocks(psi, m)).norm(), 1e-13);
    const double theta = dmag::testing::uniform(rng, 0, 6.3);
    const Spinor<double> rotated = std::polar(1.0, theta) * psi;
    EXPECT_LE((rho_E(rotated, m) - rho).norm(), 1e-13);
  }
  EXPECT_THROW(rho_E(Spinor<double>::Zero().eval(), 0.0), std::domain_error);
}

TEST(HamiltonianDensity, RestSpinorHasOnlyMassTerm) {
  const auto s = state_z(0, 0.6, 0.8);
  const auto f = evaluate_field(s, 0.0, V3(0.1, 0.2, 0.3));
  const auto t = hamiltonian_terms_expanded(f, 1.0);
  EXPECT_EQ(t.upper, 0.0);
  EXPECT_EQ(t.lower, 0.0);
  const auto& p = f.value;
  EXPECT_NEAR(t.mass, 2 * (std::conj(p(0)) * p(2) + std::conj(p(1)) * p(3)).real(), 1e-16);
}

TEST(HamiltonianDensity, ExpandedEqualsDirectOnRandomSamples) {
  Rng rng(15);
  for (int i = 0; i < 1000; ++i) {
    const auto sample = dmag::testing::random_sample(rng);
    const double m = dmag::testing::uniform(rng, 0.1, 3.0);
    const double expanded = hamiltonian_density_expanded(sample, m);
    const double direct = hamiltonian_density_direct(sample, m);
    double scale = m * sample.value.squaredNorm();
    for (const auto& g : sample.gradient) scale += sample.value.norm() * g.norm();
    EXPECT_LE(std::abs(expanded - direct), 1e-12 * scale) << "sample " << i;
  }
}

TEST(HamiltonianDensity, ZeroField) {
  const FieldSample<double> zero;
  EXPECT_EQ(hamiltonian_density_expanded(zero, 1.0), 0.0);
  EXPECT_EQ(hamiltonian_density_direct(zero, 1.0), 0.0);
}

TEST(HamiltonianDensity, PlaneWaveDensityIsEnergyTimesProbability) {
  Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const PlaneWaveState<double> s(dmag::testing::random_vector(rng, 1.5), dmag::testing::uniform(rng, 0.3, 2.0),
                                   dmag::testing::random_amplitudes(rng), dmag::testing::uniform(rng, 0.5, 4.0));
    const auto f = evaluate_field(s, 0.7, dmag::testing::random_vector(rng));
    const double expected = s.energy() * probability_density(f.value);
    EXPECT_NEAR(hamiltonian_density_expanded(f, s.mass()), expected, 1e-13);
    EXPECT_NEAR(hamiltonian_density_direct(f, s.mass()), expected, 1e-13);
  }
}

TEST(HamiltonianDensity, IntegratesToDispersionEnergy) {
  for (double k3 : {0.0, 0.1, 0.5, 2.0}) {
    const auto s = state_z(k3, 0.6, std::complex<double>(0.0, -0.8), 1.0);
    const auto box = normalization_box(s, 9);
    const PlaneWaveField<double> field(s);
    const auto expanded = integrate_scalar(
        [&](const V3& x) { return hamiltonian_density_expanded(field.at(0.0, x), 1.0); }, box, kSimpson);
    const auto direct = integrate_scalar(
        [&](const V3& x) { return hamiltonian_density_direct(field.at(0.0, x), 1.0); }, box, kSimpson);
    EXPECT_NEAR(expanded.value, std::sqrt(1 + k3 * k3), 1e-10);
    EXPECT_NEAR(direct.value, std::sqrt(1 + k3 * k3), 1e-10);
  }
}

TEST(ObservableReport, RestSpinUp) {
  const auto s = state_z(0, 1, 0, 1.0);
  const auto r = observable_report(s, normalization_box(s, 5), kSimpson);
  EXPECT_NEAR(r.total_energy, 1.0, 1e-10);
  EXPECT_LE((r.spin_vector - V3(0, 0, 0.5)).norm(), 1e-10);
  EXPECT_NEAR(r.norm_check, 1.0, 1e-10);
  EXPECT_NEAR(r.energy_terms.mass, 1.0, 1e-10);
}

TEST(ObservableReport, MovingStateAndBalancedState) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto moving = state_z(0.1, 1, 0, 2.0);
  const auto rep = observable_report(moving, normalization_box(moving, 9), kSimpson);
  EXPECT_NEAR(rep.total_energy, std::sqrt(1.01), 1e-8);
  EXPECT_NEAR(rep.energy_terms.total(), rep.total_energy, 0.0);
  const auto balanced = state_z(0.0, r, r);
  EXPECT_NEAR(observable_report(balanced, normalization_box(balanced, 5), kSimpson).spin_vector(2), 0.0, 1e-10);
}

TEST(FieldInvariants, SpinBoundAndPhaseInvariance) {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const PlaneWaveState<double> s(dmag::testing::random_vector(rng, 3.0), dmag::testing::uniform(rng, 0.2, 2.0),
                                   dmag::testing::random_amplitudes(rng), 1.0);
    const auto spin = spin_vector(s, normalization_box(s, 3), QuadratureRule{QuadratureKind::simpson, 1});
    EXPECT_LE(spin.value.norm(), 0.5 + 1e-10);

    const auto f = evaluate_field(s, 0.0, dmag::testing::random_vector(rng));
    FieldSample<double> rotated = f;
    const auto phase = std::polar(1.0, dmag::testing::uniform(rng, 0, 6.3));
    rotated.value *= phase;
    for (auto& g : rotated.gradient) g *= phase;
    EXPECT_LE((spin_density(rotated.value) - spin_density(f.value)).norm(), 1e-14);
    EXPECT_LE((spin_density_nrl(rotated.value) - spin_density_nrl(f.value)).norm(), 1e-14);
    EXPECT_NEAR(hamiltonian_density_expanded(rotated, s.mass()), hamiltonian_density_expanded(f, s.mass()), 1e-13);
    EXPECT_LE((rho_E(rotated.value, s.mass()) - rho_E(f.value, s.mass())).norm(), 1e-13);
  }
}
