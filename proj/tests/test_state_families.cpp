#include <doctest.h>

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "fockbench/fockbench.hpp"
#include "test_helpers.hpp"

using namespace fockbench;

TEST_CASE("coherent alpha = 0 is the vacuum") {
  const PureState psi = coherent_state(0.0, 16);
  CHECK(std::abs(psi.amplitude(0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(psi.tail_mass() == 0.0);
}

TEST_CASE("coherent alpha = 1 has Poisson mean occupation 1") {
  const OperatorSet ops = build_operators(32);
  const PureState psi = coherent_state(1.0, 32);
  const double n_mean =
      psi.amplitudes().dot(ops.n * psi.amplitudes()).real();
  CHECK(n_mean == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(moments(psi, ops).delta_h() == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("coherent alpha = 2i points along p") {
  const OperatorSet ops = build_operators(48);
  const MomentSet m = moments(coherent_state(Complex(0.0, 2.0), 48), ops);
  CHECK(std::abs(m.mean_x) < 1e-10);
  CHECK(m.mean_p == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("insufficient dimension carries the exact Poisson tail") {
  try {
    coherent_state(5.0, 8);
    FAIL("expected InsufficientDimensionError");
  } catch (const InsufficientDimensionError& e) {
    // oracle: 1 - e^{-25} sum_{n<8} 25^n/n!
    double term = std::exp(-25.0), cum = term;
    for (int n = 1; n < 8; ++n) {
      term *= 25.0 / n;
      cum += term;
    }
    CHECK(e.tail_mass == doctest::Approx(1.0 - cum).epsilon(1e-12));
  }
}

TEST_CASE("coherent state equals the displaced vacuum (small D oracle)") {
  const int dim = 24;
  const Complex alpha(0.8, -0.4);
  const Matrix a = fbtest::ladder(dim);
  const Matrix gen = alpha * a.adjoint() - std::conj(alpha) * a;
  const Matrix disp = gen.exp();
  Vector displaced = disp.col(0);  // D(alpha)|0>
  displaced /= displaced.norm();
  const Vector direct = coherent_amplitudes(alpha, dim);
  const Complex z = displaced.dot(direct);
  CHECK((displaced - direct * (std::conj(z) / std::abs(z))).norm() < 1e-10);
}

TEST_CASE("fock states") {
  const PureState one = fock_state(1, 8);
  CHECK(std::abs(one.amplitude(1) - Complex(1.0, 0.0)) == 0.0);
  const OperatorSet ops = build_operators(8);
  const MomentSet m = moments(one, ops);
  CHECK(m.var_x == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(m.var_p == doctest::Approx(1.5).epsilon(1e-13));
  CHECK_THROWS_AS(fock_state(9, 8), InvalidDimensionError);
  CHECK_THROWS_AS(fock_state(8, 8), InvalidDimensionError);
  CHECK_THROWS_AS(fock_state(-1, 8), InvalidDimensionError);
}

TEST_CASE("squeezed vacuum variances and energy differences") {
  const PureState psi = squeezed_vacuum(0.5, 64);
  const OperatorSet ops = build_operators(64);
  const MomentSet m = moments(psi, ops);
  CHECK(m.var_x == doctest::Approx(std::exp(-1.0) / 2).epsilon(1e-12));
  CHECK(m.var_p == doctest::Approx(std::exp(1.0) / 2).epsilon(1e-12));
  CHECK(std::abs(m.corr_k) < 1e-12);
  CHECK(m.delta_l() == doctest::Approx(0.58760).epsilon(1e-5));
  CHECK(m.delta_l() == doctest::Approx(std::sinh(1.0) / 2).epsilon(1e-12));
  CHECK(m.delta_h() == doctest::Approx(0.77154).epsilon(1e-5));
  CHECK(m.delta_h() == doctest::Approx(std::cosh(1.0) / 2).epsilon(1e-12));
  // odd levels stay empty
  for (int n = 1; n < 64; n += 2) {
    CHECK(std::abs(psi.amplitude(n)) == 0.0);
  }
}

TEST_CASE("squeezed vacuum in general units") {
  const OscillatorParams params(2.0, 0.5, 1.5);
  const OperatorSet ops = build_operators(64, params);
  const double s2 = params.sigma() * params.sigma();
  const MomentSet m = moments(squeezed_vacuum(0.3, 64), ops);
  CHECK(m.var_x == doctest::Approx(std::exp(-0.6) * s2 / 2).epsilon(1e-10));
  CHECK(m.var_p == doctest::Approx(std::exp(0.6) * params.hbar * params.hbar /
                                   (2 * s2))
                       .epsilon(1e-10));
}

TEST_CASE("squeezed r = 0 is the vacuum; r = 1 needs headroom") {
  CHECK(fidelity(squeezed_vacuum(0.0, 16), fock_state(0, 16)) ==
        doctest::Approx(1.0));
  // r = 1 at D = 96 passes the closed forms to 1e-7
  const OperatorSet ops = build_operators(96);
  const MomentSet m = moments(squeezed_vacuum(1.0, 96), ops);
  CHECK(std::abs(m.var_x - std::exp(-2.0) / 2) < 1e-7);
  CHECK(std::abs(m.var_p - std::exp(2.0) / 2) < 1e-7);
  // heavy squeezing on a short basis is rejected with the tail attached
  CHECK_THROWS_AS(squeezed_vacuum(2.0, 16), InsufficientDimensionError);
}

TEST_CASE("squeezed vacuum equals the exponentiated squeeze (small r oracle)") {
  const int dim = 48;
  const double r = 0.3;
  const Matrix a = fbtest::ladder(dim);
  const Matrix gen = 0.5 * r * (a * a - a.adjoint() * a.adjoint());
  Vector squeezed = gen.exp().col(0);
  squeezed /= squeezed.norm();
  const Vector direct = squeezed_vacuum(r, dim).amplitudes();
  const Complex overlap = squeezed.dot(direct);
  CHECK((squeezed - direct * (std::conj(overlap) / std::abs(overlap))).norm() <
        1e-9);
}

TEST_CASE("random states are normalized and deterministic") {
  const PureState a = random_state(2, 7);
  CHECK(a.amplitudes().squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  const PureState b = random_state(32, 1234);
  const PureState c = random_state(32, 1234);
  CHECK((b.amplitudes() - c.amplitudes()).norm() == 0.0);
  const PureState d = random_state(32, 1235);
  CHECK((b.amplitudes() - d.amplitudes()).norm() > 1e-3);
}

TEST_CASE("random states fill the basis uniformly on average") {
  const int dim = 32;
  const OperatorSet ops = build_operators(dim);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Vector c = random_state(dim, seed).amplitudes();
    total += c.dot(ops.n * c).real();
  }
  const double mean = total / 1000.0;
  CHECK(std::abs(mean - (dim - 1) / 2.0) < 0.05 * ((dim - 1) / 2.0));
}

TEST_CASE("coherent residual decreases with D until it hits the floor") {
  const Complex alpha(2.2, 0.0);
  double last = 1e9;
  for (int dim : {10, 14, 18, 22, 26}) {
    const OperatorSet ops = build_operators(dim);
    fbtest::WarningCapture mute;  // small-D truncation warnings are the point
    const double r = eigen_residual(PureState(coherent_amplitudes(alpha, dim)),
                                    ops);
    if (last > 1e-13 && r > 1e-13) {
      CHECK(r < last);
    }
    last = r;
  }
  CHECK(last <= 1e-12);
}
