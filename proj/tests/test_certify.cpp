#include <doctest.h>

#include <cmath>

#include "fockbench/fockbench.hpp"
#include "test_helpers.hpp"

using namespace fockbench;

namespace {

TimeGrid period_grid(const OperatorSet& ops, int n = 256) {
  return TimeGrid::one_period(ops.params, n);
}

}  // namespace

TEST_CASE("coherent states certify as saturating") {
  const OperatorSet ops = build_operators(48);
  const CertificationReport rep =
      certify(coherent_state(1.0, 48), ops, period_grid(ops));
  CHECK(rep.verdict == Verdict::kSaturating);
  CHECK(rep.max_violation <= 1e-9);
  CHECK(rep.residual <= 1e-9);
}

TEST_CASE("fock |2> is constant but not minimal") {
  const OperatorSet ops = build_operators(32);
  const TimeGrid grid = period_grid(ops);
  const CertificationReport rep = certify(fock_state(2, 32), ops, grid);
  CHECK(rep.verdict == Verdict::kConstantNotMinimal);
  CHECK(std::abs(rep.dL0) <= 1e-12);
  CHECK(std::abs(rep.K0) <= 1e-12);
  CHECK(rep.residual > 1e-8);
  // the product stays pinned at hbar (n + 1/2) = 2.5 on the whole grid
  const MomentSet m0 = moments(fock_state(2, 32), ops);
  for (int i = 0; i < grid.n_samples; ++i) {
    CHECK(evolve_moments(m0, grid.t(i)).uncertainty_product() ==
          doctest::Approx(2.5).epsilon(1e-12));
  }
  CHECK(rep.min_product == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("squeezed vacuum oscillates and touches hbar/2 at t = 0") {
  const OperatorSet ops = build_operators(64);
  const CertificationReport rep =
      certify(squeezed_vacuum(0.5, 64), ops, period_grid(ops, 257));
  CHECK(rep.verdict == Verdict::kOscillating);
  CHECK(rep.min_product == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.max_violation > 1e-4);
}

TEST_CASE("certification is global-phase invariant") {
  const OperatorSet ops = build_operators(32);
  const PureState psi = coherent_state(Complex(0.4, 0.6), 32);
  const PureState rotated(psi.amplitudes() * std::exp(Complex(0.0, 1.234)));
  const CertificationReport a = certify(psi, ops, period_grid(ops));
  const CertificationReport b = certify(rotated, ops, period_grid(ops));
  CHECK(a.verdict == b.verdict);
  CHECK(a.max_violation == doctest::Approx(b.max_violation).epsilon(1e-12));
  CHECK(a.residual == doctest::Approx(b.residual).epsilon(1e-12));
}

TEST_CASE("grid shorter than a period is rejected") {
  const OperatorSet ops = build_operators(16);
  const TimeGrid grid(0.0, 0.9 * ops.params.period(), 64);
  CHECK_THROWS_AS(certify(fock_state(0, 16), ops, grid), InvalidGridError);
}

TEST_CASE("saturating verdict iff vanishing residual across a family") {
  const int dim = 32;
  const OperatorSet ops = build_operators(dim);
  const TimeGrid grid = period_grid(ops, 300);

  int saturating = 0;
  auto check_equivalence = [&](const PureState& psi) {
    const CertificationReport rep = certify(psi, ops, grid);
    const bool is_saturating = rep.verdict == Verdict::kSaturating;
    const bool small_residual = rep.residual <= 1e-8;
    CHECK(is_saturating == small_residual);
    const bool dh_minimal =
        std::abs(moments(psi, ops).delta_h() - 0.5) <= 1e-8;
    CHECK(is_saturating == dh_minimal);
    if (is_saturating) ++saturating;
  };

  for (double re : {0.0, 0.5, 1.0, -1.3}) {
    check_equivalence(coherent_state(Complex(re, 0.3 * re), dim));
  }
  for (int n : {0, 1, 2, 5}) {
    check_equivalence(fock_state(n, dim));
  }
  for (double r : {0.2, 0.5, -0.4}) {
    check_equivalence(squeezed_vacuum(r, dim));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Vector c = random_state(dim - 6, seed).amplitudes();
    Vector padded = Vector::Zero(dim);
    padded.head(dim - 6) = c;
    check_equivalence(PureState(padded));
  }
  // the coherent members and the vacuum entries saturate, nothing else
  CHECK(saturating == 5);
}
