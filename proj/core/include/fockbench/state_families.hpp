#pragma once

#include <cstdint>

#include "fockbench/state.hpp"
#include "fockbench/types.hpp"

namespace fockbench {

/// Closed-form coherent amplitudes c_n = e^{-|a|^2/2} a^n / sqrt(n!),
/// renormalized after truncation. No tail-mass precondition; prefer
/// coherent_state() unless the caller handles truncation itself.
Vector coherent_amplitudes(Complex alpha, int dim);

/// Annihilation-operator eigenstate truncated to dim levels. Requires the
/// exact Poisson tail mass 1 - e^{-|a|^2} sum_{n<D} |a|^{2n}/n! to be below
/// 1e-10, else throws InsufficientDimensionError carrying the tail mass.
PureState coherent_state(Complex alpha, int dim);

/// Number eigenstate |n>. Throws for n >= dim.
PureState fock_state(int n, int dim);

/// Squeezed vacuum with even amplitudes c_{2k} ~ (-tanh r)^k sqrt((2k)!)/(2^k k!).
/// var_x = e^{-2r} sigma^2/2, var_p = e^{2r} hbar^2/(2 sigma^2), K = 0.
/// Tail mass (max occupancy of the top two levels) must end up below 1e-8.
PureState squeezed_vacuum(double r, int dim);

/// Normalized i.i.d. standard complex Gaussian amplitudes; a given seed
/// always produces the same vector (the generator is hand-rolled on top of
/// mt19937_64, so the output is platform independent).
PureState random_state(int dim, std::uint64_t seed);

}  // namespace fockbench
