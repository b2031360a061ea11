#pragma once

/// @file
/// @brief Pseudo-spectral vorticity-form incompressible Navier-Stokes on the
/// periodic 2-pi square.

#include <Eigen/Core>
#include <functional>
#include <string>

#include "pbb/core/field.hpp"

namespace pbb {

struct NsConfig {
  double cfl_factor = 0.5;
  /// Optional steady vorticity source, sampled on the collocation lattice.
  std::function<double(double, double)> forcing;
};

/// Spectral snapshot of the vorticity field.
///
/// omega_hat holds unnormalized DFT coefficients flattened kx-fastest
/// (index = ky_index * n + kx_index), with integer wavenumbers read as
/// k = idx <= n/2 ? idx : idx - n on each axis.
struct SpectralState {
  Grid2D grid = Grid2D::periodic_square(4);
  Eigen::ArrayXcd omega_hat;
  double nu = 0.0;
  double time = 0.0;
  std::string forcing_descriptor;

  /// Inverse transform onto the collocation lattice as a nodal field.
  Field physical_vorticity() const;
  /// The coefficients wrapped as a complex spectral field for IO.
  Field spectral_field() const;
};

/// Advances the vorticity equation w_t + u.grad(w) = nu laplace(w) + forcing.
///
/// Streamfunction and velocity are recovered spectrally, the advective term
/// is formed in physical space under the 2/3 dealiasing rule, viscosity is
/// folded in exactly through an integrating factor, and the remainder is
/// stepped with third-order SSP Runge-Kutta at an advective CFL-limited dt.
///
/// Requires a periodic square [0, 2*pi]^2 grid with a power-of-two side.
SpectralState ps_ns_solve(const std::function<double(double, double)>& initial_vorticity,
                          const Grid2D& grid, double nu, double t_final,
                          const NsConfig& config = {});

/// Max deviation from conjugate symmetry, relative to the largest coefficient.
double hermitian_asymmetry(const SpectralState& state);

/// Kinetic energy (1/2) integral |u|^2 dA evaluated from the coefficients.
double spectral_energy(const SpectralState& state);

/// Enstrophy (1/2) integral w^2 dA evaluated from the coefficients.
double spectral_enstrophy(const SpectralState& state);

}  // namespace pbb
