#pragma once

#include <stdexcept>

#include "ufsi/basis.hpp"

namespace ufsi {

/// Thrown for invalid configuration (bad parameters, unknown names, ...).
/// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a solve fails (singular system, non-convergence, inverted
/// mesh). The CLI maps this to exit code 1.
struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Physical parameters of one scenario. Units are whatever consistent set
/// the scenario declares (the benchmarks mix SI and CGS); nothing here
/// enforces a unit system.
struct PhysicalParams {
  double fluid_density = 1.0;       // rho_f
  double fluid_viscosity = 1.0;     // mu_f
  double solid_density = 1.0;       // rho_s, may be below fluid_density
  double solid_shear_modulus = 0.0; // mu_s
  Vec2 gravity = Vec2::Zero();
  double dt = 1e-3;

  void validate() const {
    if (!(fluid_density > 0.0)) throw ConfigError("fluid_density must be positive");
    if (!(fluid_viscosity > 0.0)) throw ConfigError("fluid_viscosity must be positive");
    if (!(solid_density > 0.0)) throw ConfigError("solid_density must be positive");
    if (solid_shear_modulus < 0.0) throw ConfigError("solid_shear_modulus must be >= 0");
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  }
};

}  // namespace ufsi
