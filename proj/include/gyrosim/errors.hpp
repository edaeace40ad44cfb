#pragma once

#include <stdexcept>
#include <string>

namespace gyrosim {

// Configuration / usage problems (CLI exit code 2).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Base for runtime numerical failures (CLI exit code 3).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Point outside a model's declared validity domain.
struct field_domain_error : numeric_error {
  explicit field_domain_error(const std::string& msg) : numeric_error(msg) {}
};

// |B| fell below the singularity threshold.
struct singular_field_error : numeric_error {
  explicit singular_field_error(const std::string& msg) : numeric_error(msg) {}
};

// Operation requires data (e.g. pressure) the model does not carry.
struct unsupported_model_error : numeric_error {
  explicit unsupported_model_error(const std::string& msg) : numeric_error(msg) {}
};

// Orbit left the model domain before reaching the requested end time.
struct truncated_trajectory_error : numeric_error {
  double exit_time;
  truncated_trajectory_error(const std::string& msg, double t)
      : numeric_error(msg), exit_time(t) {}
};

// An integrator invariant was violated (signals the step was too large).
struct integration_error : numeric_error {
  explicit integration_error(const std::string& msg) : numeric_error(msg) {}
};

// v parallel to b where a gyrophase or gyromotion direction is required.
struct degenerate_pitch_error : numeric_error {
  explicit degenerate_pitch_error(const std::string& msg) : numeric_error(msg) {}
};

// Requested time grid not covered by a trajectory.
struct coverage_error : numeric_error {
  explicit coverage_error(const std::string& msg) : numeric_error(msg) {}
};

// Too few usable points for a least-squares order fit.
struct fit_error : numeric_error {
  explicit fit_error(const std::string& msg) : numeric_error(msg) {}
};

// A sweep member failed; message names the offending omega.
struct sweep_error : numeric_error {
  explicit sweep_error(const std::string& msg) : numeric_error(msg) {}
};

}  // namespace gyrosim
