#pragma once

#include <functional>

#include "aero.hpp"
#include "simlog.hpp"
#include "types.hpp"

namespace perchkit::dynamics {

inline constexpr double kDefaultVFloor = 0.1;  // [m/s]
inline constexpr double kDefaultDt = 5e-4;     // [s]; >= 200 samples per flapping period up to 8 Hz

struct StateDerivative {
    double dx = 0.0;      // [m/s]
    double dz = 0.0;      // [m/s]
    double dtheta = 0.0;  // [rad/s]
    double dV = 0.0;      // [m/s^2]
    double dgamma = 0.0;  // [rad/s]
    double dq = 0.0;      // [rad/s^2]
};

// Longitudinal equations of motion. Throws SingularityError when V falls below
// the floor (the path-angle equation divides by V).
StateDerivative state_derivative(const FlightState& s, const ControlInputs& u, double t,
                                 const ModelOptions& opt, const model::PlatformParams& p,
                                 const model::AeroCoeffs& coeffs, double v_floor = kDefaultVFloor);

// One explicit Euler step.
FlightState step(const FlightState& s, const ControlInputs& u, double t, double dt,
                 const ModelOptions& opt, const model::PlatformParams& p,
                 const model::AeroCoeffs& coeffs, double v_floor = kDefaultVFloor);

// Open-loop simulation under an input schedule defined on [0, duration].
// Fixed CSV header: t,x,z,theta,V,gamma,q,alpha,k,f,delta_e
using InputSchedule = std::function<ControlInputs(double t)>;

SimLog simulate_open_loop(const FlightState& initial, const InputSchedule& schedule,
                          double duration, double dt, const ModelOptions& opt,
                          const model::PlatformParams& p, const model::AeroCoeffs& coeffs,
                          double v_floor = kDefaultVFloor);

std::vector<std::string> open_loop_columns();
std::vector<double> open_loop_row(double t, const FlightState& s, const ControlInputs& u,
                                  const model::PlatformParams& p);

// Level-flight trim of the averaged full model: solves V' = gamma' = q' = 0 for
// (theta, f, delta_e) at fixed (V, gamma) with Newton iteration, seeded from the
// reduced-model trim. Throws TrimNotFoundError if the iteration stalls.
struct FullTrim {
    double theta;
    double f;
    double delta_e;
};

FullTrim trim_full(double V, double gamma, const model::PlatformParams& p,
                   const model::AeroCoeffs& coeffs);

}  // namespace perchkit::dynamics
