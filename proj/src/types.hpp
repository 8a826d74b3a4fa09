#pragma once

#include <cmath>
#include <optional>

namespace perchkit {

// Longitudinal flight state. Angle of attack, tail angle of attack and reduced
// frequency are derived quantities, not stored.
struct FlightState {
    double x = 0.0;      // inertial forward position [m]
    double z = 0.0;      // inertial vertical position [m], up positive
    double theta = 0.0;  // pitch, nose up positive [rad]
    double V = 0.0;      // body speed [m/s]
    double gamma = 0.0;  // path angle [rad]
    double q = 0.0;      // pitch rate [rad/s]

    double alpha() const { return theta - gamma; }
    double alpha_t(double x_t) const { return alpha() + x_t * q / V; }
};

struct ControlInputs {
    double f = 0.0;        // flapping frequency [Hz]
    double delta_e = 0.0;  // tail deflection, tail down positive [rad]

    // Flapping phase [rad]. When set, the wing lift sinusoid uses sin(phase)
    // instead of sin(2 pi f t); closed-loop runners accumulate it so the phase
    // stays continuous while f varies.
    std::optional<double> flap_phase;
};

inline double reduced_frequency(double f, double c, double V) { return M_PI * f * c / V; }

enum class ModelMode {
    Full,      // time-dependent flapping lift
    Averaged,  // flapping lift amplitude zeroed
};

struct ModelOptions {
    ModelMode mode = ModelMode::Full;
    // Scales the flapping oscillation rate without touching the mean aerodynamics;
    // used by the averaging-gap frequency sweep.
    double flap_rate_scale = 1.0;
};

}  // namespace perchkit
