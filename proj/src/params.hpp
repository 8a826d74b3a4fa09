#pragma once

#include <array>

namespace perchkit::model {

// Geometric, mass and environment constants of the platform.
struct PlatformParams {
    double x_a;  // aerodynamic center (c/4) to CG distance [m]
    double x_t;  // CG to tail hinge distance [m]
    double c;    // wing chord [m]
    double c_t;  // tail chord [m]
    double S;    // wing surface [m^2]
    double S_t;  // tail surface [m^2]
    double b;    // wingspan [m]; not used by the longitudinal equations, stored only
    double I_y;  // pitch inertia [kg m^2]
    double m;    // mass [kg]
    double g;    // gravity [m/s^2]
    double rho;  // air density [kg/m^3]

    void validate() const;  // throws ArgumentError
};

// Identified aerodynamic coefficient vectors.
//
// Wing regressor  r_w  = (1, a, k, a^2, k^2, a k, k^3)  with a = angle of attack.
// Reduced lift    r_Lw = (1, a, a^2, k^2, a k).
// Reduced drag splits into an alpha part (1, a^2) and the thrust-generating k^4 term.
struct AeroCoeffs {
    std::array<double, 7> theta_Lw;        // mean wing lift
    std::array<double, 7> theta_Lw_check;  // flapping lift amplitude
    std::array<double, 7> theta_Dw;        // wing drag
    std::array<double, 6> theta_Mw;        // wing pitch moment (pairs with first 6 regressor entries)
    std::array<double, 2> theta_Lt;        // tail lift sinusoid (gain, angular frequency)
    std::array<double, 3> theta_Dt;        // tail drag sinusoid
    std::array<double, 2> theta_Mt;        // tail moment sinusoid
    std::array<double, 2> theta_S;         // stall model mu(a) = cos^3(S1 a + S2)
    std::array<double, 5> theta_Lw_red;    // reduced lift (control model)
    std::array<double, 3> theta_Dw_red;    // reduced drag: (1, a^2) part + k^4 entry (must be < 0)

    void validate(const PlatformParams& p) const;  // throws ArgumentError
};

// Table-I values for the reference platform ("eflap" preset).
PlatformParams eflap_params();
AeroCoeffs eflap_coeffs();

}  // namespace perchkit::model
