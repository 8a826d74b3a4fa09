#pragma once

#include <Eigen/Dense>

#include "params.hpp"
#include "types.hpp"

namespace perchkit::control {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Controller gains; defaults follow the platform tuning table. The attitude
// gain k1 must lie in the derived admissible interval Omega_1, which rules out
// the table's K1 entry; -0.2 is the documented default.
struct Gains {
    double k0 = 4.0;
    Mat2 Gamma_V = (Mat2() << 0.5, 0.0, 0.0, 0.2).finished();
    double kG = 4.0;
    double k1 = -0.2;
    double c1 = 3.0;
    double k3 = 0.5;
    Mat6 Gamma_gamma = 0.05 * Mat6::Identity();
    double eps_proj = 0.2;
    Mat6 Gamma_proj = 0.01 * Mat6::Identity();

    // actuator limits (documented defaults; the tuning table gives none)
    double f_max = 8.0;                        // [Hz]
    double delta_e_max = 45.0 * M_PI / 180.0;  // [rad]
};

// Tracking references fed to the controllers for one step.
struct ControlRefs {
    double V_R = 0.0;
    double Vdot_R = 0.0;
    double gamma_R = 0.0;     // guidance-corrected path-angle reference
    double gammadot_R = 0.0;  // smooth part of the reference rate
    double alpha_R = 0.0;     // trim angle of attack at the reference
};

// Path-angle channel imbalance eta(alpha); zero at the trim angle of attack.
double eta(double alpha, double V, double k, double gamma_R, double gammadot_R,
           const model::PlatformParams& p, const model::AeroCoeffs& coeffs);

// Integral of eta over [alpha_lo, alpha_hi] (fixed-order Gauss-Legendre);
// used by the Lyapunov verification.
double eta_integral(double alpha_lo, double alpha_hi, double V, double k, double gamma_R,
                    double gammadot_R, const model::PlatformParams& p,
                    const model::AeroCoeffs& coeffs);

struct TrimBracket {
    double lo = -0.2;
    double hi = 36.0 * M_PI / 180.0;
};

// Bisection root of eta to 1e-8 rad. Throws TrimNotFoundError when eta does
// not change sign over the bracket.
double trim_alpha(double V, double gamma_R, double gammadot_R, double k,
                  const model::PlatformParams& p, const model::AeroCoeffs& coeffs,
                  const TrimBracket& bracket = {});

// Upper bound on (1 + k1) from the aerodynamic stability property.
double k1_upper_bound(double alphaR_min, double k_min, double e1_max,
                      const model::AeroCoeffs& coeffs);

// Operating-point inputs of the gain bounds.
struct GainCheckConfig {
    double alphaR_min = 0.18;
    double k_min = 0.64;
    double e1_max = 60.0 * M_PI / 180.0;
    double V_check = 0.0;  // conservative speed for the k3 condition (e.g. V_P^min)
};

struct GainCheck {
    double k1_bound;     // admissible (1 + k1) upper bound
    double omega1_lo;    // -1
    double omega1_hi;    // k1_bound - 1
    bool k1_ok;
    double k3_bar_xa;    // scaled gain per the derivation's x_a form (diagnostic)
    double k3_bar_xt;    // scaled gain per the tuning rule's x_t form
    bool k3_ok;          // k3_bar_xt > 1
};

GainCheck check_gains(const Gains& g, const model::PlatformParams& p,
                      const model::AeroCoeffs& coeffs, const GainCheckConfig& cfg);

// --- velocity channel -------------------------------------------------------

struct VelocityAdaptiveState {
    Vec2 theta_hat = Vec2::Zero();  // estimate of the reduced drag alpha-part
};

struct VelocityCommand {
    double C_T = 0.0;  // commanded wing thrust [m/s^2 equivalent, see law]
    double f = 0.0;    // applied flapping frequency [Hz]
    bool clamped = false;
    double term_prop = 0.0;
    double term_adapt = 0.0;
    double term_grav = 0.0;
    double term_ff = 0.0;
};

VelocityCommand velocity_feedback(const FlightState& s, const ControlRefs& r,
                                  const VelocityAdaptiveState& a, const Gains& g,
                                  const model::PlatformParams& p,
                                  const model::AeroCoeffs& coeffs);

// Estimate rate; the caller integrates it with the simulation step.
Vec2 velocity_adapt_rate(double e, const ControlRefs& r, double alpha, const Gains& g,
                         const model::PlatformParams& p);

// --- attitude channel -------------------------------------------------------

// True physical parameter vector collecting the reduced wing lift and the unit
// tail entry, scaled by the moment-balance ratio.
Vec6 phi_true(const model::PlatformParams& p, const model::AeroCoeffs& coeffs);

struct AttitudeAdaptiveState {
    Vec6 phi_hat = Vec6::Zero();
};

struct AttitudeCommand {
    double delta_e = 0.0;      // applied deflection [rad]
    double delta_e_cmd = 0.0;  // pre-saturation command [rad]
    bool clamped = false;
    double e1 = 0.0, e2 = 0.0, e2t = 0.0, e3t = 0.0;
    Vec6 Psi = Vec6::Zero();
    double phipsi = 0.0;  // phi_hat' Psi (arcsin argument)
    double term_arcsin = 0.0, term_qff = 0.0, term_alpha = 0.0;
};

// Throws ProjectorBreachError when |phi_hat' Psi| exceeds 1 (invariant failure).
AttitudeCommand attitude_feedback(const FlightState& s, double k, const ControlRefs& r,
                                  const AttitudeAdaptiveState& a, const Gains& g,
                                  const model::PlatformParams& p,
                                  const model::AeroCoeffs& coeffs);

Vec6 attitude_adapt_rate(double V, double e3t, const Vec6& Psi, const Gains& g,
                         const model::PlatformParams& p, const model::AeroCoeffs& coeffs);

// Smooth projector with boundary-layer transition keeping phi_hat' Psi away
// from the arcsin domain edge. eps must lie in [0, S_t/S].
Vec6 project(const Vec6& phi_hat, const Vec6& phi_dot, const Vec6& Psi, double eps,
             const Mat6& Gamma, double st_over_s);

// Outer upper bound of |phi_hat' Psi| enforced by the projector set.
double projector_bound(double st_over_s, double eps);

// --- guidance ---------------------------------------------------------------

struct GuidanceResult {
    double gamma_G = 0.0;
    bool clamped = false;  // arcsin argument saturated
};

GuidanceResult guidance(double z, double z_R, double V, double V_R, double gamma_R, double kG);

}  // namespace perchkit::control
