#include "control.hpp"

#include <algorithm>
#include <cmath>

#include "aero.hpp"
#include "errors.hpp"

namespace perchkit::control {

namespace {

// reduced lift regressor r_Lw = (1, a, a^2, k^2, a k)
Eigen::Matrix<double, 5, 1> lift_regressor(double alpha, double k) {
    Eigen::Matrix<double, 5, 1> r;
    r << 1.0, alpha, alpha * alpha, k * k, alpha * k;
    return r;
}

Eigen::Matrix<double, 5, 1> reduced_lift_coeffs(const model::AeroCoeffs& c) {
    Eigen::Matrix<double, 5, 1> v;
    for (int i = 0; i < 5; ++i) v(i) = c.theta_Lw_red[static_cast<std::size_t>(i)];
    return v;
}

}  // namespace

double eta(double alpha, double V, double k, double gamma_R, double gammadot_R,
           const model::PlatformParams& p, const model::AeroCoeffs& coeffs) {
    const double beta1 = p.rho * p.S / (2.0 * p.m);
    const double mu = model::stall_factor(alpha, coeffs);
    const double lift = reduced_lift_coeffs(coeffs).dot(lift_regressor(alpha, k));
    return beta1 * V * mu * lift - p.g * std::cos(gamma_R) / V - gammadot_R;
}

double eta_integral(double alpha_lo, double alpha_hi, double V, double k, double gamma_R,
                    double gammadot_R, const model::PlatformParams& p,
                    const model::AeroCoeffs& coeffs) {
    // 16-point Gauss-Legendre nodes/weights on [-1, 1]
    static const double xg[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double wg[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    const double c = 0.5 * (alpha_hi + alpha_lo);
    const double h = 0.5 * (alpha_hi - alpha_lo);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        s += wg[i] * eta(c + h * xg[i], V, k, gamma_R, gammadot_R, p, coeffs);
        s += wg[i] * eta(c - h * xg[i], V, k, gamma_R, gammadot_R, p, coeffs);
    }
    return s * h;
}

double trim_alpha(double V, double gamma_R, double gammadot_R, double k,
                  const model::PlatformParams& p, const model::AeroCoeffs& coeffs,
                  const TrimBracket& bracket) {
    double lo = bracket.lo, hi = bracket.hi;
    double flo = eta(lo, V, k, gamma_R, gammadot_R, p, coeffs);
    const double fhi = eta(hi, V, k, gamma_R, gammadot_R, p, coeffs);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw TrimNotFoundError("eta has no sign change on the trim bracket");
    for (int i = 0; i < 60 && hi - lo > 1e-8; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = eta(mid, V, k, gamma_R, gammadot_R, p, coeffs);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double k1_upper_bound(double alphaR_min, double k_min, double e1_max,
                      const model::AeroCoeffs& c) {
    if (!(e1_max > 0.0)) throw ArgumentError("e1_max must be positive");
    const double th_a = c.theta_Lw_red[1];
    const double th_a2 = c.theta_Lw_red[2];
    const double th_ak = c.theta_Lw_red[4];
    return (th_a + 2.0 * alphaR_min * th_a2 + k_min * th_ak) / (e1_max * th_a2);
}

GainCheck check_gains(const Gains& g, const model::PlatformParams& p,
                      const model::AeroCoeffs& coeffs, const GainCheckConfig& cfg) {
    GainCheck out{};
    out.k1_bound = k1_upper_bound(cfg.alphaR_min, cfg.k_min, cfg.e1_max, coeffs);
    out.omega1_lo = -1.0;
    out.omega1_hi = out.k1_bound - 1.0;
    out.k1_ok = g.k1 > out.omega1_lo && g.k1 <= out.omega1_hi;

    const double beta2w = p.rho * p.S / (2.0 * p.I_y);
    const double v2 = cfg.V_check * cfg.V_check;
    out.k3_bar_xa = v2 * beta2w * p.x_a * g.k3 / g.c1;
    out.k3_bar_xt = v2 * beta2w * p.x_t * g.k3 / g.c1;
    out.k3_ok = out.k3_bar_xt > 1.0;
    return out;
}

VelocityCommand velocity_feedback(const FlightState& s, const ControlRefs& r,
                                  const VelocityAdaptiveState& a, const Gains& g,
                                  const model::PlatformParams& p,
                                  const model::AeroCoeffs& coeffs) {
    const double qbar = p.rho * p.S / (2.0 * p.m);
    const double e = s.V - r.V_R;
    const double alpha = s.alpha();
    const Vec2 reg(1.0, alpha * alpha);

    VelocityCommand cmd;
    cmd.term_prop = -g.k0 * e;
    cmd.term_adapt = qbar * r.V_R * r.V_R * a.theta_hat.dot(reg);
    cmd.term_grav = p.g * std::sin(s.gamma);
    cmd.term_ff = r.Vdot_R;
    cmd.C_T = cmd.term_prop + cmd.term_adapt + cmd.term_grav + cmd.term_ff;

    const double pc = M_PI * p.c;
    if (cmd.C_T <= 0.0) {
        // the wing cannot brake beyond its own drag
        cmd.f = 0.0;
        cmd.clamped = true;
        return cmd;
    }
    const double f4 = -cmd.C_T * s.V * s.V / (qbar * coeffs.theta_Dw_red[2] * pc * pc * pc * pc);
    double f = std::pow(f4, 0.25);
    const double f_k = (model::kReducedFreqMax - 1e-6) * s.V / pc;
    const double f_lim = std::min(g.f_max, f_k);
    if (f > f_lim) {
        f = f_lim;
        cmd.clamped = true;
    }
    cmd.f = f;
    return cmd;
}

Vec2 velocity_adapt_rate(double e, const ControlRefs& r, double alpha, const Gains& g,
                         const model::PlatformParams& p) {
    const double qbar = p.rho * p.S / (2.0 * p.m);
    const Vec2 reg(1.0, alpha * alpha);
    return -qbar * r.V_R * r.V_R * e * (g.Gamma_V.transpose() * reg);
}

Vec6 phi_true(const model::PlatformParams& p, const model::AeroCoeffs& coeffs) {
    const double beta2w = p.rho * p.S / (2.0 * p.I_y);
    const double beta2t = p.rho * p.S_t / (2.0 * p.I_y);
    const double scale = beta2w * p.x_a / (beta2t * coeffs.theta_Lt[0]);
    Vec6 phi;
    for (int i = 0; i < 5; ++i) phi(i) = coeffs.theta_Lw_red[static_cast<std::size_t>(i)];
    phi(5) = 1.0;
    return scale * phi;
}

AttitudeCommand attitude_feedback(const FlightState& s, double k, const ControlRefs& r,
                                  const AttitudeAdaptiveState& a, const Gains& g,
                                  const model::PlatformParams& p,
                                  const model::AeroCoeffs& coeffs) {
    AttitudeCommand cmd;
    const double theta_R = r.gamma_R + r.alpha_R;
    cmd.e1 = s.gamma - r.gamma_R;
    cmd.e2 = s.theta - theta_R;
    cmd.e2t = cmd.e2 + g.k1 * cmd.e1;
    cmd.e3t = s.q + g.c1 * cmd.e1;  // q_R = 0 for the smooth reference path

    const double alpha = s.alpha();
    const double mu = model::stall_factor(alpha, coeffs);
    cmd.Psi.head<5>() = mu * std::cos(alpha) * lift_regressor(alpha, k);
    cmd.Psi(5) = g.k3 * cmd.e3t;

    cmd.phipsi = a.phi_hat.dot(cmd.Psi);
    if (!(std::abs(cmd.phipsi) <= 1.0)) throw ProjectorBreachError(cmd.phipsi);

    cmd.term_arcsin = std::asin(cmd.phipsi) / coeffs.theta_Lt[1];
    cmd.term_qff = -p.x_t * s.q / s.V;
    cmd.term_alpha = -alpha;
    cmd.delta_e_cmd = cmd.term_arcsin + cmd.term_qff + cmd.term_alpha;
    cmd.delta_e = std::clamp(cmd.delta_e_cmd, -g.delta_e_max, g.delta_e_max);
    cmd.clamped = cmd.delta_e != cmd.delta_e_cmd;
    return cmd;
}

Vec6 attitude_adapt_rate(double V, double e3t, const Vec6& Psi, const Gains& g,
                         const model::PlatformParams& p, const model::AeroCoeffs& coeffs) {
    const double beta2t = p.rho * p.S_t / (2.0 * p.I_y);
    const double sgn = coeffs.theta_Lt[0] >= 0.0 ? 1.0 : -1.0;
    return g.Gamma_gamma * (beta2t / g.c1) * sgn * V * V * e3t * Psi;
}

Vec6 project(const Vec6& phi_hat, const Vec6& phi_dot, const Vec6& Psi, double eps,
             const Mat6& Gamma, double st_over_s) {
    if (eps < 0.0 || eps > st_over_s)
        throw ArgumentError("projector boundary layer must lie in [0, S_t/S]");
    const double y = phi_hat.dot(Psi);
    const double edge = st_over_s - eps;
    const double P = y * y - edge * edge;
    if (P <= 0.0) return phi_dot;

    const Vec6 gradP = 2.0 * y * Psi;
    const double outward = gradP.dot(phi_dot);
    if (outward <= 0.0) return phi_dot;

    const double denom = gradP.dot(Gamma * gradP);
    if (denom < 1e-300) return phi_dot;
    const double sigma = eps > 0.0 ? std::min(1.0, P / eps) : 1.0;
    return phi_dot - sigma * (Gamma * gradP) * (outward / denom);
}

double projector_bound(double st_over_s, double eps) {
    const double edge = st_over_s - eps;
    return std::sqrt(edge * edge + eps);
}

GuidanceResult guidance(double z, double z_R, double V, double V_R, double gamma_R, double kG) {
    GuidanceResult out;
    const double e_G = z - z_R;
    double arg = (V_R * std::sin(gamma_R) - kG * e_G) / V;
    if (arg > 1.0 || arg < -1.0) {
        arg = std::clamp(arg, -1.0, 1.0);
        out.clamped = true;
    }
    out.gamma_G = std::asin(arg);
    return out;
}

}  // namespace perchkit::control
