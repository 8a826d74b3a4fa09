#include "aero.hpp"

#include <cmath>
#include <fstream>

#include "errors.hpp"

namespace perchkit::model {

namespace {

// r_w = (1, a, k, a^2, k^2, a k, k^3)
std::array<double, 7> wing_regressor(double alpha, double k) {
    return {1.0, alpha, k, alpha * alpha, k * k, alpha * k, k * k * k};
}

template <std::size_t N>
double dot(const std::array<double, N>& a, const std::array<double, N>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

double stall_factor(double alpha, const AeroCoeffs& coeffs) {
    const double arg = coeffs.theta_S[0] * alpha + coeffs.theta_S[1];
    if (!(std::abs(arg) < M_PI / 2.0)) throw EnvelopeError(alpha);
    const double c = std::cos(arg);
    return c * c * c;
}

WingLoads wing_loads(double V, double alpha, double k, double f, double t,
                     const PlatformParams& p, const AeroCoeffs& coeffs,
                     std::optional<double> phase) {
    if (!(k < kReducedFreqMax)) throw ModelRangeError(k);
    const double mu = stall_factor(alpha, coeffs);
    const double qbar = 0.5 * p.rho * V * V * p.S;
    const auto r = wing_regressor(alpha, k);

    WingLoads w;
    w.L_mean = qbar * dot(coeffs.theta_Lw, r) * mu;
    w.L_check = qbar * dot(coeffs.theta_Lw_check, r) * mu;
    w.L = w.L_mean + w.L_check * std::sin(phase ? *phase : 2.0 * M_PI * f * t);
    w.D = qbar * dot(coeffs.theta_Dw, r);
    // theta_Mw carries six entries; it pairs with the first six regressor terms
    // (the k^3 term is dropped).
    double m = 0.0;
    for (int i = 0; i < 6; ++i) m += coeffs.theta_Mw[i] * r[i];
    w.M = qbar * p.c * m;
    return w;
}

TailLoads tail_loads(double V, double alpha_t, double delta_e,
                     const PlatformParams& p, const AeroCoeffs& coeffs) {
    const double qt = 0.5 * p.rho * V * V * p.S_t;
    const double a = alpha_t + delta_e;
    TailLoads tl;
    tl.L = qt * coeffs.theta_Lt[0] * std::sin(coeffs.theta_Lt[1] * a);
    tl.D = qt * (coeffs.theta_Dt[0] - coeffs.theta_Dt[1] * std::cos(coeffs.theta_Dt[2] * a));
    tl.M = qt * p.c_t * coeffs.theta_Mt[0] * std::sin(coeffs.theta_Mt[1] * a);
    return tl;
}

AeroLoads total_forces(const FlightState& s, const ControlInputs& u, double t,
                       const PlatformParams& p, const AeroCoeffs& coeffs,
                       const ModelOptions& opt) {
    const double alpha = s.alpha();
    const double alpha_t = s.alpha_t(p.x_t);
    const double k = reduced_frequency(u.f, p.c, s.V);

    std::optional<double> phase = u.flap_phase;
    if (!phase && opt.flap_rate_scale != 1.0) phase = 2.0 * M_PI * opt.flap_rate_scale * u.f * t;

    WingLoads w = wing_loads(s.V, alpha, k, u.f, t, p, coeffs, phase);
    if (opt.mode == ModelMode::Averaged) w.L = w.L_mean;
    const TailLoads tl = tail_loads(s.V, alpha_t, u.delta_e, p, coeffs);

    const double da = alpha_t - alpha;  // tail flow rotation from pitch rate
    const double L_b = 0.0, D_b = 0.0;

    AeroLoads out;
    out.L_w = w.L;
    out.D_w = w.D;
    out.M_w = w.M;
    out.L_t = tl.L;
    out.D_t = tl.D;
    out.M_t = tl.M;
    out.F_X = -w.D + tl.L * std::sin(da) - tl.D * std::cos(da) - D_b;
    out.F_Z = w.L + tl.L * std::cos(da) + tl.D * std::sin(da) + L_b;
    out.F_M = w.L * p.x_a * std::cos(alpha) + w.D * p.x_a * std::sin(alpha) + w.M
              - tl.L * p.x_t * std::cos(alpha_t) - tl.D * p.x_t * std::sin(alpha_t) + tl.M;
    return out;
}

ReducedWingCoeffs reduced_wing_coeffs(double alpha, double k, const AeroCoeffs& coeffs) {
    ReducedWingCoeffs r;
    r.drag_alpha = coeffs.theta_Dw_red[0] + coeffs.theta_Dw_red[1] * alpha * alpha;
    r.drag_k = coeffs.theta_Dw_red[2] * k * k * k * k;
    r.lift = coeffs.theta_Lw_red[0] + coeffs.theta_Lw_red[1] * alpha
             + coeffs.theta_Lw_red[2] * alpha * alpha + coeffs.theta_Lw_red[3] * k * k
             + coeffs.theta_Lw_red[4] * alpha * k;
    return r;
}

FidelityReport model_fidelity_report(const FidelityGrid& grid, const AeroCoeffs& coeffs) {
    if (grid.n_alpha < 1 || grid.n_k < 1) throw ArgumentError("fidelity grid is empty");

    FidelityReport rep;
    double lift_err2 = 0.0, lift_ref2 = 0.0;
    double drag_err2 = 0.0, drag_ref2 = 0.0;
    for (int i = 0; i < grid.n_alpha; ++i) {
        const double a = grid.n_alpha == 1
                             ? grid.alpha_min
                             : grid.alpha_min + (grid.alpha_max - grid.alpha_min) * i / (grid.n_alpha - 1);
        for (int j = 0; j < grid.n_k; ++j) {
            const double k = grid.n_k == 1 ? grid.k_min
                                           : grid.k_min + (grid.k_max - grid.k_min) * j / (grid.n_k - 1);
            const auto r = wing_regressor(a, k);
            FidelityPoint pt;
            pt.alpha = a;
            pt.k = k;
            pt.lift_full = dot(coeffs.theta_Lw, r);
            pt.drag_full = dot(coeffs.theta_Dw, r);
            const auto red = reduced_wing_coeffs(a, k, coeffs);
            pt.lift_reduced = red.lift;
            pt.drag_reduced = red.drag_alpha + red.drag_k;
            rep.points.push_back(pt);

            lift_err2 += (pt.lift_full - pt.lift_reduced) * (pt.lift_full - pt.lift_reduced);
            lift_ref2 += pt.lift_full * pt.lift_full;
            drag_err2 += (pt.drag_full - pt.drag_reduced) * (pt.drag_full - pt.drag_reduced);
            drag_ref2 += pt.drag_full * pt.drag_full;
        }
    }
    rep.lift_rel_rmse = lift_ref2 > 0.0 ? std::sqrt(lift_err2 / lift_ref2) : 0.0;
    rep.drag_rel_rmse = drag_ref2 > 0.0 ? std::sqrt(drag_err2 / drag_ref2) : 0.0;
    return rep;
}

void FidelityReport::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot open file for writing: " + path);
    out << "alpha,k,lift_full,lift_reduced,drag_full,drag_reduced\n";
    out.precision(12);
    for (const auto& pt : points)
        out << pt.alpha << ',' << pt.k << ',' << pt.lift_full << ',' << pt.lift_reduced << ','
            << pt.drag_full << ',' << pt.drag_reduced << '\n';
}

}  // namespace perchkit::model
