#include "dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace perchkit::dynamics {

StateDerivative state_derivative(const FlightState& s, const ControlInputs& u, double t,
                                 const ModelOptions& opt, const model::PlatformParams& p,
                                 const model::AeroCoeffs& coeffs, double v_floor) {
    if (!(s.V > v_floor)) throw SingularityError(s.V);
    const model::AeroLoads loads = model::total_forces(s, u, t, p, coeffs, opt);

    StateDerivative d;
    d.dx = s.V * std::cos(s.gamma);
    d.dz = s.V * std::sin(s.gamma);
    d.dV = (loads.F_X - p.m * p.g * std::sin(s.gamma)) / p.m;
    d.dgamma = (loads.F_Z - p.m * p.g * std::cos(s.gamma)) / (p.m * s.V);
    d.dtheta = s.q;
    d.dq = loads.F_M / p.I_y;
    return d;
}

FlightState step(const FlightState& s, const ControlInputs& u, double t, double dt,
                 const ModelOptions& opt, const model::PlatformParams& p,
                 const model::AeroCoeffs& coeffs, double v_floor) {
    if (!(dt >= 0.0)) throw ArgumentError("step requires dt >= 0");
    const StateDerivative d = state_derivative(s, u, t, opt, p, coeffs, v_floor);
    FlightState n = s;
    n.x += dt * d.dx;
    n.z += dt * d.dz;
    n.theta += dt * d.dtheta;
    n.V += dt * d.dV;
    n.gamma += dt * d.dgamma;
    n.q += dt * d.dq;
    return n;
}

std::vector<std::string> open_loop_columns() {
    return {"t", "x", "z", "theta", "V", "gamma", "q", "alpha", "k", "f", "delta_e"};
}

std::vector<double> open_loop_row(double t, const FlightState& s, const ControlInputs& u,
                                  const model::PlatformParams& p) {
    return {t,       s.x,     s.z, s.theta, s.V, s.gamma, s.q, s.alpha(),
            reduced_frequency(u.f, p.c, s.V), u.f, u.delta_e};
}

SimLog simulate_open_loop(const FlightState& initial, const InputSchedule& schedule,
                          double duration, double dt, const ModelOptions& opt,
                          const model::PlatformParams& p, const model::AeroCoeffs& coeffs,
                          double v_floor) {
    if (!schedule) throw ArgumentError("input schedule is not defined on [0, duration]");
    if (!(duration >= 0.0) || !(dt > 0.0)) throw ArgumentError("bad duration/dt");

    SimLog log(open_loop_columns());
    FlightState s = initial;
    double t = 0.0;
    double phase = 0.0;
    const long n = std::lround(duration / dt);
    for (long i = 0;; ++i) {
        ControlInputs u = schedule(t);
        u.flap_phase = phase;
        log.append(open_loop_row(t, s, u, p));
        if (i >= n) break;
        s = step(s, u, t, dt, opt, p, coeffs, v_floor);
        phase += 2.0 * M_PI * opt.flap_rate_scale * u.f * dt;
        t += dt;
    }
    return log;
}

FullTrim trim_full(double V, double gamma, const model::PlatformParams& p,
                   const model::AeroCoeffs& coeffs) {
    const double f_hi = 0.999 * model::kReducedFreqMax * V / (M_PI * p.c);
    const ModelOptions avg{ModelMode::Averaged, 1.0};

    auto residual = [&](double theta, double f, double de, double out[3]) {
        FlightState s;
        s.theta = theta;
        s.V = V;
        s.gamma = gamma;
        ControlInputs u;
        u.f = f;
        u.delta_e = de;
        const model::AeroLoads loads = model::total_forces(s, u, 0.0, p, coeffs, avg);
        out[0] = loads.F_X - p.m * p.g * std::sin(gamma);
        out[1] = loads.F_Z - p.m * p.g * std::cos(gamma);
        out[2] = loads.F_M;
    };

    double x[3] = {gamma + 0.15, std::min(0.9 * f_hi, 5.0), -0.1};
    double r[3];
    residual(x[0], x[1], x[2], r);

    auto norm = [](const double v[3]) {
        return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    };

    for (int it = 0; it < 80; ++it) {
        if (norm(r) < 1e-10) break;
        // numeric Jacobian
        double J[3][3];
        const double h[3] = {1e-7, 1e-7, 1e-7};
        for (int j = 0; j < 3; ++j) {
            double xp[3] = {x[0], x[1], x[2]};
            xp[j] += h[j];
            double rp[3];
            residual(xp[0], xp[1], xp[2], rp);
            for (int i = 0; i < 3; ++i) J[i][j] = (rp[i] - r[i]) / h[j];
        }
        // solve J dx = -r by Gaussian elimination with partial pivoting
        double A[3][4];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) A[i][j] = J[i][j];
            A[i][3] = -r[i];
        }
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int i = col + 1; i < 3; ++i)
                if (std::abs(A[i][col]) > std::abs(A[piv][col])) piv = i;
            if (std::abs(A[piv][col]) < 1e-14) throw TrimNotFoundError("singular trim Jacobian");
            std::swap(A[col], A[piv]);
            for (int i = 0; i < 3; ++i) {
                if (i == col) continue;
                const double fct = A[i][col] / A[col][col];
                for (int j = col; j < 4; ++j) A[i][j] -= fct * A[col][j];
            }
        }
        double dx[3];
        for (int i = 0; i < 3; ++i) dx[i] = A[i][3] / A[i][i];

        // backtracking on the residual norm, keeping f inside the model range
        const double n0 = norm(r);
        double lam = 1.0;
        for (int bt = 0; bt < 30; ++bt, lam *= 0.5) {
            double xn[3] = {x[0] + lam * dx[0], std::clamp(x[1] + lam * dx[1], 1e-3, f_hi),
                            x[2] + lam * dx[2]};
            double rn[3];
            residual(xn[0], xn[1], xn[2], rn);
            if (norm(rn) < n0) {
                x[0] = xn[0];
                x[1] = xn[1];
                x[2] = xn[2];
                r[0] = rn[0];
                r[1] = rn[1];
                r[2] = rn[2];
                break;
            }
            if (bt == 29) throw TrimNotFoundError("trim iteration stalled");
        }
    }
    if (norm(r) >= 1e-8) throw TrimNotFoundError("trim iteration did not converge");
    return {x[0], x[1], x[2]};
}

}  // namespace perchkit::dynamics
