#include "params.hpp"

#include "errors.hpp"

namespace perchkit::model {

void PlatformParams::validate() const {
    auto pos = [](double v, const char* name) {
        if (!(v > 0.0)) throw ArgumentError(std::string("parameter must be positive: ") + name);
    };
    pos(x_a, "x_a");
    pos(x_t, "x_t");
    pos(c, "c");
    pos(c_t, "c_t");
    pos(S, "S");
    pos(S_t, "S_t");
    pos(b, "b");
    pos(I_y, "I_y");
    pos(m, "m");
    pos(g, "g");
    pos(rho, "rho");
    if (!(S_t < S)) throw ArgumentError("tail surface must be smaller than wing surface");
    if (!(x_t > x_a)) throw ArgumentError("tail hinge must sit behind the aerodynamic center (x_t > x_a)");
}

void AeroCoeffs::validate(const PlatformParams&) const {
    if (!(theta_Dw_red[2] < 0.0))
        throw ArgumentError("reduced drag k^4 coefficient must be negative (thrust-generating)");
    if (!(theta_Lt[1] > 0.0))
        throw ArgumentError("tail lift angular coefficient theta_Lt[2] must be positive");
}

PlatformParams eflap_params() {
    PlatformParams p{};
    p.x_a = 0.05;
    p.x_t = 0.3;
    p.c = 0.36;
    p.c_t = 0.25;  // not in the identified parameter table; platform tail geometry
    p.S = 0.42;
    p.S_t = 0.12;
    p.b = 1.5;     // not in the identified parameter table; platform wingspan
    p.I_y = 0.044;
    p.m = 0.64;
    p.g = 9.81;
    p.rho = 1.22;
    return p;
}

AeroCoeffs eflap_coeffs() {
    AeroCoeffs a{};
    a.theta_Lw = {-0.31, 2.19, 0.37, 7.38, -0.37, 2.33, 0.0};
    a.theta_Lw_check = {2.85, 2.65, -4.32, -11.24, 7.47, -1.22, 0.0};
    a.theta_Dw = {4.41, -1.10, -16.47, 7.21, 24.82, 0.76, -12.44};
    a.theta_Mw = {-6.14e-2, -12e-2, 6.97e-2, -41e-2, -7.97e-2, -74e-2};
    a.theta_Lt = {0.94, 2.92};
    a.theta_Dt = {0.36, 0.32, 4.23};
    a.theta_Mt = {-0.65, 2.26};
    a.theta_S = {1.35, -0.3};
    a.theta_Lw_red = {-9.88e-2, 2.14, 7.39, -0.24, 2.37};
    a.theta_Dw_red = {2.17, 7.09, -1.92};
    return a;
}

}  // namespace perchkit::model
