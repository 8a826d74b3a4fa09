#pragma once

#include <string>
#include <vector>

#include "params.hpp"
#include "types.hpp"

namespace perchkit::model {

inline constexpr double kReducedFreqMax = 2.0;

// Stall attenuation mu(a) = cos^3(S1 a + S2) in (0, 1].
// Throws EnvelopeError when the cosine argument leaves (-pi/2, pi/2).
double stall_factor(double alpha, const AeroCoeffs& coeffs);

struct WingLoads {
    double L = 0.0;       // instantaneous lift at time t [N]
    double L_mean = 0.0;  // mean (flapping-cycle averaged) lift [N]
    double L_check = 0.0; // flapping lift amplitude [N]
    double D = 0.0;       // drag [N]; negative values mean net thrust
    double M = 0.0;       // pitch moment about c/4 [N m]
};

// Wing loads from the identified regressor model. Throws ModelRangeError for
// k >= 2 and propagates EnvelopeError from the stall factor.
// `phase` defaults to 2 pi f t.
WingLoads wing_loads(double V, double alpha, double k, double f, double t,
                     const PlatformParams& p, const AeroCoeffs& coeffs,
                     std::optional<double> phase = std::nullopt);

struct TailLoads {
    double L = 0.0;
    double D = 0.0;
    double M = 0.0;
};

TailLoads tail_loads(double V, double alpha_t, double delta_e,
                     const PlatformParams& p, const AeroCoeffs& coeffs);

// Assembled body-frame forces and pitch moment.
struct AeroLoads {
    double L_w = 0.0, D_w = 0.0, M_w = 0.0;
    double L_t = 0.0, D_t = 0.0, M_t = 0.0;
    double F_X = 0.0, F_Z = 0.0, F_M = 0.0;
};

// Body loads L_b, D_b are held at zero (negligible against the wing/tail terms);
// the assembly keeps their slots so they can be populated later.
AeroLoads total_forces(const FlightState& s, const ControlInputs& u, double t,
                       const PlatformParams& p, const AeroCoeffs& coeffs,
                       const ModelOptions& opt = {});

// Reduced-order scalars used by the controllers (pre stall-factor, pre dynamic
// pressure). Drag is split into its alpha part and the thrust-generating k^4 part.
struct ReducedWingCoeffs {
    double drag_alpha = 0.0;  // theta_Dw_alpha' (1, a^2)
    double drag_k = 0.0;      // theta_Dw_k k^4
    double lift = 0.0;        // theta_Lw_red' (1, a, a^2, k^2, a k)
};

ReducedWingCoeffs reduced_wing_coeffs(double alpha, double k, const AeroCoeffs& coeffs);

// Full-vs-reduced wing model comparison over an (alpha, k) grid.
struct FidelityGrid {
    double alpha_min = -0.2, alpha_max = 0.7;
    double k_min = 0.2, k_max = 1.8;
    int n_alpha = 46, n_k = 33;
};

struct FidelityPoint {
    double alpha, k;
    double lift_full, lift_reduced;
    double drag_full, drag_reduced;
};

struct FidelityReport {
    double lift_rel_rmse = 0.0;
    double drag_rel_rmse = 0.0;
    std::vector<FidelityPoint> points;

    void write_csv(const std::string& path) const;
};

// Throws ArgumentError on an empty grid.
FidelityReport model_fidelity_report(const FidelityGrid& grid, const AeroCoeffs& coeffs);

}  // namespace perchkit::model
