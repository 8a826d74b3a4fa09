#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "params.hpp"
#include "simlog.hpp"

namespace perchkit::planner {

// Initial condition of the approach, with the perch location relative to the
// start point. Convention: gamma0 < 0 (gliding in from above), V0 > 0, xP > 0.
struct ManeuverBoundary {
    double gamma0;  // initial path angle [rad]
    double V0;      // initial speed [m/s]
    double xP;      // perch forward offset [m]
    double zP;      // perch vertical offset [m], up positive

    void validate() const;  // throws ArgumentError
};

// Inputs of the feasibility limits (F1-F5). The safety factors are calibrated
// so the Table-I platform reproduces the reference limits of about -2 m/s^2
// and 2 rad/s.
struct FeasibilityConfig {
    double C_Lmax = 3.45;
    double alpha_s = 36.0 * M_PI / 180.0;  // stall angle of attack [rad]
    double C_Dmax = 2.95;
    double gamma_min = -37.0 * M_PI / 180.0;  // steepest descent considered [rad]
    double safety_f1 = 1.3;                   // stall-speed margin on V_P^min
    double safety_f2 = 0.805;                 // deceleration margin
    double safety_f3 = 1.0237;                // turn-rate margin
    double gammaP_mec_min = 10.0 * M_PI / 180.0;
    double gammaP_mec_max = 60.0 * M_PI / 180.0;
};

struct GammaRange {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(lo < hi); }
};

struct FeasibilityLimits {
    double V_s;             // stall speed [m/s]
    double VP_min;          // F1 [m/s]
    double VdotD_min;       // F2 [m/s^2], negative
    double gammadotT_max;   // F3 [rad/s]
    double gammaP_mec_min;  // F5 [rad]
    double gammaP_mec_max;  // F5 [rad]

    // F4: perch path angles compatible with a tangent-continuous two-phase path.
    static GammaRange kinematic_range(const ManeuverBoundary& b);
    // F4 intersected with F5.
    GammaRange gammaP_range(const ManeuverBoundary& b) const;
};

FeasibilityLimits feasibility_limits(const model::PlatformParams& p,
                                     const model::AeroCoeffs& coeffs,
                                     const FeasibilityConfig& cfg = {});

// Mean-attitude geometry of the two-phase maneuver.
struct MeanGeometry {
    double gammaM;  // (gammaP + gamma0)/2 [rad]
    double L_M;     // descent leg characteristic length [m]
    double R_T;     // vertical turn radius [m]
};

// Throws DegenerateGeometryError when gammaP -> gamma0 or a denominator vanishes.
MeanGeometry mean_geometry(double gamma0, double gammaP, double xP, double zP);

struct ManeuverAccels {
    double VdotD;      // descent-phase deceleration [m/s^2]
    double gammadotT;  // turning-phase rate [rad/s]
};

ManeuverAccels maneuver_accels(const ManeuverBoundary& b, double gammaP, double VP);

enum class CaseLabel : int {
    Infeasible = 0,
    Case1 = 1,  // V_P at the minimum-velocity floor, interior elsewhere
    Case2 = 2,  // turn rate and gammaP_max active
    Case3 = 3,  // turn rate and gammaP_min active
    Case4 = 4,  // deceleration and gammaP_max active
    Case5 = 5,  // deceleration and gammaP_min active
    Case6 = 6,  // both accelerations at their limits
};

struct PerchSolution {
    double gammaP = 0.0;
    double VP = 0.0;
    double VdotD = 0.0;
    double gammadotT = 0.0;
    double T_P = 0.0;  // total maneuver time [s]
    CaseLabel case_label = CaseLabel::Infeasible;
    std::array<double, 7> lambda{};  // KKT multipliers
    std::array<double, 5> sigma{};   // slack variables
    double kkt_max_residual = 0.0;
};

struct Endpoint {
    double xP, zP, T_P;
};

// Forward kinematics: perch point reached by the given maneuver parameters.
Endpoint endpoint_from_params(const ManeuverBoundary& b, double VP, double gammaP,
                              double VdotD, double gammadotT);

enum class TieBreak { Midpoint, LowerEdge, UpperEdge };

std::optional<PerchSolution> solve_case1(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                                         TieBreak tie = TieBreak::Midpoint);

// Cases 2-5 closed forms; only candidates passing their free-constraint checks.
std::vector<PerchSolution> solve_boundary_cases(const ManeuverBoundary& b,
                                                const FeasibilityLimits& lim);

std::optional<PerchSolution> solve_case6(const ManeuverBoundary& b, const FeasibilityLimits& lim);

// Full analytic optimizer: Case 1 if admissible, otherwise the best boundary
// candidate; empty when the start point lies beyond the perching border.
std::optional<PerchSolution> solve_optimal(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                                           TieBreak tie = TieBreak::Midpoint);

// All 16 first-order optimality equations evaluated at the solution:
// 4 stationarity, 5 complementarity, 2 endpoint equalities, 5 slacked inequalities.
std::array<double, 16> kkt_residuals(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                                     const PerchSolution& sol);

// Descartes-normalized quartic coefficients for the fully saturated case
// (descending powers of a = tan(gammaM) - tan(gamma0)).
std::array<double, 5> case6_quartic(const ManeuverBoundary& b, const FeasibilityLimits& lim);

// Closed-form two-phase reference path with lookup by time or by horizontal position.
class ReferenceTrajectory {
public:
    struct RefPoint {
        double t, x, z, V, gamma, Vdot, gammadot;
    };

    ReferenceTrajectory(const ManeuverBoundary& b, const PerchSolution& sol);

    double T_D() const { return T_D_; }
    double T_P() const { return T_P_; }
    double switch_time() const { return T_D_; }
    double x_switch() const { return x_A_; }

    RefPoint at_time(double t) const;
    RefPoint at_position(double x) const;

    // Columns: t,x_R,z_R,V_R,gamma_R,Vdot_R,gammadot_R
    SimLog sample(double dt) const;

private:
    ManeuverBoundary b_;
    PerchSolution sol_;
    double T_D_, T_T_, T_P_, x_A_, z_A_;
};

// Per-start-point classification over a grid, perch at the origin.
struct RegionPoint {
    double x0, z0;
    int case_label;  // 0 = infeasible
    double VP, gammaP, VdotD, gammadotT;
};

std::vector<RegionPoint> region_map(const std::vector<double>& x0s, const std::vector<double>& z0s,
                                    double gamma0, double V0, const FeasibilityLimits& lim,
                                    TieBreak tie = TieBreak::Midpoint);

// Columns: x0,z0,case,VP,gammaP,VdotD,gammadotT
void region_write_csv(const std::vector<RegionPoint>& points, const std::string& path);

}  // namespace perchkit::planner
