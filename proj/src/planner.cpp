#include "planner.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "errors.hpp"

namespace perchkit::planner {

namespace {

constexpr double kGeomTol = 1e-12;

// Feasibility margin for the candidate validity checks. Boundary-active
// constraints are compared against exact equality up to this slack.
constexpr double kFeasTol = 1e-9;

struct CandidateCheck {
    bool ok = false;
    double L_M = 0.0;
    double R_T = 0.0;
};

// Verifies g1..g7 plus physical leg validity for a fully specified candidate.
CandidateCheck check_candidate(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                               double gammaP, double VP, double VdotD, double gammadotT) {
    CandidateCheck c;
    const GammaRange r = lim.gammaP_range(b);
    if (r.empty()) return c;
    if (gammaP < r.lo - kFeasTol || gammaP > r.hi + kFeasTol) return c;
    if (VP < lim.VP_min - kFeasTol) return c;
    if (VdotD < lim.VdotD_min - kFeasTol) return c;
    if (gammadotT > lim.gammadotT_max + kFeasTol || !(gammadotT > 0.0)) return c;

    MeanGeometry g;
    try {
        g = mean_geometry(b.gamma0, gammaP, b.xP, b.zP);
    } catch (const DegenerateGeometryError&) {
        return c;
    }
    if (!(g.L_M > 0.0) || !(g.R_T > 0.0)) return c;

    // phase durations must be non negative
    if (std::abs(VdotD) > kGeomTol && (VP - b.V0) / VdotD < -kFeasTol) return c;

    // endpoint closure
    Endpoint e;
    try {
        e = endpoint_from_params(b, VP, gammaP, VdotD, gammadotT);
    } catch (const DegenerateGeometryError&) {
        return c;
    }
    const double scale = std::max({1.0, std::abs(b.xP), std::abs(b.zP)});
    if (std::abs(e.xP - b.xP) > 1e-6 * scale || std::abs(e.zP - b.zP) > 1e-6 * scale) return c;

    c.ok = true;
    c.L_M = g.L_M;
    c.R_T = g.R_T;
    return c;
}

// Stationarity system: residual_i = rhs_i + sum_j coeff(i,j) * lambda_j,
// in the scaled form of the 16-equation optimality system.
void stationarity_system(const ManeuverBoundary& b, const PerchSolution& s,
                         Eigen::Matrix<double, 4, 7>& coeff, Eigen::Vector4d& rhs) {
    const double t0 = std::tan(b.gamma0);
    const double gM = 0.5 * (s.gammaP + b.gamma0);
    const double tM = std::tan(gM);
    const double sP = std::sin(s.gammaP), cP = std::cos(s.gammaP);
    const double s0 = std::sin(b.gamma0), c0 = std::cos(b.gamma0);

    coeff.setZero();
    rhs.setZero();

    coeff(0, 0) = 1.0;
    coeff(0, 1) = t0;
    coeff(0, 2) = -2.0 * s.VdotD * s.VdotD / (c0 * (s.VP * s.VP - b.V0 * b.V0));

    coeff(1, 0) = 1.0;
    coeff(1, 1) = tM;
    coeff(1, 3) = s.gammadotT * s.gammadotT / (s.VP * (sP - s0));

    coeff(2, 0) = -(s.VP / s.gammadotT) * cP;
    coeff(2, 1) = -(s.VP / s.gammadotT) * sP;
    coeff(2, 4) = -1.0;
    coeff(2, 5) = 1.0;

    rhs(3) = s.VdotD * s.gammadotT;
    coeff(3, 0) = -(s.VdotD * (sP - s0) + c0 * s.VP * s.gammadotT);
    coeff(3, 1) = s.VdotD * (cP - c0) - s0 * s.VP * s.gammadotT;
    coeff(3, 6) = -s.VdotD * s.gammadotT;
}

// Active lambda index sets per case ({0..6} for lambda_1..lambda_7).
std::vector<int> active_lambdas(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return {6};
        case CaseLabel::Case2: return {0, 1, 3, 5};
        case CaseLabel::Case3: return {0, 1, 3, 4};
        case CaseLabel::Case4: return {0, 1, 2, 5};
        case CaseLabel::Case5: return {0, 1, 2, 4};
        case CaseLabel::Case6: return {0, 1, 2, 3};
        default: return {};
    }
}

// Constraint indices (3..7 -> slack 0..4) forced active per case.
std::vector<int> active_constraints(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return {4};        // g7
        case CaseLabel::Case2: return {1, 3};     // g4, g6
        case CaseLabel::Case3: return {1, 2};     // g4, g5
        case CaseLabel::Case4: return {0, 3};     // g3, g6
        case CaseLabel::Case5: return {0, 2};     // g3, g5
        case CaseLabel::Case6: return {0, 1};     // g3, g4
        default: return {};
    }
}

// Fills lambda (from the stationarity equations) and sigma (from the slacks).
void populate_multipliers(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                          PerchSolution& s) {
    Eigen::Matrix<double, 4, 7> coeff;
    Eigen::Vector4d rhs;
    stationarity_system(b, s, coeff, rhs);

    s.lambda.fill(0.0);
    const auto act = active_lambdas(s.case_label);
    if (!act.empty()) {
        Eigen::MatrixXd A(4, static_cast<int>(act.size()));
        for (std::size_t j = 0; j < act.size(); ++j) A.col(static_cast<int>(j)) = coeff.col(act[j]);
        const Eigen::VectorXd x = A.colPivHouseholderQr().solve(-rhs);
        for (std::size_t j = 0; j < act.size(); ++j) s.lambda[act[j]] = x(static_cast<int>(j));
    }

    const GammaRange r = lim.gammaP_range(b);
    const double slack[5] = {s.VdotD - lim.VdotD_min, lim.gammadotT_max - s.gammadotT,
                             s.gammaP - r.lo, r.hi - s.gammaP, s.VP - lim.VP_min};
    const auto actc = active_constraints(s.case_label);
    for (int j = 0; j < 5; ++j) {
        const bool forced = std::find(actc.begin(), actc.end(), j) != actc.end();
        s.sigma[j] = forced ? 0.0 : std::sqrt(std::max(0.0, slack[j]));
    }
}

PerchSolution make_solution(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                            CaseLabel label, double gammaP, double VP, double VdotD,
                            double gammadotT) {
    PerchSolution s;
    s.case_label = label;
    s.gammaP = gammaP;
    s.VP = VP;
    s.VdotD = VdotD;
    s.gammadotT = gammadotT;
    s.T_P = (std::abs(VdotD) > kGeomTol ? (VP - b.V0) / VdotD : 0.0) + (gammaP - b.gamma0) / gammadotT;
    populate_multipliers(b, lim, s);
    const auto res = kkt_residuals(b, lim, s);
    s.kkt_max_residual = 0.0;
    for (double v : res) s.kkt_max_residual = std::max(s.kkt_max_residual, std::abs(v));
    return s;
}

// Real roots of a polynomial (descending coefficients) via the companion
// matrix, with one Newton polish step per root.
std::vector<double> real_roots(std::vector<double> c) {
    // strip leading near-zeros relative to the largest coefficient
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0) return {};
    std::size_t first = 0;
    while (first + 1 < c.size() && std::abs(c[first]) < 1e-13 * cmax) ++first;
    c.erase(c.begin(), c.begin() + static_cast<long>(first));
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) return {};

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) comp(0, i) = -c[static_cast<std::size_t>(i) + 1] / c[0];
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;

    const Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real()))) continue;
        double r = z.real();
        for (int it = 0; it < 2; ++it) {
            double p = 0.0, dp = 0.0;
            for (double ck : c) {
                dp = dp * r + p;
                p = p * r + ck;
            }
            if (std::abs(dp) < 1e-300) break;
            r -= p / dp;
        }
        roots.push_back(r);
    }
    return roots;
}

}  // namespace

void ManeuverBoundary::validate() const {
    if (!(V0 > 0.0)) throw ArgumentError("boundary requires V0 > 0");
    if (!(gamma0 < 0.0)) throw ArgumentError("boundary requires gamma0 < 0");
    if (!(xP > 0.0)) throw ArgumentError("boundary requires xP > 0 (zero-length maneuver)");
}

GammaRange FeasibilityLimits::kinematic_range(const ManeuverBoundary& b) {
    const double base = std::atan(b.zP / b.xP);
    return {2.0 * base - b.gamma0, base + M_PI};
}

GammaRange FeasibilityLimits::gammaP_range(const ManeuverBoundary& b) const {
    const GammaRange kin = kinematic_range(b);
    return {std::max(kin.lo, gammaP_mec_min), std::min(kin.hi, gammaP_mec_max)};
}

FeasibilityLimits feasibility_limits(const model::PlatformParams& p,
                                     const model::AeroCoeffs& coeffs,
                                     const FeasibilityConfig& cfg) {
    (void)coeffs;
    if (!(cfg.C_Lmax > 0.0)) throw ArgumentError("C_Lmax must be positive");
    if (!(cfg.C_Dmax > 0.0)) throw ArgumentError("C_Dmax must be positive");

    FeasibilityLimits lim;
    lim.V_s = std::sqrt(2.0 * p.m * p.g / (p.rho * p.S * cfg.C_Lmax));
    lim.VP_min = cfg.safety_f1 * lim.V_s;

    // F2 critical case: full drag at the stall point while descending at gamma_min.
    const double q_s = 0.5 * p.rho * lim.V_s * lim.V_s * p.S;
    lim.VdotD_min = cfg.safety_f2 * (-(q_s * cfg.C_Dmax) / p.m - p.g * std::sin(cfg.gamma_min));

    // F3 critical case: maximum lift in a level turn at the minimum perch speed.
    const double q_p = 0.5 * p.rho * lim.VP_min * lim.VP_min * p.S;
    lim.gammadotT_max = cfg.safety_f3 * (q_p * cfg.C_Lmax - p.m * p.g) / (p.m * lim.VP_min);

    lim.gammaP_mec_min = cfg.gammaP_mec_min;
    lim.gammaP_mec_max = cfg.gammaP_mec_max;

    if (!(lim.VdotD_min < 0.0)) throw ArgumentError("deceleration limit must come out negative");
    if (!(lim.gammadotT_max > 0.0)) throw ArgumentError("turn-rate limit must come out positive");
    return lim;
}

MeanGeometry mean_geometry(double gamma0, double gammaP, double xP, double zP) {
    if (std::abs(gammaP - gamma0) < 1e-9)
        throw DegenerateGeometryError("gammaP coincides with gamma0");

    MeanGeometry g;
    g.gammaM = 0.5 * (gammaP + gamma0);
    const double tM = std::tan(g.gammaM);
    const double t0 = std::tan(gamma0);
    const double c0 = std::cos(gamma0);
    const double denomL = c0 * (tM - t0);
    const double denomR = (std::sin(gammaP) - std::sin(gamma0)) * (tM - t0);
    if (std::abs(denomL) < kGeomTol || std::abs(denomR) < kGeomTol)
        throw DegenerateGeometryError("mean-geometry denominator vanishes");
    g.L_M = (xP * tM - zP) / denomL;
    g.R_T = (zP - xP * t0) / denomR;
    return g;
}

ManeuverAccels maneuver_accels(const ManeuverBoundary& b, double gammaP, double VP) {
    const MeanGeometry g = mean_geometry(b.gamma0, gammaP, b.xP, b.zP);
    if (std::abs(g.L_M) < kGeomTol || std::abs(g.R_T) < kGeomTol)
        throw DegenerateGeometryError("degenerate maneuver legs");
    return {(VP * VP - b.V0 * b.V0) / (2.0 * g.L_M), VP / g.R_T};
}

Endpoint endpoint_from_params(const ManeuverBoundary& b, double VP, double gammaP,
                              double VdotD, double gammadotT) {
    if (std::abs(gammadotT) < kGeomTol) throw DegenerateGeometryError("gammadotT is zero");
    double xD = 0.0, zD = 0.0, TD = 0.0;
    if (std::abs(VdotD) >= kGeomTol) {
        const double dv2 = VP * VP - b.V0 * b.V0;
        xD = std::cos(b.gamma0) / (2.0 * VdotD) * dv2;
        zD = std::sin(b.gamma0) / (2.0 * VdotD) * dv2;
        TD = (VP - b.V0) / VdotD;
    } else if (std::abs(VP - b.V0) > 1e-9) {
        throw DegenerateGeometryError("VdotD is zero but VP != V0");
    }
    const double xT = (std::sin(gammaP) - std::sin(b.gamma0)) / gammadotT * VP;
    const double zT = -(std::cos(gammaP) - std::cos(b.gamma0)) / gammadotT * VP;
    return {xD + xT, zD + zT, TD + (gammaP - b.gamma0) / gammadotT};
}

std::optional<PerchSolution> solve_case1(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                                         TieBreak tie) {
    b.validate();
    GammaRange r = lim.gammaP_range(b);
    if (r.empty()) return std::nullopt;

    const double t0 = std::tan(b.gamma0);
    const double c0 = std::cos(b.gamma0);
    const double zeta = b.zP / b.xP;
    const double A = lim.VP_min * lim.VP_min - b.V0 * b.V0;

    // g3 at V_P^min restricts gammaP from below when the start speed exceeds
    // the floor; Xi <= 1 means the required deceleration is out of reach.
    if (A < 0.0) {
        const double Xi = 2.0 * b.xP * lim.VdotD_min / (A * c0);
        if (Xi <= 1.0) return std::nullopt;
        const double tM_crit = (t0 - Xi * zeta) / (1.0 - Xi);
        r.lo = std::max(r.lo, 2.0 * std::atan(tM_crit) - b.gamma0);
    }

    // g4 at V_P^min restricts gammaP from above unless the turn-rate budget
    // covers the whole arc.
    const double s2 = lim.gammadotT_max * c0 * (b.zP - b.xP * t0) / (2.0 * lim.VP_min);
    if (s2 <= 0.0) return std::nullopt;
    if (s2 < 1.0) r.hi = std::min(r.hi, b.gamma0 + 2.0 * std::asin(std::sqrt(s2)));

    if (r.empty()) return std::nullopt;

    double gammaP;
    switch (tie) {
        case TieBreak::LowerEdge: gammaP = r.lo + 1e-9; break;
        case TieBreak::UpperEdge: gammaP = r.hi - 1e-9; break;
        default: gammaP = 0.5 * (r.lo + r.hi); break;
    }

    ManeuverAccels acc;
    try {
        acc = maneuver_accels(b, gammaP, lim.VP_min);
    } catch (const DegenerateGeometryError&) {
        return std::nullopt;
    }
    if (!check_candidate(b, lim, gammaP, lim.VP_min, acc.VdotD, acc.gammadotT).ok)
        return std::nullopt;
    return make_solution(b, lim, CaseLabel::Case1, gammaP, lim.VP_min, acc.VdotD, acc.gammadotT);
}

std::vector<PerchSolution> solve_boundary_cases(const ManeuverBoundary& b,
                                                const FeasibilityLimits& lim) {
    b.validate();
    std::vector<PerchSolution> out;
    const GammaRange r = lim.gammaP_range(b);
    if (r.empty()) return out;

    struct Edge {
        double gammaP;
        CaseLabel turn_case;   // turn rate saturated at this edge
        CaseLabel decel_case;  // deceleration saturated at this edge
    };
    const Edge edges[2] = {{r.hi, CaseLabel::Case2, CaseLabel::Case4},
                           {r.lo, CaseLabel::Case3, CaseLabel::Case5}};

    for (const Edge& e : edges) {
        MeanGeometry g;
        try {
            g = mean_geometry(b.gamma0, e.gammaP, b.xP, b.zP);
        } catch (const DegenerateGeometryError&) {
            continue;
        }
        if (!(g.L_M > 0.0) || !(g.R_T > 0.0)) continue;

        // Cases 2/3: turn rate active, V_P follows from the turn radius.
        {
            const double VP = lim.gammadotT_max * g.R_T;
            const double VdotD = (VP * VP - b.V0 * b.V0) / (2.0 * g.L_M);
            if (VP > lim.VP_min && VdotD > lim.VdotD_min &&
                check_candidate(b, lim, e.gammaP, VP, VdotD, lim.gammadotT_max).ok)
                out.push_back(make_solution(b, lim, e.turn_case, e.gammaP, VP, VdotD,
                                            lim.gammadotT_max));
        }

        // Cases 4/5: deceleration active, V_P follows from the descent length.
        {
            const double rad = 2.0 * lim.VdotD_min * g.L_M + b.V0 * b.V0;
            if (rad > 0.0) {
                const double VP = std::sqrt(rad);
                const double gdT = VP / g.R_T;
                if (VP > lim.VP_min && gdT < lim.gammadotT_max &&
                    check_candidate(b, lim, e.gammaP, VP, lim.VdotD_min, gdT).ok)
                    out.push_back(
                        make_solution(b, lim, e.decel_case, e.gammaP, VP, lim.VdotD_min, gdT));
            }
        }
    }
    return out;
}

std::array<double, 5> case6_quartic(const ManeuverBoundary& b, const FeasibilityLimits& lim) {
    const double t0 = std::tan(b.gamma0);
    const double c0 = std::cos(b.gamma0);
    const double gdT = lim.gammadotT_max;
    const double Vbar_dot = -2.0 * lim.VdotD_min / (b.xP * gdT * gdT);
    const double Vbar0 = b.V0 / (b.xP * gdT);
    const double zbar = b.zP / b.xP - t0;
    const double sec2 = 1.0 / (c0 * c0);

    return {4.0 * c0 * c0 * Vbar0 * Vbar0 - 4.0 * Vbar_dot * c0 - zbar * zbar,
            4.0 * zbar * (Vbar_dot * c0 - t0 * zbar),
            -zbar * zbar * (2.0 * sec2 + 4.0 * t0 * t0),
            -4.0 * t0 * sec2 * zbar * zbar,
            -zbar * zbar * sec2 * sec2};
}

std::optional<PerchSolution> solve_case6(const ManeuverBoundary& b, const FeasibilityLimits& lim) {
    b.validate();
    const double t0 = std::tan(b.gamma0);
    const double c0 = std::cos(b.gamma0);
    const double zbar = b.zP / b.xP - t0;
    if (!(zbar > 0.0)) return std::nullopt;

    const auto q = case6_quartic(b, lim);
    const auto roots = real_roots({q[0], q[1], q[2], q[3], q[4]});

    std::optional<PerchSolution> best;
    for (double a : roots) {
        if (!(a > 0.0)) continue;
        const double tM = t0 + a;
        const double gammaM = std::atan(tM);
        const double gammaP = 2.0 * gammaM - b.gamma0;
        const double bb = zbar * (1.0 + tM * tM) / (2.0 * a * a * c0);
        const double VP = bb * b.xP * lim.gammadotT_max;
        if (!(VP > lim.VP_min)) continue;
        if (!check_candidate(b, lim, gammaP, VP, lim.VdotD_min, lim.gammadotT_max).ok) continue;
        if (!best || VP < best->VP)
            best = make_solution(b, lim, CaseLabel::Case6, gammaP, VP, lim.VdotD_min,
                                 lim.gammadotT_max);
    }
    return best;
}

std::optional<PerchSolution> solve_optimal(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                                           TieBreak tie) {
    if (auto c1 = solve_case1(b, lim, tie)) return c1;

    std::vector<PerchSolution> candidates = solve_boundary_cases(b, lim);
    if (auto c6 = solve_case6(b, lim)) candidates.push_back(*c6);
    if (candidates.empty()) return std::nullopt;

    const auto best = std::min_element(candidates.begin(), candidates.end(),
                                       [](const auto& a, const auto& c) { return a.VP < c.VP; });
    return *best;
}

std::array<double, 16> kkt_residuals(const ManeuverBoundary& b, const FeasibilityLimits& lim,
                                     const PerchSolution& s) {
    Eigen::Matrix<double, 4, 7> coeff;
    Eigen::Vector4d rhs;
    stationarity_system(b, s, coeff, rhs);

    std::array<double, 16> r{};
    for (int i = 0; i < 4; ++i) {
        double v = rhs(i);
        for (int j = 0; j < 7; ++j) v += coeff(i, j) * s.lambda[j];
        r[static_cast<std::size_t>(i)] = v;
    }

    // complementarity 2 lambda_{i} sigma_{i-2} for the five inequalities
    for (int j = 0; j < 5; ++j) r[4 + static_cast<std::size_t>(j)] = 2.0 * s.lambda[2 + j] * s.sigma[j];

    // endpoint equalities
    const Endpoint e = endpoint_from_params(b, s.VP, s.gammaP, s.VdotD, s.gammadotT);
    r[9] = b.xP - e.xP;
    r[10] = b.zP - e.zP;

    // slacked inequalities
    const GammaRange range = lim.gammaP_range(b);
    r[11] = lim.VdotD_min - s.VdotD + s.sigma[0] * s.sigma[0];
    r[12] = s.gammadotT - lim.gammadotT_max + s.sigma[1] * s.sigma[1];
    r[13] = range.lo - s.gammaP + s.sigma[2] * s.sigma[2];
    r[14] = s.gammaP - range.hi + s.sigma[3] * s.sigma[3];
    r[15] = lim.VP_min - s.VP + s.sigma[4] * s.sigma[4];
    return r;
}

ReferenceTrajectory::ReferenceTrajectory(const ManeuverBoundary& b, const PerchSolution& sol)
    : b_(b), sol_(sol) {
    T_D_ = std::abs(sol.VdotD) > kGeomTol ? (sol.VP - b.V0) / sol.VdotD : 0.0;
    T_T_ = (sol.gammaP - b.gamma0) / sol.gammadotT;
    T_P_ = T_D_ + T_T_;
    const double sD = 0.5 * (b.V0 + sol.VP) * T_D_;  // descent arc length
    x_A_ = sD * std::cos(b.gamma0);
    z_A_ = sD * std::sin(b.gamma0);
}

ReferenceTrajectory::RefPoint ReferenceTrajectory::at_time(double t) const {
    RefPoint p;
    p.t = t;
    if (t <= T_D_) {
        const double tc = std::max(t, 0.0);
        const double s = b_.V0 * tc + 0.5 * sol_.VdotD * tc * tc;
        p.V = b_.V0 + sol_.VdotD * tc;
        p.gamma = b_.gamma0;
        p.x = s * std::cos(b_.gamma0);
        p.z = s * std::sin(b_.gamma0);
        p.Vdot = sol_.VdotD;
        p.gammadot = 0.0;
    } else {
        const double tau = std::min(t, T_P_) - T_D_;
        p.V = sol_.VP;
        p.gamma = b_.gamma0 + sol_.gammadotT * tau;
        p.x = x_A_ + sol_.VP / sol_.gammadotT * (std::sin(p.gamma) - std::sin(b_.gamma0));
        p.z = z_A_ - sol_.VP / sol_.gammadotT * (std::cos(p.gamma) - std::cos(b_.gamma0));
        p.Vdot = 0.0;
        p.gammadot = sol_.gammadotT;
    }
    return p;
}

ReferenceTrajectory::RefPoint ReferenceTrajectory::at_position(double x) const {
    RefPoint p;
    if (x <= 0.0) return at_time(0.0);
    if (x <= x_A_ && T_D_ > 0.0) {
        const double s = x / std::cos(b_.gamma0);
        const double v2 = b_.V0 * b_.V0 + 2.0 * sol_.VdotD * s;
        p.V = std::sqrt(std::max(v2, sol_.VP * sol_.VP));
        p.gamma = b_.gamma0;
        p.x = x;
        p.z = x * std::tan(b_.gamma0);
        p.Vdot = sol_.VdotD;
        p.gammadot = 0.0;
        p.t = (p.V - b_.V0) / sol_.VdotD;
        return p;
    }
    const double sg0 = std::sin(b_.gamma0);
    double sg = sg0 + (x - x_A_) * sol_.gammadotT / sol_.VP;
    sg = std::min(sg, std::sin(sol_.gammaP));
    p.gamma = std::asin(sg);
    p.V = sol_.VP;
    p.x = x;
    p.z = z_A_ - sol_.VP / sol_.gammadotT * (std::cos(p.gamma) - std::cos(b_.gamma0));
    p.Vdot = 0.0;
    p.gammadot = p.gamma < sol_.gammaP ? sol_.gammadotT : 0.0;
    p.t = T_D_ + (p.gamma - b_.gamma0) / sol_.gammadotT;
    return p;
}

SimLog ReferenceTrajectory::sample(double dt) const {
    if (!(dt > 0.0)) throw ArgumentError("reference sampling requires dt > 0");
    SimLog log({"t", "x_R", "z_R", "V_R", "gamma_R", "Vdot_R", "gammadot_R"});
    const long n = std::lround(std::ceil(T_P_ / dt));
    for (long i = 0; i <= n; ++i) {
        const double t = std::min(static_cast<double>(i) * dt, T_P_);
        const RefPoint p = at_time(t);
        log.append({p.t, p.x, p.z, p.V, p.gamma, p.Vdot, p.gammadot});
    }
    return log;
}

std::vector<RegionPoint> region_map(const std::vector<double>& x0s, const std::vector<double>& z0s,
                                    double gamma0, double V0, const FeasibilityLimits& lim,
                                    TieBreak tie) {
    std::vector<RegionPoint> out;
    out.reserve(x0s.size() * z0s.size());
    for (double x0 : x0s) {
        for (double z0 : z0s) {
            RegionPoint pt{x0, z0, 0, 0.0, 0.0, 0.0, 0.0};
            // start point on the grid, perch at the origin
            const ManeuverBoundary b{gamma0, V0, -x0, -z0};
            if (b.xP > 0.0) {
                std::optional<PerchSolution> sol;
                try {
                    sol = solve_optimal(b, lim, tie);
                } catch (const Error&) {
                    sol = std::nullopt;
                }
                if (sol) {
                    pt.case_label = static_cast<int>(sol->case_label);
                    pt.VP = sol->VP;
                    pt.gammaP = sol->gammaP;
                    pt.VdotD = sol->VdotD;
                    pt.gammadotT = sol->gammadotT;
                }
            }
            out.push_back(pt);
        }
    }
    return out;
}

void region_write_csv(const std::vector<RegionPoint>& points, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot open file for writing: " + path);
    out << "x0,z0,case,VP,gammaP,VdotD,gammadotT\n";
    out.precision(10);
    for (const auto& p : points)
        out << p.x0 << ',' << p.z0 << ',' << p.case_label << ',' << p.VP << ',' << p.gammaP << ','
            << p.VdotD << ',' << p.gammadotT << '\n';
}

}  // namespace perchkit::planner
