#pragma once

#include <stdexcept>
#include <string>

namespace perchkit {

// All core errors derive from Error so the C boundary can map them to codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Angle of attack left the stall-model validity range.
struct EnvelopeError : Error {
    explicit EnvelopeError(double alpha)
        : Error("angle of attack outside stall-model envelope: alpha=" + std::to_string(alpha)),
          alpha(alpha) {}
    double alpha;
};

// Reduced frequency outside the identified aerodynamic model range (k < 2).
struct ModelRangeError : Error {
    explicit ModelRangeError(double k)
        : Error("reduced frequency outside model range: k=" + std::to_string(k)), k(k) {}
    double k;
};

// Airspeed fell below the configured floor; gamma dynamics are singular at V=0.
struct SingularityError : Error {
    explicit SingularityError(double v)
        : Error("airspeed below singularity floor: V=" + std::to_string(v)), v(v) {}
    double v;
};

// Maneuver geometry degenerates (gammaP -> gamma0, vanishing accelerations, ...).
struct DegenerateGeometryError : Error {
    using Error::Error;
};

// Trim search bracket contains no sign change.
struct TrimNotFoundError : Error {
    using Error::Error;
};

// The adaptive-parameter projector failed to keep the arcsin argument valid.
// This is an invariant breach, not a recoverable condition.
struct ProjectorBreachError : Error {
    explicit ProjectorBreachError(double phipsi)
        : Error("projector breach: |phi_hat'psi|=" + std::to_string(phipsi)), phipsi(phipsi) {}
    double phipsi;
};

// Invalid argument / configuration value.
struct ArgumentError : Error {
    using Error::Error;
};

}  // namespace perchkit
