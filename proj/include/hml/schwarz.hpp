#pragma once

// The three Schwarz maps: ratios of hypergeometric solutions sending the
// z-plane into the upper half plane, their vertex limits, and round-trip
// checks against the modular inverses lambda, nu, 1/j.

#include "hml/hypergeometric.hpp"
#include "hml/numeric.hpp"

namespace hml {

enum class SchwarzId { phi0, phi1, phi2 };

// parameter triple (a,b,c) attached to a map tag
HGParams schwarz_params(SchwarzId id);

// image point with a marker for the logarithmic cusp at z = 0
struct SchwarzValue {
    Cplx tau{0.0, 0.0};
    bool at_cusp = false;
};

SchwarzValue schwarz_map(SchwarzId id, Cplx z);

// limits at the three singular points z = 0, 1, infinity
struct Vertex {
    bool infinite = false;  // true marks the cusp i-infinity
    Cplx tau{0.0, 0.0};
};

struct VertexLimits {
    Vertex at_zero, at_one, at_infinity;
};

VertexLimits vertex_limits(SchwarzId id);

// |inverse(schwarz_map(id, z)) - z| with inverse = lambda, nu, 1/j per tag;
// requires z at distance >= 1e-3 from the vertices 0 and 1
double roundtrip_residual(SchwarzId id, Cplx z);

}  // namespace hml
