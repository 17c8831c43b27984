#pragma once

#include "satfloer/complexR.hpp"  // ValidationReport
#include "satfloer/geometry.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace satfloer {

// A (1,1) pattern diagram in the unit-square model: mu and lambda are the
// standard vertical/horizontal circles through (1/2, *) and (*, 1/2), beta is
// an embedded closed curve isotopic to mu, and the basepoints sit on either
// side of the lattice point along a short arc of slope m.
struct OneOneDiagram {
    TorusCurve beta;  // period (0,1)
    Pt w, z;
    struct Meta {
        std::string pattern;  // "identity" | "obb" | "mazur"
        long p = 1, q = 0, b = 0;
        Rat slope;  // representative slope m
        Rat eps;
    } meta;
};

struct BraidParams {
    long p = 1, q = 0, b = 0;
};

// braid closure of (s_{p-1}...s_1)^q (s_b...s_1) has a single cycle
bool braid_is_knot(const BraidParams& params);

// q(p,m) = floor(p m); b(p,m) counts interior delta strand hits on the bridge
long q_of(long p, const Rat& m);
long b_of(long p, const Rat& m);
bool slope_excluded(long p, const Rat& m);  // m in X_p

struct SlopeInterval {
    Rat lo, hi;  // open interval
    Rat midpoint() const { return (lo + hi) / 2; }
};

// maximal open interval of slopes realizing (q, b); requires braid_is_knot
SlopeInterval slope_interval(const BraidParams& params);

OneOneDiagram identity_pattern();
OneOneDiagram one_bridge_braid(const BraidParams& params);
OneOneDiagram one_bridge_braid_at_slope(long p, const Rat& m);
OneOneDiagram mazur();

// algebraic intersection number of the pattern with the meridian, i.e. the
// signed count of beta crossings of the short w-z arc
long winding_number(const OneOneDiagram& d);

ValidationReport validate_diagram(const OneOneDiagram& d);

nlohmann::json diagram_to_json(const OneOneDiagram& d);
OneOneDiagram diagram_from_json(const nlohmann::json& j);

} // namespace satfloer
