#pragma once

#include "satfloer/complexR.hpp"  // ValidationReport
#include "satfloer/geometry.hpp"

#include <nlohmann/json_fwd.hpp>

namespace satfloer {

enum class PathKind { Closed, Periodic };

// Piecewise-linear path in the plane with exact rational vertices. Periodic
// paths store one fundamental period and are invariant under translation by
// (1,0).
struct PlanarPath {
    PathKind kind = PathKind::Closed;
    std::vector<Pt> verts;
};

// The companion invariant: one distinguished periodic component (index 0)
// plus closed null-homologous components, drawn in the plane with marked
// points at the integer lattice.
struct ImmersedMulticurve {
    std::vector<PlanarPath> components;
    Pt symmetry_center{Rat(0), Rat(1, 2)};
};

TorusCurve to_torus_curve(const PlanarPath& p);
std::vector<TorusCurve> to_torus_curves(const ImmersedMulticurve& c);

// Staircase curve of an L-space knot. Steps alternate vertical/horizontal and
// must read the same in both directions; handedness -1 mirrors the curve.
// An empty list gives the unknot curve (the horizontal line at height 1/2).
ImmersedMulticurve from_staircase(const std::vector<long>& steps, int handedness);

ImmersedMulticurve unknot_curve();
ImmersedMulticurve trefoil_curve();         // from_staircase({1,1}, +1)
ImmersedMulticurve figure_eight_curve();

// Reflection across the horizontal axis; realizes the mirror companion.
ImmersedMulticurve mirror_curve(const ImmersedMulticurve& c);

// Checks (C-1)..(C-4)-style conditions and the knot-like requirements; each
// failure carries a witness.
ValidationReport validate_curve(const ImmersedMulticurve& c);

struct WindowArc {
    int component;
    Vec translate;
    std::vector<Pt> pts;
};

// Translates of all components clipped to [x0,x1] x [y0,y1].
std::vector<WindowArc> lift_window(const ImmersedMulticurve& c, const Rat& x0, const Rat& y0,
                                   const Rat& x1, const Rat& y1);

// Empty-bigon removal against the integer grid and Reidemeister-II cleanup,
// followed by canonical re-anchoring. Idempotent.
ImmersedMulticurve pull_tight(const ImmersedMulticurve& c);

nlohmann::json curve_to_json(const ImmersedMulticurve& c);
ImmersedMulticurve curve_from_json(const nlohmann::json& j);

// grid-crossing count of the whole multicurve (used by pull_tight tests)
long grid_crossing_count(const ImmersedMulticurve& c);
long self_crossing_count(const ImmersedMulticurve& c);

} // namespace satfloer
