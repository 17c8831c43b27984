#pragma once

#include "satfloer/curves.hpp"
#include "satfloer/patterns.hpp"

namespace satfloer {

// The planar transform of the lifted companion curve realizing one-bridge
// braid satellites: g slides lattice points left along lines of slope m onto
// the column x = 0; f re-spaces the images, compresses horizontally and
// stretches vertically by the winding.
struct PlanarTransform {
    long p = 1;
    Rat m;
    long q = 0, b = 0;
};

PlanarTransform make_transform(long p, const Rat& m);
PlanarTransform make_transform(const BraidParams& params);

Pt g_map(const PlanarTransform& t, const Pt& pt);
Pt f_map(const PlanarTransform& t, const Pt& pt);

// exact image of a segment under f: a polyline through all map breakpoints
std::vector<Pt> f_map_segment(const PlanarTransform& t, const Pt& a, const Pt& b);

long lattice_height_diff(long p, long q, long b);

ImmersedMulticurve transform_curve(const PlanarTransform& t, const ImmersedMulticurve& c);

long tau_formula(long p, long q, long b, long tauK, int epsK);
int epsilon_formula(long p, long q, long b, int epsK);
bool lspace_criterion(long p, long q, long b, long genusK, bool K_is_lspace);
std::pair<long, int> mazur_formulas(long tauK, int epsK);

} // namespace satfloer
