#pragma once

#include "satfloer/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace satfloer {

// A curve on the torus R^2/Z^2, stored as one lift period. Traversal runs
// through verts and closes up at verts[0] + period; period is (0,0) for
// compact curves, (1,0) for the distinguished alpha component, (0,1) for a
// beta curve.
struct TorusCurve {
    std::vector<Pt> verts;
    Vec period{Rat(0), Rat(0)};
    bool closed() const { return period.x == 0 && period.y == 0; }
    int nsegs() const { return (int)verts.size(); }
    Pt seg_a(int i) const { return verts[i]; }
    Pt seg_b(int i) const {
        return i + 1 < (int)verts.size() ? verts[i + 1] : verts[0] + period;
    }
    Vec seg_dir(int i) const { return seg_b(i) - seg_a(i); }
};

struct DegenerateArrangement : std::runtime_error {
    explicit DegenerateArrangement(const std::string& w) : std::runtime_error(w) {}
};

// transverse crossing of two closed segments
struct SegHit {
    Rat t1, t2;
    Pt p;  // on segment 1
};

std::optional<SegHit> seg_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d,
                                    bool& degenerate);

// +-1 when the turn from direction a to b sweeps the reference direction just
// counterclockwise of east; 0 otherwise. Throws on u-turns.
int turn_crossing(const Vec& a, const Vec& b);

// Winding number of a closed polyline around a point not on it.
long winding_number(const std::vector<Pt>& loop, const Pt& p);

// Crossing of the segment [a,b] with curve translates on the torus.
struct CurveHit {
    Rat t;   // param along [a,b]
    int curve, seg;
    Rat t2;  // param along the hit segment, in [0,1)
    Pt p;    // in [a,b] coordinates
    int side;  // sign of cross(b-a, hit segment direction)
};
std::vector<CurveHit> segment_curve_hits(const Pt& a, const Pt& b,
                                         const std::vector<TorusCurve>& curves);

struct ArrVertex {
    Pt pos;  // representative in [0,1)^2
    struct Passage {
        int curve = -1;
        int seg = -1;      // segment of the event
        Rat t;             // param of the event
        int arc_in = -1, arc_out = -1;
        Vec dir_in, dir_out;
    };
    Passage pass[2];
    struct End {
        int he;
        Vec dir;
        int passage;
        bool outgoing;
    };
    std::vector<End> ends;  // 4 entries, CCW
    int sign = 0;           // sign of cross(pass0.dir_out, pass1.dir_out)
};

struct ArrArc {
    int curve;
    int v_from = -1, v_to = -1;  // -1 for a crossing-free loop
    std::vector<Pt> geom;        // polyline in the cover
    Vec dir_start, dir_end;
};

// Arrangement of curves on the torus. Half-edge h: arc h/2, forward iff h%2==0.
struct Arrangement {
    std::vector<TorusCurve> curves;
    std::vector<ArrVertex> verts;
    std::vector<ArrArc> arcs;
    std::vector<std::vector<int>> curve_arcs;  // per curve, in traversal order
    std::vector<int> orbit_of_he;
    std::vector<std::vector<int>> orbits;
    std::vector<int> region_of_orbit;
    int num_regions = 0;
    std::vector<long> region_chi;
    std::vector<int> region_corners;
    std::vector<std::vector<int>> quadrant_region;  // per vertex, CCW sectors

    int he_of(int arc, bool forward) const { return 2 * arc + (forward ? 0 : 1); }
    int arc_of(int he) const { return he / 2; }
    bool he_forward(int he) const { return he % 2 == 0; }
    int he_head(int he) const {
        return he_forward(he) ? arcs[arc_of(he)].v_to : arcs[arc_of(he)].v_from;
    }
    int region_left(int he) const { return region_of_orbit[orbit_of_he[he]]; }

    int region_of_point(const Pt& p) const;
};

Arrangement build_arrangement(std::vector<TorusCurve> curves);

} // namespace satfloer
