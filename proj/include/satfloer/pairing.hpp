#pragma once

#include "satfloer/complexR.hpp"
#include "satfloer/curves.hpp"
#include "satfloer/geometry.hpp"
#include "satfloer/patterns.hpp"

#include <nlohmann/json_fwd.hpp>

#include <memory>

namespace satfloer {

// ---------------------------------------------------------------------------
// Domains over an arrangement

// Linear conditions cutting out pi_2(x,y) inside Z^regions: one equation per
// (vertex, passage); corners at x and y relax two of them.
struct DomainSystem {
    int num_regions = 0;
    // rows: per (vertex, passage) the quadrant-coefficient pattern
    struct Row {
        int vert, passage;
        bool beta;      // the passage runs along the beta curve
        int region[4];  // CCW quadrant regions at the vertex
        int coeff[4];   // contribution of each quadrant to (c_after - c_before)
    };
    std::vector<Row> rows;
    std::vector<std::vector<long>> periodic_lattice;  // integer kernel basis
    std::shared_ptr<void> solver;                     // internal integer solver
};

// beta_curve marks which curve plays the beta role (-1: none, all passages
// count as alpha).
DomainSystem build_domain_system(const Arrangement& arr, int beta_curve);

// A domain: multiplicity per region, with from/to corner vertices (-1 for
// periodic domains).
struct Domain {
    std::vector<long> mult;
    int from = -1, to = -1;
};

// Any integer solution of the corner conditions for x -> y, nullopt when
// pi_2(x,y) is empty. Deterministic.
std::optional<Domain> connecting_domain(const DomainSystem& sys, int x, int y);

// All nonnegative solutions with multiplicity zero at the given region.
// Throws std::runtime_error when the solution cone is unbounded (an
// admissibility failure).
std::vector<Domain> enumerate_positive(const DomainSystem& sys, int x, int y,
                                       const Domain& base, int zero_region);

// ---------------------------------------------------------------------------
// Paired diagram

struct PairedDiagram {
    Arrangement arr;
    // curve roles: curve index -> alpha component id (-1 for beta)
    std::vector<int> alpha_component;
    int beta_curve = -1;
    Pt w, z;
    int region_w = -1, region_z = -1;
    std::vector<int> generators;        // vertex ids of alpha-beta crossings
    std::vector<std::string> gen_names; // stable names g0, g1, ...
    DomainSystem sys;

    int gen_at_vertex(int v) const;
};

// Overlays a pattern with a companion curve: perturbs the curve into general
// position against beta, removes alpha-beta bigons free of basepoints, and
// builds the region decomposition.
PairedDiagram overlay(const OneOneDiagram& pattern, const ImmersedMulticurve& curve);

bool check_unobstructed(const PairedDiagram& d, std::string* witness = nullptr);
bool check_biadmissible(const PairedDiagram& d, std::string* witness = nullptr);
bool check_gradable(const PairedDiagram& d, std::string* witness = nullptr);

// Domain invariants. Corner vertices may be -1 (periodic domains): the
// corner-average terms are then taken at the given generator pair of the
// enclosing call, or zero for pure periodic domains evaluated at x = y.
Rat euler_measure(const PairedDiagram& d, const Domain& B);
Rat corner_multiplicity(const PairedDiagram& d, const Domain& B, int vert);
long self_intersection_alpha(const PairedDiagram& d, const Domain& B);
long self_intersection_beta(const PairedDiagram& d, const Domain& B);
long domain_index(const PairedDiagram& d, const Domain& B);   // ind(B)
Rat chi_embedded(const PairedDiagram& d, const Domain& B);

long multiplicity_w(const PairedDiagram& d, const Domain& B);
long multiplicity_z(const PairedDiagram& d, const Domain& B);

// Enumerate positive domains from generator gx to gy with n_z = 0 or n_w = 0.
enum class BasepointSide { ZeroZ, ZeroW };
std::vector<Domain> enumerate_domains(const PairedDiagram& d, int gx, int gy,
                                      BasepointSide side);

// The bigon certificate plus differential; throws on an index-1 positive
// domain that is neither certified nor provably count-zero.
KnotComplexR differential(const PairedDiagram& d);

// Differential plus absolute (gr_w, gr_z).
KnotComplexR pair_complex(const PairedDiagram& d);

// Relative Alexander gradings by walking beta and counting signed crossings
// of the short w-z arc.
std::vector<long> alexander_via_walk(const PairedDiagram& d);

// Net-rotation Maslov difference m(x) - m(y) for generators joined by paths
// on one alpha component (cross-check for the domain formula).
std::optional<long> net_rotation_grading(const PairedDiagram& d, int gx, int gy, bool use_z);

// Unobstructedness of a bare multicurve (teardrop check): no nontrivial zero-
// or one-cornered positive alpha-bounded domain with n_z = 0. marked_region
// is the region containing the marked point.
bool alpha_only_unobstructed(const Arrangement& arr, int marked_region,
                             std::string* witness = nullptr);

nlohmann::json paired_diagram_dump(const PairedDiagram& d);

} // namespace satfloer
