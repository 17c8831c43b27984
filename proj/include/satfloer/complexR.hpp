#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace satfloer {

// A monomial U^u or V^v in R = F2[U,V]/(UV). u and v never both positive;
// u = v = 0 (a unit) is allowed only before reduction.
struct Mono {
    long u = 0;
    long v = 0;
    bool unit() const { return u == 0 && v == 0; }
    bool operator<(const Mono& o) const { return std::pair(u, v) < std::pair(o.u, o.v); }
    bool operator==(const Mono& o) const { return u == o.u && v == o.v; }
};

// Product in R; returns nullopt when the product is annihilated by UV = 0.
std::optional<Mono> mono_mul(const Mono& a, const Mono& b);

// A differential entry is a mod-2 sum of monomials, kept sorted and reduced.
using Entry = std::vector<Mono>;

void entry_add(Entry& e, const Mono& m);

struct GenR {
    std::string name;
    long grw = 0;
    long grz = 0;
    long alexander() const;  // (grw - grz)/2, must be integral
};

// Bigraded chain complex over F2[U,V]/(UV) with a sparse differential.
class KnotComplexR {
public:
    KnotComplexR() = default;

    int add_gen(const std::string& name, long grw, long grz);
    void add_arrow(int from, int to, Mono m);

    int size() const { return (int)gens_.size(); }
    const GenR& gen(int i) const { return gens_[i]; }
    GenR& gen(int i) { return gens_[i]; }
    int index_of(const std::string& name) const;

    const std::map<std::pair<int, int>, Entry>& diff() const { return diff_; }
    Entry entry(int from, int to) const;
    void set_entry(int from, int to, Entry e);

    // True when no differential entry carries a unit monomial.
    bool is_reduced() const;

    void shift_gradings(long dw, long dz);

private:
    std::vector<GenR> gens_;
    std::map<std::pair<int, int>, Entry> diff_;
};

struct CheckResult {
    std::string check;
    bool pass = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string summary() const;
};

// d^2 = 0, bidegree homogeneity, and (for reduced complexes) symmetry of the
// generator count under A -> -A.
ValidationReport verify(const KnotComplexR& c);

// Gaussian cancellation of unit entries, lexicographically first pair each
// round. Homotopy equivalent output, deterministic.
KnotComplexR reduce(const KnotComplexR& c);

enum class Specialization { U1V0, U0V1 };

struct SpecializedHomology {
    // Rank of the homology per surviving grading (gr_z for U1V0, gr_w for U0V1).
    std::map<long, int> rank_by_grading;
    int total_rank = 0;
};

SpecializedHomology specialize(const KnotComplexR& c, Specialization s);

// Pins the absolute bigrading: the rank-one (U=1,V=0) homology is moved to
// gr_w = 0 and the rank-one (U=0,V=1) homology to gr_z = 0. Requires both
// specializations to have rank one.
KnotComplexR normalize_absolute(const KnotComplexR& c);

struct SnakeArrow {
    bool is_u = false;   // U-arrow or V-arrow
    bool forward = true; // true: gens[i] -> gens[i+1] (cyclically for compact chains)
    long exp = 1;
};

struct SnakeSummand {
    std::vector<int> gens;          // indices into the decomposed complex
    std::vector<SnakeArrow> arrows; // arrows.size() == gens.size()-1, or gens.size() if compact
    bool compact = false;
};

struct SnakeDecomposition {
    KnotComplexR complex;  // the simplified complex the summands refer to
    std::vector<SnakeSummand> summands;
    // Change of basis: new_gen[i] = sum_j basis[i][j] * old_gen[j], over R.
    std::vector<std::vector<Entry>> basis;
    std::vector<std::vector<Entry>> basis_inv;
    int open_chains() const;
    int closed_chains() const;
};

// Splits a reduced complex with rank-one specializations into snake summands.
// Throws std::runtime_error if the alternating simplification does not
// stabilize (which would indicate a nontrivial local system).
SnakeDecomposition snake_decomposition(const KnotComplexR& c);

struct Invariants {
    long tau = 0;
    int epsilon = 0;
    long genus = 0;
    bool lspace = false;
};

Invariants invariants(const KnotComplexR& c);

// Dual complex: arrows reversed, gradings negated. tau and epsilon flip sign.
KnotComplexR mirror_complex(const KnotComplexR& c);

// Canonical forms of the snake summands coincide, gradings included.
bool isomorphic(const KnotComplexR& c1, const KnotComplexR& c2);

// As above but compact summands are compared by arrow structure and relative
// gradings only (their absolute anchor is dropped). Used when one side lacks
// diagram-level grading data.
bool isomorphic_relaxed_compact(const KnotComplexR& c1, const KnotComplexR& c2);

nlohmann::json complex_to_json(const KnotComplexR& c);
KnotComplexR complex_from_json(const nlohmann::json& j);

} // namespace satfloer
