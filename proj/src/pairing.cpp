#include "satfloer/pairing.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace satfloer {

// ---------------------------------------------------------------------------
// Integer linear algebra (column-style Hermite reduction)

namespace {

struct IntSolver {
    int rows = 0, cols = 0;
    std::vector<std::vector<mpz_class>> H;  // rows x cols, column echelon
    std::vector<std::vector<mpz_class>> U;  // cols x cols, A U = H
    std::vector<int> pivot_col;             // per row, -1 if none
    std::vector<int> free_cols;

    void init(const std::vector<std::vector<mpz_class>>& A) {
        rows = (int)A.size();
        cols = rows ? (int)A[0].size() : 0;
        H = A;
        U.assign(cols, std::vector<mpz_class>(cols, 0));
        for (int i = 0; i < cols; ++i) U[i][i] = 1;
        pivot_col.assign(rows, -1);
        int pc = 0;
        auto colop = [&](int j2, int j1, const mpz_class& q) {
            // col_j2 -= q * col_j1
            for (int r = 0; r < rows; ++r) H[r][j2] -= q * H[r][j1];
            for (int r = 0; r < cols; ++r) U[r][j2] -= q * U[r][j1];
        };
        auto colswap = [&](int j1, int j2) {
            if (j1 == j2) return;
            for (int r = 0; r < rows; ++r) std::swap(H[r][j1], H[r][j2]);
            for (int r = 0; r < cols; ++r) std::swap(U[r][j1], U[r][j2]);
        };
        for (int r = 0; r < rows && pc < cols; ++r) {
            while (true) {
                int j1 = -1;
                for (int j = pc; j < cols; ++j) {
                    if (H[r][j] == 0) continue;
                    if (j1 < 0 || abs(H[r][j]) < abs(H[r][j1])) j1 = j;
                }
                if (j1 < 0) break;
                bool others = false;
                for (int j = pc; j < cols; ++j) {
                    if (j == j1 || H[r][j] == 0) continue;
                    others = true;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), H[r][j].get_mpz_t(), H[r][j1].get_mpz_t());
                    colop(j, j1, q);
                }
                if (!others) {
                    colswap(pc, j1);
                    pivot_col[r] = pc;
                    pc++;
                    break;
                }
            }
        }
        for (int j = pc; j < cols; ++j) free_cols.push_back(j);
    }

    // solve A n = b over the integers
    std::optional<std::vector<mpz_class>> solve(const std::vector<mpz_class>& b) const {
        std::vector<mpz_class> y(cols, 0);
        for (int r = 0; r < rows; ++r) {
            mpz_class val = b[r];
            for (int j = 0; j < cols; ++j)
                if (H[r][j] != 0 && y[j] != 0) val -= H[r][j] * y[j];
            if (pivot_col[r] >= 0) {
                int j = pivot_col[r];
                if (val % H[r][j] != 0) return std::nullopt;
                y[j] = val / H[r][j];
            } else if (val != 0) {
                return std::nullopt;
            }
        }
        std::vector<mpz_class> n(cols, 0);
        for (int j = 0; j < cols; ++j) {
            if (y[j] == 0) continue;
            for (int i = 0; i < cols; ++i) n[i] += U[i][j] * y[j];
        }
        return n;
    }

    std::vector<std::vector<long>> kernel() const {
        std::vector<std::vector<long>> K;
        for (int j : free_cols) {
            std::vector<long> v(cols);
            bool nonzero = false;
            for (int i = 0; i < cols; ++i) {
                v[i] = (long)U[i][j].get_si();
                if (v[i]) nonzero = true;
            }
            if (nonzero) K.push_back(v);
        }
        return K;
    }
};

// Fourier-Motzkin over rationals: constraints c.t + d >= 0.
struct FMConstraint {
    std::vector<mpz_class> c;
    mpz_class d;
};

void fm_normalize(FMConstraint& f) {
    mpz_class g = abs(f.d);
    for (const auto& x : f.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        for (auto& x : f.c) x /= g;
        f.d /= g;
    }
}

// eliminate the last variable
std::vector<FMConstraint> fm_eliminate(const std::vector<FMConstraint>& cs, int var) {
    std::vector<FMConstraint> out;
    std::vector<const FMConstraint*> pos, neg;
    for (const auto& f : cs) {
        if (f.c[var] > 0)
            pos.push_back(&f);
        else if (f.c[var] < 0)
            neg.push_back(&f);
        else {
            FMConstraint g = f;
            out.push_back(g);
        }
    }
    std::set<std::pair<std::vector<mpz_class>, mpz_class>> seen;
    for (const auto* p : pos)
        for (const auto* q : neg) {
            FMConstraint g;
            g.c.assign(p->c.size(), 0);
            mpz_class a = p->c[var], b = -q->c[var];
            for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = b * p->c[i] + a * q->c[i];
            g.d = b * p->d + a * q->d;
            g.c[var] = 0;
            fm_normalize(g);
            auto key = std::make_pair(g.c, g.d);
            if (seen.insert(key).second) out.push_back(g);
        }
    for (auto& f : out) fm_normalize(f);
    return out;
}

// feasibility over the rationals
bool fm_feasible(std::vector<FMConstraint> cs, int nvars) {
    for (int v = nvars - 1; v >= 0; --v) cs = fm_eliminate(cs, v);
    for (const auto& f : cs)
        if (f.d < 0) return false;
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// DomainSystem

DomainSystem build_domain_system(const Arrangement& arr, int beta_curve) {
    DomainSystem sys;
    sys.num_regions = arr.num_regions;
    for (int vi = 0; vi < (int)arr.verts.size(); ++vi) {
        const ArrVertex& v = arr.verts[vi];
        for (int pi = 0; pi < 2; ++pi) {
            int a_out = -1, a_rev = -1;
            for (int i = 0; i < 4; ++i) {
                if (v.ends[i].passage == pi && v.ends[i].outgoing) a_out = i;
                if (v.ends[i].passage == pi && !v.ends[i].outgoing) a_rev = i;
            }
            DomainSystem::Row row;
            row.vert = vi;
            row.passage = pi;
            row.beta = (v.pass[pi].curve == beta_curve);
            for (int i = 0; i < 4; ++i) {
                row.region[i] = arr.quadrant_region[vi][i];
                row.coeff[i] = 0;
            }
            row.coeff[a_out] += 1;
            row.coeff[(a_out + 3) % 4] -= 1;
            row.coeff[(a_rev + 3) % 4] -= 1;
            row.coeff[a_rev] += 1;
            sys.rows.push_back(row);
        }
    }
    auto solver = std::make_shared<IntSolver>();
    std::vector<std::vector<mpz_class>> A;
    for (const auto& row : sys.rows) {
        std::vector<mpz_class> r(sys.num_regions, 0);
        for (int i = 0; i < 4; ++i) r[row.region[i]] += row.coeff[i];
        A.push_back(std::move(r));
    }
    solver->init(A);
    for (const auto& kv : solver->kernel()) sys.periodic_lattice.push_back(kv);
    sys.solver = solver;
    return sys;
}

namespace {

const IntSolver& get_solver(const DomainSystem& sys) {
    return *static_cast<const IntSolver*>(sys.solver.get());
}

std::vector<mpz_class> corner_rhs(const DomainSystem& sys, int x, int y) {
    // For B in pi_2(x,y): d(d_alpha B) = y - x and d(d_beta B) = x - y, i.e.
    // the alpha chain coefficient jumps by +1 at x and -1 at y, the beta
    // coefficient by -1 at x and +1 at y. The rows measure c_after - c_before.
    std::vector<mpz_class> b(sys.rows.size(), 0);
    for (size_t i = 0; i < sys.rows.size(); ++i) {
        const auto& row = sys.rows[i];
        if (row.vert != x && row.vert != y) continue;
        int s = 0;
        if (row.vert == x) s = row.beta ? -1 : +1;
        if (row.vert == y) s = row.beta ? +1 : -1;
        b[i] = s;
    }
    return b;
}

} // namespace

std::optional<Domain> connecting_domain(const DomainSystem& sys, int x, int y) {
    const IntSolver& solver = get_solver(sys);
    auto n = solver.solve(corner_rhs(sys, x, y));
    if (!n) return std::nullopt;
    Domain d;
    d.from = x;
    d.to = y;
    d.mult.resize(sys.num_regions);
    for (int i = 0; i < sys.num_regions; ++i) d.mult[i] = (long)(*n)[i].get_si();
    return d;
}

std::vector<Domain> enumerate_positive(const DomainSystem& sys, int x, int y,
                                       const Domain& base, int zero_region) {
    const auto& K = sys.periodic_lattice;
    int k = (int)K.size();
    int R = sys.num_regions;

    std::vector<FMConstraint> cs;
    for (int r = 0; r < R; ++r) {
        FMConstraint f;
        f.c.assign(k, 0);
        for (int i = 0; i < k; ++i) f.c[i] = K[i][r];
        f.d = base.mult[r];
        cs.push_back(f);
        if (r == zero_region) {
            FMConstraint g = f;
            for (auto& cc : g.c) cc = -cc;
            g.d = -g.d;
            cs.push_back(g);
        }
    }
    std::vector<Domain> out;
    if (k == 0) {
        bool ok = true;
        for (int r = 0; r < R; ++r)
            if (base.mult[r] < 0) ok = false;
        if (ok && base.mult[zero_region] == 0) out.push_back(base);
        for (auto& dd : out) {
            dd.from = x;
            dd.to = y;
        }
        return out;
    }

    // Fourier-Motzkin projections: proj[v] still contains variable v with
    // variables > v eliminated
    std::vector<std::vector<FMConstraint>> proj(k);
    {
        std::vector<FMConstraint> work = cs;
        for (int v = k - 1; v >= 0; --v) {
            proj[v] = work;
            work = fm_eliminate(work, v);
        }
        for (const auto& f : work)
            if (f.d < 0) return {};
    }
    std::vector<mpz_class> t(k, 0);
    std::function<void(int)> rec = [&](int var) {
        if (var == k) {
            Domain dd;
            dd.from = x;
            dd.to = y;
            dd.mult.assign(R, 0);
            bool ok = true;
            for (int r = 0; r < R; ++r) {
                mpz_class m = base.mult[r];
                for (int i = 0; i < k; ++i) m += mpz_class(K[i][r]) * t[i];
                if (m < 0) ok = false;
                dd.mult[r] = (long)m.get_si();
            }
            if (ok && dd.mult[zero_region] == 0) out.push_back(std::move(dd));
            return;
        }
        bool has_lo = false, has_hi = false;
        mpz_class lo = 0, hi = 0;
        for (const auto& f : proj[var]) {
            if (f.c[var] == 0) continue;
            mpz_class rest = f.d;
            for (int j = 0; j < var; ++j) rest += f.c[j] * t[j];
            if (f.c[var] > 0) {
                mpz_class num = -rest, bnd;
                mpz_cdiv_q(bnd.get_mpz_t(), num.get_mpz_t(), f.c[var].get_mpz_t());
                if (!has_lo || bnd > lo) lo = bnd, has_lo = true;
            } else {
                mpz_class den = -f.c[var], bnd;
                mpz_fdiv_q(bnd.get_mpz_t(), rest.get_mpz_t(), den.get_mpz_t());
                if (!has_hi || bnd < hi) hi = bnd, has_hi = true;
            }
        }
        if (!has_lo || !has_hi)
            throw std::runtime_error("domain enumeration budget exceeded (admissibility bug?)");
        for (mpz_class v = lo; v <= hi; ++v) {
            t[var] = v;
            rec(var + 1);
        }
        t[var] = 0;
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// PairedDiagram

int PairedDiagram::gen_at_vertex(int v) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == v) return (int)i;
    return -1;
}

namespace {

bool is_alpha_curve(const PairedDiagram& d, int curve) { return curve != d.beta_curve; }

bool point_in_parallelogram(const Pt& p, const Pt& a, const Pt& b, const Vec& shift) {
    // closed parallelogram a,b,b+shift,a+shift
    Vec d1 = b - a, d2 = shift;
    Rat den = cross(d1, d2);
    if (den == 0) return false;
    Vec w = p - a;
    Rat s = cross(w, d2) / den;
    Rat t = cross(d1, w) / den;
    return s >= 0 && s <= 1 && t >= 0 && t <= 1;
}

} // namespace

PairedDiagram overlay(const OneOneDiagram& pattern, const ImmersedMulticurve& curve) {
    ImmersedMulticurve tight = pull_tight(curve);
    {
        ValidationReport rep = validate_curve(tight);
        if (!rep.all_pass())
            throw std::runtime_error("overlay: companion curve invalid:\n" + rep.summary());
    }
    std::vector<TorusCurve> alpha = to_torus_curves(tight);
    Pt w = mod1(pattern.w), z = mod1(pattern.z);
    Pt zl(Rat(0) - pattern.meta.eps, Rat(0) - pattern.meta.slope * pattern.meta.eps);
    Pt wl(pattern.meta.eps, pattern.meta.slope * pattern.meta.eps);

    std::string lasterr = "?";
    for (long N = 1; N <= 4096; N = (N < 64 ? N + 1 : N * 2)) {
        Vec shift{Rat(1, N), Rat(1, N * N)};
        if (N == 1) shift = Vec{Rat(0), Rat(0)};
        std::vector<TorusCurve> curves;
        bool sweep_ok = true;
        for (const TorusCurve& c : alpha) {
            TorusCurve s = c;
            for (Pt& v : s.verts) v = v + shift;
            curves.push_back(s);
            if (!(shift.x == 0 && shift.y == 0)) {
                for (int i = 0; i < c.nsegs() && sweep_ok; ++i) {
                    Pt a = c.seg_a(i), b = c.seg_b(i);
                    for (mpz_class ux = rfloor(std::min(a.x, b.x)) - 1;
                         ux <= rceil(std::max(a.x, b.x)) + 1 && sweep_ok; ++ux)
                        for (mpz_class uy = rfloor(std::min(a.y, b.y)) - 1;
                             uy <= rceil(std::max(a.y, b.y)) + 1 && sweep_ok; ++uy) {
                            Pt wt = w + Vec{Rat(ux), Rat(uy)};
                            Pt zt = z + Vec{Rat(ux), Rat(uy)};
                            if (point_in_parallelogram(wt, a, b, shift) ||
                                point_in_parallelogram(zt, a, b, shift))
                                sweep_ok = false;
                        }
                }
            }
        }
        if (!sweep_ok) {
            lasterr = "perturbation sweeps a basepoint";
            continue;
        }
        curves.push_back(pattern.beta);
        try {
            // the companion must stay clear of the short basepoint arc
            std::vector<TorusCurve> alpha_only(curves.begin(), curves.end() - 1);
            if (!segment_curve_hits(zl, wl, alpha_only).empty()) {
                lasterr = "companion curve crosses the basepoint arc";
                continue;
            }
            PairedDiagram d;
            d.arr = build_arrangement(curves);
            d.beta_curve = (int)curves.size() - 1;
            d.alpha_component.assign(curves.size(), -1);
            for (size_t i = 0; i + 1 < curves.size(); ++i) d.alpha_component[i] = (int)i;
            d.w = w;
            d.z = z;
            d.region_w = d.arr.region_of_point(w);
            d.region_z = d.arr.region_of_point(z);
            for (int vi = 0; vi < (int)d.arr.verts.size(); ++vi) {
                const auto& v = d.arr.verts[vi];
                bool a0 = is_alpha_curve(d, v.pass[0].curve);
                bool a1 = is_alpha_curve(d, v.pass[1].curve);
                if (a0 != a1) d.generators.push_back(vi);
            }
            for (size_t i = 0; i < d.generators.size(); ++i)
                d.gen_names.push_back("g" + std::to_string(i));
            d.sys = build_domain_system(d.arr, d.beta_curve);
            return d;
        } catch (const DegenerateArrangement& e) {
            lasterr = e.what();
            continue;
        }
    }
    throw std::runtime_error("overlay: no valid perturbation found: " + lasterr);
}

// ---------------------------------------------------------------------------
// Domain invariants

Rat euler_measure(const PairedDiagram& d, const Domain& B) {
    Rat e(0);
    for (int r = 0; r < d.arr.num_regions; ++r)
        e += Rat(B.mult[r]) * (Rat(d.arr.region_chi[r]) - Rat(d.arr.region_corners[r], 4));
    return e;
}

Rat corner_multiplicity(const PairedDiagram& d, const Domain& B, int vert) {
    Rat s(0);
    for (int i = 0; i < 4; ++i) s += Rat(B.mult[d.arr.quadrant_region[vert][i]]);
    return s / 4;
}

namespace {

// chain coefficient of the given passage's strand just after the vertex
long strand_coeff(const PairedDiagram& d, const Domain& B, int vert, int pi) {
    const ArrVertex& v = d.arr.verts[vert];
    int a_out = -1;
    for (int i = 0; i < 4; ++i)
        if (v.ends[i].passage == pi && v.ends[i].outgoing) a_out = i;
    int qa = d.arr.quadrant_region[vert][a_out];
    int qb = d.arr.quadrant_region[vert][(a_out + 3) % 4];
    return B.mult[qa] - B.mult[qb];
}

long self_intersections(const PairedDiagram& d, const Domain& B, bool alpha_side) {
    long s = 0;
    for (int vi = 0; vi < (int)d.arr.verts.size(); ++vi) {
        const ArrVertex& v = d.arr.verts[vi];
        bool a0 = is_alpha_curve(d, v.pass[0].curve);
        bool a1 = is_alpha_curve(d, v.pass[1].curve);
        if (alpha_side && (!a0 || !a1)) continue;
        if (!alpha_side && (a0 || a1)) continue;
        long c0 = strand_coeff(d, B, vi, 0);
        long c1 = strand_coeff(d, B, vi, 1);
        s += v.sign * c0 * c1;
    }
    return s;
}

} // namespace

long self_intersection_alpha(const PairedDiagram& d, const Domain& B) {
    return self_intersections(d, B, true);
}
long self_intersection_beta(const PairedDiagram& d, const Domain& B) {
    return self_intersections(d, B, false);
}

long domain_index(const PairedDiagram& d, const Domain& B) {
    Rat ind = euler_measure(d, B);
    ind += corner_multiplicity(d, B, B.from);
    ind += corner_multiplicity(d, B, B.to);
    ind -= Rat(self_intersection_alpha(d, B));
    ind -= Rat(self_intersection_beta(d, B));
    if (!is_integer(ind)) throw std::runtime_error("non-integral index");
    return rfloor(ind).get_si();
}

Rat chi_embedded(const PairedDiagram& d, const Domain& B) {
    Rat chi(1);
    chi += euler_measure(d, B);
    chi -= corner_multiplicity(d, B, B.from);
    chi -= corner_multiplicity(d, B, B.to);
    chi += Rat(self_intersection_alpha(d, B));
    return chi;
}

long multiplicity_w(const PairedDiagram& d, const Domain& B) { return B.mult[d.region_w]; }
long multiplicity_z(const PairedDiagram& d, const Domain& B) { return B.mult[d.region_z]; }

std::vector<Domain> enumerate_domains(const PairedDiagram& d, int gx, int gy,
                                      BasepointSide side) {
    int vx = d.generators[gx], vy = d.generators[gy];
    auto base = connecting_domain(d.sys, vx, vy);
    if (!base) return {};
    int zero = side == BasepointSide::ZeroZ ? d.region_z : d.region_w;
    return enumerate_positive(d.sys, vx, vy, *base, zero);
}

// ---------------------------------------------------------------------------
// Boundary walks and the bigon certificate

namespace {

// arc chain coefficients of a domain
std::vector<long> arc_coeffs(const PairedDiagram& d, const Domain& B) {
    std::vector<long> c(d.arr.arcs.size());
    for (size_t a = 0; a < d.arr.arcs.size(); ++a) {
        int rl = d.arr.region_left(d.arr.he_of((int)a, true));
        int rr = d.arr.region_left(d.arr.he_of((int)a, false));
        c[a] = B.mult[rl] - B.mult[rr];
    }
    return c;
}

// on-track boundary traversal on the chosen side from vertex vstart to vend,
// consuming exactly the chain multiset; returns false when impossible
bool boundary_walk(const PairedDiagram& d, const std::vector<long>& coeff, bool alpha_side,
                   int vstart, int vend) {
    const Arrangement& arr = d.arr;
    std::vector<long> remaining = coeff;
    long total = 0;
    for (size_t a = 0; a < remaining.size(); ++a) {
        bool on_side = is_alpha_curve(d, arr.arcs[a].curve) == alpha_side;
        if (!on_side) {
            if (false && remaining[a] != 0) return false;
            continue;
        }
        total += std::abs(remaining[a]);
    }
    if (total == 0) return false;

    auto passage_of = [&](int vert, int arc, bool arrived_forward) -> int {
        const ArrVertex& v = arr.verts[vert];
        for (int pi = 0; pi < 2; ++pi) {
            if (arrived_forward && v.pass[pi].arc_in == arc) return pi;
            if (!arrived_forward && v.pass[pi].arc_out == arc) return pi;
        }
        return -1;
    };

    for (int which = 0; which < 2; ++which) {
        std::vector<long> rem = remaining;
        long left = total;
        // starting passage at vstart on this side
        const ArrVertex& v0 = arr.verts[vstart];
        int pi0 = -1;
        for (int pi = 0; pi < 2; ++pi)
            if (is_alpha_curve(d, v0.pass[pi].curve) == alpha_side) pi0 = pi;
        if (pi0 < 0) return false;
        int arc, dir;  // dir +1 forward
        if (which == 0) {
            arc = v0.pass[pi0].arc_out;
            dir = +1;
        } else {
            arc = v0.pass[pi0].arc_in;
            dir = -1;
        }
        int cur = vstart;
        bool ok = true;
        long guard = 4 * total + 8;
        while (left > 0 && guard-- > 0) {
            if (dir > 0 ? rem[arc] <= 0 : rem[arc] >= 0) {
                ok = false;
                break;
            }
            rem[arc] -= dir;
            left--;
            int nxt = dir > 0 ? arr.arcs[arc].v_to : arr.arcs[arc].v_from;
            cur = nxt;
            if (left == 0) break;
            int pi = passage_of(cur, arc, dir > 0);
            if (pi < 0) {
                ok = false;
                break;
            }
            arc = dir > 0 ? arr.verts[cur].pass[pi].arc_out : arr.verts[cur].pass[pi].arc_in;
        }
        if (ok && left == 0 && cur == vend) return true;
    }
    return false;
}

bool support_connected(const PairedDiagram& d, const Domain& B) {
    std::vector<int> sup;
    for (int r = 0; r < d.arr.num_regions; ++r)
        if (B.mult[r] > 0) sup.push_back(r);
    if (sup.empty()) return false;
    std::set<int> supset(sup.begin(), sup.end());
    std::set<int> seen{sup[0]};
    std::deque<int> q{sup[0]};
    while (!q.empty()) {
        int r = q.front();
        q.pop_front();
        for (size_t a = 0; a < d.arr.arcs.size(); ++a) {
            int rl = d.arr.region_left(d.arr.he_of((int)a, true));
            int rr = d.arr.region_left(d.arr.he_of((int)a, false));
            if (rl == r && supset.count(rr) && !seen.count(rr)) {
                seen.insert(rr);
                q.push_back(rr);
            }
            if (rr == r && supset.count(rl) && !seen.count(rl)) {
                seen.insert(rl);
                q.push_back(rl);
            }
        }
    }
    return seen.size() == supset.size();
}

} // namespace

KnotComplexR differential(const PairedDiagram& d) {
    int n = (int)d.generators.size();
    KnotComplexR c;
    for (int i = 0; i < n; ++i) c.add_gen(d.gen_names[i], 0, 0);

    for (int gx = 0; gx < n; ++gx)
        for (int gy = 0; gy < n; ++gy) {
            if (gx == gy) continue;
            std::vector<Domain> doms = enumerate_domains(d, gx, gy, BasepointSide::ZeroZ);
            std::vector<Domain> dw = enumerate_domains(d, gx, gy, BasepointSide::ZeroW);
            for (Domain& b : dw)
                if (multiplicity_z(d, b) != 0) doms.push_back(std::move(b));
            for (const Domain& B : doms) {
                if (domain_index(d, B) != 1) continue;
                auto coeff = arc_coeffs(d, B);
                bool aw = boundary_walk(d, coeff, true, B.from, B.to);
                bool bw = boundary_walk(d, coeff, false, B.to, B.from);
                if (!aw || !bw) continue;  // no on-track boundary: count zero
                Rat chi = chi_embedded(d, B);
                if (chi != 1) {
                    // chi_emb < 1: a disk representative would be non-embedded
                    // and of index below one, so the count is provably zero
                    if (chi < 1) continue;
                    std::ostringstream os;
                    os << "index-1 positive domain from " << d.gen_names[gx] << " to "
                       << d.gen_names[gy] << " has chi_emb=" << rat_str(chi);
                    throw std::runtime_error(os.str());
                }
                Rat nx = corner_multiplicity(d, B, B.from);
                Rat ny = corner_multiplicity(d, B, B.to);
                bool convex = rfrac(nx) == Rat(1, 4) && rfrac(ny) == Rat(1, 4);
                if (!convex || !support_connected(d, B)) {
                    std::ostringstream os;
                    os << "index-1 positive domain from " << d.gen_names[gx] << " to "
                       << d.gen_names[gy] << " failed the bigon certificate";
                    throw std::runtime_error(os.str());
                }
                c.add_arrow(gx, gy,
                            Mono{multiplicity_w(d, B), multiplicity_z(d, B)});
            }
        }
    return c;
}

// ---------------------------------------------------------------------------
// checks

bool alpha_only_unobstructed(const Arrangement& arr, int marked_region, std::string* witness) {
    DomainSystem sys = build_domain_system(arr, -1);
    const IntSolver& solver = get_solver(sys);
    const auto& K = sys.periodic_lattice;
    int k = (int)K.size();
    int R = sys.num_regions;

    // zero-cornered: a nontrivial nonnegative kernel combination with zero
    // multiplicity at the marked region
    {
        std::vector<FMConstraint> cs;
        for (int r = 0; r < R; ++r) {
            FMConstraint f;
            f.c.assign(k, 0);
            for (int i = 0; i < k; ++i) f.c[i] = K[i][r];
            f.d = 0;
            if (r == marked_region) {
                FMConstraint g = f;
                for (auto& cc : g.c) cc = -cc;
                cs.push_back(g);
            }
            cs.push_back(f);
        }
        // nontriviality: total multiplicity >= 1
        FMConstraint tot;
        tot.c.assign(k, 0);
        for (int r = 0; r < R; ++r)
            for (int i = 0; i < k; ++i) tot.c[i] += K[i][r];
        tot.d = -1;
        cs.push_back(tot);
        if (fm_feasible(cs, k)) {
            if (witness) *witness = "positive zero-cornered domain avoiding the marked point";
            return false;
        }
    }

    // one-cornered: allow a jump at a single self-crossing
    for (int vi = 0; vi < (int)arr.verts.size(); ++vi) {
        for (int t : {1, -1}) {
            std::vector<mpz_class> b(sys.rows.size(), 0);
            for (size_t i = 0; i < sys.rows.size(); ++i) {
                if (sys.rows[i].vert != vi) continue;
                b[i] = (sys.rows[i].passage == 0) ? t : -t;
            }
            auto n0 = solver.solve(b);
            if (!n0) continue;
            std::vector<FMConstraint> cs;
            for (int r = 0; r < R; ++r) {
                FMConstraint f;
                f.c.assign(k, 0);
                for (int i = 0; i < k; ++i) f.c[i] = K[i][r];
                f.d = (*n0)[r];
                if (r == marked_region) {
                    FMConstraint g = f;
                    for (auto& cc : g.c) cc = -cc;
                    g.d = -g.d;
                    cs.push_back(g);
                }
                cs.push_back(f);
            }
            if (fm_feasible(cs, k)) {
                if (witness)
                    *witness = "positive one-cornered domain at " + pt_str(arr.verts[vi].pos);
                return false;
            }
        }
    }
    return true;
}

bool check_unobstructed(const PairedDiagram& d, std::string* witness) {
    // alpha-bounded positive domains with n_z = 0: a domain is alpha-bounded
    // iff the chain coefficient of every beta arc vanishes.
    const IntSolver& solver = get_solver(d.sys);
    const auto& Kfull = d.sys.periodic_lattice;
    int R = d.sys.num_regions;

    // restrict the kernel to beta-bounded-free combinations: coefficients on
    // beta arcs must vanish for all (that also kills corner jumps on beta)
    // zero-cornered case:
    {
        std::vector<FMConstraint> cs;
        int k = (int)Kfull.size();
        for (int r = 0; r < R; ++r) {
            FMConstraint f;
            f.c.assign(k, 0);
            for (int i = 0; i < k; ++i) f.c[i] = Kfull[i][r];
            f.d = 0;
            cs.push_back(f);
            if (r == d.region_z) {
                FMConstraint g = f;
                for (auto& cc : g.c) cc = -cc;
                cs.push_back(g);
            }
        }
        for (size_t a = 0; a < d.arr.arcs.size(); ++a) {
            if (is_alpha_curve(d, d.arr.arcs[a].curve)) continue;
            int rl = d.arr.region_left(d.arr.he_of((int)a, true));
            int rr = d.arr.region_left(d.arr.he_of((int)a, false));
            FMConstraint f;
            f.c.assign(k, 0);
            for (int i = 0; i < k; ++i) f.c[i] = Kfull[i][rl] - Kfull[i][rr];
            f.d = 0;
            FMConstraint g = f;
            for (auto& cc : g.c) cc = -cc;
            cs.push_back(f);
            cs.push_back(g);
        }
        FMConstraint tot;
        tot.c.assign(k, 0);
        for (int r = 0; r < R; ++r)
            for (int i = 0; i < k; ++i) tot.c[i] += Kfull[i][r];
        tot.d = -1;
        cs.push_back(tot);
        if (fm_feasible(cs, k)) {
            if (witness) *witness = "positive zero-cornered alpha-bounded domain with n_z=0";
            return false;
        }
    }

    // one-cornered at alpha self-crossings
    for (int vi = 0; vi < (int)d.arr.verts.size(); ++vi) {
        const ArrVertex& v = d.arr.verts[vi];
        if (!is_alpha_curve(d, v.pass[0].curve) || !is_alpha_curve(d, v.pass[1].curve))
            continue;
        for (int t : {1, -1}) {
            std::vector<mpz_class> b(d.sys.rows.size(), 0);
            for (size_t i = 0; i < d.sys.rows.size(); ++i) {
                if (d.sys.rows[i].vert != vi) continue;
                b[i] = (d.sys.rows[i].passage == 0) ? t : -t;
            }
            auto n0 = solver.solve(b);
            if (!n0) continue;
            int k = (int)Kfull.size();
            std::vector<FMConstraint> cs;
            for (int r = 0; r < R; ++r) {
                FMConstraint f;
                f.c.assign(k, 0);
                for (int i = 0; i < k; ++i) f.c[i] = Kfull[i][r];
                f.d = (*n0)[r];
                cs.push_back(f);
                if (r == d.region_z) {
                    FMConstraint g = f;
                    for (auto& cc : g.c) cc = -cc;
                    g.d = -g.d;
                    cs.push_back(g);
                }
            }
            for (size_t a = 0; a < d.arr.arcs.size(); ++a) {
                if (is_alpha_curve(d, d.arr.arcs[a].curve)) continue;
                int rl = d.arr.region_left(d.arr.he_of((int)a, true));
                int rr = d.arr.region_left(d.arr.he_of((int)a, false));
                FMConstraint f;
                f.c.assign(k, 0);
                for (int i = 0; i < k; ++i) f.c[i] = Kfull[i][rl] - Kfull[i][rr];
                f.d = (*n0)[rl] - (*n0)[rr];
                FMConstraint g = f;
                for (auto& cc : g.c) cc = -cc;
                g.d = -g.d;
                cs.push_back(f);
                cs.push_back(g);
            }
            if (fm_feasible(cs, k)) {
                if (witness)
                    *witness = "positive one-cornered alpha-bounded domain at " +
                               pt_str(v.pos);
                return false;
            }
        }
    }
    return true;
}

bool check_biadmissible(const PairedDiagram& d, std::string* witness) {
    const auto& K = d.sys.periodic_lattice;
    int k = (int)K.size();
    int R = d.sys.num_regions;
    for (int zr : {d.region_z, d.region_w}) {
        // is there a nonzero nonnegative periodic domain with mult[zr] = 0?
        std::vector<FMConstraint> cs;
        for (int r = 0; r < R; ++r) {
            FMConstraint f;
            f.c.assign(k, 0);
            for (int i = 0; i < k; ++i) f.c[i] = K[i][r];
            f.d = 0;
            cs.push_back(f);
            if (r == zr) {
                FMConstraint g = f;
                for (auto& cc : g.c) cc = -cc;
                cs.push_back(g);
            }
        }
        FMConstraint tot;
        tot.c.assign(k, 0);
        for (int r = 0; r < R; ++r)
            for (int i = 0; i < k; ++i) tot.c[i] += K[i][r];
        tot.d = -1;
        cs.push_back(tot);
        if (fm_feasible(cs, k)) {
            if (witness)
                *witness = std::string("one-signed periodic domain with n_") +
                           (zr == d.region_z ? "z" : "w") + "=0";
            return false;
        }
    }
    return true;
}

bool check_gradable(const PairedDiagram& d, std::string* witness) {
    const auto& K = d.sys.periodic_lattice;
    std::vector<Domain> cand;
    for (const auto& kv : K) {
        Domain p;
        p.mult.assign(kv.begin(), kv.end());
        cand.push_back(p);
    }
    for (size_t i = 0; i < K.size(); ++i)
        for (size_t j = i + 1; j < K.size(); ++j) {
            Domain p;
            p.mult.resize(K[i].size());
            for (size_t r = 0; r < K[i].size(); ++r) p.mult[r] = K[i][r] + K[j][r];
            cand.push_back(p);
        }
    for (const Domain& p0 : cand) {
        bool trivial = std::all_of(p0.mult.begin(), p0.mult.end(), [](long m) { return m == 0; });
        if (trivial) continue;
        for (int g : d.generators) {
            Domain p = p0;
            p.from = p.to = g;
            long ind;
            try {
                ind = domain_index(d, p);
            } catch (const std::exception&) {
                if (witness) *witness = "non-integral index on a periodic domain";
                return false;
            }
            long nz = multiplicity_z(d, p), nw = multiplicity_w(d, p);
            if (ind != 2 * nz || ind != 2 * nw) {
                if (witness)
                    *witness = "periodic domain with ind=" + std::to_string(ind) +
                               " nz=" + std::to_string(nz) + " nw=" + std::to_string(nw);
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// gradings

namespace {

int gen_component(const PairedDiagram& d, int g) {
    const ArrVertex& v = d.arr.verts[d.generators[g]];
    for (int pi = 0; pi < 2; ++pi)
        if (is_alpha_curve(d, v.pass[pi].curve)) return v.pass[pi].curve;
    return -1;
}

// chain coefficient of a whole alpha component in a domain (constant for
// cycles; sampled at the component's first arc)
long component_cycle_coeff(const PairedDiagram& d, const Domain& B, int curve) {
    for (size_t a = 0; a < d.arr.arcs.size(); ++a) {
        if (d.arr.arcs[a].curve != curve) continue;
        int rl = d.arr.region_left(d.arr.he_of((int)a, true));
        int rr = d.arr.region_left(d.arr.he_of((int)a, false));
        return B.mult[rl] - B.mult[rr];
    }
    return 0;
}

} // namespace

KnotComplexR pair_complex(const PairedDiagram& d) {
    KnotComplexR c = differential(d);
    int n = c.size();

    // periodic domains clearing compact-component cycles
    const auto& K = d.sys.periodic_lattice;
    std::vector<int> compacts;
    for (size_t ci = 0; ci + 1 < d.arr.curves.size(); ++ci)
        if (d.arr.curves[ci].closed()) compacts.push_back((int)ci);
    // coefficients of kernel elements on compact components
    std::vector<std::vector<long>> coef(K.size(), std::vector<long>(compacts.size(), 0));
    for (size_t i = 0; i < K.size(); ++i) {
        Domain p;
        p.mult.assign(K[i].begin(), K[i].end());
        for (size_t j = 0; j < compacts.size(); ++j)
            coef[i][j] = component_cycle_coeff(d, p, compacts[j]);
    }
    auto clear_cycles = [&](Domain& B) {
        for (size_t j = 0; j < compacts.size(); ++j) {
            long m = component_cycle_coeff(d, B, compacts[j]);
            if (m == 0) continue;
            // find a kernel combo with coefficient 1 on j and 0 on others
            for (size_t i = 0; i < K.size(); ++i) {
                bool okv = coef[i][j] != 0;
                for (size_t j2 = 0; j2 < compacts.size() && okv; ++j2)
                    if (j2 != j && coef[i][j2] != 0) okv = false;
                if (okv && m % coef[i][j] == 0) {
                    long f = m / coef[i][j];
                    for (int r = 0; r < (int)B.mult.size(); ++r) B.mult[r] -= f * K[i][r];
                    break;
                }
            }
        }
    };

    // relative gradings per alpha-component group, via net rotation numbers;
    // the domain formula with cycle-cleared connecting domains serves as a
    // cross-check where its self-intersection term is unambiguous
    std::map<int, std::vector<int>> groups;
    for (int g = 0; g < n; ++g) groups[gen_component(d, g)].push_back(g);
    for (auto& [comp, gens] : groups) {
        int g0 = gens[0];
        for (int g : gens) {
            if (g == g0) {
                c.gen(g).grw = 0;
                c.gen(g).grz = 0;
                continue;
            }
            auto mz = net_rotation_grading(d, g0, g, true);
            auto mw = net_rotation_grading(d, g0, g, false);
            if (!mz || !mw)
                throw std::runtime_error("pair_complex: net rotation failed within a group");
            c.gen(g).grw = -*mw;
            c.gen(g).grz = -*mz;
        }
    }

    // absolute normalization of the whole complex (pins the group containing
    // the distinguished survivors)
    KnotComplexR normalized = normalize_absolute(c);

    // re-center the remaining groups: each compact group is anchored by the
    // conjugation symmetry (A-multiset symmetric, grw+grz centered at zero)
    {
        KnotComplexR red = reduce(normalized);
        std::map<int, std::pair<bool, std::vector<int>>> live;  // comp -> gens in reduced
        // identify the distinguished group: the one holding the U/V-unmatched gens
        SnakeDecomposition dec = snake_decomposition(red);
        std::vector<bool> touched_u(red.size(), false), touched_v(red.size(), false);
        for (const auto& [kk, e] : dec.complex.diff())
            for (const Mono& m : e) {
                if (m.u > 0) touched_u[kk.first] = touched_u[kk.second] = true;
                if (m.v > 0) touched_v[kk.first] = touched_v[kk.second] = true;
            }
        std::set<std::string> distinguished_names;
        for (int i = 0; i < red.size(); ++i)
            if (!touched_u[i] || !touched_v[i]) distinguished_names.insert(red.gen(i).name);
        int dist_comp = -1;
        for (int g = 0; g < n; ++g)
            if (distinguished_names.count(normalized.gen(g).name))
                dist_comp = gen_component(d, g);

        for (auto& [comp, gens] : groups) {
            if (comp == dist_comp) continue;
            // reduced generators of this group
            std::vector<std::string> names;
            for (int g : gens) names.push_back(normalized.gen(g).name);
            long minA = 0, maxA = 0, minS = 0, maxS = 0;
            bool any = false;
            for (int i = 0; i < red.size(); ++i) {
                if (std::find(names.begin(), names.end(), red.gen(i).name) == names.end())
                    continue;
                long A = red.gen(i).alexander();
                long S = red.gen(i).grw + red.gen(i).grz;
                if (!any) {
                    minA = maxA = A;
                    minS = maxS = S;
                    any = true;
                } else {
                    minA = std::min(minA, A);
                    maxA = std::max(maxA, A);
                    minS = std::min(minS, S);
                    maxS = std::max(maxS, S);
                }
            }
            if (!any) continue;  // group died in reduction; leave as-is
            long ashift = -(maxA + minA);  // twice the x-shift of A
            long sshift = -(maxS + minS) / 2;
            if (sshift % 2 != 0) sshift -= 1;
            long da2 = ashift;  // = dw - dz
            if ((da2 + sshift) % 2 != 0) da2 -= 1;
            long dw = (sshift + da2) / 2;
            long dz = (sshift - da2) / 2;
            for (int g : gens) {
                normalized.gen(g).grw += dw;
                normalized.gen(g).grz += dz;
            }
        }
    }
    return normalized;
}

// ---------------------------------------------------------------------------
// Alexander walk

std::vector<long> alexander_via_walk(const PairedDiagram& d) {
    const Arrangement& arr = d.arr;
    const TorusCurve& beta = arr.curves[d.beta_curve];
    // traversal order of generators along beta: events sorted by (seg, t)
    struct Ev {
        int seg;
        Rat t;
        int gen;
    };
    std::vector<Ev> evs;
    for (int g = 0; g < (int)d.generators.size(); ++g) {
        const ArrVertex& v = arr.verts[d.generators[g]];
        for (int pi = 0; pi < 2; ++pi)
            if (!is_alpha_curve(d, v.pass[pi].curve))
                evs.push_back({v.pass[pi].seg, v.pass[pi].t, g});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        if (a.seg != b.seg) return a.seg < b.seg;
        return a.t < b.t;
    });
    // signed crossings of the short arc translates between consecutive events
    auto arc_hits_between = [&](const Pt& a, const Pt& b) {
        // signed crossings of segment [a,b] of beta with the short w-z arcs
        long s = 0;
        // the basepoints straddle a lattice translate; take the short arc
        // z -> w through it
        Pt zn = d.z, wn = d.w;
        // shift wn next to zn
        while (wn.x - zn.x > Rat(1, 2)) wn.x -= 1;
        while (zn.x - wn.x > Rat(1, 2)) wn.x += 1;
        while (wn.y - zn.y > Rat(1, 2)) wn.y -= 1;
        while (zn.y - wn.y > Rat(1, 2)) wn.y += 1;
        TorusCurve seg;
        seg.verts = {zn, wn};
        // crossings of beta segment [a,b] with translates of [zn,wn]
        for (const CurveHit& h : segment_curve_hits(a, b, {seg})) {
            if (h.seg != 0) continue;
            s += (h.side > 0) ? -1 : 1;  // z on the left increases A
        }
        return s;
    };
    int ng = (int)d.generators.size();
    std::vector<long> A(ng, 0);
    if (evs.empty()) return A;
    long acc = 0;
    // walk from the first event around one period
    for (size_t i = 0; i < evs.size(); ++i) {
        A[evs[i].gen] = acc;
        const Ev& e1 = evs[i];
        const Ev& e2 = evs[(i + 1) % evs.size()];
        // geometry of beta between e1 and e2
        auto pos = [&](const Ev& e) -> Pt {
            return beta.seg_a(e.seg) + beta.seg_dir(e.seg) * e.t;
        };
        std::vector<Pt> path;
        path.push_back(pos(e1));
        int s = e1.seg;
        bool wrapsev = (i + 1 == evs.size());
        Vec shift{Rat(0), Rat(0)};
        while (true) {
            bool target_here = (!wrapsev && s == e2.seg) ||
                               (wrapsev && s == e2.seg && shift.y > 0);
            if (target_here) break;
            int snext = (s + 1) % beta.nsegs();
            if (snext == 0) shift = shift + beta.period;
            path.push_back(beta.verts[snext] + shift);
            s = snext;
            if (wrapsev && s == e2.seg && shift.y > 0) break;
            if (!wrapsev && s == e2.seg) break;
        }
        path.push_back(pos(e2) + shift);
        for (size_t j = 0; j + 1 < path.size(); ++j)
            if (!(path[j] == path[j + 1])) acc += arc_hits_between(path[j], path[j + 1]);
    }
    return A;
}

// ---------------------------------------------------------------------------
// Net rotation cross-check

std::optional<long> net_rotation_grading(const PairedDiagram& d, int gx, int gy, bool use_z) {
    if (gx == gy) return 0;
    const Arrangement& arr = d.arr;
    if (gen_component(d, gx) != gen_component(d, gy)) return std::nullopt;

    // forward on-track walk from vstart, stopping at the `passes`-th arrival
    // at vend; collects segment directions and the displacement in the cover
    auto walk_dirs = [&](int vstart, int vend, bool alpha_side, int passes,
                         std::vector<Vec>& dirs, Vec& disp, Pt& start) -> bool {
        dirs.clear();
        const ArrVertex& v0 = arr.verts[vstart];
        int pi0 = -1;
        for (int pi = 0; pi < 2; ++pi)
            if (is_alpha_curve(d, v0.pass[pi].curve) == alpha_side) pi0 = pi;
        if (pi0 < 0) return false;
        int arc = v0.pass[pi0].arc_out;
        start = arr.arcs[arc].geom.front();
        disp = Vec{Rat(0), Rat(0)};
        int seen = 0;
        long guard = (long)(passes + 1) * 4 * (long)arr.arcs.size() + 16;
        while (guard-- > 0) {
            const ArrArc& a = arr.arcs[arc];
            for (size_t i = 0; i + 1 < a.geom.size(); ++i)
                dirs.push_back(a.geom[i + 1] - a.geom[i]);
            disp = disp + (a.geom.back() - a.geom.front());
            int cur = a.v_to;
            if (cur == vend && ++seen == passes) return true;
            const ArrVertex& v = arr.verts[cur];
            int pi = (v.pass[0].arc_in == arc) ? 0 : 1;
            if (v.pass[pi].arc_in != arc) return false;
            arc = v.pass[pi].arc_out;
        }
        return false;
    };

    Pt base = use_z ? d.z : d.w;
    for (int arev = 0; arev < 2; ++arev)
        for (int apass = 1; apass <= 3; ++apass)
            for (int brev = 0; brev < 2; ++brev)
                for (int bpass = 1; bpass <= 3; ++bpass) {
                    std::vector<Vec> adirs, bdirs;
                    Vec adisp, bdisp;
                    Pt astart, bstart;
                    bool aok = arev == 0 ? walk_dirs(d.generators[gx], d.generators[gy],
                                                     true, apass, adirs, adisp, astart)
                                         : walk_dirs(d.generators[gy], d.generators[gx],
                                                     true, apass, adirs, adisp, astart);
                    if (!aok) continue;
                    Pt loop_anchor = astart;
                    if (arev) {
                        std::reverse(adirs.begin(), adirs.end());
                        for (Vec& v : adirs) v = Pt(Rat(0), Rat(0)) - v;
                        loop_anchor = astart + adisp;  // forward walk endpoint = gx lift
                        adisp = Pt(Rat(0), Rat(0)) - adisp;
                    }
                    bool bok = brev == 0 ? walk_dirs(d.generators[gy], d.generators[gx],
                                                     false, bpass, bdirs, bdisp, bstart)
                                         : walk_dirs(d.generators[gx], d.generators[gy],
                                                     false, bpass, bdirs, bdisp, bstart);
                    if (!bok) continue;
                    if (brev) {
                        std::reverse(bdirs.begin(), bdirs.end());
                        for (Vec& v : bdirs) v = Pt(Rat(0), Rat(0)) - v;
                        bdisp = Pt(Rat(0), Rat(0)) - bdisp;
                    }
                    Vec total = adisp + bdisp;
                    if (!(total.x == 0 && total.y == 0)) continue;

                    std::vector<Vec> loop = adirs;
                    loop.insert(loop.end(), bdirs.begin(), bdirs.end());
                    bool bad = false;
                    long k = 0;
                    for (size_t i = 0; i < loop.size() && !bad; ++i) {
                        const Vec& u = loop[i];
                        const Vec& v = loop[(i + 1) % loop.size()];
                        if (cross(u, v) == 0 && dot(u, v) < 0) bad = true;
                        else k += turn_crossing(u, v);
                    }
                    if (bad) continue;
                    int sx = sgn(cross(loop.back(), loop.front()));
                    size_t yc = adirs.size();
                    int sy = sgn(cross(loop[yc - 1], loop[yc]));
                    if ((sx + sy) % 2 != 0) continue;
                    long nr = 2 * k - (sx + sy) / 2;

                    // winding sum of the closed loop around basepoint translates
                    std::vector<Pt> poly;
                    Pt cur(Rat(0), Rat(0));
                    poly.push_back(cur);
                    for (const Vec& v : loop) {
                        cur = cur + v;
                        poly.push_back(cur);
                    }
                    poly.pop_back();
                    for (Pt& p : poly) p = p + loop_anchor;
                    Rat x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
                    for (const Pt& p : poly) {
                        x0 = std::min(x0, p.x);
                        x1 = std::max(x1, p.x);
                        y0 = std::min(y0, p.y);
                        y1 = std::max(y1, p.y);
                    }
                    long windsum = 0;
                    for (mpz_class ux = rfloor(x0 - base.x) - 1; ux <= rceil(x1 - base.x) + 1;
                         ++ux)
                        for (mpz_class uy = rfloor(y0 - base.y) - 1;
                             uy <= rceil(y1 - base.y) + 1; ++uy)
                            windsum += winding_number(poly, base + Vec{Rat(ux), Rat(uy)});

                    return nr - 2 * windsum;
                }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

nlohmann::json paired_diagram_dump(const PairedDiagram& d) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (size_t g = 0; g < d.generators.size(); ++g) {
        const ArrVertex& v = d.arr.verts[d.generators[g]];
        j["generators"].push_back({{"name", d.gen_names[g]},
                                   {"x", rat_str(v.pos.x)},
                                   {"y", rat_str(v.pos.y)}});
    }
    j["num_regions"] = d.arr.num_regions;
    j["region_w"] = d.region_w;
    j["region_z"] = d.region_z;
    nlohmann::json regions = nlohmann::json::array();
    for (int r = 0; r < d.arr.num_regions; ++r)
        regions.push_back({{"chi", d.arr.region_chi[r]}, {"corners", d.arr.region_corners[r]}});
    j["regions"] = regions;
    return j;
}

} // namespace satfloer
