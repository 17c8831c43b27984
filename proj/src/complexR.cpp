#include "satfloer/complexR.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

namespace satfloer {

std::optional<Mono> mono_mul(const Mono& a, const Mono& b) {
    Mono r{a.u + b.u, a.v + b.v};
    if (r.u > 0 && r.v > 0) return std::nullopt;
    return r;
}

void entry_add(Entry& e, const Mono& m) {
    auto it = std::find(e.begin(), e.end(), m);
    if (it != e.end()) {
        e.erase(it);
    } else {
        e.insert(std::upper_bound(e.begin(), e.end(), m), m);
    }
}

static void entry_add_all(Entry& e, const Entry& o, const Mono& scale) {
    for (const Mono& m : o) {
        auto p = mono_mul(m, scale);
        if (p) entry_add(e, *p);
    }
}

long GenR::alexander() const {
    long d = grw - grz;
    if (d % 2 != 0) throw std::runtime_error("odd grw-grz for generator " + name);
    return d / 2;
}

int KnotComplexR::add_gen(const std::string& name, long grw, long grz) {
    gens_.push_back({name, grw, grz});
    return (int)gens_.size() - 1;
}

void KnotComplexR::add_arrow(int from, int to, Mono m) {
    Entry& e = diff_[{from, to}];
    entry_add(e, m);
    if (e.empty()) diff_.erase({from, to});
}

int KnotComplexR::index_of(const std::string& name) const {
    for (int i = 0; i < (int)gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return -1;
}

Entry KnotComplexR::entry(int from, int to) const {
    auto it = diff_.find({from, to});
    return it == diff_.end() ? Entry{} : it->second;
}

void KnotComplexR::set_entry(int from, int to, Entry e) {
    if (e.empty())
        diff_.erase({from, to});
    else
        diff_[{from, to}] = std::move(e);
}

bool KnotComplexR::is_reduced() const {
    for (const auto& [k, e] : diff_)
        for (const Mono& m : e)
            if (m.unit()) return false;
    return true;
}

void KnotComplexR::shift_gradings(long dw, long dz) {
    for (auto& g : gens_) {
        g.grw += dw;
        g.grz += dz;
    }
}

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "pass " : "FAIL ") << c.check
           << (c.witness.empty() ? "" : " [" + c.witness + "]") << "\n";
    return os.str();
}

ValidationReport verify(const KnotComplexR& c) {
    ValidationReport rep;

    CheckResult d2{"d_squared_zero", true, ""};
    for (int x = 0; x < c.size(); ++x) {
        std::map<int, Entry> sq;
        for (const auto& [k, e1] : c.diff()) {
            if (k.first != x) continue;
            for (const auto& [k2, e2] : c.diff()) {
                if (k2.first != k.second) continue;
                for (const Mono& m1 : e1)
                    for (const Mono& m2 : e2) {
                        auto p = mono_mul(m1, m2);
                        if (p) entry_add(sq[k2.second], *p);
                    }
            }
        }
        for (const auto& [z, e] : sq)
            if (!e.empty()) {
                d2.pass = false;
                d2.witness = "d^2(" + c.gen(x).name + ") hits " + c.gen(z).name;
            }
    }
    rep.checks.push_back(d2);

    CheckResult bi{"bidegree_homogeneous", true, ""};
    for (const auto& [k, e] : c.diff()) {
        const GenR& gx = c.gen(k.first);
        const GenR& gy = c.gen(k.second);
        for (const Mono& m : e) {
            bool ok = (gy.grw == gx.grw - 1 + 2 * m.u) && (gy.grz == gx.grz - 1 + 2 * m.v);
            if (!ok) {
                bi.pass = false;
                bi.witness = gx.name + " -> " + gy.name;
            }
        }
    }
    rep.checks.push_back(bi);

    if (c.is_reduced()) {
        CheckResult sym{"alexander_symmetric", true, ""};
        std::map<long, int> count;
        bool odd = false;
        for (int i = 0; i < c.size(); ++i) {
            if ((c.gen(i).grw - c.gen(i).grz) % 2 != 0) {
                odd = true;
                break;
            }
            count[c.gen(i).alexander()]++;
        }
        if (odd) {
            sym.pass = false;
            sym.witness = "odd grw-grz";
        } else {
            for (const auto& [a, n] : count) {
                auto it = count.find(-a);
                if (it == count.end() || it->second != n) {
                    sym.pass = false;
                    sym.witness = "A=" + std::to_string(a);
                }
            }
        }
        rep.checks.push_back(sym);
    }
    return rep;
}

KnotComplexR reduce(const KnotComplexR& c) {
    int n = c.size();
    std::vector<bool> alive(n, true);
    std::map<std::pair<int, int>, Entry> d;
    for (const auto& [k, e] : c.diff()) d[k] = e;

    while (true) {
        int fx = -1, fy = -1;
        for (const auto& [k, e] : d) {
            if (!alive[k.first] || !alive[k.second]) continue;
            bool has_unit = std::any_of(e.begin(), e.end(), [](const Mono& m) { return m.unit(); });
            if (has_unit) {
                if (e.size() != 1)
                    throw std::runtime_error("reduce: non-homogeneous unit entry");
                fx = k.first;
                fy = k.second;
                break;
            }
        }
        if (fx < 0) break;

        std::vector<std::pair<int, Entry>> into, outof;
        for (const auto& [k, e] : d) {
            if (!alive[k.first] || !alive[k.second]) continue;
            if (k.second == fy && k.first != fx) into.push_back({k.first, e});
            if (k.first == fx && k.second != fy) outof.push_back({k.second, e});
        }
        for (const auto& [w, r] : into)
            for (const auto& [z, s] : outof)
                for (const Mono& mr : r)
                    for (const Mono& ms : s) {
                        auto p = mono_mul(mr, ms);
                        if (!p) continue;
                        Entry& tgt = d[{w, z}];
                        entry_add(tgt, *p);
                        if (tgt.empty()) d.erase({w, z});
                    }
        alive[fx] = alive[fy] = false;
    }

    KnotComplexR out;
    std::vector<int> remap(n, -1);
    for (int i = 0; i < n; ++i)
        if (alive[i]) remap[i] = out.add_gen(c.gen(i).name, c.gen(i).grw, c.gen(i).grz);
    for (const auto& [k, e] : d) {
        if (!alive[k.first] || !alive[k.second]) continue;
        for (const Mono& m : e) out.add_arrow(remap[k.first], remap[k.second], m);
    }
    return out;
}

namespace {

int f2_rank(std::vector<std::vector<bool>> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t cpos = 0; cpos < cols && r < rows.size(); ++cpos) {
        size_t piv = r;
        while (piv < rows.size() && !rows[piv][cpos]) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][cpos])
                for (size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] ^ rows[r][j];
        ++r;
        ++rank;
    }
    return rank;
}

} // namespace

SpecializedHomology specialize(const KnotComplexR& c, Specialization s) {
    auto grading = [&](int i) {
        return s == Specialization::U1V0 ? c.gen(i).grz : c.gen(i).grw;
    };
    std::map<std::pair<int, int>, bool> dd;
    for (const auto& [k, e] : c.diff()) {
        int par = 0;
        for (const Mono& m : e) {
            bool keep = (s == Specialization::U1V0) ? (m.v == 0) : (m.u == 0);
            if (keep) par ^= 1;
        }
        if (par) dd[k] = true;
    }
    std::map<long, std::vector<int>> by_deg;
    for (int i = 0; i < c.size(); ++i) by_deg[grading(i)].push_back(i);
    std::map<long, int> drank;
    for (const auto& [g, srcs] : by_deg) {
        auto tg = by_deg.find(g - 1);
        if (tg == by_deg.end()) continue;
        const auto& tgts = tg->second;
        std::vector<std::vector<bool>> rows;
        for (int sgen : srcs) {
            std::vector<bool> row(tgts.size(), false);
            for (size_t jcol = 0; jcol < tgts.size(); ++jcol)
                if (dd.count({sgen, tgts[jcol]})) row[jcol] = true;
            rows.push_back(std::move(row));
        }
        drank[g] = f2_rank(std::move(rows));
    }
    SpecializedHomology out;
    for (const auto& [g, gens] : by_deg) {
        int dim = (int)gens.size();
        int rk_out = drank.count(g) ? drank[g] : 0;
        int rk_in = drank.count(g + 1) ? drank[g + 1] : 0;
        int h = dim - rk_out - rk_in;
        if (h > 0) {
            out.rank_by_grading[g] = h;
            out.total_rank += h;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Snake decomposition

namespace {

struct BasisTracker {
    std::vector<std::vector<Entry>> T, Tinv;
    explicit BasisTracker(int n) : T(n, std::vector<Entry>(n)), Tinv(n, std::vector<Entry>(n)) {
        for (int i = 0; i < n; ++i) {
            T[i][i] = {Mono{0, 0}};
            Tinv[i][i] = {Mono{0, 0}};
        }
    }
    void apply(int t, int s, const Mono& m) {
        for (size_t j = 0; j < T.size(); ++j) entry_add_all(T[t][j], T[s][j], m);
        for (size_t i = 0; i < Tinv.size(); ++i) entry_add_all(Tinv[i][s], Tinv[i][t], m);
    }
};

void diff_basis_change(std::map<std::pair<int, int>, Entry>& d, int n, int t, int s,
                       const Mono& m) {
    auto get = [&](int a, int b) -> Entry {
        auto it = d.find({a, b});
        return it == d.end() ? Entry{} : it->second;
    };
    auto put = [&](int a, int b, Entry e) {
        if (e.empty())
            d.erase({a, b});
        else
            d[{a, b}] = std::move(e);
    };
    for (int z = 0; z < n; ++z) {
        Entry es = get(s, z);
        if (es.empty()) continue;
        Entry et = get(t, z);
        entry_add_all(et, es, m);
        put(t, z, std::move(et));
    }
    for (int x = 0; x < n; ++x) {
        Entry ext = get(x, t);
        if (ext.empty()) continue;
        Entry exs = get(x, s);
        entry_add_all(exs, ext, m);
        put(x, s, std::move(exs));
    }
}

struct Ctx {
    std::map<std::pair<int, int>, Entry>& d;
    int n;
    BasisTracker& bt;
    void apply(int t, int s, const Mono& m) {
        bt.apply(t, s, m);
        diff_basis_change(d, n, t, s, m);
    }
};

// V-incidence of a generator in a V-simple differential.
struct VInc {
    int kind = 0;  // 0 none, 1 out (this -> partner), 2 in (partner -> this)
    long exp = 0;
    int partner = -1;
};

VInc v_incidence(const std::map<std::pair<int, int>, Entry>& d, int g) {
    VInc r;
    for (const auto& [k, e] : d)
        for (const Mono& m : e) {
            if (m.v <= 0) continue;
            if (k.first == g) return VInc{1, m.v, k.second};
            if (k.second == g) return VInc{2, m.v, k.first};
        }
    return r;
}

// P := P + Q with unit scale, plus the compensation that keeps the V-side
// simple. Valid only when the ambient V-differential is simple. The
// compensation may introduce new U-arrows, which the caller keeps processing.
void absorb_v_preserving(Ctx& c, int P, int Q) {
    VInc vp = v_incidence(c.d, P);
    VInc vq = v_incidence(c.d, Q);
    // If exactly one of the two carries a V-in, it must be the kept one (Q);
    // callers arrange this via absorb_pair below.
    c.apply(P, Q, Mono{0, 0});
    if (vp.kind == 1 && vq.kind == 1) {
        // both V-sources; P's exponent is <= Q's by caller arrangement
        c.apply(vp.partner, vq.partner, Mono{0, vq.exp - vp.exp});
    } else if (vp.kind == 2 && vq.kind == 2) {
        // both V-targets; P's exponent is >= Q's by caller arrangement
        c.apply(vp.partner, vq.partner, Mono{0, vp.exp - vq.exp});
    }
}

// Cancel one of two same-exponent arrows a -> g <- b (or g -> a, g -> b) by
// adding one generator to the other; returns true on success.
void absorb_pair(Ctx& c, int a, int b) {
    VInc va = v_incidence(c.d, a);
    VInc vb = v_incidence(c.d, b);
    auto ok_as_absorber = [&](const VInc& p, const VInc& q) {
        if (p.kind == 2 && q.kind != 2) return false;           // in-type must be kept
        if (p.kind == 1 && q.kind == 1) return p.exp <= q.exp;  // out-out: smaller exp absorbs
        if (p.kind == 2 && q.kind == 2) return p.exp >= q.exp;  // in-in: larger exp absorbs
        return true;
    };
    if (ok_as_absorber(va, vb))
        absorb_v_preserving(c, a, b);
    else
        absorb_v_preserving(c, b, a);
}

// Make the chosen side simple. For the V side this uses unrestricted unit
// changes; for the U side every unit change goes through absorb_pair so the
// V side stays simple.
void ensure_simple(Ctx& c, bool u_side, bool preserve_v) {
    auto exp_of = [&](const Mono& m) { return u_side ? m.u : m.v; };
    auto is_side = [&](const Mono& m) { return u_side ? (m.u > 0) : (m.v > 0); };
    auto unit_merge = [&](int a, int b) {
        if (preserve_v)
            absorb_pair(c, a, b);
        else
            c.apply(a, b, Mono{0, 0});
    };
    auto scaled = [&](long e) { return u_side ? Mono{e, 0} : Mono{0, e}; };

    long steps = 400L * c.n * c.n + 4000;
    while (steps-- > 0) {
        // find a violating generator: >= 2 in-arrows or >= 2 out-arrows of this side
        int fixed_any = 0;
        for (int g = 0; g < c.n && !fixed_any; ++g) {
            // collect side-incidences at g
            std::vector<std::pair<long, int>> ins, outs;  // (exp, other)
            for (const auto& [k, e] : c.d)
                for (const Mono& m : e) {
                    if (!is_side(m)) continue;
                    if (k.second == g) ins.push_back({exp_of(m), k.first});
                    if (k.first == g) outs.push_back({exp_of(m), k.second});
                }
            if (ins.size() >= 2) {
                std::sort(ins.begin(), ins.end());
                auto [e1, x1] = ins[0];
                auto [e2, x2] = ins[1];
                if (e2 > e1)
                    c.apply(x2, x1, scaled(e2 - e1));
                else
                    unit_merge(x2, x1);
                fixed_any = 1;
            } else if (outs.size() >= 2) {
                std::sort(outs.begin(), outs.end());
                auto [f1, y1] = outs[0];
                auto [f2, y2] = outs[1];
                if (f2 > f1)
                    c.apply(y1, y2, scaled(f2 - f1));
                else
                    unit_merge(y1, y2);
                fixed_any = 1;
            }
        }
        if (!fixed_any) break;
    }
    if (steps <= 0)
        throw std::runtime_error(
            "snake simplification did not terminate (nontrivial local system?)");
}

bool side_is_simple(const std::map<std::pair<int, int>, Entry>& d, int n, bool u_side) {
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& [k, e] : d)
        for (const Mono& m : e)
            if ((u_side && m.u > 0) || (!u_side && m.v > 0)) {
                outdeg[k.first]++;
                indeg[k.second]++;
            }
    for (int i = 0; i < n; ++i)
        if (indeg[i] > 1 || outdeg[i] > 1 || (indeg[i] && outdeg[i])) return false;
    return true;
}

} // namespace

SnakeDecomposition snake_decomposition(const KnotComplexR& c) {
    if (!c.is_reduced()) throw std::runtime_error("snake_decomposition: complex not reduced");
    int n = c.size();
    std::map<std::pair<int, int>, Entry> d;
    for (const auto& [k, e] : c.diff()) d[k] = e;
    BasisTracker bt(n);
    Ctx ctx{d, n, bt};

    ensure_simple(ctx, /*u_side=*/false, /*preserve_v=*/false);
    ensure_simple(ctx, /*u_side=*/true, /*preserve_v=*/true);
    if (!side_is_simple(d, n, false) || !side_is_simple(d, n, true))
        throw std::runtime_error(
            "snake_decomposition: simplification did not stabilize (nontrivial local system?)");

    SnakeDecomposition out;
    for (int i = 0; i < n; ++i) out.complex.add_gen(c.gen(i).name, c.gen(i).grw, c.gen(i).grz);
    for (const auto& [k, e] : d)
        for (const Mono& m : e) {
            if (m.unit()) throw std::runtime_error("snake_decomposition: unit entry appeared");
            out.complex.add_arrow(k.first, k.second, m);
        }
    out.basis = bt.T;
    out.basis_inv = bt.Tinv;

    // Chains from the U/V matchings. Multigraph with at most two incident
    // edges per generator; components are paths or cycles.
    struct MEdge {
        int a, b;
        SnakeArrow arr;  // arrow oriented a -> b when arr.forward
    };
    std::vector<MEdge> edges;
    std::vector<std::vector<int>> inc(n);
    for (const auto& [k, e] : d)
        for (const Mono& m : e) {
            MEdge ed{k.first, k.second, SnakeArrow{m.u > 0, true, m.u > 0 ? m.u : m.v}};
            inc[k.first].push_back((int)edges.size());
            inc[k.second].push_back((int)edges.size());
            edges.push_back(ed);
        }

    std::vector<bool> gen_seen(n, false);
    std::vector<bool> edge_seen(edges.size(), false);

    auto walk = [&](int start) {
        SnakeSummand sum;
        int cur = start;
        int prev_edge = -1;
        while (true) {
            sum.gens.push_back(cur);
            gen_seen[cur] = true;
            int next_edge = -1;
            for (int ei : inc[cur])
                if (ei != prev_edge && !edge_seen[ei]) {
                    next_edge = ei;
                    break;
                }
            if (next_edge < 0) break;
            edge_seen[next_edge] = true;
            const MEdge& ed = edges[next_edge];
            SnakeArrow a = ed.arr;
            a.forward = (ed.a == cur);
            sum.arrows.push_back(a);
            int nxt = (ed.a == cur) ? ed.b : ed.a;
            if (nxt == start) {
                sum.compact = true;
                break;
            }
            prev_edge = next_edge;
            cur = nxt;
        }
        return sum;
    };

    // open chains first (endpoints have at most one incident edge)
    for (int i = 0; i < n; ++i)
        if (!gen_seen[i] && inc[i].size() <= 1) out.summands.push_back(walk(i));
    for (int i = 0; i < n; ++i)
        if (!gen_seen[i]) out.summands.push_back(walk(i));
    return out;
}

int SnakeDecomposition::open_chains() const {
    int k = 0;
    for (const auto& s : summands)
        if (!s.compact) k++;
    return k;
}

int SnakeDecomposition::closed_chains() const { return (int)summands.size() - open_chains(); }

// ---------------------------------------------------------------------------
// Absolute normalization and invariants

KnotComplexR normalize_absolute(const KnotComplexR& c) {
    KnotComplexR red = c.is_reduced() ? c : reduce(c);
    SnakeDecomposition dec = snake_decomposition(red);
    auto unmatched = [&](bool u_side) -> int {
        std::vector<bool> touched(dec.complex.size(), false);
        for (const auto& [k, e] : dec.complex.diff())
            for (const Mono& m : e)
                if ((u_side && m.u > 0) || (!u_side && m.v > 0))
                    touched[k.first] = touched[k.second] = true;
        int found = -1;
        for (int i = 0; i < dec.complex.size(); ++i)
            if (!touched[i]) {
                if (found >= 0) return -2;
                found = i;
            }
        return found;
    };
    int gh = unmatched(true);
    int gv = unmatched(false);
    if (gh < 0 || gv < 0)
        throw std::runtime_error("normalize_absolute: horizontal/vertical homology is not rank one");
    KnotComplexR out = c;
    out.shift_gradings(-dec.complex.gen(gh).grw, -dec.complex.gen(gv).grz);
    return out;
}

Invariants invariants(const KnotComplexR& cin) {
    KnotComplexR c = normalize_absolute(cin.is_reduced() ? cin : reduce(cin));
    SnakeDecomposition dec = snake_decomposition(c);
    if (dec.open_chains() != 1)
        throw std::runtime_error("invariants: expected exactly one open chain, got " +
                                 std::to_string(dec.open_chains()));

    std::vector<bool> vtouched(c.size(), false);
    for (const auto& [k, e] : dec.complex.diff())
        for (const Mono& m : e)
            if (m.v > 0) vtouched[k.first] = vtouched[k.second] = true;
    int dist = -1;
    for (int i = 0; i < c.size(); ++i)
        if (!vtouched[i]) {
            if (dist >= 0) throw std::runtime_error("invariants: vertical homology not rank one");
            dist = i;
        }
    if (dist < 0) throw std::runtime_error("invariants: no vertical homology generator");

    Invariants inv;
    inv.tau = dec.complex.gen(dist).alexander();

    inv.epsilon = 0;
    for (const auto& [k, e] : dec.complex.diff())
        for (const Mono& m : e) {
            if (m.u <= 0) continue;
            if (k.second == dist) inv.epsilon = 1;
            if (k.first == dist) inv.epsilon = -1;
        }

    inv.genus = 0;
    for (int i = 0; i < c.size(); ++i) inv.genus = std::max(inv.genus, c.gen(i).alexander());

    inv.lspace = dec.summands.size() == 1 && !dec.summands[0].compact;
    if (inv.lspace) {
        std::vector<int> outdeg(c.size(), 0), indeg(c.size(), 0);
        for (const auto& [k, e] : dec.complex.diff())
            if (!e.empty()) {
                outdeg[k.first]++;
                indeg[k.second]++;
            }
        for (int i = 0; i < c.size(); ++i)
            if (outdeg[i] > 0 && indeg[i] > 0) inv.lspace = false;
    }
    return inv;
}

KnotComplexR mirror_complex(const KnotComplexR& c) {
    KnotComplexR out;
    for (int i = 0; i < c.size(); ++i)
        out.add_gen(c.gen(i).name, -c.gen(i).grw, -c.gen(i).grz);
    for (const auto& [k, e] : c.diff())
        for (const Mono& m : e) out.add_arrow(k.second, k.first, m);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical forms / isomorphism

namespace {

struct CanonChain {
    bool compact = false;
    std::vector<std::tuple<int, int, long>> arrows;
    std::vector<std::pair<long, long>> grades;
    auto tie() const { return std::tie(compact, arrows, grades); }
    bool operator<(const CanonChain& o) const { return tie() < o.tie(); }
    bool operator==(const CanonChain& o) const { return tie() == o.tie(); }
};

CanonChain canon_of(const KnotComplexR& c, const SnakeSummand& s, bool relative_grades) {
    int n = (int)s.gens.size();
    int na = (int)s.arrows.size();
    auto finish = [&](CanonChain& ch, const std::vector<int>& gorder) {
        long bw = 0, bz = 0;
        if (relative_grades && !gorder.empty()) {
            bw = c.gen(gorder[0]).grw;
            bz = c.gen(gorder[0]).grz;
        }
        for (int g : gorder) ch.grades.push_back({c.gen(g).grw - bw, c.gen(g).grz - bz});
    };
    auto build = [&](bool rev, int rot) {
        CanonChain ch;
        ch.compact = s.compact;
        std::vector<int> gorder;
        if (!s.compact) {
            for (int i = 0; i < n; ++i) gorder.push_back(s.gens[rev ? n - 1 - i : i]);
            for (int i = 0; i < na; ++i) {
                int ai = rev ? na - 1 - i : i;
                bool fwd = rev ? !s.arrows[ai].forward : s.arrows[ai].forward;
                ch.arrows.push_back({s.arrows[ai].is_u ? 1 : 0, fwd ? 1 : 0, s.arrows[ai].exp});
            }
        } else {
            for (int i = 0; i < n; ++i) {
                int idx = rev ? ((rot - i) % n + n) % n : (rot + i) % n;
                gorder.push_back(s.gens[idx]);
            }
            for (int i = 0; i < na; ++i) {
                int ai = rev ? ((rot - i - 1) % n + n) % n : (rot + i) % n;
                bool fwd = rev ? !s.arrows[ai].forward : s.arrows[ai].forward;
                ch.arrows.push_back({s.arrows[ai].is_u ? 1 : 0, fwd ? 1 : 0, s.arrows[ai].exp});
            }
        }
        finish(ch, gorder);
        return ch;
    };
    CanonChain best = build(false, 0);
    int rots = s.compact ? n : 1;
    for (int rev = 0; rev < 2; ++rev)
        for (int rot = 0; rot < rots; ++rot) {
            CanonChain cand = build(rev, rot);
            if (cand < best) best = cand;
        }
    return best;
}

std::multiset<CanonChain> canon_multiset(const KnotComplexR& cin, bool relax_compact) {
    KnotComplexR c = normalize_absolute(cin.is_reduced() ? cin : reduce(cin));
    SnakeDecomposition dec = snake_decomposition(c);
    std::multiset<CanonChain> ms;
    for (const auto& s : dec.summands)
        ms.insert(canon_of(dec.complex, s, relax_compact && s.compact));
    return ms;
}

} // namespace

bool isomorphic(const KnotComplexR& c1, const KnotComplexR& c2) {
    return canon_multiset(c1, false) == canon_multiset(c2, false);
}

bool isomorphic_relaxed_compact(const KnotComplexR& c1, const KnotComplexR& c2) {
    return canon_multiset(c1, true) == canon_multiset(c2, true);
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json complex_to_json(const KnotComplexR& c) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (int i = 0; i < c.size(); ++i)
        j["generators"].push_back(
            {{"name", c.gen(i).name}, {"grw", c.gen(i).grw}, {"grz", c.gen(i).grz}});
    j["differential"] = nlohmann::json::array();
    for (const auto& [k, e] : c.diff())
        for (const Mono& m : e) {
            nlohmann::json a{{"from", c.gen(k.first).name}, {"to", c.gen(k.second).name}};
            if (m.v == 0)
                a["u"] = m.u;
            else
                a["v"] = m.v;
            j["differential"].push_back(a);
        }
    return j;
}

KnotComplexR complex_from_json(const nlohmann::json& j) {
    KnotComplexR c;
    for (const auto& g : j.at("generators"))
        c.add_gen(g.at("name").get<std::string>(), g.at("grw").get<long>(), g.at("grz").get<long>());
    for (const auto& a : j.at("differential")) {
        int f = c.index_of(a.at("from").get<std::string>());
        int t = c.index_of(a.at("to").get<std::string>());
        if (f < 0 || t < 0) throw std::runtime_error("differential references unknown generator");
        Mono m;
        if (a.contains("u")) m.u = a.at("u").get<long>();
        if (a.contains("v")) m.v = a.at("v").get<long>();
        c.add_arrow(f, t, m);
    }
    return c;
}

} // namespace satfloer
