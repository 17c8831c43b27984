#include "satfloer/curves.hpp"

#include "satfloer/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace satfloer {

TorusCurve to_torus_curve(const PlanarPath& p) {
    TorusCurve c;
    c.verts = p.verts;
    c.period = p.kind == PathKind::Periodic ? Vec{Rat(1), Rat(0)} : Vec{Rat(0), Rat(0)};
    return c;
}

std::vector<TorusCurve> to_torus_curves(const ImmersedMulticurve& c) {
    std::vector<TorusCurve> out;
    for (const auto& p : c.components) out.push_back(to_torus_curve(p));
    return out;
}

ImmersedMulticurve unknot_curve() { return from_staircase({}, +1); }
ImmersedMulticurve trefoil_curve() { return from_staircase({1, 1}, +1); }

ImmersedMulticurve from_staircase(const std::vector<long>& steps, int handedness) {
    if (handedness != 1 && handedness != -1)
        throw std::invalid_argument("from_staircase: handedness must be +1 or -1");
    for (long s : steps)
        if (s <= 0) throw std::invalid_argument("from_staircase: steps must be positive");
    ImmersedMulticurve out;
    out.symmetry_center = Pt(Rat(0), Rat(1, 2));
    if (steps.empty()) {
        PlanarPath line;
        line.kind = PathKind::Periodic;
        line.verts = {Pt(Rat(-1, 4), Rat(1, 2))};
        out.components = {line};
        return out;
    }
    if (steps.size() % 2 != 0 || !std::equal(steps.begin(), steps.end(), steps.rbegin()))
        throw std::invalid_argument("from_staircase: steps must be a palindrome of even length");

    int n = (int)steps.size() + 1;
    std::vector<long> A(n);
    A[0] = 0;
    for (size_t i = 0; i < steps.size(); i += 2) A[0] += steps[i];
    for (int j = 1; j < n; ++j) A[j] = A[j - 1] - steps[j - 1];

    // staggered crossing heights keep torus double points transverse; caps are
    // tilted so no vertical segment overlaps its own translate
    Rat sigma(1, 8L * n);
    auto H = [&](int j) -> Rat { return Rat(A[j]) + Rat(1, 2) - Rat(n - 1 - 2 * j) * sigma; };
    Rat zeta(1, 16L * n);
    Rat tilt(1, 32L * n);
    auto off = [&](int j) -> Rat { return Rat(std::min<long>(j, n - j)) * zeta; };
    auto X = [&](int j) -> Rat { return (j % 2 == 1) ? Rat(Rat(5, 4) + off(j)) : Rat(Rat(3, 4) - off(j)); };

    PlanarPath path;
    path.kind = PathKind::Periodic;
    path.verts.push_back(Pt(X(n - 1) - tilt - 1, H(n - 1)));
    for (int j = 1; j <= n - 1; ++j) {
        path.verts.push_back(Pt(X(j) + tilt, H(j - 1)));
        path.verts.push_back(Pt(X(j) - tilt, H(j)));
    }
    path.verts.pop_back();  // the closing segment supplies (X(n-1) - tilt, H(n-1))

    if (handedness < 0)
        for (Pt& v : path.verts) v.y = Rat(1) - v.y;
    out.components = {path};
    return out;
}

ImmersedMulticurve figure_eight_curve() {
    ImmersedMulticurve out;
    out.symmetry_center = Pt(Rat(0), Rat(1, 2));
    PlanarPath line;
    line.kind = PathKind::Periodic;
    line.verts = {Pt(Rat(-1, 4), Rat(1, 2))};

    // one figure-eight component: a loop around (0,1) followed by its image
    // under the 180-degree rotation, meeting itself once at (1/2, 0)
    std::vector<Pt> h = {Pt(Rat(1, 2), Rat(0)),        Pt(Rat(9, 16), Rat(19, 32)),
                         Pt(Rat(3, 8), Rat(21, 16)),   Pt(Rat(-3, 8), Rat(21, 16)),
                         Pt(Rat(-7, 16), Rat(11, 16)), Pt(Rat(7, 16), Rat(7, 16))};
    PlanarPath box;
    box.kind = PathKind::Closed;
    box.verts = h;
    box.verts.push_back(Pt(Rat(1, 2), Rat(0)));
    for (int i = (int)h.size() - 1; i >= 1; --i)
        box.verts.push_back(Pt(Rat(1) - h[i].x, Rat(0) - h[i].y));
    out.components = {line, box};
    return out;
}

ImmersedMulticurve mirror_curve(const ImmersedMulticurve& c) {
    ImmersedMulticurve out = c;
    for (auto& comp : out.components)
        for (Pt& v : comp.verts) v.y = Rat(1) - v.y;
    out.symmetry_center.y = Rat(1) - c.symmetry_center.y;
    return out;
}

// ---------------------------------------------------------------------------
// Grid events

namespace {

struct GridEvent {
    int seg;
    Rat t;
    bool vertical;
    mpz_class line;
    Pt p;
    int dir;
    bool operator<(const GridEvent& o) const {
        if (seg != o.seg) return seg < o.seg;
        return t < o.t;
    }
};

std::vector<GridEvent> grid_events(const TorusCurve& c) {
    std::vector<GridEvent> ev;
    for (int s = 0; s < c.nsegs(); ++s) {
        Pt a = c.seg_a(s), b = c.seg_b(s);
        Vec d = b - a;
        if (d.x != 0) {
            for (mpz_class k = rceil(std::min(a.x, b.x)); k <= rfloor(std::max(a.x, b.x)); ++k) {
                Rat t = (Rat(k) - a.x) / d.x;
                if (t < 0 || t >= 1) continue;
                ev.push_back({s, t, true, k, a + d * t, sgn(d.x)});
            }
        }
        if (d.y != 0) {
            for (mpz_class k = rceil(std::min(a.y, b.y)); k <= rfloor(std::max(a.y, b.y)); ++k) {
                Rat t = (Rat(k) - a.y) / d.y;
                if (t < 0 || t >= 1) continue;
                ev.push_back({s, t, false, k, a + d * t, sgn(d.y)});
            }
        }
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

bool on_lattice(const Pt& a, const Pt& b) {
    if (is_lattice(a) || is_lattice(b)) return true;
    Vec d = b - a;
    if (d.x == 0) {
        if (!is_integer(a.x)) return false;
        return rceil(std::min(a.y, b.y)) <= rfloor(std::max(a.y, b.y));
    }
    for (mpz_class kx = rceil(std::min(a.x, b.x)); kx <= rfloor(std::max(a.x, b.x)); ++kx) {
        Rat t = (Rat(kx) - a.x) / d.x;
        if (t < 0 || t > 1) continue;
        if (is_integer(a.y + d.y * t)) return true;
    }
    return false;
}

} // namespace

long grid_crossing_count(const ImmersedMulticurve& c) {
    long n = 0;
    for (const auto& comp : c.components) n += (long)grid_events(to_torus_curve(comp)).size();
    return n;
}

long self_crossing_count(const ImmersedMulticurve& c) {
    Arrangement arr = build_arrangement(to_torus_curves(c));
    return (long)arr.verts.size();
}

// ---------------------------------------------------------------------------
// validate

ValidationReport validate_curve(const ImmersedMulticurve& c) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& wit) {
        rep.checks.push_back({name, pass, pass ? "" : wit});
    };

    bool shape = !c.components.empty() && c.components[0].kind == PathKind::Periodic;
    for (size_t i = 1; i < c.components.size(); ++i)
        if (c.components[i].kind != PathKind::Closed) shape = false;
    add("knot_like_shape", shape, "component kinds");
    if (!shape) return rep;

    bool lattice_ok = true;
    std::string lat_wit;
    for (const auto& comp : c.components) {
        TorusCurve tc = to_torus_curve(comp);
        for (int s = 0; s < tc.nsegs(); ++s)
            if (on_lattice(tc.seg_a(s), tc.seg_b(s))) {
                lattice_ok = false;
                lat_wit = "segment through a marked point near " + pt_str(tc.seg_a(s));
            }
    }
    add("avoids_marked_points", lattice_ok, lat_wit);
    if (!lattice_ok) return rep;

    Arrangement arr;
    try {
        arr = build_arrangement(to_torus_curves(c));
    } catch (const DegenerateArrangement& e) {
        add("transverse_double_points", false, e.what());
        return rep;
    }
    add("transverse_double_points", true, "");

    // C-1
    {
        bool c1 = true;
        std::string wit;
        for (size_t ci = 1; ci < c.components.size(); ++ci) {
            bool self = false;
            for (const auto& v : arr.verts)
                if (v.pass[0].curve == (int)ci && v.pass[1].curve == (int)ci) self = true;
            if (self) continue;
            const std::vector<Pt>& loop = c.components[ci].verts;
            Rat x0 = loop[0].x, x1 = loop[0].x, y0 = loop[0].y, y1 = loop[0].y;
            for (const Pt& p : loop) {
                x0 = std::min(x0, p.x);
                x1 = std::max(x1, p.x);
                y0 = std::min(y0, p.y);
                y1 = std::max(y1, p.y);
            }
            long nonzero = 0, maxabs = 0;
            for (mpz_class kx = rceil(x0); kx <= rfloor(x1); ++kx)
                for (mpz_class ky = rceil(y0); ky <= rfloor(y1); ++ky) {
                    long w = winding_number(loop, Pt(Rat(kx), Rat(ky)));
                    if (w != 0) nonzero++;
                    maxabs = std::max(maxabs, std::abs(w));
                }
            if (nonzero == 1 && maxabs == 1) {
                c1 = false;
                wit = "component " + std::to_string(ci) + " encircles one marked point";
            }
        }
        add("C1_no_zero_circle", c1, wit);
    }

    // C-2: essential components
    {
        bool ok = true;
        std::string wit;
        for (size_t ci = 0; ci < c.components.size(); ++ci)
            if (grid_events(to_torus_curve(c.components[ci])).empty()) {
                ok = false;
                wit = "component " + std::to_string(ci) + " misses the grid";
            }
        add("C2_essential", ok, wit);
    }

    // C-2: no teardrops
    {
        bool ok = true;
        std::string wit;
        try {
            int marked = -1;
            for (int k = 4; k < 40 && marked < 0; ++k) {
                Pt a(Rat(-1, 1L << k), Rat(-1, 1L << k));
                Pt b(Rat(-1, 1L << std::min(k + 6, 62)), Rat(-1, 1L << std::min(k + 6, 62)));
                try {
                    if (segment_curve_hits(a, b, arr.curves).empty())
                        marked = arr.region_of_point(a);
                } catch (const DegenerateArrangement&) {
                }
            }
            if (marked < 0) throw DegenerateArrangement("marked region not located");
            std::string w2;
            ok = alpha_only_unobstructed(arr, marked, &w2);
            wit = w2;
        } catch (const std::exception& e) {
            ok = false;
            wit = e.what();
        }
        add("C2_unobstructed", ok, wit);
    }

    // C-3: reduced
    {
        bool ok = true;
        std::string wit;
        for (size_t ci = 0; ci < c.components.size() && ok; ++ci) {
            auto ev = grid_events(to_torus_curve(c.components[ci]));
            int ne = (int)ev.size();
            bool periodic = c.components[ci].kind == PathKind::Periodic;
            for (int i = 0; i < ne && ok; ++i) {
                const GridEvent& e1 = ev[i];
                const GridEvent& e2 = ev[(i + 1) % ne];
                mpz_class line2 = e2.line;
                if (i + 1 == ne && periodic && e2.vertical) line2 += 1;
                if (e1.vertical == e2.vertical && e1.line == line2) {
                    ok = false;
                    wit = "component " + std::to_string(ci) + " returns to its wall at " +
                          pt_str(e1.p);
                }
            }
        }
        add("C3_reduced", ok, wit);
    }

    // symmetry under 180-degree rotation about the symmetry center: the
    // rotated image must cover the curve and vice versa (edges may be cut at
    // different vertices, so compare by collinear coverage mod Z^2)
    {
        auto covers = [&](const std::vector<TorusCurve>& A, const std::vector<TorusCurve>& B) {
            for (const auto& tb : B)
                for (int sb = 0; sb < tb.nsegs(); ++sb) {
                    Pt a = tb.seg_a(sb), b = tb.seg_b(sb);
                    Vec d = b - a;
                    bool by_x = d.x != 0;
                    Rat lo = by_x ? std::min(a.x, b.x) : std::min(a.y, b.y);
                    Rat hi = by_x ? std::max(a.x, b.x) : std::max(a.y, b.y);
                    // collect covered subintervals from collinear A-edges
                    std::vector<std::pair<Rat, Rat>> iv;
                    for (const auto& ta : A)
                        for (int sa = 0; sa < ta.nsegs(); ++sa) {
                            Pt p = ta.seg_a(sa), q = ta.seg_b(sa);
                            Vec e = q - p;
                            if (cross(d, e) != 0) continue;
                            // translate p onto the line of [a,b]
                            Vec off = p - a;
                            Rat tx = off.x - (by_x ? Rat(0) : off.x);
                            (void)tx;
                            // candidate integer translates
                            for (mpz_class ux = rfloor(a.x - std::max(p.x, q.x)) - 0;
                                 ux <= rceil(b.x - std::min(p.x, q.x)) + 0; ++ux)
                                for (mpz_class uy = rfloor(std::min(a.y, b.y) -
                                                           std::max(p.y, q.y)) -
                                                    0;
                                     uy <= rceil(std::max(a.y, b.y) - std::min(p.y, q.y)) + 0;
                                     ++uy) {
                                    Pt pp = p + Vec{Rat(ux), Rat(uy)};
                                    if (cross(d, pp - a) != 0) continue;
                                    Pt qq = q + Vec{Rat(ux), Rat(uy)};
                                    Rat l1 = by_x ? pp.x : pp.y;
                                    Rat l2 = by_x ? qq.x : qq.y;
                                    if (l1 > l2) std::swap(l1, l2);
                                    if (l2 < lo || l1 > hi) continue;
                                    iv.push_back({std::max(l1, lo), std::min(l2, hi)});
                                }
                        }
                    std::sort(iv.begin(), iv.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    Rat covered = lo;
                    for (const auto& [l1, l2] : iv) {
                        if (l1 > covered) return false;
                        covered = std::max(covered, l2);
                    }
                    if (covered < hi) return false;
                }
            return true;
        };
        std::vector<TorusCurve> rot;
        for (const auto& comp : c.components) {
            TorusCurve tc = to_torus_curve(comp);
            TorusCurve r;
            r.period = tc.period;
            for (const Pt& v : tc.verts)
                r.verts.push_back(
                    Pt(2 * c.symmetry_center.x - v.x, 2 * c.symmetry_center.y - v.y));
            // the rotation reverses traversal relative to the period convention
            std::reverse(r.verts.begin(), r.verts.end());
            rot.push_back(r);
        }
        auto orig = to_torus_curves(c);
        bool sym = covers(orig, rot) && covers(rot, orig);
        add("rotation_symmetric", sym, "image differs from curve");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// lift_window

std::vector<WindowArc> lift_window(const ImmersedMulticurve& c, const Rat& x0, const Rat& y0,
                                   const Rat& x1, const Rat& y1) {
    if (!(x0 < x1) || !(y0 < y1)) throw std::invalid_argument("lift_window: degenerate window");
    std::vector<WindowArc> out;
    auto clip_seg = [&](const Pt& a, const Pt& b, Rat& t0, Rat& t1) {
        t0 = 0;
        t1 = 1;
        Vec d = b - a;
        auto cut = [&](const Rat& num, const Rat& den) {
            if (den == 0) return num >= 0;
            Rat t = (Rat(0) - num) / den;
            if (den > 0) {
                if (t > t0) t0 = t;
            } else {
                if (t < t1) t1 = t;
            }
            return true;
        };
        if (!cut(a.x - x0, d.x)) return false;
        if (!cut(x1 - a.x, Rat(0) - d.x)) return false;
        if (!cut(a.y - y0, d.y)) return false;
        if (!cut(y1 - a.y, Rat(0) - d.y)) return false;
        return t0 <= t1;
    };
    for (size_t ci = 0; ci < c.components.size(); ++ci) {
        TorusCurve tc = to_torus_curve(c.components[ci]);
        bool periodic = c.components[ci].kind == PathKind::Periodic;
        Rat bx0 = tc.verts[0].x, bx1 = bx0, by0 = tc.verts[0].y, by1 = by0;
        for (int s = 0; s < tc.nsegs(); ++s) {
            Pt b = tc.seg_b(s);
            bx0 = std::min(bx0, b.x);
            bx1 = std::max(bx1, b.x);
            by0 = std::min(by0, b.y);
            by1 = std::max(by1, b.y);
        }
        std::vector<Vec> translates;
        if (periodic) {
            for (mpz_class k = rceil(y0 - by1); k <= rfloor(y1 - by0); ++k)
                translates.push_back(Vec{Rat(0), Rat(k)});
        } else {
            for (mpz_class kx = rceil(x0 - bx1); kx <= rfloor(x1 - bx0); ++kx)
                for (mpz_class ky = rceil(y0 - by1); ky <= rfloor(y1 - by0); ++ky)
                    translates.push_back(Vec{Rat(kx), Rat(ky)});
        }
        for (const Vec& u : translates) {
            std::vector<std::pair<Pt, Pt>> segs;
            if (periodic) {
                for (mpz_class j = rceil(x0 - bx1); j <= rfloor(x1 - bx0); ++j)
                    for (int s = 0; s < tc.nsegs(); ++s)
                        segs.push_back({tc.seg_a(s) + u + Vec{Rat(j), Rat(0)},
                                        tc.seg_b(s) + u + Vec{Rat(j), Rat(0)}});
            } else {
                for (int s = 0; s < tc.nsegs(); ++s)
                    segs.push_back({tc.seg_a(s) + u, tc.seg_b(s) + u});
            }
            WindowArc cur;
            cur.component = (int)ci;
            cur.translate = u;
            auto flush = [&]() {
                if (cur.pts.size() >= 2) out.push_back(cur);
                cur.pts.clear();
            };
            for (const auto& [a, b] : segs) {
                Rat t0, t1;
                if (!clip_seg(a, b, t0, t1)) {
                    flush();
                    continue;
                }
                Pt p = a + (b - a) * t0;
                Pt q = a + (b - a) * t1;
                if (p == q) continue;
                if (!cur.pts.empty() && cur.pts.back() == p) {
                    cur.pts.push_back(q);
                } else {
                    flush();
                    cur.pts = {p, q};
                }
                if (t1 < 1) flush();
            }
            flush();
        }
    }
    std::sort(out.begin(), out.end(), [](const WindowArc& a, const WindowArc& b) {
        if (a.component != b.component) return a.component < b.component;
        if (!(a.translate == b.translate)) return a.translate < b.translate;
        return a.pts.front() < b.pts.front();
    });
    return out;
}

// ---------------------------------------------------------------------------
// pull_tight

namespace {

bool remove_wall_bigon(PlanarPath& comp) {
    TorusCurve tc = to_torus_curve(comp);
    auto ev = grid_events(tc);
    int ne = (int)ev.size();
    if (ne < 2) return false;
    bool periodic = comp.kind == PathKind::Periodic;
    for (int i = 0; i < ne; ++i) {
        const GridEvent& e1 = ev[i];
        const GridEvent& e2 = ev[(i + 1) % ne];
        bool wraps = (i + 1 == ne);
        Vec wrap = (wraps && periodic) ? Vec{Rat(1), Rat(0)} : Vec{Rat(0), Rat(0)};
        mpz_class line2 = e2.line;
        if (e2.vertical) line2 += rfloor(wrap.x);
        if (e1.vertical != e2.vertical || e1.line != line2) continue;

        Pt p1 = e1.p;
        Pt p2 = e2.p + wrap;
        bool blocked = false;
        if (e1.vertical) {
            Rat lo = std::min(p1.y, p2.y), hi = std::max(p1.y, p2.y);
            for (mpz_class k = rceil(lo); k <= rfloor(hi); ++k)
                if (Rat(k) > lo && Rat(k) < hi) blocked = true;
        } else {
            Rat lo = std::min(p1.x, p2.x), hi = std::max(p1.x, p2.x);
            for (mpz_class k = rceil(lo); k <= rfloor(hi); ++k)
                if (Rat(k) > lo && Rat(k) < hi) blocked = true;
        }
        if (blocked) continue;

        int side = e1.dir;
        int n = tc.nsegs();
        Pt prev = (e1.t == 0) ? tc.seg_a((e1.seg + n - 1) % n) : tc.seg_a(e1.seg);
        Pt next = tc.seg_b(e2.seg) + wrap;
        Rat wallpos(e1.line);
        Rat c1 = e1.vertical ? abs(prev.x - wallpos) : abs(prev.y - wallpos);
        Rat c2 = e1.vertical ? abs(next.x - wallpos) : abs(next.y - wallpos);
        Rat delta = std::min(std::min(c1, c2), Rat(1, 2)) / 4;
        if (delta <= 0) continue;
        Pt q1 = p1, q2 = p2;
        if (e1.vertical) {
            q1.x -= Rat(side) * delta;
            q2.x -= Rat(side) * delta;
        } else {
            q1.y -= Rat(side) * delta;
            q2.y -= Rat(side) * delta;
        }

        std::vector<Pt> nv;
        auto push = [&](const Pt& p) {
            if (nv.empty() || !(nv.back() == p)) nv.push_back(p);
        };
        if (!wraps) {
            for (int s = 0; s <= e1.seg; ++s) push(tc.verts[s]);
            push(q1);
            push(q2);
            for (int s = e2.seg + 1; s < n; ++s) push(tc.verts[s]);
        } else {
            push(q2 - wrap);
            for (int s = e2.seg + 1; s <= e1.seg; ++s) push(tc.verts[s]);
            push(q1);
        }
        if (nv.empty()) return false;
        comp.verts = nv;
        return true;
    }
    return false;
}

Pt lex_least(const std::vector<Pt>& v) {
    Pt best = v[0];
    for (const Pt& p : v)
        if (p < best) best = p;
    return best;
}

void simplify_collinear(PlanarPath& comp) {
    TorusCurve tc = to_torus_curve(comp);
    int n = tc.nsegs();
    if (n < 2) return;
    std::vector<Pt> nv;
    for (int i = 0; i < n; ++i) {
        Vec din = tc.seg_dir((i + n - 1) % n);
        Vec dout = tc.seg_dir(i);
        if (cross(din, dout) == 0 && dot(din, dout) > 0) continue;
        nv.push_back(tc.verts[i]);
    }
    if (nv.empty()) nv = {comp.verts[0]};
    comp.verts = nv;
}

void canonical_anchor(ImmersedMulticurve& c) {
    {
        TorusCurve tc = to_torus_curve(c.components[0]);
        std::optional<Rat> lowest;
        for (int s = 0; s < tc.nsegs(); ++s) {
            Pt a = tc.seg_a(s), b = tc.seg_b(s);
            Vec d = b - a;
            if (d.x == 0) continue;
            Rat t = (Rat(0) - a.x) / d.x;
            if (t < 0 || t >= 1) continue;
            Rat y = a.y + d.y * t;
            if (!lowest || y < *lowest) lowest = y;
        }
        if (lowest) {
            mpz_class k = rfloor(*lowest);
            if (Rat(k) == *lowest) k -= 1;
            for (Pt& v : c.components[0].verts) v.y -= Rat(k);
            c.symmetry_center.y -= Rat(k);
        }
        auto& verts = c.components[0].verts;
        int best = 0;
        for (int i = 1; i < (int)verts.size(); ++i)
            if (verts[i] < verts[best]) best = i;
        std::vector<Pt> rot;
        for (int i = 0; i < (int)verts.size(); ++i) {
            int j = (best + i) % (int)verts.size();
            Pt p = verts[j];
            if (j < best) p = p + Vec{Rat(1), Rat(0)};
            rot.push_back(p);
        }
        verts = rot;
    }
    for (size_t ci = 1; ci < c.components.size(); ++ci) {
        auto& verts = c.components[ci].verts;
        Pt least = lex_least(verts);
        Vec sh{Rat(rfloor(least.x)), Rat(rfloor(least.y))};
        for (Pt& v : verts) v = v - sh;
        int best = 0;
        for (int i = 1; i < (int)verts.size(); ++i)
            if (verts[i] < verts[best]) best = i;
        std::rotate(verts.begin(), verts.begin() + best, verts.end());
    }
}

} // namespace

ImmersedMulticurve pull_tight(const ImmersedMulticurve& cin) {
    ImmersedMulticurve c = cin;
    long guard = 200000;
    bool changed = true;
    while (changed && guard-- > 0) {
        changed = false;
        for (auto& comp : c.components) {
            simplify_collinear(comp);
            if (remove_wall_bigon(comp)) {
                changed = true;
                break;
            }
        }
    }
    if (guard <= 0) throw std::runtime_error("pull_tight did not converge");
    for (auto& comp : c.components) simplify_collinear(comp);
    canonical_anchor(c);
    return c;
}

// ---------------------------------------------------------------------------
// JSON

namespace {
nlohmann::json rat_pair(const Rat& r) {
    nlohmann::json j = nlohmann::json::array();
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::runtime_error("rational too large for serialization");
    j.push_back((long long)mpz_class(r.get_num()).get_si());
    j.push_back((long long)mpz_class(r.get_den()).get_si());
    return j;
}
Rat rat_from(const nlohmann::json& v) {
    Rat r((long)v.at(0).get<long long>(), (long)v.at(1).get<long long>());
    r.canonicalize();
    return r;
}
} // namespace

nlohmann::json curve_to_json(const ImmersedMulticurve& c) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : c.components) {
        nlohmann::json jc;
        jc["kind"] = comp.kind == PathKind::Periodic ? "periodic" : "closed";
        nlohmann::json vs = nlohmann::json::array();
        for (const Pt& v : comp.verts) vs.push_back({rat_pair(v.x), rat_pair(v.y)});
        jc["vertices"] = vs;
        comps.push_back(jc);
    }
    nlohmann::json j;
    j["components"] = comps;
    j["symmetry_center"] = {rat_pair(c.symmetry_center.x), rat_pair(c.symmetry_center.y)};
    return j;
}

ImmersedMulticurve curve_from_json(const nlohmann::json& j) {
    ImmersedMulticurve c;
    for (const auto& jc : j.at("components")) {
        PlanarPath p;
        p.kind = jc.at("kind").get<std::string>() == "periodic" ? PathKind::Periodic
                                                                : PathKind::Closed;
        for (const auto& jv : jc.at("vertices"))
            p.verts.push_back(Pt(rat_from(jv.at(0)), rat_from(jv.at(1))));
        c.components.push_back(p);
    }
    if (j.contains("symmetry_center"))
        c.symmetry_center =
            Pt(rat_from(j.at("symmetry_center").at(0)), rat_from(j.at("symmetry_center").at(1)));
    return c;
}

} // namespace satfloer
