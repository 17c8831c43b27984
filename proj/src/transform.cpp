#include "satfloer/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace satfloer {

PlanarTransform make_transform(long p, const Rat& m) {
    if (p < 1) throw std::invalid_argument("make_transform: p >= 1");
    if (slope_excluded(p, m)) throw std::invalid_argument("make_transform: slope in X_p");
    PlanarTransform t;
    t.p = p;
    t.m = m;
    t.q = q_of(p, m);
    t.b = b_of(p, m);
    return t;
}

PlanarTransform make_transform(const BraidParams& pr) {
    SlopeInterval iv = slope_interval(pr);
    Rat m = iv.midpoint();
    m.canonicalize();
    return make_transform(pr.p, m);
}

namespace {

struct Corridor {
    long a;      // lattice column 1..p-1 (the point (a, 0) slides to (0, -a m))
    Rat h;       // half thickness
    Rat h2;      // horizontal padding
    Rat m;
};

// corridor-local coordinates: u = x - (line through (a,b) of slope m hits x),
// v = y - (m (x - a) + b). The map fixes v and pushes u.
struct StripMap {
    long p;
    Rat m, h, h2;

    bool in_corridor(const Pt& q, long a, mpz_class& bout) const {
        if (q.x < Rat(0) - h2 || q.x > Rat(a) + h2) return false;
        Rat vbase = q.y - m * (q.x - Rat(a));
        mpz_class b = rfloor(vbase + Rat(1, 2));
        Rat v = vbase - Rat(b);
        if (v < Rat(0) - h || v > h) return false;
        bout = b;
        return true;
    }

    // piecewise-affine push in corridor coordinates. The corridor box is
    // triangulated with vertices on u in {-h2, a, a+h2}, v in {-h, 0, h};
    // only the vertex (a,0) moves, to (0,0). Each triangle maps affinely.
    Pt apply_corridor(const Pt& q, long a, const mpz_class& b) const {
        Rat u = q.x;
        Rat v = q.y - m * (q.x - Rat(a)) - Rat(b);
        int vsign = v >= 0 ? 1 : -1;
        Rat av = v >= 0 ? v : Rat(0) - v;
        Rat A(a);
        Pt P1, P2, P3, Q1, Q2, Q3;  // triangle and image in (u, |v|)
        if (u <= A) {
            bool below = av * (A + h2) <= (u + h2) * h;  // under the diagonal (-h2,0)-(a,h)
            if (below) {
                P1 = Pt(Rat(0) - h2, Rat(0)), P2 = Pt(A, Rat(0)), P3 = Pt(A, h);
                Q1 = P1, Q2 = Pt(Rat(0), Rat(0)), Q3 = P3;
            } else {
                return q;  // identity triangle
            }
        } else {
            bool below = av * h2 <= (u - A) * h;  // under the diagonal (a,0)-(a+h2,h)
            if (below) {
                P1 = Pt(A, Rat(0)), P2 = Pt(A + h2, Rat(0)), P3 = Pt(A + h2, h);
                Q1 = Pt(Rat(0), Rat(0)), Q2 = P2, Q3 = P3;
            } else {
                P1 = Pt(A, Rat(0)), P2 = Pt(A + h2, h), P3 = Pt(A, h);
                Q1 = Pt(Rat(0), Rat(0)), Q2 = P2, Q3 = P3;
            }
        }
        Vec e1 = P2 - P1, e2 = P3 - P1, w{u - P1.x, av - P1.y};
        Rat den = cross(e1, e2);
        Rat l2 = cross(w, e2) / den;
        Rat l3 = cross(e1, w) / den;
        Pt img = Q1 + (Q2 - Q1) * l2 + (Q3 - Q1) * l3;
        return Pt(img.x, m * (img.x - A) + Rat(b) + Rat(vsign) * img.y);
    }

    Pt apply(const Pt& q) const {
        for (long a = 1; a < p; ++a) {
            mpz_class b;
            if (in_corridor(q, a, b)) return apply_corridor(q, a, b);
        }
        return q;
    }
};

} // namespace

Pt g_map(const PlanarTransform& t, const Pt& pt) {
    // reduce into the strip [-1/2, p - 1/2)
    mpz_class k = rfloor((pt.x + Rat(1, 2)) / t.p);
    Pt q(pt.x - Rat(k) * t.p, pt.y);
    long s = t.m.get_den().get_si();
    StripMap sm{t.p, t.m, Rat(1, 4 * s), Rat(1, 4)};
    Pt r = sm.apply(q);
    return Pt(r.x + Rat(k) * t.p, r.y);
}

namespace {

// re-spacing map R: increasing PL bijection of the line with R(h_j) = j/p for
// the sorted column heights h_j = frac(-a m), R(y+1) = R(y)+1
struct Respace {
    std::vector<Rat> breaks;  // sorted heights in [0,1)
    long p;

    explicit Respace(long pp, const Rat& m) : p(pp) {
        std::set<Rat> hs;
        for (long a = 0; a < p; ++a) hs.insert(rfrac(Rat(0) - Rat(a) * m));
        breaks.assign(hs.begin(), hs.end());
        if ((long)breaks.size() != p) throw std::runtime_error("respace: collision");
        if (breaks[0] != 0) throw std::runtime_error("respace: 0 must be a break");
    }

    Rat apply(const Rat& y) const {
        mpz_class fl = rfloor(y);
        Rat fy = y - Rat(fl);
        // find the break interval
        int j = (int)(std::upper_bound(breaks.begin(), breaks.end(), fy) - breaks.begin()) - 1;
        Rat lo = breaks[j];
        Rat hi = (j + 1 < (int)breaks.size()) ? breaks[j + 1] : Rat(1);
        Rat out = (Rat(j) + (fy - lo) / (hi - lo)) / p;
        return out + Rat(fl);
    }
};

} // namespace

Pt f_map(const PlanarTransform& t, const Pt& pt) {
    mpz_class k = rfloor((pt.x + Rat(1, 2)) / t.p);
    Pt q(pt.x - Rat(k) * t.p, pt.y);
    long s = t.m.get_den().get_si();
    StripMap sm{t.p, t.m, Rat(1, 4 * s), Rat(1, 4)};
    Pt g = sm.apply(q);
    Respace rs(t.p, t.m);
    Pt out(g.x / t.p, rs.apply(g.y) * t.p);
    return Pt(out.x + Rat(k), out.y);
}

std::vector<Pt> f_map_segment(const PlanarTransform& t, const Pt& a, const Pt& b) {
    // subdivide at every break line of g and of the respacing, then map
    std::set<Rat> params{Rat(0), Rat(1)};
    Vec d = b - a;
    long s = t.m.get_den().get_si();
    Rat h(1, 4 * s), h2(1, 4);

    auto add_vline = [&](const Rat& x) {
        if (d.x == 0) return;
        Rat tt = (x - a.x) / d.x;
        if (tt > 0 && tt < 1) params.insert(tt);
    };
    auto add_slope_line = [&](const Rat& c) {
        // line y = m x + c
        Rat den = d.y - t.m * d.x;
        if (den == 0) return;
        Rat tt = (t.m * a.x + c - a.y) / den;
        if (tt > 0 && tt < 1) params.insert(tt);
    };
    // strip boundaries and corridor lines for every relevant period copy
    Rat xlo = std::min(a.x, b.x), xhi = std::max(a.x, b.x);
    for (mpz_class k = rfloor((xlo + Rat(1, 2)) / t.p) - 1;
         k <= rfloor((xhi + Rat(1, 2)) / t.p) + 1; ++k) {
        Rat base = Rat(k) * t.p;
        add_vline(base - Rat(1, 2));
        for (long aa = 1; aa < t.p; ++aa) {
            add_vline(base - h2);
            add_vline(base + Rat(aa));
            add_vline(base + Rat(aa) + h2);
        }
        // corridor slope lines: v = -h, 0, h relative to lines through (base+aa, bb)
        Rat ylo = std::min(a.y, b.y) - abs(t.m) * (xhi - xlo) - 2;
        Rat yhi = std::max(a.y, b.y) + abs(t.m) * (xhi - xlo) + 2;
        for (long aa = 1; aa < t.p; ++aa) {
            for (mpz_class bb = rfloor(ylo); bb <= rceil(yhi); ++bb) {
                Rat c0 = Rat(bb) - t.m * (base + Rat(aa));
                for (const Rat& dv : {Rat(Rat(0) - h), Rat(0), Rat(h)}) add_slope_line(c0 + dv);
            }
        }
    }
    // respacing break heights apply to the g-image; asymptotically safe to
    // subdivide the preimage at g^{-1} of horizontal lines -- instead subdivide
    // the g-image polyline afterwards
    std::vector<Pt> pts;
    for (const Rat& tt : params) pts.push_back(a + d * tt);
    std::vector<Pt> gimg;
    for (const Pt& q : pts) {
        Pt gq = g_map(t, q);
        if (gimg.empty() || !(gimg.back() == gq)) gimg.push_back(gq);
    }
    // subdivide g-image at horizontal break heights, then respace and scale
    Respace rs(t.p, t.m);
    std::vector<Pt> out;
    auto push_mapped = [&](const Pt& q) {
        mpz_class k = rfloor((q.x + Rat(1, 2)) / t.p);
        Pt qq(q.x - Rat(k) * t.p, q.y);
        Pt img(qq.x / t.p + Rat(k), rs.apply(qq.y) * t.p);
        if (out.empty() || !(out.back() == img)) out.push_back(img);
    };
    for (size_t i = 0; i + 1 < gimg.size(); ++i) {
        Pt p1 = gimg[i], p2 = gimg[i + 1];
        push_mapped(p1);
        Vec dd = p2 - p1;
        if (dd.y != 0) {
            std::set<Rat> ts;
            Rat ylo = std::min(p1.y, p2.y), yhi = std::max(p1.y, p2.y);
            for (mpz_class fl = rfloor(ylo) - 1; fl <= rceil(yhi) + 1; ++fl)
                for (const Rat& br : rs.breaks) {
                    Rat yy = Rat(fl) + br;
                    Rat tt = (yy - p1.y) / dd.y;
                    if (tt > 0 && tt < 1) ts.insert(tt);
                }
            // also the strip seams x = kp - 1/2 in the g-image
            if (dd.x != 0) {
                for (mpz_class k = rfloor((std::min(p1.x, p2.x) + Rat(1, 2)) / t.p);
                     k <= rfloor((std::max(p1.x, p2.x) + Rat(1, 2)) / t.p) + 1; ++k) {
                    Rat xx = Rat(k) * t.p - Rat(1, 2);
                    Rat tt = (xx - p1.x) / dd.x;
                    if (tt > 0 && tt < 1) ts.insert(tt);
                }
            }
            for (const Rat& tt : ts) push_mapped(p1 + dd * tt);
        }
    }
    push_mapped(gimg.back());
    return out;
}

long lattice_height_diff(long p, long q, long b) {
    if (p < 1 || q < 0) throw std::invalid_argument("lattice_height_diff: p >= 1, q >= 0");
    if (!braid_is_knot(BraidParams{p, q, b}))
        throw std::invalid_argument("lattice_height_diff: not a knot");
    return p * q - q + b;
}

ImmersedMulticurve transform_curve(const PlanarTransform& t, const ImmersedMulticurve& cin) {
    ImmersedMulticurve c = pull_tight(cin);
    {
        ValidationReport rep = validate_curve(c);
        if (!rep.all_pass())
            throw std::runtime_error("transform_curve: invalid input curve:\n" + rep.summary());
    }
    ImmersedMulticurve out;
    // distinguished component: p consecutive periods map to one period
    {
        const PlanarPath& comp = c.components[0];
        std::vector<Pt> big;
        for (long j = 0; j < t.p; ++j)
            for (const Pt& v : comp.verts) big.push_back(v + Vec{Rat(j), Rat(0)});
        big.push_back(comp.verts[0] + Vec{Rat(t.p), Rat(0)});
        PlanarPath img;
        img.kind = PathKind::Periodic;
        for (size_t i = 0; i + 1 < big.size(); ++i) {
            auto piece = f_map_segment(t, big[i], big[i + 1]);
            for (size_t j = 0; j + 1 < piece.size(); ++j) {
                if (img.verts.empty() || !(img.verts.back() == piece[j]))
                    img.verts.push_back(piece[j]);
            }
            if (!piece.empty() && i + 2 == big.size()) {
                // final endpoint equals start + (1,0); omit it from the list
            }
        }
        out.components.push_back(img);
    }
    for (size_t ci = 1; ci < c.components.size(); ++ci) {
        for (long j = 0; j < t.p; ++j) {
            const PlanarPath& comp = c.components[ci];
            PlanarPath img;
            img.kind = PathKind::Closed;
            int n = (int)comp.verts.size();
            for (int i = 0; i < n; ++i) {
                Pt a = comp.verts[i] + Vec{Rat(j), Rat(0)};
                Pt b = comp.verts[(i + 1) % n] + Vec{Rat(j), Rat(0)};
                auto piece = f_map_segment(t, a, b);
                for (size_t jj = 0; jj + 1 < piece.size(); ++jj)
                    if (img.verts.empty() || !(img.verts.back() == piece[jj]))
                        img.verts.push_back(piece[jj]);
            }
            out.components.push_back(img);
        }
    }
    out.symmetry_center = f_map(t, c.symmetry_center);
    out.symmetry_center.x = 0;
    return pull_tight(out);
}

// ---------------------------------------------------------------------------
// closed-form invariants

long tau_formula(long p, long q, long b, long tauK, int epsK) {
    if (!braid_is_knot(BraidParams{p, q, b}))
        throw std::invalid_argument("tau_formula: not a knot");
    long num;
    if (epsK == 1) {
        num = (p - 1) * (q - 1) + b;
        if (num % 2 != 0) throw std::runtime_error("tau_formula: odd numerator");
        return p * tauK + num / 2;
    }
    if (epsK == -1) {
        num = (p - 1) * (q + 1) + b;
        if (num % 2 != 0) throw std::runtime_error("tau_formula: odd numerator");
        return p * tauK + num / 2;
    }
    // epsK == 0
    if (q > 1 || (q == 1 && b > 0)) {
        num = (p - 1) * (q - 1) + b;
        if (num % 2 != 0) throw std::runtime_error("tau_formula: odd numerator");
        return num / 2;
    }
    if (q == 0 || q == -1 || (q == 1 && b == 0) || (q == -2 && b == p - 1)) return 0;
    num = (p - 1) * (q + 1) + b;
    if (num % 2 != 0) throw std::runtime_error("tau_formula: odd numerator");
    return num / 2;
}

int epsilon_formula(long p, long q, long b, int epsK) {
    if (!braid_is_knot(BraidParams{p, q, b}))
        throw std::invalid_argument("epsilon_formula: not a knot");
    if (epsK != 0) return epsK;
    if (q > 1 || (q == 1 && b > 0)) return 1;
    if (q == 0 || q == -1 || (q == 1 && b == 0) || (q == -2 && b == p - 1)) return 0;
    return -1;
}

bool lspace_criterion(long p, long q, long b, long genusK, bool K_is_lspace) {
    if (!braid_is_knot(BraidParams{p, q, b}))
        throw std::invalid_argument("lspace_criterion: not a knot");
    return K_is_lspace && Rat(q, p) >= Rat(2 * genusK - 1);
}

std::pair<long, int> mazur_formulas(long tauK, int epsK) {
    int eps = epsK == 0 ? 0 : 1;
    long tau = (tauK > 0 || epsK == -1) ? tauK + 1 : tauK;
    return {tau, eps};
}

} // namespace satfloer
