#include "satfloer/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace satfloer {

bool braid_is_knot(const BraidParams& pr) {
    if (pr.p < 1 || pr.b < 0 || pr.b > pr.p - 1)
        throw std::invalid_argument("braid_is_knot: need 0 <= b <= p-1");
    long p = pr.p;
    // full twist C: k -> k-1 (k >= 2), 1 -> p; bridge D = (b,b+1)...(1,2)
    std::vector<long> perm(p);
    for (long i = 0; i < p; ++i) {
        long k = i + 1;
        // apply D
        if (k == 1)
            k = pr.b + 1;
        else if (k <= pr.b + 1)
            k = k - 1;
        // apply C^q
        long q = ((pr.q % p) + p) % p;
        k = ((k - 1 - q) % p + p) % p + 1;
        perm[i] = k - 1;
    }
    std::vector<bool> seen(p, false);
    long cycles = 0;
    for (long i = 0; i < p; ++i) {
        if (seen[i]) continue;
        cycles++;
        long j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
        }
    }
    return cycles == 1;
}

bool slope_excluded(long p, const Rat& m) {
    // X_p = { a/b : 1 <= b < p }
    return m.get_den() < p;
}

long q_of(long p, const Rat& m) {
    if (slope_excluded(p, m)) throw std::invalid_argument("q_of: slope in X_p");
    return rfloor(Rat(p) * m).get_si();
}

long b_of(long p, const Rat& m) {
    if (slope_excluded(p, m)) throw std::invalid_argument("b_of: slope in X_p");
    // count 0 < i < p with frac(i m) < frac(p m)
    Rat fpm = rfrac(Rat(p) * m);
    long b = 0;
    for (long i = 1; i < p; ++i) {
        Rat fim = rfrac(Rat(i) * m);
        if (fim > 0 && fim < fpm) b++;
    }
    return b;
}

SlopeInterval slope_interval(const BraidParams& pr) {
    if (!braid_is_knot(pr)) throw std::invalid_argument("slope_interval: not a knot");
    Rat lo(pr.q, pr.p), hi(pr.q + 1, pr.p);
    std::set<Rat> cuts{lo, hi};
    for (long den = 1; den < pr.p; ++den) {
        mpz_class a0 = rfloor(lo * den) - 1;
        mpz_class a1 = rceil(hi * den) + 1;
        for (mpz_class a = a0; a <= a1; ++a) {
            Rat x(a, den);
            x.canonicalize();
            if (x > lo && x < hi) cuts.insert(x);
        }
    }
    std::vector<Rat> cs(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < cs.size(); ++i) {
        Rat mid = (cs[i] + cs[i + 1]) / 2;
        if (slope_excluded(pr.p, mid)) continue;
        if (q_of(pr.p, mid) == pr.q && b_of(pr.p, mid) == pr.b)
            return SlopeInterval{cs[i], cs[i + 1]};
    }
    throw std::runtime_error("slope_interval: no interval found (internal error)");
}

// ---------------------------------------------------------------------------
// beta construction helpers

namespace {

// Perpendicular-ish offset direction for a segment, scaled so the offset of a
// unit "eta" stays within [eta, eta*sqrt(2)] of the path.
Vec perp_scaled(const Vec& d) {
    Rat m = std::max(abs(d.x), abs(d.y));
    return Vec{(Rat(0) - d.y) / m, d.x / m};
}

// Offset a polyline by eta to the given side (+1 = left of travel), with
// miter joins computed as exact line intersections.
std::vector<Pt> offset_path(const std::vector<Pt>& pts, const Rat& eta, int side) {
    int n = (int)pts.size();
    std::vector<Pt> out;
    std::vector<std::pair<Pt, Vec>> lines;  // point on offset line + direction
    for (int i = 0; i + 1 < n; ++i) {
        Vec d = pts[i + 1] - pts[i];
        Vec off = perp_scaled(d) * (eta * side);
        lines.push_back({pts[i] + off, d});
    }
    out.push_back(lines[0].first);
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        // intersect line i and line i+1
        auto [p1, d1] = lines[i];
        auto [p2, d2] = lines[i + 1];
        Rat den = cross(d1, d2);
        if (den == 0) {
            out.push_back(p2);
            continue;
        }
        Rat t = cross(p2 - p1, d2) / den;
        out.push_back(p1 + d1 * t);
    }
    out.push_back(lines.back().first + lines.back().second);
    return out;
}

struct Excursion {
    Rat trunk_height;       // attachment height on the trunk (exact lift value)
    std::vector<Pt> path;   // from the trunk attachment to the cap anchor
    Rat eta;
};

// Assemble a beta curve: vertical trunk at x = xT with excursions inserted in
// height order. Excursion strands are the two eta-offsets of the path; the
// trunk ascends, so it enters along whichever strand starts lower and returns
// along the other. The cap between the strand ends crosses the path's final
// point, which places the short-arc crossing exactly at the cap anchor.
TorusCurve assemble_beta(const Rat& xT, std::vector<Excursion> exc) {
    std::sort(exc.begin(), exc.end(), [](const Excursion& a, const Excursion& b) {
        return rfrac(a.trunk_height) < rfrac(b.trunk_height);
    });
    TorusCurve beta;
    beta.period = Vec{Rat(0), Rat(1)};
    for (const Excursion& e : exc) {
        std::vector<Pt> s1 = offset_path(e.path, e.eta, -1);
        std::vector<Pt> s2 = offset_path(e.path, e.eta, +1);
        // anchor the strand ends exactly on the trunk line x = path.front().x
        Rat x0 = e.path.front().x;
        auto pin_front = [&](std::vector<Pt>& s) {
            Vec d = s[1] - s[0];
            if (d.x == 0) throw std::runtime_error("assemble_beta: vertical strand start");
            Rat t = (x0 - s[0].x) / d.x;
            s[0] = s[0] + d * t;
        };
        pin_front(s1);
        pin_front(s2);
        if (s2.front().y < s1.front().y) std::swap(s1, s2);  // s1 enters from below
        std::reverse(s2.begin(), s2.end());
        Rat h = rfrac(e.trunk_height);
        Vec shift = Pt(xT, h) - e.path.front();
        for (const Pt& p : s1) beta.verts.push_back(p + shift);
        for (const Pt& p : s2) beta.verts.push_back(p + shift);
    }
    if (beta.verts.empty()) beta.verts.push_back(Pt(xT, Rat(1, 7)));
    return beta;
}

} // namespace

OneOneDiagram one_bridge_braid_at_slope(long p, const Rat& m) {
    if (p < 1) throw std::invalid_argument("one_bridge_braid_at_slope: p >= 1");
    if (slope_excluded(p, m)) throw std::invalid_argument("slope in X_p");
    long s = m.get_den().get_si();
    Rat eps(1, 8 * p * s);
    Rat xT = Rat(0) - eps / 4;

    OneOneDiagram d;
    d.w = mod1(Pt(eps, m * eps));
    d.z = mod1(Pt(Rat(0) - eps, Rat(0) - m * eps));
    d.meta.pattern = "obb";
    d.meta.p = p;
    d.meta.q = q_of(p, m);
    d.meta.b = b_of(p, m);
    d.meta.slope = m;
    d.meta.eps = eps;

    std::vector<Excursion> exc;
    for (long i = 0; i < p; ++i) {
        // finger i rides the corridor through lattice (i, 0) from the trunk to
        // its cap; i = 0 is the short bump past the lattice point
        Rat tstar = (i == 0) ? Rat(eps / 2) : Rat(Rat(0) - eps * (Rat(1, 4) + Rat(3 * i, 4 * p)));
        Rat eta = Rat(1, 16 * s) * Rat(p + 1 - i, p + 2);
        Excursion e;
        e.trunk_height = m * (xT - Rat(i));
        e.path = {Pt(xT - Rat(i), m * (xT - Rat(i))), Pt(tstar, m * tstar)};
        e.eta = eta;
        exc.push_back(e);
    }
    d.beta = assemble_beta(xT, exc);
    return d;
}

OneOneDiagram one_bridge_braid(const BraidParams& pr) {
    SlopeInterval iv = slope_interval(pr);
    Rat m = iv.midpoint();
    m.canonicalize();
    OneOneDiagram d = one_bridge_braid_at_slope(pr.p, m);
    d.meta.q = pr.q;
    d.meta.b = pr.b;
    return d;
}

OneOneDiagram identity_pattern() {
    OneOneDiagram d = one_bridge_braid(BraidParams{1, 0, 0});
    d.meta.pattern = "identity";
    return d;
}

// ---------------------------------------------------------------------------
// Mazur pattern

OneOneDiagram mazur_parametrized(long k, const Rat& a2, const Rat& mt, int jog,
                                 const Rat& eps_in);

OneOneDiagram mazur_parametrized(long k, const Rat& a2, const Rat& mt, int jog,
                                 const Rat& eps_in) {
    // Boundary word: from w the pattern arc runs west along slope mt through
    // the basepoint corridor (W1), turns at T1, continues west (W2), hairpins
    // at x = -3/2, and returns east (W3) to the z-lift one row away. Dragging
    // that z-lift home along the arc produces a trunk with two excursions.
    Rat eps = eps_in;
    Rat xT = Rat(0) - eps / 4;
    Rat wallx = Rat(-1) - eps / 4;

    Pt T1(Rat(-1, 2), mt * Rat(-1, 2));
    Rat kk(k);
    Pt zlift(Rat(0) - eps, kk - mt * eps);
    Rat jogk = Rat(jog, 16);
    Pt T2u(Rat(-3, 2), a2 + jogk);   // W3 endpoint
    Pt T2d(Rat(-3, 2), a2);          // W2 endpoint

    // wall crossings
    auto line_at = [&](const Pt& a, const Pt& b, const Rat& x) -> Rat {
        return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    };
    Rat yB = line_at(T1, T2d, wallx);   // W2 crossing (exc B base)
    Rat yA = line_at(T2u, zlift, wallx);  // W3 crossing (exc A base)

    Rat etaB = eps / 6;
    Rat etaA = eps / 12;
    Rat tA = Rat(0) - eps * Rat(5, 8);
    Rat tB = Rat(0) - eps * Rat(3, 8);

    Excursion excB;
    excB.trunk_height = yB;
    excB.path = {Pt(wallx, yB), T1, Pt(tB, mt * tB)};
    excB.eta = etaB;

    Excursion excA;
    excA.trunk_height = yA;
    excA.path = {Pt(wallx, yA), T2u, T2d, T1, Pt(tA, mt * tA)};
    excA.eta = etaA;

    OneOneDiagram d;
    d.w = mod1(Pt(eps, mt * eps));
    d.z = mod1(Pt(Rat(0) - eps, Rat(0) - mt * eps));
    d.meta.pattern = "mazur";
    d.meta.p = 1;
    d.meta.slope = mt;
    d.meta.eps = eps;
    d.beta = assemble_beta(xT, {excA, excB});
    return d;
}

OneOneDiagram mazur() {
    // parameters fixed by the golden 29-generator test
    return mazur_parametrized(1, Rat(7, 8), Rat(1, 4), 1, Rat(1, 32));
}

// ---------------------------------------------------------------------------

long winding_number(const OneOneDiagram& d) {
    Pt z = d.z, w = d.w;
    // use the lift of the short arc through the nearest lattice point
    Pt zl(Rat(0) - d.meta.eps, Rat(0) - d.meta.slope * d.meta.eps);
    Pt wl(d.meta.eps, d.meta.slope * d.meta.eps);
    (void)z, (void)w;
    long sum = 0;
    for (const CurveHit& h : segment_curve_hits(zl, wl, {d.beta})) sum += h.side;
    return std::abs(sum);
}

ValidationReport validate_diagram(const OneOneDiagram& d) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& wit) {
        rep.checks.push_back({name, pass, pass ? "" : wit});
    };
    add("beta_meridional", d.beta.period.x == 0 && d.beta.period.y == 1, "period");
    bool embedded = true;
    std::string wit;
    try {
        Arrangement arr = build_arrangement({d.beta});
        if (!arr.verts.empty()) {
            embedded = false;
            wit = "beta crosses itself at " + pt_str(arr.verts[0].pos);
        }
    } catch (const DegenerateArrangement& e) {
        embedded = false;
        wit = e.what();
    }
    add("beta_embedded", embedded, wit);

    bool base_ok = true;
    // basepoints off the curve: check tiny segments around each basepoint
    for (const Pt* bp : {&d.w, &d.z}) {
        for (const CurveHit& h : segment_curve_hits(
                 *bp + Vec{Rat(-1, 1 << 20), Rat(0)}, *bp + Vec{Rat(1, 1 << 20), Rat(0)},
                 {d.beta})) {
            if (h.p == *bp) base_ok = false;
        }
    }
    add("basepoints_off_beta", base_ok, "basepoint on beta");

    long wn = winding_number(d);
    bool wind_ok = d.meta.pattern == "obb" || d.meta.pattern == "identity"
                       ? wn == d.meta.p
                       : wn >= 1;
    add("winding_matches", wind_ok, "winding " + std::to_string(wn));
    return rep;
}

// ---------------------------------------------------------------------------
// JSON

namespace {
nlohmann::json rp(const Rat& r) {
    return nlohmann::json::array({(long long)mpz_class(r.get_num()).get_si(),
                                  (long long)mpz_class(r.get_den()).get_si()});
}
Rat rr(const nlohmann::json& v) {
    Rat r((long)v.at(0).get<long long>(), (long)v.at(1).get<long long>());
    r.canonicalize();
    return r;
}
} // namespace

nlohmann::json diagram_to_json(const OneOneDiagram& d) {
    nlohmann::json j;
    nlohmann::json b = nlohmann::json::array();
    for (const Pt& v : d.beta.verts) b.push_back({rp(v.x), rp(v.y)});
    j["beta"] = b;
    j["w"] = {rp(d.w.x), rp(d.w.y)};
    j["z"] = {rp(d.z.x), rp(d.z.y)};
    j["metadata"] = {{"pattern", d.meta.pattern}, {"p", d.meta.p},    {"q", d.meta.q},
                     {"b", d.meta.b},             {"slope", rp(d.meta.slope)},
                     {"eps", rp(d.meta.eps)}};
    return j;
}

OneOneDiagram diagram_from_json(const nlohmann::json& j) {
    OneOneDiagram d;
    d.beta.period = Vec{Rat(0), Rat(1)};
    for (const auto& v : j.at("beta")) d.beta.verts.push_back(Pt(rr(v.at(0)), rr(v.at(1))));
    d.w = Pt(rr(j.at("w").at(0)), rr(j.at("w").at(1)));
    d.z = Pt(rr(j.at("z").at(0)), rr(j.at("z").at(1)));
    const auto& m = j.at("metadata");
    d.meta.pattern = m.at("pattern").get<std::string>();
    d.meta.p = m.at("p").get<long>();
    d.meta.q = m.at("q").get<long>();
    d.meta.b = m.at("b").get<long>();
    d.meta.slope = rr(m.at("slope"));
    d.meta.eps = rr(m.at("eps"));
    return d;
}

} // namespace satfloer
