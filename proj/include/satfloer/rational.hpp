#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satfloer {

// Exact rational scalar. All geometry in this project is exact; there is no
// floating point anywhere in the core.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Largest integer <= r.
inline mpz_class rfloor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline mpz_class rceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Fractional part in [0,1).
inline Rat rfrac(const Rat& r) { return r - Rat(rfloor(r)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int sgn(const Rat& r) { return sgn(r.get_num()); }

struct Pt {
    Rat x, y;
    Pt() = default;
    Pt(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(const Rat& s) const { return {x * s, y * s}; }
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
    bool operator<(const Pt& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

using Vec = Pt;

inline Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

// Point with both coordinates reduced mod 1 into [0,1).
inline Pt mod1(const Pt& p) { return {rfrac(p.x), rfrac(p.y)}; }

inline bool is_lattice(const Pt& p) { return is_integer(p.x) && is_integer(p.y); }

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline std::string pt_str(const Pt& p) {
    return "(" + rat_str(p.x) + "," + rat_str(p.y) + ")";
}

// Angle comparator: orders nonzero direction vectors counterclockwise starting
// just above the positive x-axis. Exact.
inline int dir_half(const Vec& v) {
    // 0 for upper half plane incl. positive x-axis, 1 for lower incl. negative x-axis
    if (v.y != 0) return v.y > 0 ? 0 : 1;
    return v.x > 0 ? 0 : 1;
}

inline bool dir_less(const Vec& a, const Vec& b) {
    int ha = dir_half(a), hb = dir_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

inline bool dir_equal(const Vec& a, const Vec& b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}

} // namespace satfloer
