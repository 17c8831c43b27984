#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "satfloer/geometry.hpp"
using namespace satfloer;

static TorusCurve hline(Rat y) {
    TorusCurve c; c.verts = {Pt(rat(1,4), y)}; c.period = {Rat(1), Rat(0)}; return c;
}
static TorusCurve vline(Rat x) {
    TorusCurve c; c.verts = {Pt(x, rat(1,4))}; c.period = {Rat(0), Rat(1)}; return c;
}
static TorusCurve rect(Rat x0, Rat y0, Rat x1, Rat y1) {
    TorusCurve c; c.verts = {Pt(x0,y0),Pt(x1,y0),Pt(x1,y1),Pt(x0,y1)}; return c;
}

TEST_CASE("two circles crossing once: one square region") {
    auto A = build_arrangement({hline(rat(1,2)), vline(rat(1,8))});
    CHECK(A.verts.size() == 1);
    CHECK(A.num_regions == 1);
    CHECK(A.region_chi[0] == 1);
    CHECK(A.region_corners[0] == 4);
    CHECK(A.region_of_point(Pt(rat(1,2), rat(1,4))) == 0);
}

TEST_CASE("free loop alone: annulus") {
    auto A = build_arrangement({hline(rat(1,2))});
    CHECK(A.verts.empty());
    CHECK(A.num_regions == 1);
    CHECK(A.region_chi[0] == 0);
}

TEST_CASE("rectangle over a line: three regions") {
    auto A = build_arrangement({hline(rat(1,2)), rect(rat(1,8), rat(1,4), rat(3,8), rat(3,4))});
    CHECK(A.verts.size() == 2);
    REQUIRE(A.num_regions == 3);
    // regions: inside-lower (disk), inside-upper (disk), outside
    int r_lo = A.region_of_point(Pt(rat(1,4), rat(3,8)));
    int r_hi = A.region_of_point(Pt(rat(1,4), rat(5,8)));
    int r_out = A.region_of_point(Pt(rat(3,4), rat(1,2) + rat(1,8)));
    CHECK(r_lo != r_hi);
    CHECK(r_lo != r_out);
    CHECK(r_hi != r_out);
    CHECK(A.region_chi[r_lo] == 1);
    CHECK(A.region_chi[r_hi] == 1);
    CHECK(A.region_chi[r_out] == 0);
    CHECK(A.region_corners[r_lo] == 2);
    CHECK(A.region_corners[r_hi] == 2);
    CHECK(A.region_corners[r_out] == 4);
}

TEST_CASE("two crossing verticals with a horizontal: richer face structure") {
    auto A = build_arrangement({hline(rat(1,2)), vline(rat(1,8)), vline(rat(5,8))});
    CHECK(A.verts.size() == 2);
    CHECK(A.num_regions == 2);
    long tot = 0; for (long x : A.region_chi) tot += x;
    CHECK(tot == 2);  // arcs(4) - verts(2)
}

TEST_CASE("winding numbers") {
    std::vector<Pt> sq = {Pt(Rat(0),Rat(0)), Pt(Rat(1),Rat(0)), Pt(Rat(1),Rat(1)), Pt(Rat(0),Rat(1))};
    CHECK(winding_number(sq, Pt(rat(1,2),rat(1,2))) == 1);
    CHECK(winding_number(sq, Pt(rat(3,2),rat(1,2))) == 0);
    std::reverse(sq.begin(), sq.end());
    CHECK(winding_number(sq, Pt(rat(1,2),rat(1,2))) == -1);
}

TEST_CASE("turning numbers via turn_crossing") {
    auto turn_of = [](std::vector<Vec> dirs){
        long k=0;
        for (size_t i=0;i<dirs.size();++i) k += turn_crossing(dirs[i], dirs[(i+1)%dirs.size()]);
        return k;
    };
    CHECK(turn_of({{Rat(1),Rat(0)},{Rat(0),Rat(1)},{Rat(-1),Rat(0)},{Rat(0),Rat(-1)}}) == 1);
    CHECK(turn_of({{Rat(1),Rat(0)},{Rat(0),Rat(-1)},{Rat(-1),Rat(0)},{Rat(0),Rat(1)}}) == -1);
    CHECK(turn_of({{Rat(1),Rat(1)},{Rat(1),Rat(-1)},{Rat(1),Rat(1)},{Rat(1),Rat(-1)}}) == 0);
}
