#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "toric/fan.hpp"

using namespace toric;

namespace {

IntVec iv(std::initializer_list<long> v) {
    IntVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

bool report_mentions(const FanValidationReport& rep, const std::string& needle) {
    for (const auto& v : rep.violations) {
        if (v.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("projective line and plane") {
    FanPtr p1 = projective_space(1);
    CHECK(p1->ambient_rank() == 1);
    CHECK(p1->ray_count() == 2);
    CHECK(is_smooth(*p1));
    CHECK(is_complete(*p1));

    FanPtr p2 = projective_space(2);
    CHECK(p2->ray_count() == 3);
    CHECK(p2->max_cone_count() == 3);
    CHECK(p2->rays() == std::vector<IntVec>{iv({1, 0}), iv({0, 1}), iv({-1, -1})});
    CHECK(p2->max_cones() ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(is_smooth(*p2));
    CHECK(is_complete(*p2));
    CHECK(p2->ray_index(iv({-1, -1})) == 2);
    CHECK(p2->ray_index(iv({2, 0})) == -1);
}

TEST_CASE("projective three-space is complete and smooth") {
    FanPtr p3 = projective_space(3);
    CHECK(p3->ray_count() == 4);
    CHECK(p3->max_cone_count() == 4);
    CHECK(is_smooth(*p3));
    CHECK(is_complete(*p3));
}

TEST_CASE("canonical ordering is independent of input order") {
    std::vector<IntVec> rays = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
    FanPtr a = Fan::make(2, rays, {{1, 0}, {2, 1}, {2, 0}});
    FanPtr b = Fan::make(2, rays, {{0, 2}, {0, 1}, {1, 2}});
    CHECK(*a == *b);
    CHECK(a->max_cones() ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("validation reports name the problem") {
    // two overlapping cones that do not meet in a common face
    std::vector<IntVec> rays = {iv({1, 0}), iv({1, 1}), iv({0, 1})};
    FanValidationReport rep = validate_fan(2, rays, {{0, 2}, {1, 2}});
    CHECK_FALSE(rep.ok());
    CHECK(report_mentions(rep, "face intersection violation between max cones 0 and 1"));

    CHECK(report_mentions(validate_fan(2, {iv({0, 0}), iv({1, 0})}, {{0, 1}}),
                          "is zero"));
    CHECK(report_mentions(validate_fan(2, {iv({2, 4}), iv({1, 0})}, {{0, 1}}),
                          "not primitive"));
    CHECK(report_mentions(validate_fan(2, {iv({1, 0}), iv({1, 0})}, {{0}, {1}}),
                          "duplicates ray"));
    CHECK(report_mentions(validate_fan(2, {iv({1, 0})}, {}), "no maximal cones"));
    CHECK(report_mentions(validate_fan(2, {iv({1, 0})}, {{0, 3}}),
                          "ray index out of range"));
    CHECK(report_mentions(validate_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 0, 1}}),
                          "repeats a ray index"));
    CHECK(report_mentions(
        validate_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0})}, {{0, 1}}),
        "appears in no max cone"));
    CHECK(report_mentions(
        validate_fan(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})}, {{0, 1, 2}}),
        "not strongly convex"));
    // a cone properly inside another
    CHECK(report_mentions(
        validate_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}, {0}}), "nested"));

    CHECK_THROWS_AS(Fan::make(2, rays, {{0, 2}, {1, 2}}), ValidationError);
    try {
        Fan::make(2, rays, {{0, 2}, {1, 2}});
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("face intersection violation") !=
              std::string::npos);
    }
}

TEST_CASE("a single affine chart is valid but not complete") {
    FanPtr quadrant = Fan::make(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
    CHECK(is_smooth(*quadrant));
    CHECK_FALSE(is_complete(*quadrant));
    CHECK_FALSE(has_paired_walls(*quadrant));
}

TEST_CASE("ruled surface fans") {
    for (int n : {0, 1, 2, 3, 4}) {
        FanPtr f = hirzebruch(n);
        CHECK(f->ray_count() == 4);
        CHECK(f->max_cone_count() == 4);
        CHECK(is_smooth(*f));
        CHECK(is_complete(*f));
        WallStructure w = fan_walls(*f);
        CHECK(w.all_paired);
        CHECK(w.walls.size() == 4);
    }
    CHECK(hirzebruch(2)->rays() ==
          std::vector<IntVec>{iv({1, 0}), iv({0, 1}), iv({-1, 2}), iv({0, -1})});
}

TEST_CASE("plane fan walls pair up") {
    WallStructure w = fan_walls(*projective_space(2));
    CHECK(w.all_paired);
    CHECK(w.walls.size() == 3);
    for (const Wall& wall : w.walls) {
        CHECK(wall.facet_rays.size() == 1);
        CHECK(wall.cone_a != wall.cone_b);
    }
}

TEST_CASE("products multiply rays and cones") {
    FanPtr p1 = projective_space(1);
    FanPtr sq = product(p1, p1);
    CHECK(sq->ambient_rank() == 2);
    CHECK(sq->ray_count() == 4);
    CHECK(sq->max_cone_count() == 4);
    CHECK(sq->rays() == std::vector<IntVec>{iv({1, 0}), iv({-1, 0}),
                                            iv({0, 1}), iv({0, -1})});
    CHECK(is_smooth(*sq));
    CHECK(is_complete(*sq));

    FanPtr p2xp1 = product(projective_space(2), p1);
    CHECK(p2xp1->ambient_rank() == 3);
    CHECK(p2xp1->ray_count() == 5);
    CHECK(p2xp1->max_cone_count() == 6);
    CHECK(is_smooth(*p2xp1));
    CHECK(is_complete(*p2xp1));
}

TEST_CASE("star subdivision inserts a ray and splits its cone") {
    FanPtr p2 = projective_space(2);
    FanPtr bl = star_subdivision(p2, iv({1, 1}));
    CHECK(bl->ray_count() == 4);
    CHECK(bl->max_cone_count() == 4);
    CHECK(is_smooth(*bl));
    CHECK(is_complete(*bl));
    CHECK(bl->ray_index(iv({1, 1})) == 3);

    // second point: interior of the cone spanned by (0,1) and (-1,-1)
    FanPtr bl2 = star_subdivision(bl, iv({-1, 0}));
    CHECK(bl2->ray_count() == 5);
    CHECK(bl2->max_cone_count() == 5);
    CHECK(is_smooth(*bl2));
    CHECK(is_complete(*bl2));

    // rank-3 case: one cone becomes three
    FanPtr p3 = projective_space(3);
    FanPtr bl3 = star_subdivision(p3, iv({1, 1, 1}));
    CHECK(bl3->ray_count() == 5);
    CHECK(bl3->max_cone_count() == 6);
    CHECK(is_smooth(*bl3));
    CHECK(is_complete(*bl3));
}

TEST_CASE("star subdivision rejects bad centers") {
    FanPtr p2 = projective_space(2);
    CHECK_THROWS_WITH_AS(star_subdivision(p2, iv({2, 2})),
                         "star_subdivision: ray is not primitive", ValidationError);
    CHECK_THROWS_WITH_AS(star_subdivision(p2, iv({1, 0})),
                         "star_subdivision: ray already in fan", ValidationError);
    CHECK_THROWS_WITH_AS(star_subdivision(p2, iv({0, 0})),
                         "star_subdivision: zero ray", ValidationError);
    CHECK_THROWS_WITH_AS(star_subdivision(p2, iv({1})),
                         "star_subdivision: ray has wrong length", ValidationError);

    FanPtr quadrant = Fan::make(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
    CHECK_THROWS_WITH_AS(star_subdivision(quadrant, iv({-1, -1})),
                         "star_subdivision: ray outside the fan support",
                         ValidationError);

    // (1,1,0) lies on the two-dimensional wall shared by two cones
    FanPtr p3 = projective_space(3);
    CHECK_THROWS_WITH_AS(star_subdivision(p3, iv({1, 1, 0})),
                         "star_subdivision: ray lies on a wall", ValidationError);
    // on a proper face of a single cone (the support boundary)
    FanPtr octant = Fan::make(
        3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {{0, 1, 2}});
    CHECK_THROWS_WITH_AS(star_subdivision(octant, iv({1, 1, 0})),
                         "star_subdivision: ray lies on a proper face of its cone",
                         ValidationError);
}

TEST_CASE("refinements define morphisms, non-refinements are rejected") {
    FanPtr p2 = projective_space(2);
    FanPtr bl = star_subdivision(p2, iv({1, 1}));
    ToricMorphismData m = toric_morphism(bl, p2);
    CHECK(*m.source == *bl);
    CHECK(*m.target == *p2);

    CHECK_THROWS_AS(toric_morphism(p2, bl), ValidationError);
    CHECK_THROWS_AS(toric_morphism(p2, projective_space(3)), ValidationError);
    CHECK_THROWS_AS(toric_morphism(p2, hirzebruch(1)), ValidationError);
    // identity refinement is allowed
    ToricMorphismData id = toric_morphism(p2, p2);
    CHECK(*id.source == *id.target);
}

TEST_CASE("point location in max cones") {
    FanPtr p2 = projective_space(2);
    int k = find_max_cone(*p2, iv({1, 1}));
    REQUIRE(k >= 0);
    CHECK(p2->max_cones()[k] == std::vector<int>{0, 1});
    k = find_max_cone(*p2, iv({-2, -3}));
    REQUIRE(k >= 0);
    CHECK(p2->max_cones()[k] == std::vector<int>{0, 2});

    FanPtr quadrant = Fan::make(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
    CHECK(find_max_cone(*quadrant, iv({-1, 5})) == -1);

    RatVec q = {make_rat(-1, 2), make_rat(-1, 3)};
    k = find_max_cone(*p2, q);
    REQUIRE(k >= 0);
    CHECK(p2->max_cones()[k] == std::vector<int>{1, 2});
}

TEST_CASE("incomplete rank-3 fan detected") {
    FanPtr octant = Fan::make(
        3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {{0, 1, 2}});
    CHECK_FALSE(is_complete(*octant));
    CHECK(is_complete(*projective_space(3)));
}

TEST_CASE("completeness test is refused above rank three") {
    FanPtr p4 = projective_space(4);
    CHECK_THROWS_AS(is_complete(*p4), HypothesisError);
    CHECK(has_paired_walls(*p4));
}
