#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvelim/json_io.hpp"
#include "helpers.hpp"

using namespace curvelim;

TEST_CASE("scalar strings round trip") {
    std::vector<ExactScalar> vals = {ExactScalar(0),
                                     ExactScalar(-17),
                                     ExactScalar(3, 4),
                                     ExactScalar(-5, 7),
                                     ExactScalar::i(),
                                     ExactScalar(mpq_class(1, 2), mpq_class(-2, 3)),
                                     ExactScalar(mpq_class(0), mpq_class(-1))};
    for (const auto& v : vals) {
        CHECK(parse_scalar(v.str()) == v);
        CHECK(scalar_from_json(to_json(v)) == v);
    }
    CHECK(scalar_from_json(json(5)) == ExactScalar(5));
    CHECK_THROWS_AS(parse_scalar("1/2+"), syntax_error);
    CHECK_THROWS_AS(parse_scalar("x"), syntax_error);
    CHECK_THROWS_AS(scalar_from_json(json(1.5)), error);
}

TEST_CASE("float scalars") {
    CHECK(float_from_json(json(2.5)) == FloatScalar(2.5, 0.0));
    CHECK(float_from_json(json::array({1.0, -2.0})) == FloatScalar(1.0, -2.0));
    CHECK(float_from_json(json("3/4")) == FloatScalar(0.75, 0.0));
    CHECK_THROWS_AS(float_from_json(json::object()), error);
    json j = to_json(FloatScalar(0.5, -0.25));
    CHECK(float_from_json(j) == FloatScalar(0.5, -0.25));
}

TEST_CASE("matrices round trip") {
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = testutil::rand_matrix(3, 4);
        a(0, 0) = ExactScalar(mpq_class(1, 3), mpq_class(-5, 2));
        CHECK(matrix_from_json(to_json(a)) == a);
    }
    CHECK_THROWS_AS(matrix_from_json(json::array()), error);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1","2"],["3"]])")), error);
}

TEST_CASE("pencil round trip") {
    for (const auto& d : {conic_fixture(), cubic_fixture()}) {
        ExactDetRep back = detrep_from_json(to_json(d));
        CHECK(back.m == d.m);
        CHECK(back.d0 == d.d0);
        CHECK(back.d1 == d.d1);
        CHECK(back.d2 == d.d2);
        CHECK(back.hermitian == d.hermitian);
    }
    json bad = to_json(conic_fixture());
    bad["m"] = 3;
    CHECK_THROWS_AS(detrep_from_json(bad), error);
    CHECK_THROWS_AS(detrep_from_json(json::object()), json::exception);
}

TEST_CASE("points round trip") {
    std::array<ExactScalar, 3> x = {ExactScalar(5), ExactScalar(-3, 2), ExactScalar(0)};
    CHECK(point_from_json(to_json(x)) == x);
    CHECK_THROWS_AS(point_from_json(json::array({"1", "2"})), error);
}

TEST_CASE("rational maps round trip") {
    RationalMap r(parse_hom3("x1") * parse_hom3("x0"),
                  parse_hom3("x0 + x1 - x2") * parse_hom3("x0 + x1"),
                  parse_hom3("x1 - x0 + x2") * parse_hom3("2*x0 + x2"),
                  {{ExactScalar(1), ExactScalar(0), ExactScalar(1)}});
    RationalMap back = map_from_json(to_json(r));
    CHECK(back.p[0] == r.p[0]);
    CHECK(back.p[1] == r.p[1]);
    CHECK(back.p[2] == r.p[2]);
    CHECK(back.basepoints == r.basepoints);
    // mixed degrees rejected on re-parse
    json bad = to_json(r);
    bad["p1"] = "x0";
    CHECK_THROWS_AS(map_from_json(bad), not_homogeneous);
}

TEST_CASE("emitted JSON is deterministic") {
    ExactDetRep d = cubic_fixture();
    CHECK(to_json(d).dump() == to_json(cubic_fixture()).dump());
}
