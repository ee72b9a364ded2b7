#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace curvelim;

namespace {

const char* kCubicDet =
    "4*x0^3 + 31*x0^2*x1 + 28*x0^2*x2 - 4*x0*x1^2 + 20*x0*x1*x2 + 24*x0*x2^2 + 12*x1^3 - "
    "26*x1^2*x2 + 2*x1*x2^2 + 21*x2^3";

}  // namespace

TEST_CASE("pencil determinant") {
    ExactDetRep m1(ExactMatrix{{ExactScalar(1)}}, ExactMatrix{{ExactScalar(1)}},
                   ExactMatrix{{ExactScalar(0)}});
    CHECK(det_poly(m1) == parse_hom3("x0 + x1"));
    CHECK(det_poly(conic_fixture()) == parse_hom3("x0^2 - x1^2 - x2^2"));
    CHECK(det_poly(cubic_fixture()) == parse_hom3(kCubicDet));
    ExactDetRep degenerate(ExactMatrix(2, 2), ExactMatrix(2, 2), ExactMatrix(2, 2));
    CHECK_THROWS_AS(det_poly(degenerate), degenerate_pencil);
}

TEST_CASE("kernel at curve points") {
    ExactDetRep d = conic_fixture();
    auto pk1 = kernel_at(d, {ExactScalar(1), ExactScalar(1), ExactScalar(0)});
    CHECK(pk1.e == std::vector<ExactScalar>{ExactScalar(0), ExactScalar(1)});
    CHECK(!pk1.multi_dim);
    auto pk2 = kernel_at(d, {ExactScalar(5), ExactScalar(3), ExactScalar(4)});
    CHECK(pk2.e == std::vector<ExactScalar>{ExactScalar(1), ExactScalar(-2)});
    CHECK_THROWS_AS(kernel_at(d, {ExactScalar(1), ExactScalar(0), ExactScalar(0)}),
                    point_not_on_curve);
}

TEST_CASE("kernel vectors satisfy the pencil equation") {
    ExactDetRep d = conic_fixture();
    for (long s = 1; s <= 4; ++s)
        for (long t = -3; t <= 3; ++t) {
            if (t == 0) continue;
            auto pk = kernel_at(d, conic_point(ExactScalar(s), ExactScalar(t)));
            ExactMatrix pe = pencil_at(d, pk.point) * ExactMatrix::column(pk.e);
            CHECK(pe.is_zero());
        }
    ExactDetRep c = cubic_fixture();
    for (const auto& line :
         std::vector<std::array<ExactScalar, 3>>{{ExactScalar(1), ExactScalar(0), ExactScalar(0)},
                                                 {ExactScalar(2), ExactScalar(1), ExactScalar(-1)}})
        for (const auto& x : sample_points(c, line)) {
            auto pk = kernel_at(c, x);
            CHECK((pencil_at(c, pk.point) * ExactMatrix::column(pk.e)).is_zero());
        }
}

TEST_CASE("projective well-definedness of kernel_at") {
    ExactDetRep d = conic_fixture();
    std::array<ExactScalar, 3> x = conic_point(ExactScalar(3), ExactScalar(2));
    auto pk = kernel_at(d, x);
    std::array<ExactScalar, 3> scaled = {ExactScalar(-7, 3) * x[0], ExactScalar(-7, 3) * x[1],
                                         ExactScalar(-7, 3) * x[2]};
    auto pk2 = kernel_at(d, scaled);
    CHECK(pk.point == pk2.point);
    CHECK(pk.e == pk2.e);
}

TEST_CASE("equivalence transform") {
    ExactDetRep d = conic_fixture();
    ExactDetRep same = transform(d, ExactMatrix::identity(2));
    CHECK(same.d0 == d.d0);
    CHECK(same.d1 == d.d1);
    CHECK(same.d2 == d.d2);
    ExactDetRep twice = transform(d, ExactScalar(2) * ExactMatrix::identity(2));
    CHECK(det_poly(twice) == ExactScalar(16) * det_poly(d));
    for (int t = 0; t < 5; ++t) {
        ExactMatrix p = testutil::rand_invertible(2);
        ExactDetRep dd = transform(d, p);  // internal scale assertion runs here
        ExactScalar dp = det(p);
        CHECK(det_poly(dd) == dp * dp * det_poly(d));
    }
    CHECK_THROWS_AS(transform(d, ExactMatrix(2, 2)), error);
}

TEST_CASE("line sampling, exact backend") {
    ExactDetRep d = conic_fixture();
    auto eq = [](const std::vector<std::array<ExactScalar, 3>>& pts,
                 std::vector<std::array<ExactScalar, 3>> want) {
        if (pts.size() != want.size()) return false;
        for (const auto& p : pts) {
            bool found = false;
            for (const auto& w : want) found = found || (p == w);
            if (!found) return false;
        }
        return true;
    };
    CHECK(eq(sample_points(d, {ExactScalar(0), ExactScalar(1), ExactScalar(0)}),
             {{ExactScalar(1), ExactScalar(0), ExactScalar(1)},
              {ExactScalar(1), ExactScalar(0), ExactScalar(-1)}}));
    CHECK(eq(sample_points(d, {ExactScalar(0), ExactScalar(0), ExactScalar(1)}),
             {{ExactScalar(1), ExactScalar(1), ExactScalar(0)},
              {ExactScalar(1), ExactScalar(-1), ExactScalar(0)}}));
    CHECK(sample_points(d, {ExactScalar(1), ExactScalar(0), ExactScalar(0)}).empty());
}

TEST_CASE("line sampling, float backend") {
    ExactDetRep d = conic_fixture();
    auto pts = sample_points_float(d, {ExactScalar(1), ExactScalar(0), ExactScalar(0)});
    REQUIRE(pts.size() == 2);
    for (const auto& x : pts) {
        CHECK(std::abs(x[0]) < 1e-12);
        CHECK(std::abs(std::abs(x[2] / x[1]) - 1.0) < 1e-9);
        CHECK(std::abs((x[2] / x[1]).real()) < 1e-9);  // x2/x1 = +-i
    }
    auto cpts = sample_points_float(cubic_fixture(),
                                    {ExactScalar(1), ExactScalar(2), ExactScalar(-1)});
    CHECK(cpts.size() == 3);
}

TEST_CASE("random lines always land on the curve") {
    ExactDetRep d = conic_fixture();
    HomPoly3 delta = det_poly(d);
    std::uniform_int_distribution<long> coeff(-9, 9);
    int tested = 0;
    while (tested < 20) {
        std::array<ExactScalar, 3> line = {ExactScalar(coeff(testutil::rng())),
                                           ExactScalar(coeff(testutil::rng())),
                                           ExactScalar(coeff(testutil::rng()))};
        if (line[0].is_zero() && line[1].is_zero() && line[2].is_zero()) continue;
        ++tested;
        for (const auto& x : sample_points(d, line)) CHECK(delta.evaluate(x) == ExactScalar(0));
    }
}

TEST_CASE("validation and warnings") {
    std::vector<std::string> captured;
    auto old = warning_sink();
    warning_sink() = [&](const std::string& m) { captured.push_back(m); };

    CHECK(validate_rep(conic_fixture()) == parse_hom3("x0^2 - x1^2 - x2^2"));
    CHECK(captured.empty());
    CHECK(validate_rep(cubic_fixture()) == parse_hom3(kCubicDet));
    CHECK(captured.empty());

    // non-hermitian matrices flagged hermitian -> warning
    // (determinant x0^2 - x1^2 - 2*x2^2 stays irreducible over the rationals)
    ExactMatrix d1h = {{ExactScalar(1), ExactScalar(0)}, {ExactScalar(0), ExactScalar(-1)}};
    ExactMatrix nh = {{ExactScalar(0), ExactScalar(2)}, {ExactScalar(1), ExactScalar(0)}};
    ExactDetRep bad(ExactMatrix::identity(2), d1h, nh, true);
    validate_rep(bad);
    CHECK(captured.size() == 1);

    // reducible determinant (product of two lines) -> reducibility warning
    captured.clear();
    ExactMatrix d1 = {{ExactScalar(1), ExactScalar(0)}, {ExactScalar(0), ExactScalar(0)}};
    ExactMatrix d2 = {{ExactScalar(0), ExactScalar(0)}, {ExactScalar(0), ExactScalar(1)}};
    validate_rep(ExactDetRep(ExactMatrix(2, 2), d1, d2));  // det = x1*x2
    CHECK(captured.size() == 1);

    warning_sink() = old;
}

TEST_CASE("float backend round trip and on-curve tolerance") {
    FloatDetRep f = to_float(conic_fixture());
    std::array<FloatScalar, 3> x = {1.0, 0.6, 0.8};
    CHECK(on_curve(f, x));
    CHECK(!on_curve(f, {1.0, 0.5, 0.5}));
    auto pk = kernel_at(f, x);
    FloatMatrix pe = pencil_at(f, pk.point) * Matrix<FloatScalar>::column(pk.e);
    for (const auto& e : pe.entries()) CHECK(std::abs(e) < 1e-9);
}
