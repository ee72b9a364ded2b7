#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace curvelim;
using testutil::rand_hompoly;
using testutil::rand_unipoly;

TEST_CASE("monomial order") {
    for (unsigned d = 0; d <= 5; ++d) {
        MonomialOrder order(d);
        CHECK(order.size() == (d + 1) * (d + 2) / 2);
        for (std::size_t k = 0; k < order.size(); ++k) {
            CHECK(order.at(k).degree() == d);
            CHECK(order.index_of(order.at(k)) == k);
            if (k > 0) CHECK(order.at(k - 1) < order.at(k));
        }
    }
    MonomialOrder o2(2);
    CHECK(o2.at(0) == MultiIndex3{2, 0, 0});
    CHECK(o2.at(1) == MultiIndex3{1, 1, 0});
    CHECK(o2.at(2) == MultiIndex3{1, 0, 1});
    CHECK(o2.at(3) == MultiIndex3{0, 2, 0});
    CHECK(o2.at(4) == MultiIndex3{0, 1, 1});
    CHECK(o2.at(5) == MultiIndex3{0, 0, 2});
}

TEST_CASE("parsing homogeneous forms") {
    HomPoly3 p = parse_hom3("x0^2 - x1^2 - x2^2");
    CHECK(p.degree() == 2);
    CHECK(p.coeff({2, 0, 0}) == ExactScalar(1));
    CHECK(p.coeff({0, 2, 0}) == ExactScalar(-1));
    CHECK(p.coeff({0, 0, 2}) == ExactScalar(-1));
    CHECK(parse_hom3("0", 3).is_zero());
    CHECK(parse_hom3("0", 3).degree() == 3);
    CHECK_THROWS_AS(parse_hom3("x0^2 + x1"), not_homogeneous);
    CHECK_THROWS_AS(parse_hom3("x0^2", 3), not_homogeneous);
    CHECK_THROWS_AS(parse_hom3("0"), not_homogeneous);
}

TEST_CASE("parser rejects malformed input with a position") {
    CHECK_THROWS_AS(parse_hom3("2 x0"), syntax_error);  // implicit multiplication
    CHECK_THROWS_AS(parse_hom3("x3"), syntax_error);
    CHECK_THROWS_AS(parse_hom3("(x0 + x1"), syntax_error);
    CHECK_THROWS_AS(parse_hom3("x0 ^ x1"), syntax_error);
    CHECK_THROWS_AS(parse_unipoly("1/0"), syntax_error);
    try {
        parse_hom3("x0 + @");
        CHECK(false);
    } catch (const syntax_error& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("rational and gaussian literals") {
    UniPoly p = parse_unipoly("3/4*x^2 - 1/2");
    CHECK(p.coeff(2) == ExactScalar(3, 4));
    CHECK(p.coeff(0) == ExactScalar(-1, 2));
    HomPoly3 g = parse_hom3("(1+2*i)*x0 - i*x1");
    CHECK(g.coeff({1, 0, 0}) == ExactScalar(mpq_class(1), mpq_class(2)));
    CHECK(g.coeff({0, 1, 0}) == -ExactScalar::i());
}

TEST_CASE("evaluation") {
    HomPoly3 conic = parse_hom3("x0^2 - x1^2 - x2^2");
    CHECK(conic.evaluate<ExactScalar>({ExactScalar(5), ExactScalar(3), ExactScalar(4)}) ==
          ExactScalar(0));
    CHECK(parse_hom3("x0*x1").evaluate<ExactScalar>(
              {ExactScalar(2), ExactScalar(3), ExactScalar(7)}) == ExactScalar(6));
    AffinePoly2 a = parse_affine2("x1^2 + 5*x2 - 3");
    CHECK(a.evaluate<ExactScalar>({ExactScalar(0), ExactScalar(0)}) == ExactScalar(-3));
    // float evaluation matches the cast of exact evaluation
    std::array<FloatScalar, 3> xf = {2.0, -1.5, 0.25};
    std::array<ExactScalar, 3> xe = {ExactScalar(2), ExactScalar(-3, 2), ExactScalar(1, 4)};
    CHECK(std::abs(conic.evaluate(xf) - conic.evaluate(xe).to_complex()) < 1e-12);
}

TEST_CASE("coefficient vectors") {
    MonomialOrder o3(3);
    auto v = HomPoly3::monomial({3, 0, 0}).coefficient_vector(o3);
    CHECK(v[0] == ExactScalar(1));
    auto w = HomPoly3::monomial({0, 0, 3}).coefficient_vector(o3);
    CHECK(w.back() == ExactScalar(1));
    MonomialOrder o2(2);
    auto u = parse_hom3("x0*x1").coefficient_vector(o2);
    CHECK(u[1] == ExactScalar(1));
    CHECK_THROWS_AS(parse_hom3("x0*x1").coefficient_vector(o3), shape_error);
}

TEST_CASE("homogenization round trip") {
    AffinePoly2 a = parse_affine2("1 + x1");
    CHECK(a.homogenize(2) == parse_hom3("x0^2 + x0*x1"));
    CHECK(parse_affine2("x1^2 + x2^2 - 1").homogenize(2) == parse_hom3("x1^2 + x2^2 - x0^2"));
    CHECK_THROWS_AS(parse_affine2("x1^3").homogenize(2), error);
    for (int t = 0; t < 10; ++t) {
        HomPoly3 p = rand_hompoly(3);
        // dehomogenize(homogenize(q, n)) == q on the affine side
        AffinePoly2 q = p.dehomogenize();
        CHECK(q.homogenize(3).dehomogenize() == q);
    }
}

TEST_CASE("linear change of variables") {
    HomPoly3 p = parse_hom3("x1^2 - x2^2");
    CHECK(p.linear_change(ExactMatrix::identity(3)) == p);
    ExactMatrix swap12 = {{ExactScalar(1), ExactScalar(0), ExactScalar(0)},
                          {ExactScalar(0), ExactScalar(0), ExactScalar(1)},
                          {ExactScalar(0), ExactScalar(1), ExactScalar(0)}};
    CHECK(p.linear_change(swap12) == parse_hom3("x2^2 - x1^2"));
    ExactMatrix d121 = {{ExactScalar(1), ExactScalar(0), ExactScalar(0)},
                        {ExactScalar(0), ExactScalar(2), ExactScalar(0)},
                        {ExactScalar(0), ExactScalar(0), ExactScalar(1)}};
    CHECK(parse_hom3("x0*x1").linear_change(d121) == parse_hom3("2*x0*x1"));
    CHECK_THROWS_AS(p.linear_change(ExactMatrix(3, 3)), error);
    for (int t = 0; t < 5; ++t) {
        HomPoly3 q = rand_hompoly(2);
        ExactMatrix a = testutil::rand_invertible(3);
        CHECK(q.linear_change(a).linear_change(testutil::inverse(a)) == q);
    }
}

TEST_CASE("arithmetic") {
    HomPoly3 p = rand_hompoly(2);
    HomPoly3 one(0);
    one.set({0, 0, 0}, ExactScalar(1));
    CHECK(p * one == p);
    CHECK(parse_hom3("x1 - x2") * parse_hom3("x1 + x2") == parse_hom3("x1^2 - x2^2"));
    // composition: substitute degree-2 forms into a degree-1 form
    HomPoly3 q = HomPoly3::variable(0);
    std::array<HomPoly3, 3> forms = {parse_hom3("x0^2"), parse_hom3("x1^2"), parse_hom3("x2^2")};
    CHECK(q.substitute(forms) == parse_hom3("x0^2"));
    for (int t = 0; t < 10; ++t) {
        HomPoly3 a = rand_hompoly(2), b = rand_hompoly(2);
        std::array<ExactScalar, 3> x = {testutil::rand_int_scalar(), testutil::rand_int_scalar(),
                                        testutil::rand_int_scalar()};
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    }
}

TEST_CASE("declared degrees on univariate polynomials") {
    UniPoly p = parse_unipoly("x + 1", 3);
    CHECK(p.degree() == 3);
    CHECK(p.leading_vanishes());
    CHECK(parse_unipoly("x^2").degree() == 2);
    CHECK_THROWS_AS(parse_unipoly("x^3", 2), error);
    // Horner evaluation sanity
    UniPoly q = parse_unipoly("2*x^3 - x + 5");
    CHECK(q.evaluate(ExactScalar(3)) == ExactScalar(2 * 27 - 3 + 5));
}

TEST_CASE("print and parse round trip") {
    for (int t = 0; t < 20; ++t) {
        HomPoly3 p = rand_hompoly(3);
        CHECK(parse_hom3(print_poly(p)) == p);
        UniPoly u = rand_unipoly(4);
        CHECK(parse_unipoly(print_poly(u), 4) == u);
    }
    HomPoly3 g = parse_hom3("(1/2+1/3*i)*x0*x1 - x2^2");
    CHECK(parse_hom3(print_poly(g)) == g);
    CHECK(print_poly(HomPoly3(2)) == "0");
}
