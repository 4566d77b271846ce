#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2c/kform.hpp"

using namespace g2c;

namespace {

const Metric7 g = Metric7::euclidean();

Vec7 unit(int i) {
    Vec7 v{};
    v[i - 1] = 1;
    return v;
}

}  // namespace

TEST_CASE("phi0 has the seven standard terms") {
    KForm phi = standard_phi0();
    CHECK(phi.degree() == 3);
    REQUIRE(phi.coefficients().size() == 7);
    // +123 +145 +167 +246 -257 -347 -356 as index triples
    CHECK(phi == KForm::basis({1, 2, 3}) + KForm::basis({1, 4, 5}) +
                     KForm::basis({1, 6, 7}) + KForm::basis({2, 4, 6}) -
                     KForm::basis({2, 5, 7}) - KForm::basis({3, 4, 7}) -
                     KForm::basis({3, 5, 6}));
    CHECK(phi.has_constant_coefficients());
}

TEST_CASE("basis covectors and wedge") {
    CHECK(wedge(KForm::dx(1), KForm::dx(2)) == KForm::basis({1, 2}));
    CHECK(wedge(KForm::dx(2), KForm::dx(1)) == Scalar(-1) * KForm::basis({1, 2}));
    CHECK(wedge(KForm::dx(3), KForm::dx(3)).is_zero());
    CHECK_THROWS(KForm::basis({1, 1, 2}));

    // associativity sample
    KForm a = KForm::dx(1) + Scalar(2) * KForm::dx(4);
    KForm b = KForm::basis({2, 3});
    KForm c = KForm::dx(5);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
}

TEST_CASE("exterior derivative squares to zero") {
    Poly x1 = Poly::coordinate(1), x2 = Poly::coordinate(2);
    KForm f(1);
    f.set(1 << 2, x1 * x2);          // x1 x2 dx3
    f.set(1 << 5, x1 * x1);          // x1^2 dx6
    CHECK(exterior_derivative(exterior_derivative(f)).is_zero());

    KForm xdx(1);
    xdx.set(1 << 1, x1);  // x1 dx2
    CHECK(exterior_derivative(xdx) == KForm::basis({1, 2}));
}

TEST_CASE("hodge star on the euclidean metric") {
    CHECK(hodge_star(KForm::constant(1), g) ==
          KForm::basis({1, 2, 3, 4, 5, 6, 7}));
    // star is an involution in seven dimensions
    for (const KForm& w : {KForm::dx(3), KForm::basis({2, 5}),
                           KForm::basis({1, 4, 6}), standard_phi0()})
        CHECK(hodge_star(hodge_star(w, g), g) == w);
    // phi ^ *phi = 7 vol
    KForm phi = standard_phi0();
    KForm seven_vol = wedge(phi, hodge_star(phi, g));
    CHECK(seven_vol == Scalar(7) * KForm::basis({1, 2, 3, 4, 5, 6, 7}));
    CHECK(inner_product(phi, phi, g) == 7);
}

TEST_CASE("metric recovery from phi0 is euclidean") {
    MetricRecovery r = metric_from_3form(standard_phi0());
    REQUIRE(r.metric.has_value());
    CHECK(r.metric->m == Mat::identity(7));
    CHECK(r.orientation == 1);
    REQUIRE(r.volume.has_value());
    CHECK(*r.volume == 1);
    CHECK(r.gram == Mat::identity(7));
}

TEST_CASE("metric recovery rejects a degenerate 3-form") {
    CHECK_THROWS_AS(metric_from_3form(KForm::basis({1, 2, 3})), NotPositiveError);
}

TEST_CASE("type decomposition of 2-forms") {
    KForm phi = standard_phi0();
    KForm w = KForm::basis({1, 2}) + Scalar(3) * KForm::basis({4, 7}) -
              Scalar(2) * KForm::basis({2, 6});
    KForm p7 = project_7(w, phi, g);
    KForm p14 = project_14(w, phi, g);
    CHECK(p7 + p14 == w);
    // eigenvalue equations: *(phi ^ p7) = 2 p7, *(phi ^ p14) = -p14
    CHECK(hodge_star(wedge(phi, p7), g) == Scalar(2) * p7);
    CHECK(hodge_star(wedge(phi, p14), g) == Scalar(-1) * p14);
    // projections are idempotent and orthogonal
    CHECK(project_7(p7, phi, g) == p7);
    CHECK(project_14(p7, phi, g).is_zero());
    CHECK(project_14(p14, phi, g) == p14);
}

TEST_CASE("projector multiplicities are 7 and 14") {
    KForm phi = standard_phi0();
    Scalar trace7 = 0, trace14 = 0;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            KForm b = KForm::basis({i, j});
            std::uint8_t mask = std::uint8_t((1 << (i - 1)) | (1 << (j - 1)));
            trace7 += project_7(b, phi, g).coefficient(mask).constant_term();
            trace14 += project_14(b, phi, g).coefficient(mask).constant_term();
        }
    CHECK(trace7 == 7);
    CHECK(trace14 == 14);
}

TEST_CASE("cross product axioms") {
    KForm phi = standard_phi0();
    Vec7 e1 = unit(1), e2 = unit(2), e3 = unit(3);
    CHECK(cross(e1, e2, phi, g) == e3);
    CHECK(cross(e1, unit(4), phi, g) == unit(5));
    CHECK(cross(e1, unit(6), phi, g) == unit(7));

    Vec7 u{1, 2, 0, 1, 0, 0, 3};
    Vec7 v{0, 1, 1, 0, 2, 1, 0};
    Vec7 w = cross(u, v, phi, g);
    CHECK(dot(w, u) == 0);
    CHECK(dot(w, v) == 0);
    CHECK(dot(w, w) == dot(u, u) * dot(v, v) - dot(u, v) * dot(u, v));
    // phi(u, v, u x v) = |u x v|^2
    CHECK(phi.eval({u, v, w}) == dot(w, w));
}

TEST_CASE("associative subspaces") {
    KForm phi = standard_phi0();
    CHECK(is_associative(unit(1), unit(2), unit(3), phi, g));
    CHECK(is_associative(unit(1), unit(4), unit(5), phi, g));
    CHECK(is_associative(unit(2), unit(4), unit(6), phi, g));
    CHECK_FALSE(is_associative(unit(1), unit(2), unit(4), phi, g));
}

TEST_CASE("interior products") {
    KForm phi = standard_phi0();
    CHECK(interior(unit(1), phi) ==
          KForm::basis({2, 3}) + KForm::basis({4, 5}) + KForm::basis({6, 7}));
    // d(iota_x phi0) = 3 phi0 for the euler field x
    std::array<Poly, 7> euler;
    for (int i = 0; i < 7; ++i) euler[i] = Poly::coordinate(i + 1);
    CHECK(exterior_derivative(interior(euler, phi)) == Scalar(3) * phi);
}

TEST_CASE("energy and instanton identities on samples") {
    KForm phi = standard_phi0();
    for (const KForm& w :
         {KForm::basis({1, 2}), KForm::basis({2, 6}) - Scalar(5) * KForm::basis({3, 4}),
          Scalar(2) * KForm::basis({5, 7}) + KForm::basis({1, 3})}) {
        auto [lhs, rhs] = energy_identity_check(w, phi, g);
        CHECK(lhs == rhs);
        CHECK(instanton_operator_identity(w, phi, g));
    }
}

TEST_CASE("fixed subspaces of matrix groups") {
    CHECK(fixed_subspace({Mat::identity(7)}).dimension == 7);
    CHECK(fixed_subspace({diag7({1, 1, 1, -1, -1, -1, -1})}).dimension == 3);
    CHECK(fixed_subspace({diag7({1, 1, 1, -1, -1, -1, -1}),
                          diag7({1, -1, -1, 1, 1, -1, -1})})
              .dimension == 1);
    CHECK(fixed_subspace({diag7({-1, -1, -1, -1, -1, -1, -1})}).dimension == 0);
}

TEST_CASE("boundary sphere inequality samples") {
    KForm alpha = KForm::basis({2, 3}) + Scalar(2) * KForm::basis({4, 5});
    CHECK(sphere_inequality_sample(alpha, Scalar(1)));
    CHECK(sphere_inequality_sample(alpha, frac(7, 3)));
    CHECK_THROWS(sphere_inequality_sample(KForm::dx(1), Scalar(1)));
    CHECK_THROWS(sphere_inequality_sample(alpha, Scalar(0)));
}

TEST_CASE("constant form evaluation") {
    KForm w = KForm::basis({1, 2}) - Scalar(2) * KForm::basis({3, 4});
    CHECK(w.eval({unit(1), unit(2)}) == 1);
    CHECK(w.eval({unit(2), unit(1)}) == -1);
    CHECK(w.eval({unit(3), unit(4)}) == -2);
    CHECK(w.eval({unit(5), unit(6)}) == 0);
}
