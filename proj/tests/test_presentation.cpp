#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2c/presentation.hpp"

#include <algorithm>

using namespace g2c;

TEST_CASE("free reduction and inversion of words") {
    // a b b^-1 a^-1 a -> a
    Word w{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}};
    Word r = free_reduce(w);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == Letter{0, 1});

    Word v{{0, 1}, {1, -1}, {2, 1}};
    Word inv = inverse_word(v);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == Letter{2, -1});
    CHECK(inv[1] == Letter{1, 1});
    CHECK(inv[2] == Letter{0, -1});
    CHECK(free_reduce(Word{{3, 1}, {3, -1}}).empty());
}

TEST_CASE("affine maps compose and invert") {
    AffineMap s;
    s.linear = diag7({-1, 1, 1, 1, 1, 1, 1});
    s.translation[0] = frac(1, 2);
    AffineMap ss = s.compose(s);
    CHECK(ss.linear == Mat::identity(7));
    CHECK(ss.translation == Vec7{});
    CHECK(ss.is_identity());
    CHECK(s.compose(s.inverse()).is_identity());
    CHECK(s.inverse().compose(s).is_identity());
    CHECK_FALSE(s.is_identity());
}

TEST_CASE("builtin orbifold presentation shape") {
    Presentation p = joyce_example3();
    REQUIRE(p.generators.size() == 10);
    CHECK(p.relators.size() == 48);
    CHECK(p.linking.size() == 12);
    CHECK_FALSE(p.has_signs());
    REQUIRE(p.has_affine());
    CHECK_NOTHROW(p.validate_affine());
    CHECK(p.generator_index("a") >= 0);
    CHECK(p.generator_index("zz") == -1);
}

TEST_CASE("tampered affine data fails validation") {
    Presentation p = joyce_example3();
    REQUIRE(p.affine[0].has_value());
    p.affine[0]->translation[3] += frac(1, 3);
    CHECK_THROWS(p.validate_affine());
}

TEST_CASE("projective presentation carries relator signs") {
    Presentation p = t3_projective();
    CHECK(p.generators.size() == 3);
    CHECK(p.relators.size() == 3);
    REQUIRE(p.has_signs());
    REQUIRE(p.relator_signs.size() == 3);
    int negatives = 0;
    for (int s : p.relator_signs) {
        CHECK((s == 1 || s == -1));
        if (s == -1) ++negatives;
    }
    CHECK(negatives > 0);
    Presentation q = t3_projective(false);
    CHECK((!q.has_signs() ||
           std::count(q.relator_signs.begin(), q.relator_signs.end(), -1) == 0));
}

TEST_CASE("format and parse round trip") {
    for (const Presentation& p : {joyce_example3(), t3_projective()}) {
        std::string text = format_presentation(p);
        Presentation q = parse_presentation(text);
        CHECK(q.generators == p.generators);
        CHECK(q.relators == p.relators);
        CHECK(q.relator_signs == p.relator_signs);
        CHECK(q.linking.size() == p.linking.size());
        CHECK(q.has_affine() == p.has_affine());
        CHECK(format_presentation(q) == text);
        if (q.has_affine()) CHECK_NOTHROW(q.validate_affine());
    }
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_presentation("generators: a b\nrelator: a q\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("smith normal form invariants") {
    Mat m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(1, 0) = 6;
    m(1, 1) = 8;
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    // unimodular transforms
    Scalar du = s.u.det(), dv = s.v.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal with divisibility chain: 2, 4 (up to sign)
    CHECK(s.d(0, 1) == 0);
    CHECK(s.d(1, 0) == 0);
    Scalar d0 = s.d(0, 0) < 0 ? -s.d(0, 0) : s.d(0, 0);
    Scalar d1 = s.d(1, 1) < 0 ? -s.d(1, 1) : s.d(1, 1);
    CHECK(d0 == 2);
    CHECK(d1 == 4);
}

TEST_CASE("abelianization of the builtin presentations") {
    AbelianInvariants joyce = abelianization(joyce_example3());
    REQUIRE(joyce.factors.size() == 8);
    for (const Int& f : joyce.factors) CHECK(f == 2);
    CHECK(joyce.free_rank == 0);
    CHECK(hom_count_mod2(joyce_example3()) == 256);

    AbelianInvariants t3 = abelianization(t3_projective());
    CHECK(t3.factors.empty());
    CHECK(t3.free_rank == 3);
    CHECK(hom_count_mod2(t3_projective()) == 8);
}
