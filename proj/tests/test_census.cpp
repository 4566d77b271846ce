#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "g2c/census.hpp"

#include <algorithm>
#include <set>

using namespace g2c;

namespace {

Mat rot3(std::initializer_list<int> e) {
    Mat m(3, 3);
    auto it = e.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = *it++;
    return m;
}

int index_of_matrix(const TargetGroup& g, const Mat& m) {
    for (int i = 0; i < g.order(); ++i)
        if (g.rot[i] == m) return i;
    throw std::logic_error("matrix not in group");
}

}  // namespace

TEST_CASE("trace schedule sizes") {
    CHECK(trace_schedule(3).size() == 3 + 9 + 27);
    CHECK(trace_schedule(10, 2).size() == 10 + 100);
    CHECK(trace_schedule(10, 1).size() == 10);
}

TEST_CASE("projective enumeration over the quaternion group") {
    Presentation p = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    auto homs = enumerate_homs(p, q8);
    CHECK(homs.size() == 48);
    for (const Rep& r : homs) CHECK(fixtures::is_homomorphism(p, r));

    auto classes = census_classes(p, q8, {}, 2);
    REQUIRE(classes.size() == 2);
    int members = 0;
    for (const RepClass& c : classes) {
        CHECK(c.irreducible);
        CHECK(c.image_order == 8);
        CHECK(c.member_count == 24);
        members += c.member_count;
    }
    CHECK(members == 48);

    // representatives are (i, j, +-1) up to conjugation
    Rep plus = fixtures::make_rep(p, q8, {{"a", "i"}, {"b", "j"}, {"c", "1"}});
    Rep minus = fixtures::make_rep(p, q8, {{"a", "i"}, {"b", "j"}, {"c", "-1"}});
    bool matched_plus = conjugate_in_so3(classes[0].representative, plus) ||
                        conjugate_in_so3(classes[1].representative, plus);
    bool matched_minus = conjugate_in_so3(classes[0].representative, minus) ||
                         conjugate_in_so3(classes[1].representative, minus);
    CHECK(matched_plus);
    CHECK(matched_minus);
    CHECK_FALSE(conjugate_in_so3(plus, minus));
}

TEST_CASE("signed relators reject the rotation model") {
    Presentation p = t3_projective();
    CHECK_THROWS(enumerate_homs(p, builtin_target("V4")));
}

TEST_CASE("pruned and unpruned censuses agree on the quaternion target") {
    Presentation p = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    EnumConfig off, on;
    on.prune = true;
    auto a = census_classes(p, q8, off, 2);
    auto b = census_classes(p, q8, on, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].representative.vals == b[i].representative.vals);
        CHECK(a[i].traces == b[i].traces);
        CHECK(a[i].image_order == b[i].image_order);
        CHECK(a[i].irreducible == b[i].irreducible);
    }
}

TEST_CASE("streaming enumeration matches the materialized list") {
    Presentation p = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    auto homs = enumerate_homs(p, q8);
    std::vector<std::vector<int>> streamed;
    enumerate_homs(p, q8, {}, [&](const std::vector<int>& v) { streamed.push_back(v); });
    REQUIRE(streamed.size() == homs.size());
    for (std::size_t i = 0; i < homs.size(); ++i) CHECK(streamed[i] == homs[i].vals);
}

TEST_CASE("irreducibility") {
    Presentation p = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    Rep trivial = fixtures::make_rep(p, v4, {});
    CHECK_FALSE(is_irreducible(trivial));
    Rep z2 = fixtures::make_rep(p, v4, {{"t4", "a"}});
    CHECK_FALSE(is_irreducible(z2));  // the image fixes the first axis
    for (const Rep& r : fixtures::table1_reps(p, v4)) CHECK(is_irreducible(r));
}

TEST_CASE("catalog conjugacy detects rotation-conjugate pairs") {
    Presentation p = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    Rep rho1 = fixtures::table1_reps(p, v4)[0];
    CHECK(conjugate_reps(rho1, rho1));

    // conjugating every image by a fixed rotation preserves the class; use
    // the S4 target so nontrivial conjugators exist
    const TargetGroup& s4 = builtin_target("S4");
    Rep r1;
    r1.group = &s4;
    for (int v : rho1.vals) r1.vals.push_back(index_of_matrix(s4, v4.rot[v]));
    int cyc = index_of_matrix(s4, rot3({0, 0, 1, 1, 0, 0, 0, 1, 0}));
    Rep r2;
    r2.group = &s4;
    for (int v : r1.vals) r2.vals.push_back(s4.mul[cyc][s4.mul[v][s4.inv[cyc]]]);
    CHECK(r1.vals != r2.vals);
    CHECK(conjugate_reps(r1, r2));
    CHECK(conjugate_in_so3(r1, r2));

    Rep rho2 = fixtures::table1_reps(p, v4)[1];
    CHECK_FALSE(conjugate_reps(rho1, rho2));
    CHECK_FALSE(conjugate_in_so3(rho1, rho2));
}

TEST_CASE("character conjugacy sees irrational conjugators") {
    // Two Klein four-groups inside the signed permutations: the diagonal one
    // and a twisted one. They are conjugate in SO(3) only through a rotation
    // by 45 degrees, which no signed permutation realizes.
    const TargetGroup& s4 = builtin_target("S4");
    Rep diag;
    diag.group = &s4;
    diag.vals = {index_of_matrix(s4, rot3({1, 0, 0, 0, -1, 0, 0, 0, -1})),
                 index_of_matrix(s4, rot3({-1, 0, 0, 0, 1, 0, 0, 0, -1}))};
    Rep twisted;
    twisted.group = &s4;
    twisted.vals = {index_of_matrix(s4, rot3({1, 0, 0, 0, -1, 0, 0, 0, -1})),
                    index_of_matrix(s4, rot3({-1, 0, 0, 0, 0, 1, 0, 1, 0}))};
    CHECK_FALSE(conjugate_reps(diag, twisted));
    CHECK(conjugate_in_so3(diag, twisted));
}

TEST_CASE("class reduction merges character-equal orbits") {
    // Reducing the two-element rep lists by hand must give one class for the
    // diagonal/twisted pair above.
    const TargetGroup& s4 = builtin_target("S4");
    Rep diag;
    diag.group = &s4;
    diag.vals = {index_of_matrix(s4, rot3({1, 0, 0, 0, -1, 0, 0, 0, -1})),
                 index_of_matrix(s4, rot3({-1, 0, 0, 0, 1, 0, 0, 0, -1}))};
    Rep twisted;
    twisted.group = &s4;
    twisted.vals = {index_of_matrix(s4, rot3({1, 0, 0, 0, -1, 0, 0, 0, -1})),
                    index_of_matrix(s4, rot3({-1, 0, 0, 0, 0, 1, 0, 1, 0}))};
    auto classes = reduce_to_classes({diag, twisted}, s4, 3);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].member_count == 2);
    CHECK(classes[0].image_order == 4);
}

TEST_CASE("centralizer orders for Klein images") {
    Presentation p = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    for (const Rep& r : fixtures::table1_reps(p, v4))
        CHECK(centralizer_order(r) == 4);
}

TEST_CASE("bundle signatures of the four explicit representations") {
    Presentation p = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    auto reps = fixtures::table1_reps(p, v4);
    auto expected = fixtures::table1_signatures();
    std::set<std::string> seen;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::string s = bundle_signature(reps[i], p).str();
        CHECK(s == expected[i]);
        seen.insert(s);
    }
    CHECK(seen.size() == 4);  // pairwise distinct
}

TEST_CASE("signature equality respects the central kernel on spin targets") {
    // On a spin target, translations agreeing up to the center produce the
    // same bundle data; check the pair bits treat q and -q as equal.
    const TargetGroup& q8 = builtin_target("Q8");
    Presentation p;
    p.generators = {"a", "b"};
    AffineMap ta, tb;
    ta.translation[0] = frac(1, 2);
    tb.translation[1] = frac(1, 2);
    p.affine = {ta, tb};
    p.linking.push_back({"a", Word{{0, 1}}});
    Rep r1 = fixtures::make_rep(p, q8, {{"a", "i"}, {"b", "i"}});
    Rep r2 = fixtures::make_rep(p, q8, {{"a", "i"}, {"b", "-i"}});
    Rep r3 = fixtures::make_rep(p, q8, {{"a", "i"}, {"b", "j"}});
    CHECK(bundle_signature(r1, p) == bundle_signature(r2, p));
    CHECK(bundle_signature(r1, p) != bundle_signature(r3, p));
}

TEST_CASE("invariant totals from a class list") {
    Presentation p = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    auto classes = census_classes(p, q8, {}, 2);
    auto totals = invariant(p, q8, classes);
    REQUIRE(totals.size() == 1);
    CHECK(totals[0].total == 2);
    CHECK(totals[0].class_count == 2);
}

TEST_CASE("rep evaluation of words") {
    Presentation p = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    Rep r = fixtures::make_rep(p, q8, {{"a", "i"}, {"b", "j"}, {"c", "1"}});
    // a b = k, a^-1 = -i
    Word ab{{0, 1}, {1, 1}};
    CHECK(q8.element_names[r.evaluate(ab)] == "k");
    Word ainv{{0, -1}};
    CHECK(q8.element_names[r.evaluate(ainv)] == "-i");
    Word comm{{0, 1}, {1, 1}, {0, -1}, {1, -1}};
    CHECK(q8.element_names[r.evaluate(comm)] == "-1");
}
