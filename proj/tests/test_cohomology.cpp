#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "g2c/cohomology.hpp"

#include <algorithm>

using namespace g2c;

namespace {

// Multiset comparison of group-ring elements after free reduction.
bool same_element(const GroupRingElement& a,
                  std::vector<std::pair<Scalar, Word>> expected) {
    std::vector<std::pair<Scalar, Word>> got;
    for (const auto& [c, w] : a.terms) got.emplace_back(c, free_reduce(w));
    for (auto& [c, w] : expected) w = free_reduce(w);
    auto key = [](const std::pair<Scalar, Word>& t) {
        std::string s = to_string(t.first) + "|";
        for (const Letter& l : t.second)
            s += std::to_string(l.gen) + (l.exp > 0 ? "+" : "-");
        return s;
    };
    auto cmp = [&](const auto& x, const auto& y) { return key(x) < key(y); };
    std::sort(got.begin(), got.end(), cmp);
    std::sort(expected.begin(), expected.end(), cmp);
    return got == expected;
}

Mat ad_of(const Rep& r, int gen) { return r.group->adjoint(r.vals[gen]); }

// Stacked fixed-space computation: dim of vectors killed by every (M_i - I).
int stacked_fixed_dim(const std::vector<Mat>& mats) {
    if (mats.empty()) return 0;
    const std::size_t n = mats[0].rows();
    Mat stack(mats.size() * n, n);
    for (std::size_t b = 0; b < mats.size(); ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                stack(b * n + i, j) = mats[b](i, j) - (i == j ? 1 : 0);
    return int(n - stack.rank());
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

}  // namespace

TEST_CASE("fox derivatives of a commutator") {
    // r = a b a^-1 b^-1
    Word r{{0, 1}, {1, 1}, {0, -1}, {1, -1}};
    // dr/da = 1 - a b a^-1, dr/db = a - a b a^-1 b^-1
    CHECK(same_element(fox_derivative(r, 0),
                       {{1, {}}, {-1, {{0, 1}, {1, 1}, {0, -1}}}}));
    CHECK(same_element(fox_derivative(r, 1),
                       {{1, {{0, 1}}}, {-1, {{0, 1}, {1, 1}, {0, -1}, {1, -1}}}}));
    CHECK(fox_derivative(r, 2).terms.empty());

    // d(g^2)/dg = 1 + g, d(g^-1)/dg = -g^-1
    Word sq{{0, 1}, {0, 1}};
    CHECK(same_element(fox_derivative(sq, 0), {{1, {}}, {1, {{0, 1}}}}));
    Word inv{{0, -1}};
    CHECK(same_element(fox_derivative(inv, 0), {{-1, {{0, -1}}}}));
}

TEST_CASE("fundamental identity of the free calculus") {
    // sum_g (dr/dg)(g - 1) = r - 1, evaluated in the adjoint of a
    // representation; for a homomorphism the right side vanishes.
    Presentation joyce = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    FoxTable fox = fox_table(joyce);
    for (const Rep& rep : fixtures::table1_reps(joyce, v4)) {
        REQUIRE(fixtures::is_homomorphism(joyce, rep));
        for (std::size_t ri = 0; ri < joyce.relators.size(); ++ri) {
            Mat sum(3, 3);
            for (std::size_t gi = 0; gi < joyce.generators.size(); ++gi) {
                Mat d = ad_evaluate(rep, fox.d[ri][gi]);
                sum = sum + d * (ad_of(rep, int(gi)) - Mat::identity(3));
            }
            CHECK(sum == Mat(3, 3));
        }
    }
}

TEST_CASE("coboundaries satisfy the cocycle relations") {
    // c(g) = ad(rho(g)) v - v plugged into every relator's Fox row gives 0.
    Presentation joyce = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    FoxTable fox = fox_table(joyce);
    Rep rep = fixtures::table1_reps(joyce, v4)[1];
    for (int axis = 0; axis < 3; ++axis) {
        std::vector<std::vector<Scalar>> c;
        for (std::size_t gi = 0; gi < joyce.generators.size(); ++gi) {
            Mat m = ad_of(rep, int(gi)) - Mat::identity(3);
            c.push_back({m(0, axis), m(1, axis), m(2, axis)});
        }
        for (std::size_t ri = 0; ri < joyce.relators.size(); ++ri) {
            std::array<Scalar, 3> sum{};
            for (std::size_t gi = 0; gi < joyce.generators.size(); ++gi) {
                Mat d = ad_evaluate(rep, fox.d[ri][gi]);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) sum[i] += d(i, j) * c[gi][j];
            }
            CHECK(sum == std::array<Scalar, 3>{});
        }
    }
}

TEST_CASE("invariant dimensions match the stacked-kernel oracle") {
    Presentation joyce = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    std::vector<Rep> reps = fixtures::table1_reps(joyce, v4);
    reps.push_back(fixtures::make_rep(joyce, v4, {}));            // trivial
    reps.push_back(fixtures::make_rep(joyce, v4, {{"t4", "a"}}));  // Z2 image
    for (const Rep& r : reps) {
        std::vector<Mat> ads;
        for (std::size_t gi = 0; gi < joyce.generators.size(); ++gi)
            ads.push_back(ad_of(r, int(gi)));
        CHECK(h0_dimension(r) == stacked_fixed_dim(ads));
    }
    CHECK(h0_dimension(fixtures::make_rep(joyce, v4, {})) == 3);
    CHECK(h0_dimension(fixtures::make_rep(joyce, v4, {{"t4", "a"}})) == 1);
    CHECK(h0_dimension(reps[0]) == 0);
}

TEST_CASE("point group of the affine realization") {
    Presentation joyce = joyce_example3();
    PointGroup pg = point_group(joyce);
    CHECK(pg.elems.size() == 8);  // three commuting sign involutions
    CHECK(pg.elems[0] == Mat::identity(7));
    REQUIRE(pg.gen_index.size() == joyce.generators.size());
    for (std::size_t gi = 0; gi < joyce.generators.size(); ++gi)
        CHECK(pg.elems[pg.gen_index[gi]] == joyce.affine[gi]->linear);
    for (std::size_t a = 0; a < pg.elems.size(); ++a) {
        Scalar tr = 0;
        for (int i = 0; i < 7; ++i) tr += pg.elems[a](i, i);
        CHECK(pg.traces[a] == tr);
        for (std::size_t b = 0; b < pg.elems.size(); ++b)
            CHECK(pg.elems[pg.mul[a][b]] == pg.elems[a] * pg.elems[b]);
    }
}

TEST_CASE("coupled fixed dimension matches the stacked-kernel oracle") {
    Presentation joyce = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    PointGroup pg = point_group(joyce);
    std::vector<Rep> reps = fixtures::table1_reps(joyce, v4);
    reps.push_back(fixtures::make_rep(joyce, v4, {}));
    reps.push_back(fixtures::make_rep(joyce, v4, {{"t4", "a"}, {"a", "b"}}));
    for (const Rep& r : reps) {
        std::vector<Mat> coupled;
        for (std::size_t gi = 0; gi < joyce.generators.size(); ++gi)
            coupled.push_back(kron(joyce.affine[gi]->linear, ad_of(r, int(gi))));
        int oracle = stacked_fixed_dim(coupled);
        CHECK(walpuski_fixed_dim(joyce, r) == oracle);
        CHECK(walpuski_fixed_dim(joyce, r, &pg) == oracle);
    }
}

TEST_CASE("cohomology of the explicit Klein representations vanishes") {
    Presentation joyce = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    FoxTable fox = fox_table(joyce);
    for (const Rep& r : fixtures::table1_reps(joyce, v4)) {
        CHECK(h1_dimension(joyce, r) == 0);
        CHECK(h1_dimension(joyce, r, &fox) == 0);
        Nondegeneracy nd = nondegenerate(joyce, r, &fox);
        CHECK(nd.h0 == 0);
        CHECK(nd.h1 == 0);
        CHECK(nd.walpuski == 0);
        CHECK(nd.nondegenerate);
    }
}

TEST_CASE("trivial representation is rigid but reducible") {
    Presentation joyce = joyce_example3();
    const TargetGroup& v4 = builtin_target("V4");
    Rep trivial = fixtures::make_rep(joyce, v4, {});
    Nondegeneracy nd = nondegenerate(joyce, trivial);
    CHECK(nd.h0 == 3);
    CHECK(nd.h1 == 0);
    CHECK(nd.walpuski == 0);
    CHECK(nd.nondegenerate);
}

TEST_CASE("vanishing criteria agree without affine data") {
    Presentation t3 = t3_projective();
    const TargetGroup& q8 = builtin_target("Q8");
    Rep r = fixtures::make_rep(t3, q8, {{"a", "i"}, {"b", "j"}, {"c", "1"}});
    REQUIRE(fixtures::is_homomorphism(t3, r));
    Nondegeneracy nd = nondegenerate(t3, r);
    CHECK(nd.h0 == 0);
    CHECK(nd.h1 == 0);
    CHECK(nd.walpuski == -1);  // no affine realization to couple with
    CHECK(nd.nondegenerate);
}
