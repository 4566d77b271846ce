#pragma once

#include "g2c/census.hpp"
#include "g2c/presentation.hpp"

#include <stdexcept>
#include <vector>

namespace g2c {

// Element of the rational group ring, words kept freely reduced.
struct GroupRingElement {
    std::vector<std::pair<Scalar, Word>> terms;

    void add(const Scalar& c, Word w);
};

// Free differential calculus: d(uv)/dg = du/dg + u dv/dg, dg/dg = 1,
// d(g^-1)/dg = -g^-1, dh/dg = 0.
GroupRingElement fox_derivative(const Word& r, int gen);

// 3x3 adjoint evaluation of a group-ring element under a representation.
Mat ad_evaluate(const Rep& r, const GroupRingElement& e);

int h0_dimension(const Rep& r);

// Fox derivatives of every relator by every generator, computed once per
// presentation and reused across representations.
struct FoxTable {
    std::vector<std::vector<GroupRingElement>> d;  // [relator][generator]
};
FoxTable fox_table(const Presentation& p);

// dim H^1(Gamma, ad rho) from the Fox cocycle matrix and coboundaries.
int h1_dimension(const Presentation& p, const Rep& r, const FoxTable* table = nullptr);

// Finite group of linear parts of the affine realization, with a
// multiplication table so coupled fixed spaces reduce to table lookups.
struct PointGroup {
    std::vector<Mat> elems;              // elems[0] is the identity
    std::vector<Scalar> traces;          // 7x7 traces, aligned with elems
    std::vector<int> gen_index;          // linear part of each generator
    std::vector<std::vector<int>> mul;   // mul[a][b] = index of elems[a]*elems[b]
};
PointGroup point_group(const Presentation& p);

// dim of vectors in R^7 (x) R^3 fixed by every L(g) (x) ad(rho(g)).
int walpuski_fixed_dim(const Presentation& p, const Rep& r,
                       const PointGroup* pg = nullptr);

struct ConsistencyFailure : std::logic_error {
    using std::logic_error::logic_error;
};

struct Nondegeneracy {
    int h0 = 0;
    int h1 = 0;
    int walpuski = -1;  // -1 when the presentation has no affine realization
    bool nondegenerate = false;
};

// The two vanishing criteria must agree whenever both are available;
// disagreement is an implementation bug, reported as ConsistencyFailure.
Nondegeneracy nondegenerate(const Presentation& p, const Rep& r,
                            const FoxTable* table = nullptr,
                            const PointGroup* pg = nullptr);

}  // namespace g2c
