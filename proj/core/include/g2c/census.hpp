#pragma once

#include "g2c/presentation.hpp"
#include "g2c/target_group.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2c {

struct EnumConfig {
    bool prune = false;
    int jobs = 1;
};

struct Rep {
    const TargetGroup* group = nullptr;
    std::vector<int> vals;  // element index per generator

    int evaluate(const Word& w) const;
    bool operator==(const Rep&) const = default;
};

struct UnsupportedImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All maps {generators} -> G satisfying every (signed) relator, in a
// deterministic order. Signed relators require a spin-model target.
std::vector<Rep> enumerate_homs(const Presentation& p, const TargetGroup& g,
                                const EnumConfig& cfg = {});

// Streaming variant: invokes sink on each satisfying assignment instead of
// materializing the list (large targets produce millions of maps).
void enumerate_homs(const Presentation& p, const TargetGroup& g, const EnumConfig& cfg,
                    const std::function<void(const std::vector<int>&)>& sink);

bool is_irreducible(const Rep& r);

// All generators, then all products of two, then of three (depth-limited).
std::vector<Word> trace_schedule(int generator_count, int depth = 3);
std::vector<Scalar> trace_signature(const Rep& r, const std::vector<Word>& schedule);

struct RepClass {
    Rep representative;  // lexicographically least member
    std::vector<Scalar> traces;
    int image_order = 0;
    bool irreducible = false;
    int member_count = 0;
};

std::vector<RepClass> reduce_to_classes(const std::vector<Rep>& reps,
                                        const TargetGroup& g, int depth = 3);

// Enumerate and reduce in one streaming pass; memory stays proportional to
// the number of classes rather than the number of homomorphisms.
std::vector<RepClass> census_classes(const Presentation& p, const TargetGroup& g,
                                     const EnumConfig& cfg = {}, int depth = 3);

// Conjugator search over the 24 rational rotations; spin images are compared
// through the rotation action on quaternion imaginary parts.
bool conjugate_reps(const Rep& r1, const Rep& r2);

// Exact SO(3)- (resp. SU(2)-) conjugacy test via character theory: the reps
// are conjugate iff traces agree on the closure of the paired images, even
// when the conjugator has irrational entries and so lies outside the catalog.
bool conjugate_in_so3(const Rep& r1, const Rep& r2);

int centralizer_order(const Rep& r);

struct BundleSignature {
    std::vector<bool> linking_bits;
    std::vector<bool> translation_bits;
    // Equality of the translation images, pair by pair in index order:
    // together with the nontriviality bits this pins down the translation
    // tuple up to a relabeling of the target, which is what distinguishes
    // the pulled-back bundles on the covering torus.
    std::vector<bool> pair_bits;
    auto operator<=>(const BundleSignature&) const = default;
    std::string str() const;
};

BundleSignature bundle_signature(const Rep& r, const Presentation& p);

struct InvariantTotal {
    BundleSignature signature;
    Int total = 0;
    int class_count = 0;
};

std::vector<InvariantTotal> invariant(const Presentation& p, const TargetGroup& g,
                                      const std::vector<RepClass>& classes);

}  // namespace g2c
