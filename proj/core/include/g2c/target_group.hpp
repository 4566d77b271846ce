#pragma once

#include "g2c/linalg.hpp"
#include "g2c/scalar.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2c {

// Unit quaternion (w, x, y, z).
using Quat = std::array<Scalar, 4>;

Quat qmul(const Quat& a, const Quat& b);
Quat qconj(const Quat& q);
// Adjoint rotation of a unit quaternion: v -> q v q^{-1} on the imaginary part.
Mat quat_adjoint(const Quat& q);

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite exact matrix group: either 3x3 rational rotations or unit
// quaternions with rational components. Multiplication is table-driven.
struct TargetGroup {
    enum class Model { rotation, spin };

    std::string name;
    Model model = Model::rotation;
    std::vector<Mat> rot;    // rotation model elements
    std::vector<Quat> quat;  // spin model elements
    std::vector<std::string> element_names;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int identity = 0;
    int minus_one = -1;  // spin model only

    int order() const { return int(mul.size()); }
    bool is_spin() const { return model == Model::spin; }

    // 3x3 adjoint action (the element itself for rotations).
    Mat adjoint(int e) const;
    // Character value: 3x3 trace for rotations, 2*Re(q) for spin.
    Scalar trace(int e) const;
    int element_order(int e) const;
    // Subgroup generated by the given element indices.
    std::vector<int> generated_subgroup(std::vector<int> gens) const;
    // One minimal-index representative per conjugacy class.
    std::vector<int> conjugacy_class_reps() const;
    bool is_central(int e) const;
};

TargetGroup close_group(TargetGroup::Model model, const std::vector<Mat>& rot_gens,
                        const std::vector<Quat>& quat_gens, const std::string& name,
                        int max_order = 120);

// Catalog: V4, Z2, Z4, D4, A4, S4 (rotation models); Q8, 2T (spin models).
const std::vector<TargetGroup>& builtin_targets();
const TargetGroup& builtin_target(const std::string& name);
// The 24 signed permutation matrices of determinant 1; every rational-entry
// rotation image in the catalog is conjugate into this group.
const TargetGroup& s4_rotations();

}  // namespace g2c
