#include "g2c/target_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace g2c {

Quat qmul(const Quat& a, const Quat& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Mat quat_adjoint(const Quat& q) {
    const Scalar &w = q[0], &x = q[1], &y = q[2], &z = q[3];
    Mat m(3, 3);
    m(0, 0) = 1 - 2 * (y * y + z * z);
    m(0, 1) = 2 * (x * y - w * z);
    m(0, 2) = 2 * (x * z + w * y);
    m(1, 0) = 2 * (x * y + w * z);
    m(1, 1) = 1 - 2 * (x * x + z * z);
    m(1, 2) = 2 * (y * z - w * x);
    m(2, 0) = 2 * (x * z - w * y);
    m(2, 1) = 2 * (y * z + w * x);
    m(2, 2) = 1 - 2 * (x * x + y * y);
    return m;
}

Mat TargetGroup::adjoint(int e) const {
    return is_spin() ? quat_adjoint(quat[e]) : rot[e];
}

Scalar TargetGroup::trace(int e) const {
    if (is_spin()) return 2 * quat[e][0];
    return rot[e](0, 0) + rot[e](1, 1) + rot[e](2, 2);
}

int TargetGroup::element_order(int e) const {
    int n = 1, g = e;
    while (g != identity) {
        g = mul[g][e];
        ++n;
    }
    return n;
}

std::vector<int> TargetGroup::generated_subgroup(std::vector<int> gens) const {
    std::vector<bool> seen(order(), false);
    std::vector<int> sub{identity};
    seen[identity] = true;
    std::vector<int> queue{identity};
    while (!queue.empty()) {
        int g = queue.back();
        queue.pop_back();
        for (int h : gens) {
            int p = mul[g][h];
            if (!seen[p]) {
                seen[p] = true;
                sub.push_back(p);
                queue.push_back(p);
            }
        }
    }
    std::sort(sub.begin(), sub.end());
    return sub;
}

std::vector<int> TargetGroup::conjugacy_class_reps() const {
    std::vector<bool> seen(order(), false);
    std::vector<int> reps;
    for (int e = 0; e < order(); ++e) {
        if (seen[e]) continue;
        reps.push_back(e);
        for (int g = 0; g < order(); ++g) seen[mul[mul[g][e]][inv[g]]] = true;
    }
    return reps;
}

bool TargetGroup::is_central(int e) const {
    for (int g = 0; g < order(); ++g)
        if (mul[e][g] != mul[g][e]) return false;
    return true;
}

namespace {

std::string key_of(const Mat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) os << to_string(m(i, j)) << ",";
    return os.str();
}

std::string key_of(const Quat& q) {
    std::ostringstream os;
    for (const Scalar& c : q) os << to_string(c) << ",";
    return os.str();
}

void check_rotation(const Mat& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("rotation must be 3x3");
    if (!(m * m.transposed() == Mat::identity(3)))
        throw std::invalid_argument("matrix is not orthogonal");
    if (m.det() != 1) throw std::invalid_argument("matrix has determinant != 1");
}

void check_unit(const Quat& q) {
    if (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] != 1)
        throw std::invalid_argument("quaternion is not unit norm");
}

}  // namespace

TargetGroup close_group(TargetGroup::Model model, const std::vector<Mat>& rot_gens,
                        const std::vector<Quat>& quat_gens, const std::string& name,
                        int max_order) {
    TargetGroup g;
    g.name = name;
    g.model = model;
    std::map<std::string, int> index;

    auto add_rot = [&](const Mat& m) -> int {
        auto [it, ins] = index.try_emplace(key_of(m), int(g.rot.size()));
        if (ins) g.rot.push_back(m);
        return it->second;
    };
    auto add_quat = [&](const Quat& q) -> int {
        auto [it, ins] = index.try_emplace(key_of(q), int(g.quat.size()));
        if (ins) g.quat.push_back(q);
        return it->second;
    };

    if (model == TargetGroup::Model::rotation) {
        add_rot(Mat::identity(3));
        for (const Mat& m : rot_gens) {
            check_rotation(m);
            add_rot(m);
        }
        for (std::size_t i = 0; i < g.rot.size(); ++i) {
            for (const Mat& m : rot_gens) add_rot(g.rot[i] * m);
            if (int(g.rot.size()) > max_order)
                throw BoundExceeded("group closure exceeded " + std::to_string(max_order));
        }
        const int n = int(g.rot.size());
        g.mul.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto it = index.find(key_of(g.rot[i] * g.rot[j]));
                if (it == index.end()) throw BoundExceeded("closure not multiplicatively closed");
                g.mul[i][j] = it->second;
            }
    } else {
        add_quat(Quat{1, 0, 0, 0});
        for (const Quat& q : quat_gens) {
            check_unit(q);
            add_quat(q);
        }
        for (std::size_t i = 0; i < g.quat.size(); ++i) {
            for (const Quat& q : quat_gens) add_quat(qmul(g.quat[i], q));
            if (int(g.quat.size()) > max_order)
                throw BoundExceeded("group closure exceeded " + std::to_string(max_order));
        }
        const int n = int(g.quat.size());
        g.mul.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto it = index.find(key_of(qmul(g.quat[i], g.quat[j])));
                if (it == index.end()) throw BoundExceeded("closure not multiplicatively closed");
                g.mul[i][j] = it->second;
            }
        auto it = index.find(key_of(Quat{-1, 0, 0, 0}));
        g.minus_one = it == index.end() ? -1 : it->second;
    }

    const int n = g.order();
    g.inv.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.mul[i][j] == g.identity) g.inv[i] = j;
    g.element_names.resize(n);
    for (int i = 0; i < n; ++i)
        g.element_names[i] = (i == g.identity) ? "1" : "e" + std::to_string(i);
    return g;
}

namespace {

Mat rot3(std::initializer_list<int> entries) {
    Mat m(3, 3);
    auto it = entries.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = *it++;
    return m;
}

std::vector<TargetGroup> make_catalog() {
    using M = TargetGroup::Model;
    std::vector<TargetGroup> cat;

    const Mat a = rot3({1, 0, 0, 0, -1, 0, 0, 0, -1});
    const Mat b = rot3({-1, 0, 0, 0, 1, 0, 0, 0, -1});
    const Mat rz90 = rot3({0, -1, 0, 1, 0, 0, 0, 0, 1});
    const Mat cyc = rot3({0, 0, 1, 1, 0, 0, 0, 1, 0});

    {
        TargetGroup v4 = close_group(M::rotation, {a, b}, {}, "V4");
        // a = diag(1,-1,-1), b = diag(-1,1,-1), c = diag(-1,-1,1)
        for (int i = 0; i < 4; ++i) {
            if (v4.rot[i] == a) v4.element_names[i] = "a";
            if (v4.rot[i] == b) v4.element_names[i] = "b";
            if (v4.rot[i] == a * b) v4.element_names[i] = "c";
        }
        cat.push_back(std::move(v4));
    }
    cat.push_back(close_group(M::rotation, {a}, {}, "Z2"));
    cat.push_back(close_group(M::rotation, {rz90}, {}, "Z4"));
    cat.push_back(close_group(M::rotation, {rz90, a}, {}, "D4"));
    cat.push_back(close_group(M::rotation, {a, cyc}, {}, "A4"));
    cat.push_back(close_group(M::rotation, {rz90, cyc}, {}, "S4"));

    {
        TargetGroup q8 = close_group(M::spin, {},
                                     {{0, 1, 0, 0}, {0, 0, 1, 0}}, "Q8");
        for (int i = 0; i < 8; ++i) {
            const Quat& q = q8.quat[i];
            std::string s;
            if (q[0] != 0) s = (q[0] > 0) ? "1" : "-1";
            if (q[1] != 0) s = (q[1] > 0) ? "i" : "-i";
            if (q[2] != 0) s = (q[2] > 0) ? "j" : "-j";
            if (q[3] != 0) s = (q[3] > 0) ? "k" : "-k";
            q8.element_names[i] = s;
        }
        cat.push_back(std::move(q8));
    }
    {
        const Scalar h(1, 2);
        TargetGroup tt = close_group(M::spin, {},
                                     {{0, 1, 0, 0}, {0, 0, 1, 0}, {h, h, h, h}}, "2T");
        cat.push_back(std::move(tt));
    }
    return cat;
}

}  // namespace

const std::vector<TargetGroup>& builtin_targets() {
    static const std::vector<TargetGroup> cat = make_catalog();
    return cat;
}

const TargetGroup& builtin_target(const std::string& name) {
    for (const TargetGroup& g : builtin_targets())
        if (g.name == name) return g;
    throw std::invalid_argument("unknown target group '" + name + "'");
}

const TargetGroup& s4_rotations() { return builtin_target("S4"); }

}  // namespace g2c
