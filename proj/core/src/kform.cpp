#include "g2c/kform.hpp"

#include <bit>
#include <cmath>

namespace g2c {

namespace {

int popcount(std::uint8_t m) { return std::popcount(m); }

// Sign of reordering dx_I ^ dx_J (I, J disjoint, each ascending) into
// ascending order: parity of the number of pairs i in I, j in J with i > j.
int merge_sign(std::uint8_t i_mask, std::uint8_t j_mask) {
    int inversions = 0;
    for (int i = 0; i < 7; ++i) {
        if (!(i_mask & (1 << i))) continue;
        for (int j = 0; j < i; ++j)
            if (j_mask & (1 << j)) ++inversions;
    }
    return (inversions % 2 == 0) ? +1 : -1;
}

// Position of index i within mask (number of set bits below it).
int index_position(std::uint8_t mask, int i) {
    int pos = 0;
    for (int j = 0; j < i; ++j)
        if (mask & (1 << j)) ++pos;
    return pos;
}

const Poly kZeroPoly{};

// Exact square root of a nonnegative rational, if it exists.
std::optional<Scalar> exact_sqrt(const Scalar& s) {
    if (s < 0) return std::nullopt;
    Int n = num(s), d = den(s);
    Int rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Scalar(rn, rd);
}

Int integer_nth_root(const Int& n, unsigned k) {
    if (n <= 1) return n;
    Int lo = 1, hi = n;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<Scalar> exact_nth_root(const Scalar& s, unsigned k) {
    if (s < 0) return std::nullopt;
    Int n = num(s), d = den(s);
    Int rn = integer_nth_root(n, k), rd = integer_nth_root(d, k);
    if (boost::multiprecision::pow(rn, k) != n || boost::multiprecision::pow(rd, k) != d)
        return std::nullopt;
    return Scalar(rn, rd);
}

}  // namespace

KForm KForm::dx(int i) {
    if (i < 1 || i > 7) throw std::out_of_range("KForm::dx");
    KForm f(1);
    f.set(std::uint8_t(1 << (i - 1)), Poly(1));
    return f;
}

KForm KForm::basis(std::initializer_list<int> idx) {
    std::uint8_t mask = 0;
    for (int i : idx) {
        if (i < 1 || i > 7) throw std::out_of_range("KForm::basis");
        std::uint8_t bit = std::uint8_t(1 << (i - 1));
        if (mask & bit) throw std::invalid_argument("KForm::basis: repeated index");
        mask |= bit;
    }
    KForm f(int(idx.size()));
    f.set(mask, Poly(1));
    return f;
}

const Poly& KForm::coefficient(std::uint8_t mask) const {
    auto it = coeff_.find(mask);
    return it == coeff_.end() ? kZeroPoly : it->second;
}

void KForm::set(std::uint8_t mask, Poly p) {
    if (popcount(mask) != degree_) throw std::invalid_argument("KForm::set: wrong degree");
    if (p.is_zero())
        coeff_.erase(mask);
    else
        coeff_[mask] = std::move(p);
}

bool KForm::has_constant_coefficients() const {
    for (const auto& [m, p] : coeff_)
        if (!p.is_constant()) return false;
    return true;
}

KForm& KForm::operator+=(const KForm& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("KForm: degree mismatch");
    for (const auto& [m, p] : o.coeff_) set(m, coefficient(m) + p);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("KForm: degree mismatch");
    for (const auto& [m, p] : o.coeff_) set(m, coefficient(m) - p);
    return *this;
}

KForm operator*(const Poly& p, const KForm& a) {
    KForm r(a.degree_);
    for (const auto& [m, q] : a.coeff_) r.set(m, p * q);
    return r;
}

Scalar KForm::eval(const std::vector<Vec7>& vectors) const {
    if (int(vectors.size()) != degree_) throw std::invalid_argument("KForm::eval: arity");
    if (!has_constant_coefficients())
        throw std::invalid_argument("KForm::eval: non-constant coefficients");
    Scalar r = 0;
    for (const auto& [mask, p] : coeff_) {
        std::vector<int> idx;
        for (int i = 0; i < 7; ++i)
            if (mask & (1 << i)) idx.push_back(i);
        Mat m(degree_, degree_);
        for (int a = 0; a < degree_; ++a)
            for (int b = 0; b < degree_; ++b) m(a, b) = vectors[a][idx[b]];
        r += p.constant_term() * m.det();
    }
    return r;
}

KForm standard_phi0() {
    KForm phi(3);
    phi += KForm::basis({1, 2, 3});
    phi += KForm::basis({1, 4, 5});
    phi += KForm::basis({1, 6, 7});
    phi += KForm::basis({2, 4, 6});
    phi -= KForm::basis({2, 5, 7});
    phi -= KForm::basis({3, 4, 7});
    phi -= KForm::basis({3, 5, 6});
    return phi;
}

KForm wedge(const KForm& a, const KForm& b) {
    int deg = a.degree() + b.degree();
    if (deg > 7) return KForm(7);  // identically zero above top degree
    KForm r(deg);
    for (const auto& [ma, pa] : a.coefficients())
        for (const auto& [mb, pb] : b.coefficients()) {
            if (ma & mb) continue;
            int s = merge_sign(ma, mb);
            Poly c = pa * pb;
            if (s < 0) c = -c;
            r.set(std::uint8_t(ma | mb), r.coefficient(std::uint8_t(ma | mb)) + c);
        }
    return r;
}

KForm interior(const std::array<Poly, 7>& v, const KForm& a) {
    if (a.degree() < 1) throw std::invalid_argument("interior: degree-0 form");
    KForm r(a.degree() - 1);
    for (const auto& [mask, p] : a.coefficients())
        for (int i = 0; i < 7; ++i) {
            if (!(mask & (1 << i)) || v[i].is_zero()) continue;
            std::uint8_t rest = std::uint8_t(mask & ~(1 << i));
            Poly c = v[i] * p;
            if (index_position(mask, i) % 2 != 0) c = -c;
            r.set(rest, r.coefficient(rest) + c);
        }
    return r;
}

KForm interior(const Vec7& v, const KForm& a) {
    std::array<Poly, 7> pv;
    for (int i = 0; i < 7; ++i) pv[i] = Poly(v[i]);
    return interior(pv, a);
}

KForm exterior_derivative(const KForm& a) {
    if (a.degree() == 7) return KForm(7);  // wedge below handles it, but keep the degree
    KForm r(std::min(a.degree() + 1, 7));
    for (const auto& [mask, p] : a.coefficients())
        for (int i = 1; i <= 7; ++i) {
            Poly dp = p.derivative(i);
            if (dp.is_zero()) continue;
            KForm term(a.degree());
            term.set(mask, std::move(dp));
            r += wedge(KForm::dx(i), term);
        }
    return r;
}

Scalar inner_product(const KForm& a, const KForm& b, const Metric7& g) {
    if (a.degree() != b.degree()) throw std::invalid_argument("inner_product: degree mismatch");
    if (!a.has_constant_coefficients() || !b.has_constant_coefficients())
        throw std::invalid_argument("inner_product: non-constant coefficients");
    Mat ginv = g.m.inverse();
    int k = a.degree();
    Scalar r = 0;
    for (const auto& [mi, pi] : a.coefficients()) {
        std::vector<int> I;
        for (int x = 0; x < 7; ++x)
            if (mi & (1 << x)) I.push_back(x);
        for (const auto& [mj, pj] : b.coefficients()) {
            std::vector<int> J;
            for (int x = 0; x < 7; ++x)
                if (mj & (1 << x)) J.push_back(x);
            if (k == 0) {
                r += pi.constant_term() * pj.constant_term();
                continue;
            }
            Mat sub(k, k);
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) sub(p, q) = ginv(I[p], J[q]);
            r += pi.constant_term() * pj.constant_term() * sub.det();
        }
    }
    return r;
}

KForm hodge_star(const KForm& a, const Metric7& g) {
    Scalar dg = g.m.det();
    if (dg <= 0) throw std::invalid_argument("hodge_star: degenerate metric");
    auto sq = exact_sqrt(dg);
    if (!sq) throw std::invalid_argument("hodge_star: sqrt(det g) is irrational");
    Scalar scale = *sq * g.orientation;
    Mat ginv = g.m.inverse();
    int k = a.degree();
    KForm r(7 - k);
    // beta ^ star(a) = <beta, a> vol_g for every basis beta = dx_I.
    for (std::uint8_t mi = 0; mi < 128; ++mi) {
        if (popcount(mi) != k) continue;
        std::vector<int> I;
        for (int x = 0; x < 7; ++x)
            if (mi & (1 << x)) I.push_back(x);
        Poly comp;
        for (const auto& [mj, pj] : a.coefficients()) {
            std::vector<int> J;
            for (int x = 0; x < 7; ++x)
                if (mj & (1 << x)) J.push_back(x);
            Scalar gram = 1;
            if (k > 0) {
                Mat sub(k, k);
                for (int p = 0; p < k; ++p)
                    for (int q = 0; q < k; ++q) sub(p, q) = ginv(I[p], J[q]);
                gram = sub.det();
            }
            if (gram == 0) continue;
            comp += Poly(gram) * pj;
        }
        if (comp.is_zero()) continue;
        std::uint8_t comp_mask = std::uint8_t(0x7F & ~mi);
        Scalar sign_scale = scale * merge_sign(mi, comp_mask);
        r.set(comp_mask, r.coefficient(comp_mask) + Poly(sign_scale) * comp);
    }
    return r;
}

Vec7 cross(const Vec7& u, const Vec7& v, const KForm& phi, const Metric7& g) {
    if (phi.degree() != 3) throw std::invalid_argument("cross: phi must be a 3-form");
    Mat rhs(7, 1);
    for (int i = 0; i < 7; ++i) {
        Vec7 e{};
        e[i] = 1;
        rhs(i, 0) = phi.eval({u, v, e});
    }
    Mat w = g.m.inverse() * rhs;
    Vec7 out;
    for (int i = 0; i < 7; ++i) out[i] = w(i, 0);
    return out;
}

MetricRecovery metric_from_3form(const KForm& phi) {
    if (phi.degree() != 3 || !phi.has_constant_coefficients())
        throw std::invalid_argument("metric_from_3form: need constant-coefficient 3-form");
    Mat b(7, 7);
    std::vector<KForm> contractions;
    for (int i = 0; i < 7; ++i) {
        Vec7 e{};
        e[i] = 1;
        contractions.push_back(interior(e, phi));
    }
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            KForm top = wedge(wedge(contractions[i], contractions[j]), phi);
            b(i, j) = top.coefficient(0x7F).constant_term() / 6;
        }
    int orientation = +1;
    if (!positive_definite(b)) {
        Mat nb(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) nb(i, j) = -b(i, j);
        if (!positive_definite(nb)) throw NotPositiveError();
        b = nb;
        orientation = -1;
    }
    MetricRecovery out{.gram = b, .orientation = orientation};
    Scalar detb = b.det();
    auto root = exact_nth_root(detb, 9);  // det(B)^{1/9}
    if (root) {
        Metric7 m;
        m.orientation = orientation;
        Scalar inv = Scalar(1) / *root;
        m.m = Mat(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) m.m(i, j) = inv * b(i, j);
        out.metric = m;
        out.volume = *root;
    }
    double scale = std::pow(detb.convert_to<double>(), -1.0 / 9.0);
    out.metric_approx.resize(49);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            out.metric_approx[7 * i + j] = scale * b(i, j).convert_to<double>();
    out.volume_approx = std::pow(detb.convert_to<double>(), 1.0 / 9.0);
    return out;
}

KForm project_7(const KForm& omega, const KForm& phi, const Metric7& g) {
    if (omega.degree() != 2) throw std::invalid_argument("project_7: need a 2-form");
    KForm t = hodge_star(wedge(phi, omega), g);
    return Scalar(1, 3) * (omega + t);
}

KForm project_14(const KForm& omega, const KForm& phi, const Metric7& g) {
    if (omega.degree() != 2) throw std::invalid_argument("project_14: need a 2-form");
    KForm t = hodge_star(wedge(phi, omega), g);
    return Scalar(1, 3) * (Scalar(2) * omega - t);
}

std::pair<Scalar, Scalar> energy_identity_check(const KForm& omega, const KForm& phi,
                                                const Metric7& g) {
    if (omega.degree() != 2 || !omega.has_constant_coefficients())
        throw std::invalid_argument("energy_identity_check: need constant 2-form");
    KForm top = wedge(wedge(omega, omega), phi);
    Scalar lhs = top.coefficient(0x7F).constant_term() * g.orientation;
    KForm p7 = project_7(omega, phi, g);
    KForm p14 = project_14(omega, phi, g);
    Scalar rhs = 2 * inner_product(p7, p7, g) - inner_product(p14, p14, g);
    return {lhs, rhs};
}

bool instanton_operator_identity(const KForm& f, const KForm& phi, const Metric7& g) {
    if (f.degree() != 2) throw std::invalid_argument("instanton_operator_identity: need 2-form");
    KForm psi = hodge_star(phi, g);
    KForm lhs = hodge_star(wedge(psi, hodge_star(wedge(psi, f), g)), g);
    KForm rhs = f + hodge_star(wedge(f, phi), g);
    return lhs == rhs;
}

bool is_associative(const Vec7& u, const Vec7& v, const Vec7& w, const KForm& phi,
                    const Metric7& g) {
    Mat span(3, 7);
    const Vec7* vs[3] = {&u, &v, &w};
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 7; ++i) span(a, i) = (*vs[a])[i];
    if (span.rank() != 3) throw std::invalid_argument("is_associative: dependent triple");
    Mat gram(3, 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Scalar s = 0;
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) s += (*vs[a])[i] * g.m(i, j) * (*vs[b])[j];
            gram(a, b) = s;
        }
    Scalar val = phi.eval({u, v, w});
    return val * val == gram.det();
}

FixedSubspace fixed_subspace(const std::vector<Mat>& generators) {
    for (const auto& m : generators)
        if (!(m.transposed() * m == Mat::identity(7)))
            throw std::invalid_argument("fixed_subspace: generator not orthogonal");
    Mat stacked(7 * generators.size(), 7);
    for (std::size_t k = 0; k < generators.size(); ++k)
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                stacked(7 * k + i, j) = generators[k](i, j) - (i == j ? 1 : 0);
    FixedSubspace out;
    if (generators.empty()) {
        out.dimension = 7;
        for (int i = 0; i < 7; ++i) {
            std::vector<Scalar> e(7);
            e[i] = 1;
            out.basis.push_back(e);
        }
        return out;
    }
    out.basis = stacked.kernel_basis();
    out.dimension = int(out.basis.size());
    return out;
}

bool sphere_inequality_sample(const KForm& alpha, const Scalar& r) {
    if (alpha.degree() != 2 || !alpha.has_constant_coefficients())
        throw std::invalid_argument("sphere_inequality_sample: need constant 2-form");
    if (r <= 0) throw std::invalid_argument("sphere_inequality_sample: need r > 0");
    // omega_0 = iota_nu phi_0 restricted at (r, 0, ..., 0).
    KForm omega0(2);
    Scalar c = r / 3;
    omega0 += c * KForm::basis({2, 3});
    omega0 += c * KForm::basis({4, 5});
    omega0 += c * KForm::basis({6, 7});
    KForm six = wedge(wedge(alpha, alpha), omega0);
    // Restriction to the boundary: the dx_234567 component.
    Scalar lhs = 3 * six.coefficient(0x7E).constant_term();
    Scalar rhs = inner_product(alpha, alpha, Metric7::euclidean()) * r;
    return lhs <= rhs;
}

}  // namespace g2c
