#pragma once

#include "g2c/linalg.hpp"
#include "g2c/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace g2c {

// Exterior form on R^7 with Poly coefficients. Basis covectors dx_I are
// indexed by a 7-bit mask; only strictly increasing index tuples (that is,
// one entry per mask) and nonzero coefficients are stored.
class KForm {
public:
    explicit KForm(int degree = 0) : degree_(degree) {
        if (degree < 0 || degree > 7) throw std::out_of_range("KForm degree");
    }

    static KForm constant(Scalar c) {
        KForm f(0);
        f.set(0, Poly(std::move(c)));
        return f;
    }
    // dx_i, 1-based.
    static KForm dx(int i);
    // dx_i ^ dx_j ^ ... for ascending 1-based indices; throws on repeats.
    static KForm basis(std::initializer_list<int> idx);

    int degree() const { return degree_; }
    bool is_zero() const { return coeff_.empty(); }
    const std::map<std::uint8_t, Poly>& coefficients() const { return coeff_; }

    const Poly& coefficient(std::uint8_t mask) const;
    void set(std::uint8_t mask, Poly p);

    bool has_constant_coefficients() const;

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(const Poly& p, const KForm& a);
    friend KForm operator*(const Scalar& s, const KForm& a) { return Poly(s) * a; }
    bool operator==(const KForm&) const = default;

    // Evaluate a constant-coefficient k-form on k vectors.
    Scalar eval(const std::vector<Vec7>& vectors) const;

private:
    int degree_;
    std::map<std::uint8_t, Poly> coeff_;
};

// 7x7 symmetric inner product with a choice of orientation.
struct Metric7 {
    Mat m = Mat::identity(7);
    int orientation = +1;  // sign of vol relative to dx_1^...^dx_7

    static Metric7 euclidean() { return Metric7{}; }
};

struct MetricRecovery {
    Mat gram;                        // exact B with iota_i phi ^ iota_j phi ^ phi = 6 B_ij vol_0
    int orientation = +1;
    std::optional<Metric7> metric;   // exact det(B)^{-1/9} B when the root is rational
    std::optional<Scalar> volume;    // exact det(B)^{1/9} likewise
    std::vector<double> metric_approx;  // row-major 7x7, always filled
    double volume_approx = 0.0;
};

struct NotPositiveError : std::runtime_error {
    NotPositiveError() : std::runtime_error("3-form is not positive") {}
};

KForm standard_phi0();
KForm wedge(const KForm& a, const KForm& b);
KForm interior(const Vec7& v, const KForm& a);
// Contraction with a vector field whose components are polynomials
// (needed for the radial field nu of d(iota_nu phi0) = phi0).
KForm interior(const std::array<Poly, 7>& v, const KForm& a);
KForm exterior_derivative(const KForm& a);
KForm hodge_star(const KForm& a, const Metric7& g);

Scalar inner_product(const KForm& a, const KForm& b, const Metric7& g);

Vec7 cross(const Vec7& u, const Vec7& v, const KForm& phi, const Metric7& g);
MetricRecovery metric_from_3form(const KForm& phi);
KForm project_7(const KForm& omega, const KForm& phi, const Metric7& g);
KForm project_14(const KForm& omega, const KForm& phi, const Metric7& g);
std::pair<Scalar, Scalar> energy_identity_check(const KForm& omega, const KForm& phi,
                                                const Metric7& g);
bool instanton_operator_identity(const KForm& f, const KForm& phi, const Metric7& g);
bool is_associative(const Vec7& u, const Vec7& v, const Vec7& w, const KForm& phi,
                    const Metric7& g);

struct FixedSubspace {
    int dimension = 0;
    std::vector<std::vector<Scalar>> basis;
};
FixedSubspace fixed_subspace(const std::vector<Mat>& generators);

bool sphere_inequality_sample(const KForm& alpha, const Scalar& r);

}  // namespace g2c
