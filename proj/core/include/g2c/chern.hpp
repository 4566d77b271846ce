#pragma once

#include "g2c/scalar.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace g2c {

// Coefficients of the graded algebra live in Q[r], r a formal rank symbol.
// A concrete rank is just the degree-0 specialization.
class RankPoly {
public:
    RankPoly() = default;
    /*implicit*/ RankPoly(Scalar c) {
        if (c != 0) c_[0] = std::move(c);
    }
    /*implicit*/ RankPoly(int c) : RankPoly(Scalar(c)) {}

    static RankPoly symbol() {
        RankPoly p;
        p.c_[1] = 1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<unsigned, Scalar>& coefficients() const { return c_; }
    Scalar coefficient(unsigned deg) const {
        auto it = c_.find(deg);
        return it == c_.end() ? Scalar(0) : it->second;
    }

    Scalar evaluate(const Scalar& r) const {
        Scalar v = 0;
        for (const auto& [d, c] : c_) {
            Scalar t = c;
            for (unsigned k = 0; k < d; ++k) t *= r;
            v += t;
        }
        return v;
    }

    RankPoly& operator+=(const RankPoly& o) {
        for (const auto& [d, c] : o.c_) add(d, c);
        return *this;
    }
    friend RankPoly operator+(RankPoly a, const RankPoly& b) { return a += b; }
    friend RankPoly operator-(const RankPoly& a) {
        RankPoly r;
        for (const auto& [d, c] : a.c_) r.c_[d] = -c;
        return r;
    }
    friend RankPoly operator-(RankPoly a, const RankPoly& b) { return a += -b; }
    friend RankPoly operator*(const RankPoly& a, const RankPoly& b) {
        RankPoly r;
        for (const auto& [da, ca] : a.c_)
            for (const auto& [db, cb] : b.c_) r.add(da + db, ca * cb);
        return r;
    }
    bool operator==(const RankPoly&) const = default;

    std::string str() const;

private:
    void add(unsigned d, const Scalar& c) {
        if (c == 0) return;
        auto [it, ins] = c_.try_emplace(d, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
    std::map<unsigned, Scalar> c_;
};

// Either a concrete positive integer rank or the formal symbol r.
struct RankParam {
    static RankParam concrete(int r) {
        if (r < 1) throw std::invalid_argument("rank must be >= 1");
        return RankParam{RankPoly(Scalar(r))};
    }
    static RankParam formal() { return RankParam{RankPoly::symbol()}; }
    RankPoly value;
};

// Monomial in c1..c4 (weights 1..4) and p1 (weight 2); weight = half the
// real cohomological degree, truncated at 4.
struct GradedMonomial {
    std::array<std::uint8_t, 4> c{};  // exponents of c1..c4
    std::uint8_t p1 = 0;

    int weight() const { return c[0] + 2 * c[1] + 3 * c[2] + 4 * c[3] + 2 * p1; }
    auto operator<=>(const GradedMonomial&) const = default;
};

inline constexpr int kMaxWeight = 4;

class GradedPoly {
public:
    GradedPoly() = default;
    /*implicit*/ GradedPoly(RankPoly c) {
        if (!c.is_zero()) terms_[GradedMonomial{}] = std::move(c);
    }
    /*implicit*/ GradedPoly(int c) : GradedPoly(RankPoly(c)) {}

    static GradedPoly chern(int i);  // c_i, i in 1..4
    static GradedPoly pontryagin();  // p1

    bool is_zero() const { return terms_.empty(); }
    const std::map<GradedMonomial, RankPoly>& terms() const { return terms_; }
    RankPoly coefficient(const GradedMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RankPoly() : it->second;
    }

    GradedPoly weight_part(int w) const;

    GradedPoly& operator+=(const GradedPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(const GradedPoly& a) {
        GradedPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a += -b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    bool operator==(const GradedPoly&) const = default;

    std::string str() const;

private:
    void add(const GradedMonomial& m, const RankPoly& c) {
        if (c.is_zero()) return;
        auto [it, ins] = terms_.try_emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    std::map<GradedMonomial, RankPoly> terms_;
};

struct PowerSums {
    GradedPoly s1, s2, s3, s4;
};

PowerSums power_sums(const RankParam& r);
GradedPoly chern_character(const RankParam& r);
GradedPoly ch_adjoint(const RankParam& r);
// Independent check: expand sum_{i,j} exp(x_i - x_j) - 1 in formal Chern
// roots and rewrite through elementary symmetric polynomials.
GradedPoly splitting_oracle(int rank);
// Zero out every term involving c_i with i > rank: a rank-r bundle carries no
// higher Chern classes. Concrete-rank computations apply this automatically.
GradedPoly truncate_to_rank(const GradedPoly& p, int rank);
GradedPoly p1_adjoint(const RankParam& r);
GradedPoly index_integrand(const GradedPoly& ch);
GradedPoly parity_combination(const RankParam& r);

// r^2 - 1 + (r-1)c1^2 - 2rc2
//   + (1/12)((r-1)c1^4 - 4rc2c1^2 + (4r-12)c3c1 + (2r+12)c2^2 - 4rc4).
GradedPoly ch_adjoint_closed_form(const RankParam& r);
// parity_combination minus (-1/2 c2p1 - 3 c3c1) must have coefficients that
// are even integers (in each power of the rank symbol).
bool parity_coefficients_even(const RankParam& r);

}  // namespace g2c
