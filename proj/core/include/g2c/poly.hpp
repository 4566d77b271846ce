#pragma once

#include "g2c/scalar.hpp"

#include <array>
#include <compare>
#include <map>
#include <stdexcept>

namespace g2c {

// Exponent vector for x1..x7. Total degree is capped at 4: every identity in
// scope needs degree <= 1, the cap just stops blowup in fuzz tests.
struct Monomial {
    std::array<std::uint8_t, 7> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    auto operator<=>(const Monomial&) const = default;
};

inline constexpr int kMaxPolyDegree = 4;

// Multivariate polynomial in x1..x7 over Scalar. Terms sorted by the map's
// monomial order; zero coefficients never stored.
class Poly {
public:
    Poly() = default;
    /*implicit*/ Poly(Scalar c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    /*implicit*/ Poly(int c) : Poly(Scalar(c)) {}

    // The coordinate function x_i, i in 1..7.
    static Poly coordinate(int i) {
        if (i < 1 || i > 7) throw std::out_of_range("Poly::coordinate");
        Poly p;
        Monomial m;
        m.e[i - 1] = 1;
        p.terms_[m] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
    }
    Scalar constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                int deg = 0;
                for (int i = 0; i < 7; ++i) {
                    m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
                    deg += m.e[i];
                }
                if (deg > kMaxPolyDegree) continue;  // silent truncation
                r.add_term(m, ca * cb);
            }
        return r;
    }

    bool operator==(const Poly&) const = default;

    // Partial derivative with respect to x_i, i in 1..7.
    Poly derivative(int i) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (m.e[i - 1] == 0) continue;
            Monomial d = m;
            d.e[i - 1] -= 1;
            r.add_term(d, c * int(m.e[i - 1]));
        }
        return r;
    }

    Scalar eval(const std::array<Scalar, 7>& x) const {
        Scalar r = 0;
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (int i = 0; i < 7; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= x[i];
            r += t;
        }
        return r;
    }

private:
    void add_term(const Monomial& m, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Scalar> terms_;
};

}  // namespace g2c
