#include "g2c/chern.hpp"

#include <algorithm>
#include <sstream>

namespace g2c {

std::string RankPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [d, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        Scalar a = (!first && c < 0) ? Scalar(-c) : c;
        first = false;
        if (d == 0 || a != 1) os << to_string(a);
        if (d >= 1) {
            if (a != 1) os << "*";
            os << "r";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

GradedPoly GradedPoly::chern(int i) {
    if (i < 1 || i > 4) throw std::out_of_range("chern class index");
    GradedMonomial m;
    m.c[i - 1] = 1;
    GradedPoly p;
    p.terms_[m] = RankPoly(1);
    return p;
}

GradedPoly GradedPoly::pontryagin() {
    GradedMonomial m;
    m.p1 = 1;
    GradedPoly p;
    p.terms_[m] = RankPoly(1);
    return p;
}

GradedPoly GradedPoly::weight_part(int w) const {
    GradedPoly r;
    for (const auto& [m, c] : terms_)
        if (m.weight() == w) r.terms_[m] = c;
    return r;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            GradedMonomial m;
            for (int i = 0; i < 4; ++i) m.c[i] = std::uint8_t(ma.c[i] + mb.c[i]);
            m.p1 = std::uint8_t(ma.p1 + mb.p1);
            if (m.weight() > kMaxWeight) continue;  // truncation
            r.add(m, ca * cb);
        }
    return r;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < m.c[i]; ++k) os << "*c" << (i + 1);
        for (int k = 0; k < m.p1; ++k) os << "*p1";
    }
    return os.str();
}

namespace {

// 4 for the formal symbol (every class survives); the literal rank otherwise.
int effective_rank(const RankParam& r) {
    const auto& c = r.value.coefficients();
    if (c.size() == 1 && c.begin()->first == 0) {
        const Scalar& v = c.begin()->second;
        if (den(v) == 1 && num(v) >= 1 && num(v) < 4) return int(num(v));
    }
    return 4;
}

}  // namespace

GradedPoly truncate_to_rank(const GradedPoly& p, int rank) {
    GradedPoly out;
    for (const auto& [m, c] : p.terms()) {
        bool high = false;
        for (int i = rank; i < 4; ++i)
            if (m.c[i]) high = true;
        if (!high) out += GradedPoly(c) * [&] {
            GradedPoly mono(1);
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < m.c[i]; ++k) mono = mono * GradedPoly::chern(i + 1);
            for (int k = 0; k < m.p1; ++k) mono = mono * GradedPoly::pontryagin();
            return mono;
        }();
    }
    return out;
}

PowerSums power_sums(const RankParam& r) {
    // Newton's identities on the elementary symmetric generators c1..c4; a
    // concrete rank below 4 kills the higher elementary symmetric functions.
    GradedPoly c1 = GradedPoly::chern(1), c2 = GradedPoly::chern(2);
    GradedPoly c3 = GradedPoly::chern(3), c4 = GradedPoly::chern(4);
    PowerSums s;
    s.s1 = c1;
    s.s2 = c1 * s.s1 - GradedPoly(2) * c2;
    s.s3 = c1 * s.s2 - c2 * s.s1 + GradedPoly(3) * c3;
    s.s4 = c1 * s.s3 - c2 * s.s2 + c3 * s.s1 - GradedPoly(4) * c4;
    const int rank = effective_rank(r);
    if (rank < 4) {
        s.s1 = truncate_to_rank(s.s1, rank);
        s.s2 = truncate_to_rank(s.s2, rank);
        s.s3 = truncate_to_rank(s.s3, rank);
        s.s4 = truncate_to_rank(s.s4, rank);
    }
    return s;
}

namespace {

GradedPoly scaled(const GradedPoly& p, const Scalar& s) {
    return GradedPoly(RankPoly(s)) * p;
}

}  // namespace

GradedPoly chern_character(const RankParam& r) {
    PowerSums s = power_sums(r);
    GradedPoly ch = GradedPoly(r.value);
    ch += s.s1;
    ch += scaled(s.s2, Scalar(1, 2));
    ch += scaled(s.s3, Scalar(1, 6));
    ch += scaled(s.s4, Scalar(1, 24));
    return ch;
}

GradedPoly ch_adjoint(const RankParam& r) {
    PowerSums s = power_sums(r);
    // ch(E*): odd power sums flip sign.
    GradedPoly ch = GradedPoly(r.value) + s.s1 + scaled(s.s2, Scalar(1, 2)) +
                    scaled(s.s3, Scalar(1, 6)) + scaled(s.s4, Scalar(1, 24));
    GradedPoly chd = GradedPoly(r.value) - s.s1 + scaled(s.s2, Scalar(1, 2)) -
                     scaled(s.s3, Scalar(1, 6)) + scaled(s.s4, Scalar(1, 24));
    return ch * chd - GradedPoly(1);
}

GradedPoly p1_adjoint(const RankParam& r) {
    GradedPoly c1 = GradedPoly::chern(1), c2 = GradedPoly::chern(2);
    GradedPoly rm1 = GradedPoly(r.value) - GradedPoly(1);
    GradedPoly two_r = GradedPoly(RankPoly(Scalar(2))) * GradedPoly(r.value);
    return rm1 * c1 * c1 - two_r * c2;
}

namespace {

bool in_vanishing_ideal(const GradedMonomial& m) {
    // <c1^4, c1^2*p1, c1^3 * anything>
    if (m.c[0] >= 4) return true;
    if (m.c[0] >= 2 && m.p1 >= 1) return true;
    if (m.c[0] >= 3 && (m.c[1] || m.c[2] || m.c[3] || m.p1)) return true;
    return false;
}

}  // namespace

GradedPoly index_integrand(const GradedPoly& ch) {
    GradedPoly ahat = GradedPoly(1) - scaled(GradedPoly::pontryagin(), Scalar(1, 24));
    GradedPoly w4 = (ch * ahat).weight_part(4);
    GradedPoly r;
    for (const auto& [m, c] : w4.terms())
        if (!in_vanishing_ideal(m)) r += GradedPoly(c) * [&] {
            GradedPoly mono(1);
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < m.c[i]; ++k) mono = mono * GradedPoly::chern(i + 1);
            for (int k = 0; k < m.p1; ++k) mono = mono * GradedPoly::pontryagin();
            return mono;
        }();
    return r;
}

GradedPoly parity_combination(const RankParam& r) {
    GradedPoly adj = index_integrand(ch_adjoint(r));
    GradedPoly fund = index_integrand(chern_character(r));
    GradedPoly factor = GradedPoly(12) + GradedPoly(2) * GradedPoly(r.value);
    return adj - factor * fund;
}

GradedPoly ch_adjoint_closed_form(const RankParam& rp) {
    const RankPoly& r = rp.value;
    GradedPoly c1 = GradedPoly::chern(1), c2 = GradedPoly::chern(2);
    GradedPoly c3 = GradedPoly::chern(3), c4 = GradedPoly::chern(4);
    GradedPoly rm1(r - RankPoly(1));
    GradedPoly out = GradedPoly(r * r - RankPoly(1)) + rm1 * c1 * c1 -
                     GradedPoly(r * RankPoly(2)) * c2;
    GradedPoly w4 = rm1 * c1 * c1 * c1 * c1 - GradedPoly(r * RankPoly(4)) * c2 * c1 * c1 +
                    GradedPoly(r * RankPoly(4) - RankPoly(12)) * c3 * c1 +
                    GradedPoly(r * RankPoly(2) + RankPoly(12)) * c2 * c2 -
                    GradedPoly(r * RankPoly(4)) * c4;
    out += GradedPoly(RankPoly(Scalar(1, 12))) * w4;
    return out;
}

bool parity_coefficients_even(const RankParam& rp) {
    GradedPoly rest = parity_combination(rp);
    GradedMonomial c2p1;
    c2p1.c[1] = 1;
    c2p1.p1 = 1;
    GradedMonomial c3c1;
    c3c1.c[0] = 1;
    c3c1.c[2] = 1;
    rest += GradedPoly(RankPoly(Scalar(1, 2))) * GradedPoly::chern(2) *
                GradedPoly::pontryagin() +
            GradedPoly(3) * GradedPoly::chern(3) * GradedPoly::chern(1);
    for (const auto& [m, c] : rest.terms()) {
        if (m == c2p1 || m == c3c1) return false;  // those must cancel exactly
        for (const auto& [deg, coef] : c.coefficients())
            if (den(coef) != 1 || num(coef) % 2 != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Splitting-principle oracle: works directly with formal Chern roots.

namespace {

// Multivariate polynomial in x1..x4 (only the first `rank` used), total
// degree capped at kMaxWeight. Completely separate from GradedPoly so the
// oracle shares nothing with the Newton-identity path.
using RootExp = std::array<std::uint8_t, 4>;

struct RootPoly {
    std::map<RootExp, Scalar> t;

    void add(const RootExp& e, const Scalar& c) {
        if (c == 0) return;
        auto [it, ins] = t.try_emplace(e, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
};

int total_degree(const RootExp& e) { return e[0] + e[1] + e[2] + e[3]; }

RootPoly mul(const RootPoly& a, const RootPoly& b) {
    RootPoly r;
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            RootExp e{};
            for (int i = 0; i < 4; ++i) e[i] = std::uint8_t(ea[i] + eb[i]);
            if (total_degree(e) > kMaxWeight) continue;
            r.add(e, ca * cb);
        }
    return r;
}

// Elementary symmetric polynomial e_k(x_1..x_rank).
RootPoly elementary(int k, int rank) {
    RootPoly r;
    if (k == 0) {
        r.add(RootExp{}, 1);
        return r;
    }
    // iterate k-subsets of {0..rank-1}
    std::vector<int> comb;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(comb.size()) == k) {
            RootExp e{};
            for (int i : comb) e[i] = 1;
            r.add(e, 1);
            return;
        }
        for (int i = start; i < rank; ++i) {
            comb.push_back(i);
            self(self, i + 1);
            comb.pop_back();
        }
    };
    rec(rec, 0);
    return r;
}

}  // namespace

GradedPoly splitting_oracle(int rank) {
    if (rank < 1 || rank > 4) throw std::out_of_range("splitting_oracle: rank in 1..4");
    // sum_{i,j} exp(x_i - x_j) - 1, truncated at total degree 4.
    RootPoly total;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            RootPoly diff;  // x_i - x_j
            {
                RootExp e{};
                e[i] = 1;
                diff.add(e, 1);
                RootExp f{};
                f[j] = 1;
                diff.add(f, -1);
            }
            RootPoly term;
            term.add(RootExp{}, 1);  // 1
            RootPoly pow;
            pow.add(RootExp{}, 1);
            Scalar fact = 1;
            for (int k = 1; k <= kMaxWeight; ++k) {
                pow = mul(pow, diff);
                fact *= k;
                for (const auto& [e, c] : pow.t) term.add(e, c / fact);
            }
            for (const auto& [e, c] : term.t) total.add(e, c);
        }
    total.add(RootExp{}, -1);

    // Gauss reduction: rewrite the symmetric polynomial in the elementary
    // symmetric basis, then rename e_i -> c_i.
    GradedPoly out;
    while (!total.t.empty()) {
        // reverse-lex leading term; symmetric input makes it a partition
        auto it = std::prev(total.t.end());
        RootExp lead = it->first;
        Scalar coef = it->second;
        std::array<int, 4> mult{};  // e_i exponents
        for (int i = 0; i < 4; ++i) {
            int next = (i + 1 < 4) ? lead[i + 1] : 0;
            mult[i] = lead[i] - next;
            if (mult[i] < 0) throw std::logic_error("splitting_oracle: not symmetric");
        }
        RootPoly prod;
        prod.add(RootExp{}, 1);
        GradedPoly mono(1);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < mult[i]; ++k) {
                prod = mul(prod, elementary(i + 1, rank));
                mono = mono * GradedPoly::chern(i + 1);
            }
        out += GradedPoly(RankPoly(coef)) * mono;
        for (const auto& [e, c] : prod.t) total.add(e, -coef * c);
    }
    return out;
}

}  // namespace g2c
