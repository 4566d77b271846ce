#include "g2c/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace g2c {

Word free_reduce(Word w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

AffineMap AffineMap::compose(const AffineMap& o) const {
    AffineMap r;
    r.linear = linear * o.linear;
    for (int i = 0; i < 7; ++i) {
        Scalar s = translation[i];
        for (int j = 0; j < 7; ++j) s += linear(i, j) * o.translation[j];
        r.translation[i] = s;
    }
    return r;
}

AffineMap AffineMap::inverse() const {
    AffineMap r;
    r.linear = linear.inverse();
    for (int i = 0; i < 7; ++i) {
        Scalar s = 0;
        for (int j = 0; j < 7; ++j) s -= r.linear(i, j) * translation[j];
        r.translation[i] = s;
    }
    return r;
}

bool AffineMap::is_identity() const {
    if (!(linear == Mat::identity(7))) return false;
    return std::all_of(translation.begin(), translation.end(),
                       [](const Scalar& s) { return s == 0; });
}

bool Presentation::has_affine() const {
    if (affine.size() != generators.size()) return false;
    return std::all_of(affine.begin(), affine.end(), [](const auto& a) { return a.has_value(); });
}

int Presentation::generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    return it == generators.end() ? -1 : int(it - generators.begin());
}

AffineMap Presentation::affine_word(const Word& w) const {
    if (!has_affine()) throw std::runtime_error("presentation carries no affine realization");
    AffineMap m;
    for (const Letter& l : w) {
        const AffineMap& g = *affine[l.gen];
        m = m.compose(l.exp > 0 ? g : g.inverse());
    }
    return m;
}

void Presentation::validate_affine() const {
    for (std::size_t i = 0; i < relators.size(); ++i)
        if (!affine_word(relators[i]).is_identity())
            throw std::runtime_error("relator " + std::to_string(i) +
                                     " does not hold in the affine realization");
    for (std::size_t g = 0; g < generators.size(); ++g)
        if (affine[g]->is_identity())
            throw std::runtime_error("generator " + generators[g] +
                                     " maps to the identity affine map");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

// Uppercase first letter or a trailing apostrophe marks an inverse.
Letter parse_letter(const Presentation& p, const std::string& tok, int line) {
    std::string base = tok;
    int exp = 1;
    if (!base.empty() && base.back() == '\'') {
        base.pop_back();
        exp = -1;
    } else if (!base.empty() && std::isupper(static_cast<unsigned char>(base[0]))) {
        std::string lowered = base;
        lowered[0] = char(std::tolower(static_cast<unsigned char>(lowered[0])));
        if (p.generator_index(lowered) >= 0) {
            base = lowered;
            exp = -1;
        }
    }
    int g = p.generator_index(base);
    if (g < 0) throw ParseError(line, "unknown generator '" + tok + "'");
    return {g, exp};
}

Word parse_word(const Presentation& p, const std::vector<std::string>& toks, int line) {
    Word w;
    for (const auto& t : toks) w.push_back(parse_letter(p, t, line));
    return w;
}

Scalar parse_rational(const std::string& s, int line) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Scalar(Int(s));
        return Scalar(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError(line, "bad rational '" + s + "'");
    }
}

std::vector<Scalar> parse_tuple(const std::string& s, int line) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError(line, "expected (..,..) tuple");
    std::vector<Scalar> out;
    std::string inner = s.substr(1, s.size() - 2);
    std::istringstream is(inner);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(parse_rational(trim(item), line));
    return out;
}

Mat parse_linear(const std::string& s, int line) {
    if (s == "I") return Mat::identity(7);
    if (s.rfind("diag(", 0) == 0 && s.back() == ')') {
        auto entries = parse_tuple(s.substr(4), line);
        if (entries.size() != 7) throw ParseError(line, "diag needs 7 entries");
        Mat m(7, 7);
        for (int i = 0; i < 7; ++i) m(i, i) = entries[i];
        return m;
    }
    if (s.rfind("rows(", 0) == 0 && s.back() == ')') {
        // rows((r11,...,r17),(...),...)
        Mat m(7, 7);
        std::string inner = s.substr(5, s.size() - 6);
        int row = 0;
        std::size_t pos = 0;
        while (pos < inner.size() && row < 7) {
            auto open = inner.find('(', pos);
            auto close = inner.find(')', open);
            if (open == std::string::npos || close == std::string::npos)
                throw ParseError(line, "malformed rows(...)");
            auto entries = parse_tuple(inner.substr(open, close - open + 1), line);
            if (entries.size() != 7) throw ParseError(line, "row needs 7 entries");
            for (int j = 0; j < 7; ++j) m(row, j) = entries[j];
            ++row;
            pos = close + 1;
        }
        if (row != 7) throw ParseError(line, "rows(...) needs 7 rows");
        return m;
    }
    throw ParseError(line, "bad linear part '" + s + "'");
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    bool saw_generators = false;
    bool any_sign = false;
    std::vector<std::pair<Word, int>> relators;
    struct PendingAffine {
        std::string gen;
        AffineMap map;
        int line;
    };
    std::vector<PendingAffine> affines;

    while (std::getline(is, raw)) {
        ++line;
        std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError(line, "expected 'key: value'");
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));

        if (key == "generators") {
            if (saw_generators) throw ParseError(line, "duplicate generators section");
            saw_generators = true;
            p.generators = split_ws(value);
            if (p.generators.empty()) throw ParseError(line, "no generators declared");
        } else if (key == "relator" || key == "relator[+1]" || key == "relator[-1]") {
            if (!saw_generators) throw ParseError(line, "relator before generators");
            int sign = (key == "relator[-1]") ? -1 : +1;
            if (sign < 0) any_sign = true;
            Word w = parse_word(p, split_ws(value), line);
            if (w.empty()) throw ParseError(line, "empty relator");
            relators.emplace_back(std::move(w), sign);
        } else if (key == "linking") {
            if (!saw_generators) throw ParseError(line, "linking before generators");
            if (!p.linking.empty()) throw ParseError(line, "duplicate linking section");
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, '|')) {
                item = trim(item);
                if (item.empty()) throw ParseError(line, "empty linking word");
                p.linking.push_back({item, parse_word(p, split_ws(item), line)});
            }
        } else if (key.rfind("affine ", 0) == 0) {
            if (!saw_generators) throw ParseError(line, "affine before generators");
            std::string gen = trim(key.substr(7));
            AffineMap m;
            bool saw_linear = false, saw_translation = false;
            for (const auto& tok : split_ws(value)) {
                if (tok.rfind("linear=", 0) == 0) {
                    m.linear = parse_linear(tok.substr(7), line);
                    saw_linear = true;
                } else if (tok.rfind("translation=", 0) == 0) {
                    auto t = parse_tuple(tok.substr(12), line);
                    if (t.size() != 7) throw ParseError(line, "translation needs 7 entries");
                    for (int i = 0; i < 7; ++i) m.translation[i] = t[i];
                    saw_translation = true;
                } else {
                    throw ParseError(line, "unknown affine field '" + tok + "'");
                }
            }
            if (!saw_linear || !saw_translation)
                throw ParseError(line, "affine needs linear= and translation=");
            affines.push_back({gen, std::move(m), line});
        } else {
            throw ParseError(line, "unknown section '" + key + "'");
        }
    }
    if (!saw_generators) throw ParseError(line, "missing generators section");

    for (auto& [w, sign] : relators) p.relators.push_back(std::move(w));
    if (any_sign)
        for (auto& [w, sign] : relators) p.relator_signs.push_back(sign);

    if (!affines.empty()) {
        p.affine.assign(p.generators.size(), std::nullopt);
        for (auto& a : affines) {
            int g = p.generator_index(a.gen);
            if (g < 0) throw ParseError(a.line, "affine for unknown generator '" + a.gen + "'");
            if (p.affine[g]) throw ParseError(a.line, "duplicate affine for '" + a.gen + "'");
            p.affine[g] = std::move(a.map);
        }
        if (!p.has_affine())
            throw ParseError(line, "affine realization must cover every generator");
        p.validate_affine();
    }
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "generators:";
    for (const auto& g : p.generators) os << " " << g;
    os << "\n";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        int sign = p.has_signs() ? p.relator_signs[i] : +1;
        os << (sign < 0 ? "relator[-1]:" : "relator:");
        for (const Letter& l : p.relators[i])
            os << " " << p.generators[l.gen] << (l.exp < 0 ? "'" : "");
        os << "\n";
    }
    if (!p.linking.empty()) {
        os << "linking: ";
        for (std::size_t i = 0; i < p.linking.size(); ++i) {
            if (i) os << " | ";
            os << p.linking[i].label;
        }
        os << "\n";
    }
    if (p.has_affine()) {
        const Mat id = Mat::identity(7);
        auto is_diagonal = [](const Mat& m) {
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    if (i != j && m(i, j) != 0) return false;
            return true;
        };
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
            const AffineMap& a = *p.affine[g];
            os << "affine " << p.generators[g] << ": linear=";
            if (a.linear == id) {
                os << "I";
            } else if (is_diagonal(a.linear)) {
                os << "diag(";
                for (int i = 0; i < 7; ++i)
                    os << (i ? "," : "") << to_string(a.linear(i, i));
                os << ")";
            } else {
                os << "rows(";
                for (int i = 0; i < 7; ++i) {
                    os << (i ? ",(" : "(");
                    for (int j = 0; j < 7; ++j)
                        os << (j ? "," : "") << to_string(a.linear(i, j));
                    os << ")";
                }
                os << ")";
            }
            os << " translation=(";
            for (int i = 0; i < 7; ++i) os << (i ? "," : "") << to_string(a.translation[i]);
            os << ")\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Built-in presentations

namespace {

Word commutator(int g, int h) {
    return {{g, 1}, {h, 1}, {g, -1}, {h, -1}};
}

}  // namespace

Presentation joyce_example3() {
    Presentation p;
    for (int i = 1; i <= 7; ++i) p.generators.push_back("t" + std::to_string(i));
    p.generators.insert(p.generators.end(), {"a", "b", "c"});
    const int A = 7, B = 8, C = 9;  // alpha, beta, gamma

    // (1) translations commute
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) p.relators.push_back(commutator(i, j));
    // (2) involutions
    for (int g : {A, B, C}) p.relators.push_back({{g, 1}, {g, 1}});
    // (3) mixed commutators pick up translations
    {
        Word w = commutator(A, B);
        w.push_back({5, 1});  // [a,b] t6
        p.relators.push_back(w);
        w = commutator(A, C);
        w.push_back({6, 1});  // [a,c] t7
        p.relators.push_back(w);
        w = commutator(B, C);
        w.push_back({6, 1});  // [b,c] t7
        p.relators.push_back(w);
    }
    // (4)-(6) conjugation action of the involutions on the translations
    auto conjugation = [&](int inv, std::initializer_list<int> fixed) {
        for (int i = 0; i < 7; ++i) {
            bool fix = std::find(fixed.begin(), fixed.end(), i + 1) != fixed.end();
            // inv t_i inv = t_i^{±1}  ->  relator inv t_i inv t_i^{∓1}
            p.relators.push_back({{inv, 1}, {i, 1}, {inv, 1}, {i, fix ? -1 : 1}});
        }
    };
    conjugation(A, {1, 2, 3});
    conjugation(B, {1, 4, 5});
    conjugation(C, {2, 4, 6});

    // Linking words for the twelve singular tori.
    auto link = [&](std::string label, Word w) { p.linking.push_back({std::move(label), std::move(w)}); };
    link("a", {{A, 1}});
    link("t4 a", {{3, 1}, {A, 1}});
    link("t5 a", {{4, 1}, {A, 1}});
    link("t7 a", {{6, 1}, {A, 1}});
    link("b", {{B, 1}});
    link("t2 b", {{1, 1}, {B, 1}});
    link("t3 b", {{2, 1}, {B, 1}});
    link("t2 t3 b", {{1, 1}, {2, 1}, {B, 1}});
    link("c", {{C, 1}});
    link("t1 c", {{0, 1}, {C, 1}});
    link("t3 c", {{2, 1}, {C, 1}});
    link("t1 t3 c", {{0, 1}, {2, 1}, {C, 1}});

    // Affine realization. The gamma translation is (0,...,0,1/2): with the
    // printed relations [a,c] = t7^{-1} and [b,c] = t7^{-1} this is the
    // unique minimal choice making every relator an affine identity.
    p.affine.assign(p.generators.size(), std::nullopt);
    for (int i = 0; i < 7; ++i) {
        AffineMap m;
        m.translation[i] = 1;
        p.affine[i] = m;
    }
    AffineMap ma, mb, mc;
    ma.linear = diag7({1, 1, 1, -1, -1, -1, -1});
    mb.linear = diag7({1, -1, -1, 1, 1, -1, -1});
    mb.translation[5] = Scalar(1, 2);
    mc.linear = diag7({-1, 1, -1, 1, -1, 1, -1});
    mc.translation[6] = Scalar(1, 2);
    p.affine[A] = ma;
    p.affine[B] = mb;
    p.affine[C] = mc;
    p.validate_affine();
    return p;
}

Presentation t3_projective(bool projective) {
    Presentation p;
    p.generators = {"a", "b", "c"};
    p.relators = {commutator(0, 1), commutator(0, 2), commutator(1, 2)};
    if (projective) p.relator_signs = {-1, +1, +1};
    return p;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

Int to_int(const Scalar& s) {
    if (den(s) != 1) throw std::invalid_argument("smith_normal_form: non-integer entry");
    return num(s);
}

}  // namespace

SmithResult smith_normal_form(const Mat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = to_int(m(i, j));

    std::vector<std::vector<Int>> u(rows, std::vector<Int>(rows)),
        v(cols, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
    for (std::size_t j = 0; j < cols; ++j) v[j][j] = 1;

    auto abs_val = [](const Int& x) { return x < 0 ? Int(-x) : x; };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || abs_val(a[i][j]) < best)) {
                    best = abs_val(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pi]);
        std::swap(u[t], u[pi]);
        if (pj != t)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        if (pj != t)
            for (std::size_t j = 0; j < cols; ++j) std::swap(v[j][t], v[j][pj]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Int q = a[i][t] / a[t][t];
            if (q != 0) {
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[t][j];
                for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[t][j];
            }
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int q = a[t][j] / a[t][t];
            if (q != 0) {
                for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
                for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
            }
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick pivot

        // divisibility: pivot must divide the whole trailing block
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    // fold row i into row t and retry
                    for (std::size_t k = 0; k < cols; ++k) a[t][k] += a[i][k];
                    for (std::size_t k = 0; k < rows; ++k) u[t][k] += u[i][k];
                    divides = false;
                }
        if (!divides) continue;
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
        }
        ++t;
    }

    SmithResult r{Mat(rows, rows), Mat(rows, cols), Mat(cols, cols)};
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) r.u(i, j) = u[i][j];
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.d(i, j) = a[i][j];
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.v(i, j) = v[i][j];
    return r;
}

AbelianInvariants abelianization(const Presentation& p) {
    const std::size_t n = p.generators.size();
    Mat m(std::max<std::size_t>(p.relators.size(), 1), n);
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Letter& l : p.relators[r]) m(r, l.gen) += l.exp;
    SmithResult s = smith_normal_form(m);
    AbelianInvariants out;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        Int d = num(s.d(i, i));
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) out.factors.push_back(d);
    }
    out.free_rank = int(n - nonzero);
    return out;
}

Int hom_count_mod2(const Presentation& p) {
    AbelianInvariants ab = abelianization(p);
    int exponent = ab.free_rank;
    for (const Int& d : ab.factors)
        if (d % 2 == 0) ++exponent;
    return boost::multiprecision::pow(Int(2), unsigned(exponent));
}

}  // namespace g2c
