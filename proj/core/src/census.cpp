#include "g2c/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace g2c {

int Rep::evaluate(const Word& w) const {
    int e = group->identity;
    for (const Letter& l : w) {
        int v = vals[l.gen];
        e = group->mul[e][l.exp > 0 ? v : group->inv[v]];
    }
    return e;
}

namespace {

// Generators mentioned most often come first: the involution generators of
// the built-in orbifold groups are the most constrained, and fronting them
// prunes the search by orders of magnitude.
std::vector<int> assignment_order(const Presentation& p) {
    const int n = int(p.generators.size());
    std::vector<int> count(n, 0), order(n);
    for (const Word& r : p.relators)
        for (const Letter& l : r) ++count[l.gen];
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return count[a] > count[b]; });
    return order;
}

struct Search {
    const Presentation& p;
    const TargetGroup& g;
    std::vector<int> order;                       // assignment order
    std::vector<int> position;                    // generator -> position
    std::vector<std::vector<int>> ready;          // relators checkable at position
    std::vector<int> expected;                    // target element per relator

    Search(const Presentation& p_, const TargetGroup& g_) : p(p_), g(g_) {
        order = assignment_order(p);
        position.assign(p.generators.size(), 0);
        for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = int(k);
        ready.resize(order.size());
        for (std::size_t r = 0; r < p.relators.size(); ++r) {
            int last = 0;
            for (const Letter& l : p.relators[r]) last = std::max(last, position[l.gen]);
            ready[last].push_back(int(r));
            int sign = p.has_signs() ? p.relator_signs[r] : +1;
            expected.push_back(sign > 0 ? g.identity : g.minus_one);
        }
    }

    bool check(const std::vector<int>& vals, int pos) const {
        for (int r : ready[pos]) {
            int e = g.identity;
            for (const Letter& l : p.relators[r]) {
                int v = vals[l.gen];
                e = g.mul[e][l.exp > 0 ? v : g.inv[v]];
            }
            if (e != expected[r]) return false;
        }
        return true;
    }

    void dfs(std::vector<int>& vals, std::size_t pos,
             const std::function<void(const std::vector<int>&)>& sink) const {
        if (pos == order.size()) {
            sink(vals);
            return;
        }
        for (int v = 0; v < g.order(); ++v) {
            vals[order[pos]] = v;
            if (check(vals, int(pos))) dfs(vals, pos + 1, sink);
        }
    }
};

}  // namespace

void enumerate_homs(const Presentation& p, const TargetGroup& g, const EnumConfig& cfg,
                    const std::function<void(const std::vector<int>&)>& sink) {
    if (p.has_signs() && !g.is_spin())
        throw std::invalid_argument("signed relators require a spin-model target");
    if (p.has_signs() && g.minus_one < 0)
        throw std::invalid_argument("spin target has no -1 element");

    Search s(p, g);
    std::vector<int> first_values;
    if (cfg.prune)
        first_values = g.conjugacy_class_reps();
    else
        for (int v = 0; v < g.order(); ++v) first_values.push_back(v);

    std::vector<int> vals(p.generators.size(), g.identity);
    for (int first : first_values) {
        vals[s.order[0]] = first;
        if (s.check(vals, 0)) s.dfs(vals, 1, sink);
    }
}

std::vector<Rep> enumerate_homs(const Presentation& p, const TargetGroup& g,
                                const EnumConfig& cfg) {
    std::vector<Rep> out;
    enumerate_homs(p, g, cfg,
                   [&out, &g](const std::vector<int>& vals) { out.push_back(Rep{&g, vals}); });
    return out;
}

bool is_irreducible(const Rep& r) {
    const int n = int(r.vals.size());
    Mat stack(3 * n, 3);
    for (int g = 0; g < n; ++g) {
        Mat ad = r.group->adjoint(r.vals[g]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) stack(3 * g + i, j) = ad(i, j) - (i == j ? 1 : 0);
    }
    return stack.rank() == 3;
}

std::vector<Word> trace_schedule(int generator_count, int depth) {
    std::vector<Word> out;
    // all length-1 words first, then length-2, ...
    for (int len = 1; len <= depth; ++len) {
        std::vector<int> idx(len, 0);
        for (;;) {
            Word w;
            for (int g : idx) w.push_back({g, 1});
            out.push_back(std::move(w));
            int k = len - 1;
            while (k >= 0 && ++idx[k] == generator_count) idx[k--] = 0;
            if (k < 0) break;
        }
    }
    return out;
}

std::vector<Scalar> trace_signature(const Rep& r, const std::vector<Word>& schedule) {
    std::vector<Scalar> out;
    out.reserve(schedule.size());
    for (const Word& w : schedule) out.push_back(r.group->trace(r.evaluate(w)));
    return out;
}

namespace {

// Index table of the conjugation action of the 24 rational rotations on the
// target's element list. Entry -1: the conjugate leaves the target group.
// Spin elements conjugate through the rotation of their imaginary part.
std::vector<std::vector<int>> build_conjugation_table(const TargetGroup& g) {
    const auto& rots = s4_rotations().rot;
    std::vector<std::vector<int>> table(rots.size(), std::vector<int>(g.order(), -1));
    for (std::size_t h = 0; h < rots.size(); ++h) {
        const Mat& m = rots[h];
        for (int e = 0; e < g.order(); ++e) {
            if (g.is_spin()) {
                Quat q = g.quat[e];
                Quat c{q[0], 0, 0, 0};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) c[i + 1] += m(i, j) * q[j + 1];
                for (int f = 0; f < g.order(); ++f)
                    if (g.quat[f] == c) {
                        table[h][e] = f;
                        break;
                    }
            } else {
                Mat c = m * g.rot[e] * m.transposed();
                for (int f = 0; f < g.order(); ++f)
                    if (g.rot[f] == c) {
                        table[h][e] = f;
                        break;
                    }
            }
        }
    }
    return table;
}

// The catalog groups are long-lived statics, so keying the cache by address
// is safe; user-built groups just pay the rebuild on each call site's first use.
const std::vector<std::vector<int>>& conjugation_table(const TargetGroup& g) {
    static std::mutex mu;
    static std::map<const TargetGroup*, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&g);
    if (it == cache.end()) it = cache.emplace(&g, build_conjugation_table(g)).first;
    return it->second;
}

}  // namespace

bool conjugate_in_so3(const Rep& r1, const Rep& r2) {
    if (r1.group != r2.group || r1.vals.size() != r2.vals.size()) return false;
    const TargetGroup& g = *r1.group;
    // Closure of the paired images in G x G; equality of the characters of
    // the two pullback representations of that finite group certifies an
    // intertwiner, hence a conjugator, by real (resp. complex) character
    // theory. Conjugation by an improper orthogonal map equals conjugation
    // by its negative, so O(3)-conjugacy already gives SO(3)-conjugacy.
    const int n = g.order();
    std::vector<bool> seen(std::size_t(n) * std::size_t(n), false);
    std::vector<std::pair<int, int>> queue{{g.identity, g.identity}};
    seen[std::size_t(g.identity) * n + g.identity] = true;
    while (!queue.empty()) {
        auto [e, f] = queue.back();
        queue.pop_back();
        if (g.trace(e) != g.trace(f)) return false;
        for (std::size_t k = 0; k < r1.vals.size(); ++k) {
            const int e2 = g.mul[e][r1.vals[k]], f2 = g.mul[f][r2.vals[k]];
            if (!seen[std::size_t(e2) * n + f2]) {
                seen[std::size_t(e2) * n + f2] = true;
                queue.emplace_back(e2, f2);
            }
        }
    }
    return true;
}

bool conjugate_reps(const Rep& r1, const Rep& r2) {
    if (r1.group != r2.group || r1.vals.size() != r2.vals.size()) return false;
    const auto& table = conjugation_table(*r1.group);
    for (const auto& row : table) {
        bool ok = true;
        for (std::size_t k = 0; k < r1.vals.size(); ++k)
            if (row[r1.vals[k]] != r2.vals[k]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

namespace {

// Accumulates homomorphisms into classes keyed by the canonical form:
// the lexicographic minimum over the conjugation orbit.
struct ClassAccumulator {
    const TargetGroup& g;
    const std::vector<std::vector<int>>& table;
    std::map<std::vector<int>, int> canon;  // canonical vals -> class id
    std::vector<RepClass> classes;
    std::vector<int> mapped;

    explicit ClassAccumulator(const TargetGroup& g_)
        : g(g_), table(conjugation_table(g_)) {}

    void add(const std::vector<int>& vals) {
        if (mapped.size() != vals.size()) mapped.resize(vals.size());
        std::vector<int> best = vals;
        for (const auto& row : table) {
            bool valid = true;
            for (std::size_t k = 0; k < vals.size(); ++k) {
                mapped[k] = row[vals[k]];
                if (mapped[k] < 0) {
                    valid = false;
                    break;
                }
            }
            if (valid && mapped < best) best = mapped;
        }
        auto [it, inserted] = canon.try_emplace(best, int(classes.size()));
        if (inserted) {
            RepClass c;
            c.representative = Rep{&g, std::move(best)};
            c.member_count = 1;
            classes.push_back(std::move(c));
        } else {
            ++classes[it->second].member_count;
        }
    }

    std::vector<RepClass> finish(int depth) {
        if (classes.empty()) return {};
        auto schedule = trace_schedule(int(classes[0].representative.vals.size()), depth);
        for (RepClass& c : classes) c.traces = trace_signature(c.representative, schedule);

        // The catalog rotations cannot realize every conjugator (e.g. the
        // 45-degree map between the diagonal and a twisted Klein subgroup),
        // so classes sharing a trace signature are re-tested with the exact
        // character-theoretic conjugacy check and merged when it certifies.
        std::sort(classes.begin(), classes.end(), [](const RepClass& a, const RepClass& b) {
            if (a.traces != b.traces) return a.traces < b.traces;
            return a.representative.vals < b.representative.vals;
        });
        std::vector<RepClass> merged;
        for (RepClass& c : classes) {
            bool absorbed = false;
            for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
                if (it->traces != c.traces) break;
                if (conjugate_in_so3(it->representative, c.representative)) {
                    it->member_count += c.member_count;
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) merged.push_back(std::move(c));
        }
        for (RepClass& c : merged) {
            c.image_order = int(g.generated_subgroup(c.representative.vals).size());
            c.irreducible = is_irreducible(c.representative);
        }
        std::sort(merged.begin(), merged.end(), [](const RepClass& a, const RepClass& b) {
            return a.representative.vals < b.representative.vals;
        });
        return merged;
    }
};

}  // namespace

std::vector<RepClass> reduce_to_classes(const std::vector<Rep>& reps,
                                        const TargetGroup& g, int depth) {
    ClassAccumulator acc(g);
    for (const Rep& r : reps) acc.add(r.vals);
    return acc.finish(depth);
}

std::vector<RepClass> census_classes(const Presentation& p, const TargetGroup& g,
                                     const EnumConfig& cfg, int depth) {
    ClassAccumulator acc(g);
    enumerate_homs(p, g, cfg, [&acc](const std::vector<int>& vals) { acc.add(vals); });
    return acc.finish(depth);
}

namespace {

bool signed_permutation(const Mat& m) {
    for (int i = 0; i < 3; ++i) {
        int nonzero = 0;
        for (int j = 0; j < 3; ++j) {
            const Scalar& v = m(i, j);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

}  // namespace

int centralizer_order(const Rep& r) {
    const TargetGroup& g = *r.group;
    const TargetGroup& s4 = s4_rotations();
    std::vector<Mat> imgs;
    std::vector<int> s4_idx;
    for (int v : r.vals) imgs.push_back(g.adjoint(v));
    for (const Mat& m : imgs) {
        if (!signed_permutation(m))
            throw UnsupportedImage("image of " + g.name +
                                   " not inside the signed-permutation rotations");
        for (int f = 0; f < s4.order(); ++f)
            if (s4.rot[f] == m) {
                s4_idx.push_back(f);
                break;
            }
    }

    // so(3) commutant: skew X = x K1 + y K2 + z K3 with M X = X M for all M.
    Mat system(9 * int(imgs.size()), 3);
    int row = 0;
    for (const Mat& m : imgs) {
        for (int axis = 0; axis < 3; ++axis) {
            Mat k(3, 3);
            k((axis + 1) % 3, (axis + 2) % 3) = -1;
            k((axis + 2) % 3, (axis + 1) % 3) = 1;
            Mat comm = m * k - k * m;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) system(row + 3 * i + j, axis) += comm(i, j);
        }
        row += 9;
    }
    if (system.rank() != 3)
        throw UnsupportedImage("positive-dimensional commutant; centralizer not finite");

    const auto& table = conjugation_table(s4);
    int count = 0;
    for (const auto& row : table) {
        bool ok = true;
        for (int e : s4_idx)
            if (row[e] != e) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

std::string BundleSignature::str() const {
    std::string s = "xi=";
    for (bool b : linking_bits) s += b ? '1' : '0';
    s += ",tau=";
    for (bool b : translation_bits) s += b ? '1' : '0';
    s += ",pairs=";
    for (bool b : pair_bits) s += b ? '1' : '0';
    return s;
}

BundleSignature bundle_signature(const Rep& r, const Presentation& p) {
    if (p.linking.empty()) throw std::invalid_argument("presentation has no linking data");
    const TargetGroup& g = *r.group;
    auto nontrivial = [&](int e) {
        if (g.is_spin()) return e != g.identity && e != g.minus_one;
        return e != g.identity;
    };
    BundleSignature sig;
    for (const LabeledWord& lw : p.linking)
        sig.linking_bits.push_back(nontrivial(r.evaluate(lw.word)));
    if (p.has_affine()) {
        const Mat id = Mat::identity(7);
        std::vector<int> translations;
        for (std::size_t gi = 0; gi < p.generators.size(); ++gi)
            if (p.affine[gi]->linear == id) {
                translations.push_back(r.vals[gi]);
                sig.translation_bits.push_back(nontrivial(r.vals[gi]));
            }
        auto same = [&](int e, int f) {
            if (e == f) return true;
            // spin images matter only up to the center
            return g.is_spin() && (g.mul[e][g.inv[f]] == g.minus_one);
        };
        for (std::size_t i = 0; i < translations.size(); ++i)
            for (std::size_t j = i + 1; j < translations.size(); ++j)
                sig.pair_bits.push_back(same(translations[i], translations[j]));
    }
    return sig;
}

std::vector<InvariantTotal> invariant(const Presentation& p, const TargetGroup& g,
                                      const std::vector<RepClass>& classes) {
    const Int homs = g.is_spin() ? Int(0) : hom_count_mod2(p);
    std::map<BundleSignature, InvariantTotal> totals;
    for (const RepClass& c : classes) {
        BundleSignature sig;
        if (!p.linking.empty()) sig = bundle_signature(c.representative, p);
        Int mult = 1;
        if (!g.is_spin()) {
            int z = centralizer_order(c.representative);
            if (homs % z != 0)
                throw std::logic_error("hom count not divisible by centralizer order");
            mult = homs / z;
        }
        auto& t = totals[sig];
        t.signature = sig;
        t.total += mult;
        ++t.class_count;
    }
    std::vector<InvariantTotal> out;
    for (auto& [sig, t] : totals) out.push_back(std::move(t));
    return out;
}

}  // namespace g2c
