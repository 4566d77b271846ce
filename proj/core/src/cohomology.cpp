#include "g2c/cohomology.hpp"

namespace g2c {

void GroupRingElement::add(const Scalar& c, Word w) {
    if (c == 0) return;
    w = free_reduce(std::move(w));
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it->second == w) {
            it->first += c;
            if (it->first == 0) terms.erase(it);
            return;
        }
    }
    terms.emplace_back(c, std::move(w));
}

GroupRingElement fox_derivative(const Word& r, int gen) {
    GroupRingElement out;
    Word prefix;
    for (const Letter& l : r) {
        if (l.gen == gen) {
            if (l.exp > 0) {
                out.add(1, prefix);
            } else {
                Word w = prefix;
                w.push_back({l.gen, -1});
                out.add(-1, std::move(w));
            }
        }
        prefix.push_back(l);
    }
    return out;
}

Mat ad_evaluate(const Rep& r, const GroupRingElement& e) {
    Mat m(3, 3);
    for (const auto& [c, w] : e.terms) {
        Mat ad = r.group->adjoint(r.evaluate(w));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) += c * ad(i, j);
    }
    return m;
}

int h0_dimension(const Rep& r) {
    // The invariant subspace of a finite group has dimension equal to the
    // average character, so no linear algebra is needed.
    const std::vector<int> sub = r.group->generated_subgroup(r.vals);
    Scalar sum = 0;
    for (int e : sub) {
        const Mat ad = r.group->adjoint(e);
        sum += ad(0, 0) + ad(1, 1) + ad(2, 2);
    }
    const Scalar d = sum / int(sub.size());
    if (den(d) != 1 || d < 0) throw std::logic_error("h0: character average not integral");
    return num(d).convert_to<int>();
}

FoxTable fox_table(const Presentation& p) {
    FoxTable t;
    t.d.resize(p.relators.size());
    for (std::size_t rel = 0; rel < p.relators.size(); ++rel)
        for (std::size_t g = 0; g < p.generators.size(); ++g)
            t.d[rel].push_back(fox_derivative(p.relators[rel], int(g)));
    return t;
}

int h1_dimension(const Presentation& p, const Rep& r, const FoxTable* table) {
    FoxTable local;
    if (!table) {
        local = fox_table(p);
        table = &local;
    }
    const int n = int(p.generators.size());
    const int nr = int(p.relators.size());
    Mat z(std::max(3 * nr, 1), 3 * n);
    for (int rel = 0; rel < nr; ++rel)
        for (int g = 0; g < n; ++g) {
            Mat block = ad_evaluate(r, table->d[rel][g]);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) z(3 * rel + i, 3 * g + j) = block(i, j);
        }
    int dim_z1 = 3 * n - int(z.rank());
    int dim_b1 = 3 - h0_dimension(r);
    return dim_z1 - dim_b1;
}

PointGroup point_group(const Presentation& p) {
    if (!p.has_affine())
        throw std::invalid_argument("point_group needs an affine realization");
    constexpr std::size_t kBound = 4096;
    PointGroup pg;
    pg.elems.push_back(Mat::identity(7));
    auto find_or_add = [&pg](const Mat& m) {
        for (std::size_t i = 0; i < pg.elems.size(); ++i)
            if (pg.elems[i] == m) return int(i);
        if (pg.elems.size() >= kBound)
            throw std::invalid_argument("point_group: linear parts not finite within bound");
        pg.elems.push_back(m);
        return int(pg.elems.size()) - 1;
    };
    for (const auto& a : p.affine) pg.gen_index.push_back(find_or_add(a->linear));
    // Right-multiplying by generators reaches the whole generated group
    // (every element of a finite group is a positive word in the generators).
    for (std::size_t a = 0; a < pg.elems.size(); ++a)
        for (std::size_t i = 0; i < pg.gen_index.size(); ++i)
            find_or_add(pg.elems[a] * pg.elems[std::size_t(pg.gen_index[i])]);
    const std::size_t n = pg.elems.size();
    pg.mul.assign(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            pg.mul[a][b] = find_or_add(pg.elems[a] * pg.elems[b]);
    for (const Mat& m : pg.elems) {
        Scalar t = 0;
        for (int i = 0; i < 7; ++i) t += m(i, i);
        pg.traces.push_back(t);
    }
    return pg;
}

int walpuski_fixed_dim(const Presentation& p, const Rep& r, const PointGroup* pg) {
    PointGroup local;
    if (!pg) {
        local = point_group(p);
        pg = &local;
    }
    // Close the coupled images (L(g), rho(g)) into a finite group of pairs;
    // the fixed-space dimension of the tensor action is the average of
    // tr L * tr ad over that group.
    const TargetGroup& g = *r.group;
    const std::size_t np = pg->elems.size(), ng = std::size_t(g.order());
    std::vector<bool> seen(np * ng, false);
    std::vector<std::pair<int, int>> queue{{0, g.identity}}, all;
    seen[std::size_t(g.identity)] = true;
    while (!queue.empty()) {
        const auto [pi, ei] = queue.back();
        queue.pop_back();
        all.emplace_back(pi, ei);
        for (std::size_t i = 0; i < p.generators.size(); ++i) {
            const int qi = pg->mul[std::size_t(pi)][std::size_t(pg->gen_index[i])];
            const int fi = g.mul[std::size_t(ei)][std::size_t(r.vals[i])];
            const std::size_t key = std::size_t(qi) * ng + std::size_t(fi);
            if (!seen[key]) {
                seen[key] = true;
                queue.emplace_back(qi, fi);
            }
        }
    }
    std::vector<Scalar> ad_trace(ng);
    std::vector<bool> have(ng, false);
    Scalar sum = 0;
    for (const auto& [pi, ei] : all) {
        if (!have[std::size_t(ei)]) {
            const Mat ad = g.adjoint(ei);
            ad_trace[std::size_t(ei)] = ad(0, 0) + ad(1, 1) + ad(2, 2);
            have[std::size_t(ei)] = true;
        }
        sum += pg->traces[std::size_t(pi)] * ad_trace[std::size_t(ei)];
    }
    const Scalar d = sum / int(all.size());
    if (den(d) != 1 || d < 0)
        throw std::logic_error("walpuski_fixed_dim: character average not integral");
    return num(d).convert_to<int>();
}

Nondegeneracy nondegenerate(const Presentation& p, const Rep& r, const FoxTable* table,
                            const PointGroup* pg) {
    Nondegeneracy out;
    out.h0 = h0_dimension(r);
    out.h1 = h1_dimension(p, r, table);
    if (p.has_affine()) {
        out.walpuski = walpuski_fixed_dim(p, r, pg);
        if ((out.h1 == 0) != (out.walpuski == 0))
            throw ConsistencyFailure("H^1 and coupled-holonomy criteria disagree");
    }
    out.nondegenerate = (out.h1 == 0);
    return out;
}

}  // namespace g2c
