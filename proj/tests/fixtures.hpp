#pragma once

// Shared helpers for building explicit representations of the builtin
// presentations over catalog targets.

#include "g2c/census.hpp"
#include "g2c/presentation.hpp"
#include "g2c/target_group.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace fixtures {

inline int element_index(const g2c::TargetGroup& g, const std::string& name) {
    for (int i = 0; i < g.order(); ++i)
        if (g.element_names[i] == name) return i;
    throw std::invalid_argument("no element named " + name + " in " + g.name);
}

// Representation sending every listed generator to the named element and
// every other generator to the identity.
inline g2c::Rep make_rep(const g2c::Presentation& p, const g2c::TargetGroup& g,
                         const std::map<std::string, std::string>& images) {
    g2c::Rep r;
    r.group = &g;
    r.vals.assign(p.generators.size(), g.identity);
    for (const auto& [gen, elem] : images) {
        int gi = p.generator_index(gen);
        if (gi < 0) throw std::invalid_argument("no generator named " + gen);
        r.vals[gi] = element_index(g, elem);
    }
    return r;
}

// The four explicit Klein-image representations of the orbifold group, the
// ones whose bundle signatures each contain a single class.
inline std::vector<g2c::Rep> table1_reps(const g2c::Presentation& p,
                                         const g2c::TargetGroup& v4) {
    using M = std::map<std::string, std::string>;
    M rho1{{"t1", "c"}, {"t2", "b"}, {"t4", "a"}};
    M rho2 = rho1;
    rho2["a"] = "a";
    rho2["t5"] = "a";
    M rho3 = rho2;
    rho3["b"] = "b";
    rho3["t3"] = "b";
    M rho4 = rho3;
    rho4["c"] = "c";
    return {make_rep(p, v4, rho1), make_rep(p, v4, rho2), make_rep(p, v4, rho3),
            make_rep(p, v4, rho4)};
}

// Frozen bundle signatures of the four representations above.
inline std::vector<std::string> table1_signatures() {
    return {
        "xi=010001010101,tau=1101000,pairs=000000000000111000111",
        "xi=100101010101,tau=1101100,pairs=000000000000011100001",
        "xi=100110010111,tau=1111100,pairs=000000100000000100001",
        "xi=100110011011,tau=1111100,pairs=000000100000000100001",
    };
}

// True when the representation satisfies every (signed) relator.
inline bool is_homomorphism(const g2c::Presentation& p, const g2c::Rep& r) {
    const g2c::TargetGroup& g = *r.group;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        int v = r.evaluate(p.relators[i]);
        int want = g.identity;
        if (p.has_signs() && p.relator_signs[i] == -1) want = g.minus_one;
        if (v != want) return false;
    }
    return true;
}

}  // namespace fixtures
