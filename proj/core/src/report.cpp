#include "g2c/report.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <fstream>
#include <sstream>

namespace g2c {

namespace {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json config_json(const RunConfig& cfg) {
    // jobs is deliberately omitted: reports must be byte-identical across
    // worker counts, and the worker count is not part of the result.
    json j;
    j["depth"] = cfg.depth;
    j["prune"] = cfg.prune;
    j["strict"] = cfg.strict;
    return j;
}

}  // namespace

std::string presentation_digest(const Presentation& p, const std::string& target,
                                const RunConfig& cfg) {
    std::ostringstream os;
    os << format_presentation(p) << "|target=" << target << "|prune=" << cfg.prune
       << "|depth=" << cfg.depth << "|v=" << kToolVersion;
    return fnv1a_hex(os.str());
}

std::string CensusReport::to_json() const {
    json j;
    j["tool_version"] = tool_version;
    j["presentation_digest"] = presentation_digest;
    j["target"] = target;
    j["config"] = config_json(config);
    j["degenerate_irreducible"] = degenerate_irreducible;
    j["unsupported_image"] = unsupported_image;
    j["from_cache"] = from_cache;
    json cls = json::array();
    for (const ClassRecord& c : classes) {
        json jc;
        jc["representative"] = c.representative;
        jc["traces"] = c.traces;
        jc["image_order"] = c.image_order;
        jc["irreducible"] = c.irreducible;
        jc["h0"] = c.h0;
        jc["h1"] = c.h1;
        if (c.walpuski >= 0)
            jc["walpuski_fixed_dim"] = c.walpuski;
        else
            jc["walpuski_fixed_dim"] = nullptr;
        jc["bundle_signature"] = c.bundle_signature;
        jc["multiplicity"] = c.multiplicity;
        jc["member_count"] = c.member_count;
        cls.push_back(std::move(jc));
    }
    j["classes"] = std::move(cls);
    json tot = json::array();
    for (const SignatureTotal& t : totals) {
        json jt;
        jt["signature"] = t.signature;
        jt["total"] = t.total;
        jt["class_count"] = t.class_count;
        tot.push_back(std::move(jt));
    }
    j["totals"] = std::move(tot);
    j["notes"] = notes;
    if (config.timing) j["elapsed_ms"] = elapsed_ms;
    return j.dump(2) + "\n";
}

CensusReport CensusReport::from_json(const std::string& text) {
    json j = json::parse(text);
    CensusReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.presentation_digest = j.at("presentation_digest").get<std::string>();
    r.target = j.at("target").get<std::string>();
    const json& jc = j.at("config");
    r.config.depth = jc.at("depth").get<int>();
    r.config.prune = jc.at("prune").get<bool>();
    r.config.strict = jc.at("strict").get<bool>();
    r.config.timing = j.contains("elapsed_ms");
    r.degenerate_irreducible = j.at("degenerate_irreducible").get<bool>();
    r.unsupported_image = j.at("unsupported_image").get<bool>();
    r.from_cache = j.at("from_cache").get<bool>();
    for (const json& c : j.at("classes")) {
        ClassRecord rec;
        rec.representative = c.at("representative").get<std::map<std::string, std::string>>();
        rec.traces = c.at("traces").get<std::string>();
        rec.image_order = c.at("image_order").get<int>();
        rec.irreducible = c.at("irreducible").get<bool>();
        rec.h0 = c.at("h0").get<int>();
        rec.h1 = c.at("h1").get<int>();
        rec.walpuski = c.at("walpuski_fixed_dim").is_null()
                           ? -1
                           : c.at("walpuski_fixed_dim").get<int>();
        rec.bundle_signature = c.at("bundle_signature").get<std::string>();
        rec.multiplicity = c.at("multiplicity").get<std::string>();
        rec.member_count = c.at("member_count").get<int>();
        r.classes.push_back(std::move(rec));
    }
    for (const json& t : j.at("totals")) {
        SignatureTotal st;
        st.signature = t.at("signature").get<std::string>();
        st.total = t.at("total").get<std::string>();
        st.class_count = t.at("class_count").get<int>();
        r.totals.push_back(std::move(st));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

CensusReport run_census(const Presentation& p, const TargetGroup& g, const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    CensusReport rep;
    rep.tool_version = kToolVersion;
    rep.target = g.name;
    rep.config = cfg;
    rep.presentation_digest = presentation_digest(p, g.name, cfg);

    std::string cache_path;
    if (!cfg.cache_dir.empty()) {
        cache_path = cfg.cache_dir + "/" + rep.presentation_digest + ".json";
        std::ifstream in(cache_path);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            CensusReport cached = CensusReport::from_json(buf.str());
            cached.from_cache = true;
            cached.config = cfg;
            cached.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
            return cached;
        }
    }

    EnumConfig ec;
    ec.prune = cfg.prune;
    ec.jobs = cfg.jobs;
    std::vector<RepClass> classes = census_classes(p, g, ec, cfg.depth);

    const Int homs = g.is_spin() ? Int(0) : hom_count_mod2(p);
    const FoxTable fox = fox_table(p);
    const PointGroup pg = p.has_affine() ? point_group(p) : PointGroup{};

    struct PerClass {
        ClassRecord rec;
        BundleSignature sig;
        Int mult = 0;
        bool degenerate_irreducible = false;
        std::string unsupported;
    };
    std::vector<PerClass> results(classes.size());
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto analyze = [&](std::size_t idx) {
        const RepClass& c = classes[idx];
        PerClass& out = results[idx];
        ClassRecord& rec = out.rec;
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            rec.representative[p.generators[i]] = g.element_names[c.representative.vals[i]];
        for (const Scalar& t : c.traces) {
            if (!rec.traces.empty()) rec.traces += ',';
            rec.traces += to_string(t);
        }
        rec.image_order = c.image_order;
        rec.irreducible = c.irreducible;
        rec.member_count = c.member_count;

        Nondegeneracy nd =
            nondegenerate(p, c.representative, &fox, p.has_affine() ? &pg : nullptr);
        rec.h0 = nd.h0;
        rec.h1 = nd.h1;
        rec.walpuski = nd.walpuski;
        out.degenerate_irreducible = c.irreducible && !nd.nondegenerate;

        if (!p.linking.empty()) out.sig = bundle_signature(c.representative, p);
        rec.bundle_signature = out.sig.str();

        if (c.irreducible && nd.nondegenerate) {
            if (g.is_spin()) {
                out.mult = 1;
            } else {
                try {
                    out.mult = homs / centralizer_order(c.representative);
                } catch (const UnsupportedImage& e) {
                    out.unsupported = e.what();
                }
            }
        }
        rec.multiplicity = out.mult.str();
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < classes.size(); ++i) analyze(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= classes.size()) return;
                    try {
                        analyze(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mu);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::map<BundleSignature, SignatureTotal> totals;
    std::map<BundleSignature, Int> running;
    for (PerClass& out : results) {
        if (out.degenerate_irreducible) rep.degenerate_irreducible = true;
        if (!out.unsupported.empty()) {
            rep.unsupported_image = true;
            rep.notes.push_back("uncertified centralizer: " + out.unsupported);
        }
        if (out.mult != 0) {
            running[out.sig] += out.mult;
            auto& t = totals[out.sig];
            t.signature = out.sig.str();
            ++t.class_count;
        }
        rep.classes.push_back(std::move(out.rec));
    }
    for (auto& [sig, t] : totals) {
        t.total = running[sig].str();
        rep.totals.push_back(t);
    }

    rep.notes.push_back("catalog completeness assumed: targets restricted to the "
                        "rational-entry finite rotation and spin groups");
    if (!g.is_spin())
        rep.notes.push_back("centralizers certified against the 24 signed-permutation "
                            "rotations plus an exact commutant check");

    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    if (!cache_path.empty()) {
        std::ofstream out(cache_path);
        if (out) {
            CensusReport stored = rep;
            stored.config.timing = false;  // cache is timing-free for diff stability
            out << stored.to_json();
        }
    }
    return rep;
}

}  // namespace g2c
