#pragma once

#include "g2c/census.hpp"
#include "g2c/cohomology.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2c {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
    int jobs = 1;
    bool prune = false;
    int depth = 2;  // trace-schedule depth used for reported signatures
    std::string cache_dir;
    bool timing = true;
    bool strict = false;
};

struct ClassRecord {
    std::map<std::string, std::string> representative;  // generator -> element name
    std::string traces;  // comma-joined trace signature, kept flat for size
    int image_order = 0;
    bool irreducible = false;
    int h0 = 0;
    int h1 = 0;
    int walpuski = -1;  // -1: no affine realization available
    std::string bundle_signature;
    std::string multiplicity;  // "0" when excluded from the invariant
    int member_count = 0;
};

struct SignatureTotal {
    std::string signature;
    std::string total;
    int class_count = 0;
};

struct CensusReport {
    std::string tool_version;
    std::string presentation_digest;
    std::string target;
    RunConfig config;
    std::vector<ClassRecord> classes;
    std::vector<SignatureTotal> totals;
    std::vector<std::string> notes;
    bool degenerate_irreducible = false;
    bool unsupported_image = false;
    bool from_cache = false;
    double elapsed_ms = 0.0;

    std::string to_json() const;  // sorted keys; rationals as "p/q" strings
    static CensusReport from_json(const std::string& text);
};

std::string presentation_digest(const Presentation& p, const std::string& target,
                                const RunConfig& cfg);

CensusReport run_census(const Presentation& p, const TargetGroup& g, const RunConfig& cfg);

}  // namespace g2c
