#pragma once

// Randomized verification harness. Corpora are generated serially from the
// seed, items are checked concurrently, and results are merged by index, so
// the report depends only on the seed and the sizes.

#include "alextor/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alextor {

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::string suite = "all";      // all, complexes, monodromy, knots, fox
    std::size_t complexes = 200;
    std::size_t monodromies = 60;
    std::size_t jordans = 30;
    std::size_t knots = 60;
    std::size_t words = 500;
    unsigned threads = 0;           // 0: hardware concurrency
    unsigned precision_bits = kDefaultPrecisionBits;
};

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures; // first few, "item i: message"
};

struct Artifact {
    std::string name;
    Json payload;
};

struct VerificationRun {
    VerifyOptions options;
    std::vector<PropertyResult> properties;
    std::vector<Artifact> artifacts;
    bool ok() const;
};

/// Throws InputError on an unknown suite name.
VerificationRun verify_suite(const VerifyOptions& opt);

Json to_json(const VerificationRun& run);

/// Writes every artifact as <dir>/<name>.json.
void save_artifacts(const VerificationRun& run, const std::string& dir);

} // namespace alextor
