#pragma once

#include "alextor/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alextor::cli {

enum ExitCode { ok = 0, input_error = 1, not_applicable = 2, invariant_violation = 3 };

struct Output {
    Json json;
    std::string text;
    int exit_code = ok;
};

struct Global {
    unsigned precision_bits = kDefaultPrecisionBits;
    bool json = false;
};

struct Source {
    std::string complex_path;       // JSON complex, or
    std::string presentation_path;  // presentation + representation
    std::string representation_path;
};

Output twisted_alexander(const std::string& pres, const std::string& rep, std::optional<std::size_t> column,
                         const Global& g);
Output torsion(const Source& src, const std::string& dual, const Global& g);
Output homology(const Source& src, const Global& g);
Output mapping_torus(const std::string& path, const Global& g);
Output ruelle_predict(const std::vector<std::string>& from, const Global& g);
Output ruelle_truncate(const std::string& spectrum, const std::string& s, const std::string& max_length,
                       const Global& g);

struct VerifyArgs {
    std::uint64_t seed = 42;
    std::string suite = "all";
    std::size_t complexes = 0, monodromies = 0, jordans = 0, knots = 0, words = 0; // 0: default
    unsigned threads = 0;
    std::string artifacts = "verify-artifacts";
};

Output verify(const VerifyArgs& a, const Global& g);

} // namespace alextor::cli
