#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lipedge/classical.hpp"
#include "lipedge/lip_algebra.hpp"

namespace lipedge {

enum class Method { lip, gradient, laplace };

const char* method_name(Method m);

struct RunConfig {
    std::filesystem::path input;
    std::filesystem::path out_dir = ".";
    std::vector<Method> methods;  // distinct; at least one
    double m_bound = 1.0;
    NormalizeMode normalize = NormalizeMode::max;  // applies to the lip map;
                                                   // classical maps always use max
    bool emit_stats = false;
    int threads = 0;  // 0 = hardware concurrency
};

// Raw-map summary (before display normalization).
struct MethodStats {
    Method method = Method::lip;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::string border_policy;
    int neighborhood_size = 0;
};

// The stats report: a JSON object keyed by method name, sorted keys,
// UTF-8, byte-stable for identical inputs.
std::string emit_stats(const std::vector<MethodStats>& stats, int width, int height,
                       const LipParams& params);

// Loads the input, runs every selected method, writes <stem>_<method>.pgm
// (and <stem>_stats.json when requested) into out_dir. Returns 0 on success;
// on failure prints one distinct message to err and returns 1.
int run(const RunConfig& config, std::ostream& err);

}  // namespace lipedge
