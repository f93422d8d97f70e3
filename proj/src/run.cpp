#include "lipedge/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>

#include <json.hpp>

#include "lipedge/contrast.hpp"
#include "lipedge/gray_codec.hpp"
#include "lipedge/neighborhood.hpp"
#include "lipedge/parallel.hpp"
#include "lipedge/pgm.hpp"

namespace lipedge {

const char* method_name(Method m) {
    switch (m) {
        case Method::lip: return "lip";
        case Method::gradient: return "gradient";
        case Method::laplace: return "laplace";
    }
    return "?";
}

namespace {

MethodStats summarize(Method method, std::span<const double> values, const char* border_policy,
                      int neighborhood_size) {
    MethodStats s;
    s.method = method;
    s.border_policy = border_policy;
    s.neighborhood_size = neighborhood_size;
    if (values.empty()) return s;
    double lo = values[0];
    double hi = values[0];
    double sum = 0.0;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
    }
    s.min = lo;
    s.max = hi;
    s.mean = sum / static_cast<double>(values.size());
    return s;
}

bool write_output(const GrayImage& img, const std::filesystem::path& path, std::ostream& err) {
    try {
        write_pgm_file(img, path, PgmFormat::raw);
        return true;
    } catch (const std::exception& e) {
        err << "error: cannot write output file '" << path.string() << "': " << e.what() << "\n";
        return false;
    }
}

}  // namespace

std::string emit_stats(const std::vector<MethodStats>& stats, int width, int height,
                       const LipParams& params) {
    nlohmann::json root(nlohmann::json::value_t::object);
    for (const MethodStats& s : stats) {
        nlohmann::json entry;
        entry["min"] = s.min;
        entry["max"] = s.max;
        entry["mean"] = s.mean;
        entry["width"] = width;
        entry["height"] = height;
        entry["m_bound"] = params.m_bound;
        entry["max_level"] = params.max_level;
        entry["border_policy"] = s.border_policy;
        entry["neighborhood_size"] = s.neighborhood_size;
        root[method_name(s.method)] = std::move(entry);
    }
    return root.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& err) {
    if (config.methods.empty()) {
        err << "error: no method selected\n";
        return 1;
    }
    if (!(config.m_bound > 0.0) || !std::isfinite(config.m_bound)) {
        err << "error: m-bound must be a positive finite real, got " << config.m_bound << "\n";
        return 1;
    }
    const LipParams params{config.m_bound, 255};

    std::vector<std::uint8_t> bytes;
    {
        std::ifstream in(config.input, std::ios::binary);
        if (!in) {
            err << "error: cannot read input file '" << config.input.string() << "'\n";
            return 1;
        }
        bytes.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (in.bad()) {
            err << "error: cannot read input file '" << config.input.string() << "'\n";
            return 1;
        }
    }

    std::optional<GrayImage> img;
    try {
        img.emplace(read_pgm(bytes));
    } catch (const PgmError& e) {
        err << "error: malformed PGM input: " << e.what() << "\n";
        return 1;
    }
    if (img->maxval() != params.max_level) {
        err << "error: input maxval " << img->maxval() << " does not match the pipeline's "
            << "physical maximum " << params.max_level << "\n";
        return 1;
    }

    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (!std::filesystem::is_directory(config.out_dir)) {
        err << "error: output directory '" << config.out_dir.string() << "' is not writable\n";
        return 1;
    }

    const int threads = resolve_thread_count(config.threads);
    const std::string stem = config.input.stem().string();
    const GrayCodec codec(params);

    // dedupe while preserving first-seen order
    std::vector<Method> methods;
    for (Method m : config.methods) {
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
            methods.push_back(m);
        }
    }

    std::vector<MethodStats> stats;
    for (Method method : methods) {
        const auto out_path = config.out_dir / (stem + "_" + method_name(method) + ".pgm");
        switch (method) {
            case Method::lip: {
                const LogImage f = codec.encode_image(*img, threads);
                const ContrastMap c = contrast_map(f, Neighborhood::eight(), threads);
                stats.push_back(summarize(method, c.values(), "in-bounds",
                                          Neighborhood::eight().size()));
                if (!write_output(normalize_for_display(c, config.normalize, codec), out_path,
                                  err)) {
                    return 1;
                }
                break;
            }
            case Method::gradient: {
                const ResponseMap r = gradient_magnitude(*img, threads);
                stats.push_back(summarize(method, r.values, "replicate", 9));
                if (!write_output(normalize_for_display(r, NormalizeMode::max, codec), out_path,
                                  err)) {
                    return 1;
                }
                break;
            }
            case Method::laplace: {
                const ResponseMap r = laplace_response(*img, threads);
                stats.push_back(summarize(method, r.values, "replicate", 9));
                if (!write_output(normalize_for_display(r, NormalizeMode::max, codec), out_path,
                                  err)) {
                    return 1;
                }
                break;
            }
        }
    }

    if (config.emit_stats) {
        const auto stats_path = config.out_dir / (stem + "_stats.json");
        const std::string json = emit_stats(stats, img->width(), img->height(), params);
        std::ofstream out(stats_path, std::ios::binary | std::ios::trunc);
        out.write(json.data(), static_cast<std::streamsize>(json.size()));
        if (!out) {
            err << "error: cannot write output file '" << stats_path.string() << "'\n";
            return 1;
        }
    }
    return 0;
}

}  // namespace lipedge
