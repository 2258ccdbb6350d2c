#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveballs/range_engine.hpp"
#include "curveballs/rng.hpp"
#include "curveballs/vc_lab.hpp"
#include "curveballs/version.hpp"

namespace curveballs {

// Raised for anything wrong with input data (missing files, malformed
// records, dimension mismatches). The CLI maps these to exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Logging, controlled by the CURVEBALLS_LOG environment variable
// (quiet|warn|info|debug, default warn). Messages go to stderr.

enum class LogLevel { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("CURVEBALLS_LOG");
        if (!env) return LogLevel::Warn;
        const std::string v(env);
        if (v == "quiet") return LogLevel::Quiet;
        if (v == "info") return LogLevel::Info;
        if (v == "debug") return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

inline void log(LogLevel level, const std::string& msg) {
    if (level <= log_level() && level != LogLevel::Quiet) {
        const char* tag = level == LogLevel::Warn ? "warn" : level == LogLevel::Info ? "info" : "debug";
        std::cerr << "[curveballs:" << tag << "] " << msg << "\n";
    }
}

// ---------------------------------------------------------------------------
// Curve file format: JSON Lines, one object per curve,
//   {"id": "<string>", "points": [[x1,...,xd], ...]}
// UTF-8, finite numbers only, all points of one file share the dimension.

struct CurveRecord {
    std::string id;
    std::vector<std::vector<double>> points;
};

namespace detail {

inline Curve parse_curve_line(const std::string& line, std::size_t line_no) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw DataError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("points")) {
        throw DataError("line " + std::to_string(line_no) +
                        ": expected an object with 'id' and 'points'");
    }
    if (!obj["id"].is_string()) {
        throw DataError("line " + std::to_string(line_no) + ": 'id' must be a string");
    }
    const std::string id = obj["id"].get<std::string>();
    if (!obj["points"].is_array() || obj["points"].empty()) {
        throw DataError("line " + std::to_string(line_no) + ": record '" + id +
                        "' must carry a non-empty 'points' array");
    }
    std::vector<Point> vertices;
    std::size_t d = 0;
    for (const auto& pt : obj["points"]) {
        if (!pt.is_array() || pt.empty()) {
            throw DataError("line " + std::to_string(line_no) + ": record '" + id +
                            "' has a malformed point");
        }
        std::vector<double> coords;
        coords.reserve(pt.size());
        for (const auto& c : pt) {
            if (!c.is_number()) {
                throw DataError("line " + std::to_string(line_no) + ": record '" + id +
                                "' has a non-numeric coordinate");
            }
            const double value = c.get<double>();
            if (!std::isfinite(value)) {
                throw DataError("line " + std::to_string(line_no) + ": record '" + id +
                                "' has a non-finite coordinate");
            }
            coords.push_back(value);
        }
        if (d == 0) {
            d = coords.size();
        } else if (coords.size() != d) {
            throw DataError("line " + std::to_string(line_no) + ": record '" + id +
                            "' mixes point dimensions " + std::to_string(d) + " and " +
                            std::to_string(coords.size()));
        }
        vertices.emplace_back(std::move(coords));
    }
    return Curve(id, std::move(vertices));
}

} // namespace detail

inline Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    Dataset ds;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Curve curve = detail::parse_curve_line(line, line_no);
        if (!ds.empty() && curve.dim() != ds.dim()) {
            throw DataError("line " + std::to_string(line_no) + ": record '" + curve.id +
                            "' has dimension " + std::to_string(curve.dim()) +
                            " but the dataset is " + std::to_string(ds.dim()) + "-dimensional");
        }
        if (ds.find(curve.id)) {
            throw DataError("line " + std::to_string(line_no) + ": duplicate id '" + curve.id + "'");
        }
        ds.add(std::move(curve));
    }
    if (ds.empty()) throw DataError("'" + path + "' contains no curves");
    log(LogLevel::Info, "loaded " + std::to_string(ds.size()) + " curves (d=" +
                            std::to_string(ds.dim()) + ") from " + path);
    return ds;
}

inline nlohmann::json curve_to_json(const Curve& c) {
    nlohmann::json points = nlohmann::json::array();
    for (const Point& v : c.vertices) points.push_back(v.coords);
    return nlohmann::json{{"id", c.id}, {"points", points}};
}

inline std::string dataset_to_jsonl(const Dataset& ds) {
    std::string out;
    for (const Curve& c : ds.curves()) {
        out += curve_to_json(c).dump();
        out += '\n';
    }
    return out;
}

// Writes via a temporary file and renames on success, so a failed run never
// leaves a partial output behind.
inline void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write '" + tmp.string() + "'");
        out << contents;
        if (!out.flush()) throw DataError("short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
}

inline void save_dataset(const Dataset& ds, const std::string& path) {
    write_file_atomic(path, dataset_to_jsonl(ds));
}

// ---------------------------------------------------------------------------
// Synthetic datasets. Deterministic for a given seed; see rng.hpp for the
// sampler identity.

// n curves of m points each: start at the origin, steps uniform in [-1,1]^d.
inline Dataset generate_random_walk(std::size_t n, std::size_t m, std::size_t d,
                                    std::uint64_t seed) {
    if (n == 0 || m == 0 || d == 0) {
        throw std::invalid_argument("generate_random_walk: n, m, d must be positive");
    }
    Rng rng(seed);
    Dataset ds;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Point> vertices;
        vertices.reserve(m);
        Point cur(std::vector<double>(d, 0.0));
        vertices.push_back(cur);
        for (std::size_t t = 1; t < m; ++t) {
            for (std::size_t c = 0; c < d; ++c) cur[c] += uniform_in(rng, -1, 1);
            vertices.push_back(cur);
        }
        ds.add(Curve("walk-" + std::to_string(i), std::move(vertices)));
    }
    return ds;
}

// n copies of the template with each coordinate shifted by an independent
// uniform offset in [-noise, noise].
inline Dataset generate_perturbed_template(const Curve& tmpl, std::size_t n, double noise,
                                           std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_perturbed_template: n must be positive");
    if (noise < 0) throw std::invalid_argument("generate_perturbed_template: negative noise");
    Rng rng(seed);
    Dataset ds;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Point> vertices = tmpl.vertices;
        for (Point& v : vertices) {
            for (std::size_t c = 0; c < v.dim(); ++c) v[c] += uniform_in(rng, -noise, noise);
        }
        ds.add(Curve("tmpl-" + std::to_string(i), std::move(vertices)));
    }
    return ds;
}

// The ground set of the circle shattering construction as a dataset.
inline Dataset generate_circle_points(int k) {
    Dataset ds;
    for (Curve& c : circle_construction(k).ground) ds.add(std::move(c));
    return ds;
}

// A fixed unit zig-zag, the default template for perturbed generation.
inline Curve default_template(std::size_t m, std::size_t d) {
    if (m == 0 || d == 0) throw std::invalid_argument("default_template: m, d must be positive");
    std::vector<Point> vertices;
    vertices.reserve(m);
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<double> coords(d, 0.0);
        coords[0] = static_cast<double>(t);
        if (d > 1) coords[1] = static_cast<double>(t % 2);
        vertices.emplace_back(std::move(coords));
    }
    return Curve("template", std::move(vertices));
}

// ---------------------------------------------------------------------------
// Run configuration shared by the CLI subcommands. Flags beat config-file
// values beat these defaults; every result record echoes the full config.

struct RunConfig {
    std::string measure = "frechet";
    double radius = 1.0;
    double epsilon = 0.1;
    double delta = 0.1;
    double nu = 1.0;
    double constant_C = 0.5;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
    std::vector<std::string> inputs;
    std::string output; // empty = stdout

    nlohmann::json to_json() const {
        return nlohmann::json{
            {"measure", measure}, {"r", radius},        {"eps", epsilon},
            {"delta", delta},     {"nu", nu},           {"C", constant_C},
            {"seed", seed},       {"tol", tolerance},   {"inputs", inputs},
            {"out", output.empty() ? "-" : output},
        };
    }
};

inline nlohmann::json result_record(const std::string& command, const RunConfig& config,
                                    nlohmann::json result) {
    result["cmd"] = command;
    result["config"] = config.to_json();
    result["version"] = kVersion;
    return result;
}

} // namespace curveballs
