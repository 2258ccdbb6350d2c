// curveballs command-line interface: pair distances and decisions, metric
// ball range queries (exact and sampled), sampling-bound calculators, kernel
// density estimates, shattering experiments, and synthetic data generation.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curveballs/curveballs.hpp"

namespace {

using curveballs::Curve;
using curveballs::Dataset;
using curveballs::Measure;
using curveballs::RunConfig;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::vector<std::string> measure_names() {
    std::vector<std::string> names;
    for (Measure m : {Measure::DiscreteHausdorff, Measure::DiscreteFrechet,
                      Measure::HausdorffDirectedFrom, Measure::HausdorffDirectedTo,
                      Measure::HausdorffSymmetric, Measure::WeakFrechet, Measure::Frechet}) {
        names.emplace_back(curveballs::measure_name(m));
    }
    return names;
}

Measure require_measure(const std::string& name) {
    const auto m = curveballs::measure_from_name(name);
    if (!m) throw CLI::ValidationError("--measure", "unknown measure '" + name + "'");
    return *m;
}

const Curve& first_curve(const Dataset& ds, const std::string& path) {
    if (ds.empty()) throw curveballs::DataError("'" + path + "' contains no curves");
    return ds.at(0);
}

void emit(const RunConfig& config, const std::string& payload) {
    if (config.output.empty()) {
        std::cout << payload;
    } else {
        curveballs::write_file_atomic(config.output, payload);
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw curveballs::DataError("cannot open config '" + path + "'");
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::exception& e) {
        throw curveballs::DataError("config '" + path + "': " + e.what());
    }
    if (obj.contains("measure")) config.measure = obj["measure"].get<std::string>();
    if (obj.contains("r")) config.radius = obj["r"].get<double>();
    if (obj.contains("eps")) config.epsilon = obj["eps"].get<double>();
    if (obj.contains("delta")) config.delta = obj["delta"].get<double>();
    if (obj.contains("nu")) config.nu = obj["nu"].get<double>();
    if (obj.contains("C")) config.constant_C = obj["C"].get<double>();
    if (obj.contains("seed")) config.seed = obj["seed"].get<std::uint64_t>();
    if (obj.contains("tol")) config.tolerance = obj["tol"].get<double>();
    if (obj.contains("out")) config.output = obj["out"].get<std::string>();
}

struct Cli {
    RunConfig config;
    std::string config_path;

    // dist
    bool dist_decide = false;
    bool dist_value = false;

    // query / kde
    std::string center_path;
    std::string probe_path;

    // sample-size
    bool separator_form = false;

    // shatter
    std::string construction = "circle";
    int shatter_k = 6;
    double shatter_R = 10.0;
    int shatter_t = 10;

    // gen
    std::string gen_kind = "random_walk";
    std::size_t gen_n = 10;
    std::size_t gen_m = 10;
    std::size_t gen_d = 2;
    double gen_noise = 0.1;
    int gen_k = 6;
    std::string template_path;
};

int run(int argc, char** argv) {
    Cli cli;

    // Config file values are applied before parsing, so explicit flags win.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            apply_config_file(cli.config, argv[i + 1]);
        }
    }

    CLI::App app{"curveballs: curve similarity decisions, range queries and shattering experiments"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --config appear after the subcommand name
    app.add_option("--config", cli.config_path, "JSON config file (flags override it)");

    auto add_common = [&](CLI::App* cmd, bool with_measure = true) {
        cmd->add_option("--out", cli.config.output, "output path (default: stdout)");
        if (with_measure) {
            cmd->add_option("--measure", cli.config.measure, "distance measure")
                ->check(CLI::IsMember(measure_names()));
        }
    };

    CLI::App* dist = app.add_subcommand("dist", "distance decision or value for a pair of curves");
    dist->add_option("inputs", cli.config.inputs, "two curve files (first curve of each)")
        ->expected(2)
        ->required();
    dist->add_flag("--decide", cli.dist_decide, "decide distance <= r");
    dist->add_flag("--value", cli.dist_value, "compute the distance value");
    dist->add_option("--r", cli.config.radius, "decision radius")->check(CLI::NonNegativeNumber);
    dist->add_option("--tol", cli.config.tolerance, "bisection tolerance")
        ->check(CLI::PositiveNumber);
    add_common(dist);

    CLI::App* query = app.add_subcommand("query", "exact metric-ball range count");
    query->add_option("inputs", cli.config.inputs, "dataset file")->expected(1)->required();
    query->add_option("--center", cli.center_path, "query center curve file")->required();
    query->add_option("--r", cli.config.radius, "ball radius")->check(CLI::NonNegativeNumber);
    add_common(query);

    CLI::App* approx = app.add_subcommand("approx-query", "sampled metric-ball range count");
    approx->add_option("inputs", cli.config.inputs, "dataset file")->expected(1)->required();
    approx->add_option("--center", cli.center_path, "query center curve file")->required();
    approx->add_option("--r", cli.config.radius, "ball radius")->check(CLI::NonNegativeNumber);
    approx->add_option("--eps", cli.config.epsilon, "additive error");
    approx->add_option("--delta", cli.config.delta, "failure probability");
    approx->add_option("--nu", cli.config.nu, "VC dimension estimate");
    approx->add_option("--C", cli.config.constant_C, "sampling constant");
    approx->add_option("--seed", cli.config.seed, "PRNG seed");
    add_common(approx);

    CLI::App* ssize = app.add_subcommand("sample-size", "epsilon-sample size calculator");
    ssize->add_option("--eps", cli.config.epsilon, "additive error");
    ssize->add_option("--delta", cli.config.delta, "failure probability");
    ssize->add_option("--nu", cli.config.nu, "VC dimension estimate");
    ssize->add_option("--C", cli.config.constant_C, "sampling constant");
    ssize->add_flag("--separator", cli.separator_form,
                    "use the perfect-separator learning bound instead");
    add_common(ssize, /*with_measure=*/false);

    CLI::App* kde_cmd = app.add_subcommand("kde", "kernel density estimate of a probe curve");
    kde_cmd->add_option("inputs", cli.config.inputs, "dataset file")->expected(1)->required();
    kde_cmd->add_option("--probe", cli.probe_path, "probe curve file")->required();
    kde_cmd->add_option("--tol", cli.config.tolerance, "distance tolerance (continuous measures)")
        ->check(CLI::PositiveNumber);
    add_common(kde_cmd);

    CLI::App* shatter = app.add_subcommand("shatter", "empirical shattering experiment");
    shatter->add_option("--construction", cli.construction, "circle | random")
        ->check(CLI::IsMember({"circle", "random"}));
    shatter->add_option("--k", cli.shatter_k, "circle construction size")->check(CLI::Range(1, 16));
    shatter->add_option("--R", cli.shatter_R, "circle construction parameter")
        ->check(CLI::PositiveNumber);
    shatter->add_option("--t", cli.shatter_t, "random ground-set size")->check(CLI::Range(1, 24));
    shatter->add_option("--seed", cli.config.seed, "PRNG seed");
    add_common(shatter);

    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic dataset");
    gen->add_option("--kind", cli.gen_kind, "random_walk | perturbed_template | circle_points")
        ->check(CLI::IsMember({"random_walk", "perturbed_template", "circle_points"}));
    gen->add_option("--n", cli.gen_n, "number of curves")->check(CLI::PositiveNumber);
    gen->add_option("--m", cli.gen_m, "vertices per curve")->check(CLI::PositiveNumber);
    gen->add_option("--d", cli.gen_d, "dimension")->check(CLI::PositiveNumber);
    gen->add_option("--noise", cli.gen_noise, "perturbation amplitude")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--k", cli.gen_k, "circle point count")->check(CLI::Range(1, 62));
    gen->add_option("--template", cli.template_path, "template curve file");
    gen->add_option("--seed", cli.config.seed, "PRNG seed");
    gen->add_option("--out", cli.config.output, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(dist)) {
            if (!cli.dist_decide && !cli.dist_value) {
                std::cerr << "dist: pass --decide and/or --value\n";
                return kExitUsage;
            }
            const Measure measure = require_measure(cli.config.measure);
            const Dataset a = curveballs::load_dataset(cli.config.inputs[0]);
            const Dataset b = curveballs::load_dataset(cli.config.inputs[1]);
            const Curve& ca = first_curve(a, cli.config.inputs[0]);
            const Curve& cb = first_curve(b, cli.config.inputs[1]);
            json result{{"a", ca.id}, {"b", cb.id}};
            if (cli.dist_decide) {
                result["decision"] = curveballs::decide(measure, ca, cb, cli.config.radius);
            }
            if (cli.dist_value) {
                result["value"] =
                    curveballs::distance_value(measure, ca, cb, cli.config.tolerance);
            }
            emit(cli.config, curveballs::result_record("dist", cli.config, result).dump() + "\n");
        } else if (app.got_subcommand(query)) {
            const Measure measure = require_measure(cli.config.measure);
            const Dataset ds = curveballs::load_dataset(cli.config.inputs[0]);
            const Dataset center = curveballs::load_dataset(cli.center_path);
            const auto res = curveballs::exact_count(
                ds, {measure, first_curve(center, cli.center_path), cli.config.radius});
            json result{{"count", res.count}, {"ids", res.ids}};
            emit(cli.config, curveballs::result_record("query", cli.config, result).dump() + "\n");
        } else if (app.got_subcommand(approx)) {
            const Measure measure = require_measure(cli.config.measure);
            const Dataset ds = curveballs::load_dataset(cli.config.inputs[0]);
            const Dataset center = curveballs::load_dataset(cli.center_path);
            const curveballs::SampleSpec spec{cli.config.epsilon, cli.config.delta, cli.config.nu,
                                              cli.config.constant_C};
            const auto res = curveballs::approx_count(
                ds, {measure, first_curve(center, cli.center_path), cli.config.radius}, spec,
                cli.config.seed);
            json result{{"estimate", res.estimate},
                        {"sample_size", res.sample_size},
                        {"sampler", curveballs::kSamplerId},
                        {"sample_ids", res.sample_ids}};
            emit(cli.config,
                 curveballs::result_record("approx-query", cli.config, result).dump() + "\n");
        } else if (app.got_subcommand(ssize)) {
            const curveballs::SampleSpec spec{cli.config.epsilon, cli.config.delta, cli.config.nu,
                                              cli.config.constant_C};
            json result{{"n", cli.separator_form ? curveballs::separator_sample_size(spec)
                                                 : curveballs::sample_size(spec)},
                        {"form", cli.separator_form ? "separator" : "epsilon-sample"}};
            emit(cli.config,
                 curveballs::result_record("sample-size", cli.config, result).dump() + "\n");
        } else if (app.got_subcommand(kde_cmd)) {
            const Measure measure = require_measure(cli.config.measure);
            const Dataset ds = curveballs::load_dataset(cli.config.inputs[0]);
            const Dataset probe = curveballs::load_dataset(cli.probe_path);
            const double v = curveballs::kde(ds, first_curve(probe, cli.probe_path), measure,
                                             cli.config.tolerance);
            emit(cli.config,
                 curveballs::result_record("kde", cli.config, json{{"kde", v}}).dump() + "\n");
        } else if (app.got_subcommand(shatter)) {
            const Measure measure = require_measure(cli.config.measure);
            const curveballs::ShatterReport report =
                cli.construction == "circle"
                    ? curveballs::circle_experiment(cli.shatter_k, cli.shatter_R, measure)
                    : curveballs::random_points_experiment(cli.shatter_t, cli.config.seed, measure);
            json result{{"ground_size", report.ground_size},
                        {"distinct_subsets", report.distinct_subsets},
                        {"largest_shattered", report.largest_shattered},
                        {"bound_formula_value", report.bound_formula_value},
                        {"construction", report.construction}};
            emit(cli.config,
                 curveballs::result_record("shatter", cli.config, result).dump() + "\n");
        } else if (app.got_subcommand(gen)) {
            Dataset ds;
            if (cli.gen_kind == "random_walk") {
                ds = curveballs::generate_random_walk(cli.gen_n, cli.gen_m, cli.gen_d,
                                                      cli.config.seed);
            } else if (cli.gen_kind == "perturbed_template") {
                Curve tmpl = cli.template_path.empty()
                                 ? curveballs::default_template(cli.gen_m, cli.gen_d)
                                 : first_curve(curveballs::load_dataset(cli.template_path),
                                               cli.template_path);
                ds = curveballs::generate_perturbed_template(tmpl, cli.gen_n, cli.gen_noise,
                                                             cli.config.seed);
            } else {
                ds = curveballs::generate_circle_points(cli.gen_k);
            }
            if (cli.config.output.empty()) {
                std::cout << curveballs::dataset_to_jsonl(ds);
            } else {
                curveballs::save_dataset(ds, cli.config.output);
                json result{{"curves", ds.size()},
                            {"dim", ds.dim()},
                            {"kind", cli.gen_kind},
                            {"path", cli.config.output}};
                std::cout << curveballs::result_record("gen", cli.config, result).dump() + "\n";
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const curveballs::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return kExitData;
    }
}
