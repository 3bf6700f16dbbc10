#include "bvs/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "bvs/diagnostics.hpp"
#include "bvs/io.hpp"
#include "bvs/parallel.hpp"
#include "bvs/simulate.hpp"

namespace bvs {

namespace {

constexpr const char* kSchemaVersion = "bvs/1";

struct FitArgs {
    std::string data_path;
    std::string response;
    std::string family = "logistic";
    double alpha = 0.999;
    double lambda = 1e-3;
    double a4 = 0.05;
    double a7 = 0.0;
    int s_max = 10;
    std::int64_t n_iter = 50000;
    std::int64_t n_burnin = -1;
    int n_chains = 1;
    std::uint64_t seed = 0;
    int top_k = 20;
    int threads = 0;  // 0: default_thread_count()
    std::string out_path = "fit_report.json";
    bool quiet = false;
};

void write_support_array(JsonWriter& w, const ModelSupport& s) {
    w.begin_array();
    for (int idx : s.indices()) w.value(idx);
    w.end_array();
}

void write_hyperparam_check(JsonWriter& w, const HyperparamCheck& check) {
    w.begin_object();
    w.key("lambda_bound");
    w.begin_object();
    w.field("satisfied", check.lambda_bound_satisfied);
    w.field("slack", check.lambda_bound_slack);
    w.end_object();
    w.key("selection_bound");
    w.begin_object();
    w.field("satisfied", check.selection_bound_satisfied);
    w.field("slack", check.selection_bound_slack);
    w.field("rhs", check.selection_rhs);
    w.field("min_a4", check.min_a4);
    w.end_object();
    w.end_object();
}

int cmd_fit(const FitArgs& args) {
    Dataset data;
    Family family;
    try {
        family = family_from_name(args.family);
        data = read_csv_dataset(args.data_path, args.response);
        data.validate(family);
    } catch (const std::exception& e) {
        std::cerr << "bvs fit: " << e.what() << "\n";
        return 2;
    }

    Hyperparams hyper = Hyperparams::for_family(family);
    hyper.alpha = args.alpha;
    hyper.lambda = args.lambda;
    hyper.a4 = args.a4;
    hyper.a7 = args.a7;
    hyper.s_max = args.s_max;
    try {
        hyper.validate(data.n(), data.p());
    } catch (const std::exception& e) {
        std::cerr << "bvs fit: " << e.what() << "\n";
        return 2;
    }

    const int threads = args.threads > 0 ? args.threads : default_thread_count();
    FitCache cache(family, data, FitOptions::defaults(family));
    std::vector<PosteriorSummary> chains(static_cast<std::size_t>(args.n_chains));
    std::vector<std::uint64_t> chain_seeds(static_cast<std::size_t>(args.n_chains));
    std::string chain_error;
    std::mutex error_mutex;
    parallel_for(args.n_chains, threads, [&](int c) {
        ChainOptions opts;
        opts.n_iter = args.n_iter;
        opts.n_burnin = args.n_burnin;
        opts.top_k = args.top_k;
        opts.seed = derive_seed(args.seed, static_cast<std::uint64_t>(c));
        chain_seeds[static_cast<std::size_t>(c)] = opts.seed;
        try {
            chains[static_cast<std::size_t>(c)] = run_chain(hyper, cache, opts);
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            chain_error = e.what();
        }
    });
    if (!chain_error.empty()) {
        std::cerr << "bvs fit: " << chain_error << "\n";
        return 1;
    }
    if (cache.invalid_fits() > 0 && cache.valid_fits() == 0) {
        std::cerr << "bvs fit: no valid model found; every attempted fit failed\n";
        return 3;
    }
    const PosteriorSummary merged = merge_summaries(chains, args.top_k);
    const HyperparamCheck check =
        check_hyperparams(hyper, static_cast<int>(data.p()), std::nullopt);

    JsonWriter w;
    w.begin_object();
    w.field("schema_version", kSchemaVersion);
    w.field("command", "fit");
    w.key("config");
    w.begin_object();
    w.field("data", args.data_path);
    w.field("response", args.response);
    w.field("family", family_name(family));
    w.field("alpha", hyper.alpha);
    w.field("lambda", hyper.lambda);
    w.field("a4", hyper.a4);
    w.field("a7", hyper.a7);
    w.field("s_max", hyper.s_max);
    w.field("n_iter", merged.n_iter / args.n_chains);
    w.field("n_burnin", merged.n_burnin / args.n_chains);
    w.field("n_chains", args.n_chains);
    w.field("threads", threads);
    w.end_object();
    w.field("seed", args.seed);
    w.field("n", static_cast<std::int64_t>(data.n()));
    w.field("p", static_cast<std::int64_t>(data.p()));
    w.key("labels");
    w.begin_array();
    for (const auto& label : data.labels) w.value(label);
    w.end_array();
    w.key("hyperparam_check");
    write_hyperparam_check(w, check);
    w.key("inclusion_prob");
    w.begin_array();
    for (Eigen::Index j = 0; j < merged.inclusion_prob.size(); ++j) {
        w.value(merged.inclusion_prob[j]);
    }
    w.end_array();
    w.key("top_models");
    w.begin_array();
    for (const auto& tm : merged.top_models) {
        w.begin_object();
        w.key("indices");
        write_support_array(w, tm.support);
        w.field("visits", tm.visits);
        w.field("log_weight", tm.weight.value);
        w.field("log_prior", tm.weight.log_prior);
        w.field("log_laplace", tm.weight.log_laplace);
        w.end_object();
    }
    w.end_array();
    w.field("acceptance_rate", merged.acceptance_rate);
    w.key("chains");
    w.begin_array();
    for (std::size_t c = 0; c < chains.size(); ++c) {
        w.begin_object();
        w.field("seed", chain_seeds[c]);
        w.field("acceptance_rate", chains[c].acceptance_rate);
        w.end_object();
    }
    w.end_array();
    w.field("valid_fits", cache.valid_fits());
    w.field("invalid_fits", cache.invalid_fits());
    w.end_object();

    try {
        write_text_file(args.out_path, w.str() + "\n");
    } catch (const std::exception& e) {
        std::cerr << "bvs fit: " << e.what() << "\n";
        return 1;
    }
    if (!args.quiet) std::cerr << "bvs fit: report written to " << args.out_path << "\n";
    return 0;
}

struct SimulateArgs {
    std::string config_path;
    std::string out_path = "sim_metrics.json";
    int threads = 0;
    std::uint64_t seed_override = 0;
    bool has_seed_override = false;
    bool quiet = false;
};

SimConfig parse_sim_config(const nlohmann::json& root) {
    if (!root.contains("schema_version") || root["schema_version"] != kSchemaVersion) {
        throw input_error("config: missing or unsupported schema_version (expected '" +
                          std::string(kSchemaVersion) + "')");
    }
    if (!root.contains("sim")) throw input_error("config: missing 'sim' section");
    const auto& sim = root["sim"];

    SimConfig cfg;
    cfg.family = family_from_name(sim.at("family").get<std::string>());
    cfg.n = sim.at("n").get<int>();
    cfg.p = sim.at("p").get<int>();
    cfg.s0 = sim.at("s0").get<int>();
    if (sim.contains("signal_values")) {
        cfg.signal_values = sim["signal_values"].get<std::vector<double>>();
        cfg.random_signs = sim.value("random_signs", false);
    }
    if (sim.contains("signal_range")) {
        const auto range = sim["signal_range"].get<std::vector<double>>();
        if (range.size() != 2) throw input_error("config: signal_range must be [min, max]");
        cfg.signal_range = {range[0], range[1]};
        cfg.random_signs = sim.value("random_signs", true);
    }
    cfg.seed = sim.value("seed", std::uint64_t{0});
    cfg.replications = sim.value("replications", 20);
    cfg.prefer_exact = sim.value("prefer_exact", false);

    if (sim.contains("design")) {
        const auto& design = sim["design"];
        const std::string kind = design.value("kind", "iid_gaussian");
        if (kind == "iid_gaussian") {
            cfg.design.kind = DesignSpec::Kind::iid_gaussian;
        } else if (kind == "gaussian_covariance") {
            cfg.design.kind = DesignSpec::Kind::gaussian_covariance;
            const auto rows = design.at("covariance").get<std::vector<std::vector<double>>>();
            cfg.design.covariance.resize(static_cast<Eigen::Index>(rows.size()),
                                         static_cast<Eigen::Index>(rows.size()));
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != rows.size()) throw input_error("config: covariance not square");
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    cfg.design.covariance(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                        rows[i][j];
                }
            }
        } else {
            throw input_error("config: unknown design kind '" + kind + "'");
        }
    }

    cfg.hyper = Hyperparams::for_family(cfg.family);
    if (root.contains("hyperparams")) {
        const auto& h = root["hyperparams"];
        cfg.hyper.alpha = h.value("alpha", cfg.hyper.alpha);
        cfg.hyper.lambda = h.value("lambda", cfg.hyper.lambda);
        cfg.hyper.a4 = h.value("a4", cfg.hyper.a4);
        cfg.hyper.a7 = h.value("a7", cfg.hyper.a7);
        cfg.hyper.s_max = h.value("s_max", cfg.hyper.s_max);
    }
    if (root.contains("chain")) {
        const auto& c = root["chain"];
        cfg.chain.n_iter = c.value("n_iter", cfg.chain.n_iter);
        cfg.chain.n_burnin = c.value("n_burnin", cfg.chain.n_burnin);
        cfg.chain.top_k = c.value("top_k", cfg.chain.top_k);
    }
    return cfg;
}

int cmd_simulate(const SimulateArgs& args) {
    nlohmann::json root;
    SimConfig cfg;
    try {
        std::ifstream in(args.config_path);
        if (!in) throw input_error(args.config_path + ": cannot open file");
        root = nlohmann::json::parse(in);
        cfg = parse_sim_config(root);
        if (args.has_seed_override) cfg.seed = args.seed_override;
        cfg.threads = args.threads > 0 ? args.threads : default_thread_count();
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "bvs simulate: " << e.what() << "\n";
        return 2;
    }

    SelectionMetrics metrics;
    try {
        metrics = run_experiment(cfg);
    } catch (const std::exception& e) {
        std::cerr << "bvs simulate: " << e.what() << "\n";
        return 1;
    }

    JsonWriter w;
    w.begin_object();
    w.field("schema_version", kSchemaVersion);
    w.field("command", "simulate");
    w.key("config");
    w.begin_object();
    w.field("family", family_name(cfg.family));
    w.field("n", cfg.n);
    w.field("p", cfg.p);
    w.field("s0", cfg.s0);
    w.field("seed", cfg.seed);
    w.field("replications", cfg.replications);
    w.field("alpha", cfg.hyper.alpha);
    w.field("lambda", cfg.hyper.lambda);
    w.field("a4", cfg.hyper.a4);
    w.field("a7", cfg.hyper.a7);
    w.field("s_max", cfg.hyper.s_max);
    w.field("n_iter", cfg.chain.n_iter);
    w.field("n_burnin", cfg.chain.n_burnin >= 0 ? cfg.chain.n_burnin : cfg.chain.n_iter / 10);
    w.field("prefer_exact", cfg.prefer_exact);
    w.end_object();
    w.field("exact_recovery_rate", metrics.exact_recovery_rate);
    w.field("mean_posterior_mass_s0", metrics.mean_posterior_mass_s0);
    w.field("mean_false_positives", metrics.mean_false_positives);
    w.field("mean_false_negatives", metrics.mean_false_negatives);
    w.key("replications");
    w.begin_array();
    for (const auto& rep : metrics.replications) {
        w.begin_object();
        w.field("replication", rep.replication);
        w.field("seed", rep.seed);
        w.field("recovered", rep.recovered);
        w.field("posterior_mass_s0", rep.posterior_mass_s0);
        w.field("false_positives", rep.false_positives);
        w.field("false_negatives", rep.false_negatives);
        w.key("modal_model");
        write_support_array(w, rep.modal);
        w.field("acceptance_rate", rep.acceptance_rate);
        w.field("used_enumeration", rep.used_enumeration);
        w.end_object();
    }
    w.end_array();
    w.end_object();

    try {
        write_text_file(args.out_path, w.str() + "\n");
    } catch (const std::exception& e) {
        std::cerr << "bvs simulate: " << e.what() << "\n";
        return 1;
    }
    if (!args.quiet) std::cerr << "bvs simulate: metrics written to " << args.out_path << "\n";
    return 0;
}

struct DiagnoseArgs {
    std::string data_path;
    std::string response;
    std::string family = "logistic";
    std::string theta0_path;
    std::string supports_arg;  // "1,3,5;2,4"
    int phi_level_max = 2;
    std::uint64_t seed = 0;
    std::string out_path = "diagnostics_report.json";
    bool quiet = false;
};

std::vector<ModelSupport> parse_supports(const std::string& arg) {
    std::vector<ModelSupport> supports;
    std::string group;
    std::istringstream stream(arg);
    while (std::getline(stream, group, ';')) {
        if (group.empty()) continue;
        std::vector<int> indices;
        std::istringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) indices.push_back(std::stoi(item));
        supports.emplace_back(std::move(indices));
    }
    return supports;
}

int cmd_diagnose(const DiagnoseArgs& args) {
    Dataset data;
    Family family;
    Eigen::VectorXd theta0;
    std::vector<ModelSupport> supports;
    try {
        family = family_from_name(args.family);
        data = read_csv_dataset(args.data_path, args.response);
        data.validate(family);

        std::ifstream in(args.theta0_path);
        if (!in) throw input_error(args.theta0_path + ": cannot open file");
        const auto values = nlohmann::json::parse(in).get<std::vector<double>>();
        if (static_cast<Eigen::Index>(values.size()) != data.p()) {
            throw input_error("theta0 length " + std::to_string(values.size()) +
                              " does not match p = " + std::to_string(data.p()));
        }
        theta0 = Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                   static_cast<Eigen::Index>(values.size()));
        supports = parse_supports(args.supports_arg);
        for (const auto& s : supports) {
            if (!s.within(static_cast<int>(data.p()))) {
                throw input_error("support " + s.to_string() + " exceeds p");
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "bvs diagnose: " << e.what() << "\n";
        return 2;
    }

    DiagnosticsReport report;
    try {
        report = run_diagnostics(family, data, theta0, supports, args.phi_level_max, args.seed);
    } catch (const std::exception& e) {
        std::cerr << "bvs diagnose: " << e.what() << "\n";
        return 1;
    }

    JsonWriter w;
    w.begin_object();
    w.field("schema_version", kSchemaVersion);
    w.field("command", "diagnose");
    w.key("config");
    w.begin_object();
    w.field("data", args.data_path);
    w.field("response", args.response);
    w.field("family", family_name(family));
    w.field("phi_level_max", args.phi_level_max);
    w.field("seed", args.seed);
    w.end_object();
    w.key("per_support");
    w.begin_array();
    for (const auto& d : report.per_support) {
        w.begin_object();
        w.key("indices");
        write_support_array(w, d.support);
        w.field("xi_norm", d.xi_norm);
        w.field("delta_mis", d.delta_mis);
        w.field("delta_mis_tilde", d.delta_mis_tilde);
        w.field("zeta", d.zeta);
        w.field("rho_min", d.rho_min);
        w.field("rho_max", d.rho_max);
        w.field("kappa_n", d.kappa);
        w.end_object();
    }
    w.end_array();
    w.key("phi1");
    w.begin_array();
    for (double v : report.phi1) w.value(v);
    w.end_array();
    w.key("phi2");
    w.begin_array();
    for (double v : report.phi2) w.value(v);
    w.end_array();
    w.field("sigma_min_sq", report.scalars.sigma_min_sq);
    w.field("sigma_max_sq", report.scalars.sigma_max_sq);
    w.field("nu_n", report.scalars.nu_n);
    w.field("beta_min", report.scalars.beta_min);
    w.field("kappa_n", report.kappa_max);
    w.field("k_cubic", report.k_cubic);
    w.key("quad_residuals");
    w.begin_array();
    for (const auto& sample : report.quad_residuals) {
        w.begin_object();
        w.field("epsilon", sample.epsilon);
        w.field("residual", sample.residual);
        w.end_object();
    }
    w.end_array();
    w.end_object();

    try {
        write_text_file(args.out_path, w.str() + "\n");
    } catch (const std::exception& e) {
        std::cerr << "bvs diagnose: " << e.what() << "\n";
        return 1;
    }
    if (!args.quiet) std::cerr << "bvs diagnose: report written to " << args.out_path << "\n";
    return 0;
}

struct OracleArgs {
    std::string family = "logistic";
    std::uint64_t seed = 1;
    int mc_draws = 10000;
    std::int64_t chain_iters = 200000;
    std::string out_path;  // optional JSON copy of the results
    bool quiet = false;
};

// Laplace-vs-MC and chain-vs-enumeration cross-checks on seeded synthetic
// data; prints one pass/fail line per tolerance.
int cmd_oracle(const OracleArgs& args) {
    const Family family = family_from_name(args.family);
    Rng rng(args.seed);
    bool all_pass = true;

    // Laplace vs Monte Carlo on a small model.
    SimConfig gen;
    gen.family = family;
    gen.n = 500;
    gen.p = 10;
    gen.s0 = 2;
    gen.signal_values = {1.0, -0.5};
    if (family == Family::poisson) gen.signal_values = {0.8, -0.4};
    gen.hyper = Hyperparams::for_family(family);
    const Eigen::VectorXd theta0 = [&] {
        Eigen::VectorXd t = Eigen::VectorXd::Zero(gen.p);
        for (std::size_t k = 0; k < gen.signal_values.size(); ++k) {
            t[static_cast<Eigen::Index>(k)] = gen.signal_values[k];
        }
        return t;
    }();
    const Eigen::MatrixXd x = gen_design(gen.design, gen.n, gen.p, rng);
    const Eigen::VectorXd y = gen_response(family, x, theta0, rng);
    const Dataset data(x, y);

    Hyperparams hyper = Hyperparams::for_family(family);
    hyper.alpha = 0.99;
    hyper.lambda = 1.0;
    hyper.s_max = 3;

    double worst_gap = 0.0;
    double worst_band = 0.0;
    bool laplace_pass = true;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> idx = {1 + static_cast<int>(rng.uniform_below(10))};
        if (rng.bernoulli(0.5)) {
            int extra = 1 + static_cast<int>(rng.uniform_below(10));
            while (extra == idx[0]) extra = 1 + static_cast<int>(rng.uniform_below(10));
            idx.push_back(extra);
        }
        const ModelSupport s(idx);
        const FitResult fit = fit_mle(family, data, s, FitOptions::defaults(family));
        if (!fit.valid()) continue;
        const McMarginal mc = log_marginal_mc(family, data, s, fit, hyper, args.mc_draws, rng);
        const double gap = std::fabs(mc.estimate - log_laplace_marginal(fit, hyper, s.size()));
        const double band = 3.0 * mc.std_err + 0.05;
        worst_gap = std::max(worst_gap, gap);
        worst_band = band;
        if (gap > band) laplace_pass = false;
    }
    std::cout << (laplace_pass ? "[PASS]" : "[FAIL]")
              << " laplace_vs_mc: worst |log-gap| = " << worst_gap
              << " (band 3*std_err + 0.05 = " << worst_band << ")\n";
    all_pass = all_pass && laplace_pass;

    // Chain vs exact enumeration.
    FitCache cache(family, data, FitOptions::defaults(family));
    hyper.lambda = 1e-3;
    hyper.alpha = 0.999;
    const auto exact = enumerate_exact(hyper, cache);
    ChainOptions chain_opts;
    chain_opts.n_iter = args.chain_iters;
    chain_opts.seed = derive_seed(args.seed, 7);
    const PosteriorSummary summary = run_chain(hyper, cache, chain_opts);
    const double tv =
        tv_distance(summary.visit_counts, summary.n_iter - summary.n_burnin, exact);
    const bool chain_pass = tv <= 0.05;
    std::cout << (chain_pass ? "[PASS]" : "[FAIL]") << " chain_vs_enumeration: TV = " << tv
              << " (tolerance 0.05)\n";
    all_pass = all_pass && chain_pass;

    if (!args.out_path.empty()) {
        JsonWriter w;
        w.begin_object();
        w.field("schema_version", kSchemaVersion);
        w.field("command", "oracle");
        w.field("family", family_name(family));
        w.field("seed", args.seed);
        w.field("laplace_vs_mc_pass", laplace_pass);
        w.field("laplace_worst_gap", worst_gap);
        w.field("chain_vs_enumeration_pass", chain_pass);
        w.field("chain_tv", tv);
        w.end_object();
        write_text_file(args.out_path, w.str() + "\n");
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Empirical-prior Bayesian variable selection for sparse GLMs"};
    app.require_subcommand(1);

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "Run the model-support sampler on a CSV dataset");
    fit->add_option("--data", fit_args.data_path, "CSV file with a header row")->required();
    fit->add_option("--response", fit_args.response, "response column name")->required();
    fit->add_option("--family", fit_args.family, "logistic or poisson");
    fit->add_option("--alpha", fit_args.alpha, "fractional-likelihood power");
    fit->add_option("--lambda", fit_args.lambda, "slab precision scale");
    fit->add_option("--a4", fit_args.a4, "complexity-prior exponent");
    fit->add_option("--a7", fit_args.a7, "lambda decay exponent (informational)");
    fit->add_option("--s-max", fit_args.s_max, "largest model size");
    fit->add_option("--iters", fit_args.n_iter, "MH iterations per chain");
    fit->add_option("--burnin", fit_args.n_burnin, "burn-in iterations (default iters/10)");
    fit->add_option("--chains", fit_args.n_chains, "independent chains");
    fit->add_option("--seed", fit_args.seed, "master seed");
    fit->add_option("--top-k", fit_args.top_k, "models kept in the report");
    fit->add_option("--threads", fit_args.threads, "worker threads (default $BVS_THREADS or 1)");
    fit->add_option("--out", fit_args.out_path, "report path");
    fit->add_flag("--quiet", fit_args.quiet, "suppress the completion note");

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Run a replication experiment from a config");
    simulate->add_option("--config", sim_args.config_path, "JSON config file")->required();
    simulate->add_option("--out", sim_args.out_path, "metrics path");
    simulate->add_option("--threads", sim_args.threads, "worker threads");
    simulate->add_option("--seed", sim_args.seed_override, "override the config seed");
    simulate->add_flag("--quiet", sim_args.quiet, "suppress the completion note");

    DiagnoseArgs diag_args;
    auto* diagnose = app.add_subcommand("diagnose", "Compute theory diagnostics for a dataset");
    diagnose->add_option("--data", diag_args.data_path, "CSV file")->required();
    diagnose->add_option("--response", diag_args.response, "response column name")->required();
    diagnose->add_option("--family", diag_args.family, "logistic or poisson");
    diagnose->add_option("--theta0", diag_args.theta0_path, "JSON array of length p")->required();
    diagnose->add_option("--supports", diag_args.supports_arg,
                         "semicolon-separated index lists, e.g. '1,3;2,4,5'")
        ->required();
    diagnose->add_option("--phi-levels", diag_args.phi_level_max, "sparsity levels for phi1/phi2");
    diagnose->add_option("--seed", diag_args.seed, "seed for sampled diagnostics");
    diagnose->add_option("--out", diag_args.out_path, "report path");
    diagnose->add_flag("--quiet", diag_args.quiet, "suppress the completion note");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Laplace-vs-MC and chain-vs-enumeration checks");
    oracle->add_option("--family", oracle_args.family, "logistic or poisson");
    oracle->add_option("--seed", oracle_args.seed, "seed");
    oracle->add_option("--mc-draws", oracle_args.mc_draws, "Monte-Carlo draws");
    oracle->add_option("--chain-iters", oracle_args.chain_iters, "chain length");
    oracle->add_option("--out", oracle_args.out_path, "optional JSON result path");
    oracle->add_flag("--quiet", oracle_args.quiet, "suppress notes");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    bool seed_given = simulate->count("--seed") > 0;
    sim_args.has_seed_override = seed_given;

    try {
        if (fit->parsed()) return cmd_fit(fit_args);
        if (simulate->parsed()) return cmd_simulate(sim_args);
        if (diagnose->parsed()) return cmd_diagnose(diag_args);
        if (oracle->parsed()) return cmd_oracle(oracle_args);
    } catch (const input_error& e) {
        std::cerr << "bvs: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "bvs: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace bvs
