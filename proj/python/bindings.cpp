#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bvs/cli.hpp"
#include "bvs/diagnostics.hpp"
#include "bvs/io.hpp"
#include "bvs/simulate.hpp"

namespace py = pybind11;
using namespace bvs;

namespace {

std::vector<int> support_indices(const ModelSupport& s) { return s.indices(); }

py::dict exact_to_dict(const std::map<ModelSupport, double>& exact) {
    py::dict out;
    for (const auto& [support, prob] : exact) {
        out[py::tuple(py::cast(support.indices()))] = prob;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Empirical-prior Bayesian variable selection for sparse GLMs";

    py::enum_<Family>(m, "Family")
        .value("logistic", Family::logistic)
        .value("poisson", Family::poisson);

    py::register_exception<saturation_error>(m, "SaturationError");

    py::class_<LinkValues>(m, "LinkValues")
        .def_readonly("b", &LinkValues::b)
        .def_readonly("b1", &LinkValues::b1)
        .def_readonly("b2", &LinkValues::b2)
        .def_readonly("b3", &LinkValues::b3);

    m.def("link_values", &link_values, py::arg("family"), py::arg("eta"));
    m.def("family_c_dev", &family_c_dev, py::arg("family"));

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<Eigen::MatrixXd, Eigen::VectorXd, std::vector<std::string>>(), py::arg("x"),
             py::arg("y"), py::arg("labels") = std::vector<std::string>{})
        .def_readonly("x", &Dataset::x)
        .def_readonly("y", &Dataset::y)
        .def_readonly("labels", &Dataset::labels)
        .def("validate", &Dataset::validate, py::arg("family"));

    py::class_<ModelSupport>(m, "ModelSupport")
        .def(py::init<std::vector<int>>(), py::arg("indices"))
        .def_static("empty", &ModelSupport::empty)
        .def_property_readonly("indices", &support_indices)
        .def("__len__", &ModelSupport::size)
        .def("__repr__", &ModelSupport::to_string)
        .def("__eq__", [](const ModelSupport& a, const ModelSupport& b) { return a == b; });

    m.def("log_likelihood", &log_likelihood);
    m.def("score", &score);
    m.def("fisher_info", &fisher_info);
    m.def("v_matrix", &v_matrix);
    m.def("hellinger_n", &hellinger_n);

    py::class_<FitOptions>(m, "FitOptions")
        .def(py::init<>())
        .def_static("defaults", &FitOptions::defaults)
        .def_readwrite("max_iter", &FitOptions::max_iter)
        .def_readwrite("grad_tol", &FitOptions::grad_tol)
        .def_readwrite("step_halvings", &FitOptions::step_halvings)
        .def_readwrite("theta_norm_cap", &FitOptions::theta_norm_cap);

    py::enum_<FitStatus>(m, "FitStatus")
        .value("converged", FitStatus::converged)
        .value("max_iter", FitStatus::max_iter)
        .value("separated", FitStatus::separated)
        .value("singular", FitStatus::singular);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("theta_hat", &FitResult::theta_hat)
        .def_readonly("loglik", &FitResult::loglik)
        .def_readonly("fisher_chol", &FitResult::fisher_chol)
        .def_readonly("logdet_fisher", &FitResult::logdet_fisher)
        .def_readonly("status", &FitResult::status)
        .def_readonly("iterations", &FitResult::iterations)
        .def_readonly("grad_norm", &FitResult::grad_norm)
        .def("valid", &FitResult::valid);

    m.def(
        "fit_mle",
        [](Family family, const Dataset& data, const ModelSupport& s, const FitOptions* opts) {
            return fit_mle(family, data, s, opts ? *opts : FitOptions::defaults(family));
        },
        py::arg("family"), py::arg("data"), py::arg("s"), py::arg("opts") = nullptr);
    m.def(
        "theta_star",
        [](Family family, const Dataset& data, const ModelSupport& s, const Eigen::VectorXd& theta0) {
            return theta_star(family, data, s, theta0, FitOptions::tight(family));
        },
        py::arg("family"), py::arg("data"), py::arg("s"), py::arg("theta0"));

    py::class_<Hyperparams>(m, "Hyperparams")
        .def(py::init<>())
        .def_static("for_family", &Hyperparams::for_family)
        .def_readwrite("alpha", &Hyperparams::alpha)
        .def_readwrite("lambda_", &Hyperparams::lambda)
        .def_readwrite("a4", &Hyperparams::a4)
        .def_readwrite("a7", &Hyperparams::a7)
        .def_readwrite("s_max", &Hyperparams::s_max)
        .def_readwrite("c_dev", &Hyperparams::c_dev);

    m.def("log_model_prior", &log_model_prior, py::arg("s"), py::arg("p"), py::arg("h"));
    m.def(
        "slab_logpdf",
        [](const Eigen::VectorXd& theta, const FitResult& fit, double lam) {
            return slab_logpdf(theta, fit, lam);
        },
        py::arg("theta"), py::arg("fit"), py::arg("lambda"));
    m.def(
        "slab_sample",
        [](const FitResult& fit, double lam, std::uint64_t seed) {
            Rng rng(seed);
            return slab_sample(fit, lam, rng);
        },
        py::arg("fit"), py::arg("lambda"), py::arg("seed"));

    py::class_<HyperparamCheck>(m, "HyperparamCheck")
        .def_readonly("lambda_bound_satisfied", &HyperparamCheck::lambda_bound_satisfied)
        .def_readonly("lambda_bound_slack", &HyperparamCheck::lambda_bound_slack)
        .def_readonly("selection_bound_satisfied", &HyperparamCheck::selection_bound_satisfied)
        .def_readonly("selection_bound_slack", &HyperparamCheck::selection_bound_slack)
        .def_readonly("selection_rhs", &HyperparamCheck::selection_rhs)
        .def_readonly("min_a4", &HyperparamCheck::min_a4);

    m.def("check_hyperparams", &check_hyperparams, py::arg("h"), py::arg("p"),
          py::arg("s0_hint") = std::nullopt, py::arg("delta1") = 0.0);

    m.def("log_laplace_marginal", &log_laplace_marginal, py::arg("fit"), py::arg("h"),
          py::arg("size"));
    m.def(
        "log_marginal_mc",
        [](Family family, const Dataset& data, const ModelSupport& s, const FitResult& fit,
           const Hyperparams& h, int n_draws, std::uint64_t seed) {
            Rng rng(seed);
            const McMarginal mc = log_marginal_mc(family, data, s, fit, h, n_draws, rng);
            return py::make_tuple(mc.estimate, mc.std_err);
        },
        py::arg("family"), py::arg("data"), py::arg("s"), py::arg("fit"), py::arg("h"),
        py::arg("n_draws"), py::arg("seed"));

    py::class_<LogWeight>(m, "LogWeight")
        .def_readonly("value", &LogWeight::value)
        .def_readonly("log_prior", &LogWeight::log_prior)
        .def_readonly("log_laplace", &LogWeight::log_laplace)
        .def("finite", &LogWeight::finite);

    py::class_<FitCache>(m, "FitCache")
        .def(py::init<Family, const Dataset&, FitOptions, std::size_t>(), py::arg("family"),
             py::arg("data"), py::arg("opts"), py::arg("capacity") = 100000,
             py::keep_alive<1, 3>())
        .def("fit", [](FitCache& cache, const ModelSupport& s) { return *cache.fit(s); })
        .def("valid_fits", &FitCache::valid_fits)
        .def("invalid_fits", &FitCache::invalid_fits);

    m.def("log_posterior_weight", &log_posterior_weight, py::arg("s"), py::arg("h"),
          py::arg("cache"));

    py::class_<NeighborhoodCounts>(m, "NeighborhoodCounts")
        .def_readonly("add", &NeighborhoodCounts::add)
        .def_readonly("del_", &NeighborhoodCounts::del)
        .def_readonly("swap", &NeighborhoodCounts::swap)
        .def("total", &NeighborhoodCounts::total);

    m.def("neighborhood_counts", &neighborhood_counts, py::arg("s"), py::arg("p"),
          py::arg("s_max"));

    py::class_<TopModel>(m, "TopModel")
        .def_readonly("support", &TopModel::support)
        .def_readonly("visits", &TopModel::visits)
        .def_readonly("weight", &TopModel::weight);

    py::class_<PosteriorSummary>(m, "PosteriorSummary")
        .def_readonly("inclusion_prob", &PosteriorSummary::inclusion_prob)
        .def_readonly("top_models", &PosteriorSummary::top_models)
        .def_readonly("acceptance_rate", &PosteriorSummary::acceptance_rate)
        .def_readonly("n_iter", &PosteriorSummary::n_iter)
        .def_readonly("n_burnin", &PosteriorSummary::n_burnin)
        .def(
            "visit_counts",
            [](const PosteriorSummary& summary) {
                py::dict out;
                for (const auto& [support, count] : summary.visit_counts) {
                    out[py::tuple(py::cast(support.indices()))] = count;
                }
                return out;
            });

    py::class_<ChainOptions>(m, "ChainOptions")
        .def(py::init<>())
        .def_readwrite("n_iter", &ChainOptions::n_iter)
        .def_readwrite("n_burnin", &ChainOptions::n_burnin)
        .def_readwrite("init", &ChainOptions::init)
        .def_readwrite("seed", &ChainOptions::seed)
        .def_readwrite("top_k", &ChainOptions::top_k);

    m.def("run_chain", &run_chain, py::arg("h"), py::arg("cache"), py::arg("opts"));
    m.def(
        "enumerate_exact",
        [](const Hyperparams& h, FitCache& cache, std::int64_t guard) {
            return exact_to_dict(enumerate_exact(h, cache, guard));
        },
        py::arg("h"), py::arg("cache"), py::arg("guard") = 100000);

    m.def("normalized_score", &normalized_score);
    m.def(
        "delta_mis",
        [](Family family, const Dataset& data, const ModelSupport& s, const Eigen::VectorXd& t0) {
            const Misspecification mis = delta_mis(family, data, s, t0);
            return py::make_tuple(mis.delta, mis.delta_tilde);
        });
    m.def("design_regularity", &design_regularity);
    m.def(
        "compat_numbers",
        [](const Eigen::MatrixXd& x, const Eigen::VectorXd& w, int level) {
            const CompatNumbers numbers = compat_numbers(x, w, level);
            return py::make_tuple(numbers.phi1, numbers.phi2);
        },
        py::arg("x"), py::arg("w_diag"), py::arg("s_level"));
    m.def(
        "scalar_diags",
        [](Family family, const Dataset& data, const Eigen::VectorXd& theta0) {
            const ScalarDiags d = scalar_diags(family, data, theta0);
            return py::make_tuple(d.sigma_min_sq, d.sigma_max_sq, d.nu_n, d.beta_min);
        });
    m.def("kappa_n", &kappa_n);
    m.def("quad_residual", &quad_residual);

    m.def(
        "gen_design",
        [](int n, int p, std::uint64_t seed) {
            DesignSpec spec;
            Rng rng(seed);
            return gen_design(spec, n, p, rng);
        },
        py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def(
        "gen_response",
        [](Family family, const Eigen::MatrixXd& x, const Eigen::VectorXd& theta0,
           std::uint64_t seed) {
            Rng rng(seed);
            return gen_response(family, x, theta0, rng);
        },
        py::arg("family"), py::arg("x"), py::arg("theta0"), py::arg("seed"));

    py::class_<ChainSettings>(m, "ChainSettings")
        .def(py::init<>())
        .def_readwrite("n_iter", &ChainSettings::n_iter)
        .def_readwrite("n_burnin", &ChainSettings::n_burnin)
        .def_readwrite("top_k", &ChainSettings::top_k);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("family", &SimConfig::family)
        .def_readwrite("n", &SimConfig::n)
        .def_readwrite("p", &SimConfig::p)
        .def_readwrite("s0", &SimConfig::s0)
        .def_readwrite("signal_values", &SimConfig::signal_values)
        .def_readwrite("random_signs", &SimConfig::random_signs)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("replications", &SimConfig::replications)
        .def_readwrite("hyper", &SimConfig::hyper)
        .def_readwrite("chain", &SimConfig::chain)
        .def_readwrite("threads", &SimConfig::threads)
        .def_readwrite("prefer_exact", &SimConfig::prefer_exact);

    py::class_<ReplicationResult>(m, "ReplicationResult")
        .def_readonly("replication", &ReplicationResult::replication)
        .def_readonly("recovered", &ReplicationResult::recovered)
        .def_readonly("posterior_mass_s0", &ReplicationResult::posterior_mass_s0)
        .def_readonly("false_positives", &ReplicationResult::false_positives)
        .def_readonly("false_negatives", &ReplicationResult::false_negatives)
        .def_readonly("modal", &ReplicationResult::modal)
        .def_readonly("used_enumeration", &ReplicationResult::used_enumeration);

    py::class_<SelectionMetrics>(m, "SelectionMetrics")
        .def_readonly("exact_recovery_rate", &SelectionMetrics::exact_recovery_rate)
        .def_readonly("mean_posterior_mass_s0", &SelectionMetrics::mean_posterior_mass_s0)
        .def_readonly("mean_false_positives", &SelectionMetrics::mean_false_positives)
        .def_readonly("mean_false_negatives", &SelectionMetrics::mean_false_negatives)
        .def_readonly("replications", &SelectionMetrics::replications);

    m.def("run_experiment", &run_experiment, py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());

    m.def("run_cli", [](const std::vector<std::string>& args) { return run_cli(args); },
          py::arg("args"));
}
