#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvs/simulate.hpp"
#include "oracles.hpp"

using namespace bvs;

namespace {

SimConfig tiny_config(Family family) {
    SimConfig cfg;
    cfg.family = family;
    cfg.n = 120;
    cfg.p = 6;
    cfg.s0 = 2;
    cfg.signal_values = {1.0, -1.0};
    cfg.seed = 31;
    cfg.replications = 6;
    cfg.hyper = Hyperparams::for_family(family);
    cfg.hyper.s_max = 3;
    cfg.chain.n_iter = 8000;
    cfg.chain.n_burnin = 1000;
    return cfg;
}

}  // namespace

TEST_CASE("design generator moments and determinism") {
    Rng rng(1);
    DesignSpec spec;
    const Eigen::MatrixXd x = gen_design(spec, 1000, 1000, rng);

    const double mean = x.mean();
    const double var = (x.array() - mean).square().sum() / (x.size() - 1.0);
    CHECK(std::fabs(mean) < 4e-3);                 // CLT band for 1e6 entries
    CHECK(std::fabs(var - 1.0) < 6e-3);

    Rng rng_a(17), rng_b(17);
    const Eigen::MatrixXd a = gen_design(spec, 30, 8, rng_a);
    const Eigen::MatrixXd b = gen_design(spec, 30, 8, rng_b);
    CHECK((a - b).norm() == 0.0);
}

TEST_CASE("correlated design reproduces the requested covariance") {
    DesignSpec spec;
    spec.kind = DesignSpec::Kind::gaussian_covariance;
    spec.covariance.resize(3, 3);
    spec.covariance << 1.0, 0.5, 0.2, 0.5, 1.0, 0.3, 0.2, 0.3, 1.0;
    Rng rng(3);
    const int n = 120000;
    const Eigen::MatrixXd x = gen_design(spec, n, 3, rng);
    const Eigen::MatrixXd sample_cov = (x.transpose() * x) / static_cast<double>(n);
    CHECK((sample_cov - spec.covariance).cwiseAbs().maxCoeff() < 0.02);

    DesignSpec bad;
    bad.kind = DesignSpec::Kind::gaussian_covariance;
    bad.covariance.resize(2, 2);
    bad.covariance << 1.0, 2.0, 2.0, 1.0;  // indefinite
    Rng rng_bad(4);
    CHECK_THROWS_AS(gen_design(bad, 10, 2, rng_bad), std::invalid_argument);
}

TEST_CASE("response generator moments") {
    Rng design_rng(5);
    DesignSpec spec;
    const Eigen::MatrixXd x = gen_design(spec, 50000, 3, design_rng);

    SUBCASE("logistic at theta0 = 0 is a fair coin") {
        Rng rng(7);
        const Eigen::VectorXd y = gen_response(Family::logistic, x, Eigen::VectorXd::Zero(3), rng);
        CHECK(std::fabs(y.mean() - 0.5) < 4.0 * 0.5 / std::sqrt(50000.0));
    }

    SUBCASE("poisson at theta0 = 0 has unit mean") {
        Rng rng(9);
        const Eigen::VectorXd y = gen_response(Family::poisson, x, Eigen::VectorXd::Zero(3), rng);
        CHECK(std::fabs(y.mean() - 1.0) < 4.0 / std::sqrt(50000.0));
    }

    SUBCASE("centered residuals under a nonzero truth") {
        Eigen::VectorXd theta0(3);
        theta0 << 0.5, -0.3, 0.2;
        Rng rng(11);
        const Eigen::VectorXd y = gen_response(Family::poisson, x, theta0, rng);
        const Eigen::VectorXd eta = x * theta0;
        double resid = 0.0, var = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            const double mu = std::exp(eta[i]);
            resid += y[i] - mu;
            var += mu;
        }
        CHECK(std::fabs(resid / y.size()) < 4.0 * std::sqrt(var) / y.size());
    }

    SUBCASE("poisson mean overflow guard") {
        Eigen::VectorXd huge(3);
        huge << 50.0, 0.0, 0.0;
        Rng rng(13);
        CHECK_THROWS_AS(gen_response(Family::poisson, x, huge, rng), saturation_error);
    }
}

TEST_CASE("experiments are reproducible") {
    const SimConfig cfg = tiny_config(Family::logistic);
    const SelectionMetrics a = run_experiment(cfg);
    const SelectionMetrics b = run_experiment(cfg);
    CHECK(a.exact_recovery_rate == b.exact_recovery_rate);
    CHECK(a.mean_posterior_mass_s0 == b.mean_posterior_mass_s0);
    REQUIRE(a.replications.size() == b.replications.size());
    for (std::size_t r = 0; r < a.replications.size(); ++r) {
        CHECK(a.replications[r].posterior_mass_s0 == b.replications[r].posterior_mass_s0);
        CHECK(a.replications[r].modal == b.replications[r].modal);
    }
}

TEST_CASE("thread count does not change the results") {
    SimConfig cfg = tiny_config(Family::poisson);
    cfg.signal_values = {0.9, -0.9};
    const SelectionMetrics serial = run_experiment(cfg);
    cfg.threads = 2;
    const SelectionMetrics parallel = run_experiment(cfg);
    CHECK(serial.mean_posterior_mass_s0 == parallel.mean_posterior_mass_s0);
    CHECK(serial.exact_recovery_rate == parallel.exact_recovery_rate);
}

TEST_CASE("chain and enumeration metrics agree on a tiny problem") {
    SimConfig chain_cfg = tiny_config(Family::logistic);
    chain_cfg.chain.n_iter = 200000;
    chain_cfg.chain.n_burnin = 20000;
    chain_cfg.replications = 3;
    const SelectionMetrics by_chain = run_experiment(chain_cfg);

    SimConfig exact_cfg = chain_cfg;
    exact_cfg.prefer_exact = true;
    const SelectionMetrics by_exact = run_experiment(exact_cfg);

    REQUIRE(by_exact.replications[0].used_enumeration);
    CHECK_FALSE(by_chain.replications[0].used_enumeration);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(std::fabs(by_chain.replications[r].posterior_mass_s0 -
                        by_exact.replications[r].posterior_mass_s0) < 0.05);
        CHECK(by_chain.replications[r].modal == by_exact.replications[r].modal);
    }
}

TEST_CASE("zero signal magnitude makes the empty model modal") {
    SimConfig cfg = tiny_config(Family::logistic);
    cfg.s0 = 0;
    cfg.signal_values = {};
    cfg.prefer_exact = true;
    cfg.replications = 10;
    const SelectionMetrics metrics = run_experiment(cfg);
    int empty_modal = 0;
    for (const auto& rep : metrics.replications) empty_modal += rep.modal.is_empty();
    CHECK(empty_modal >= 8);  // large majority
    CHECK(metrics.exact_recovery_rate == doctest::Approx(empty_modal / 10.0));
}

TEST_CASE("posterior mass on the truth grows with the signal magnitude") {
    // Paired seeds across the magnitude grid.
    std::vector<double> masses;
    for (double magnitude : {0.25, 1.5}) {
        SimConfig cfg = tiny_config(Family::logistic);
        cfg.signal_values = {magnitude, -magnitude};
        cfg.prefer_exact = true;
        cfg.replications = 10;
        masses.push_back(run_experiment(cfg).mean_posterior_mass_s0);
    }
    CHECK(masses[1] > masses[0]);
}

TEST_CASE("config validation rejects inconsistent settings") {
    SimConfig cfg = tiny_config(Family::logistic);
    cfg.signal_values = {1.0};  // wrong length
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    SimConfig range_cfg = tiny_config(Family::logistic);
    range_cfg.signal_values.clear();
    range_cfg.signal_range = {{0.5, 0.25}};  // min > max
    CHECK_THROWS_AS(range_cfg.validate(), std::invalid_argument);

    SimConfig oversize = tiny_config(Family::logistic);
    oversize.s0 = 5;
    oversize.signal_values = {1, 1, 1, 1, 1};
    oversize.hyper.s_max = 3;
    CHECK_THROWS_AS(oversize.validate(), std::invalid_argument);
}
