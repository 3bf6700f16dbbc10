#include "bvs/simulate.hpp"

#include <cmath>

#include "bvs/parallel.hpp"

namespace bvs {

namespace {

// Linear predictors above this saturate the Poisson response sampler.
constexpr double kResponseEtaGuard = 30.0;

}  // namespace

void SimConfig::validate() const {
    if (n < 1 || p < 1) throw std::invalid_argument("n and p must be positive");
    if (s0 < 0 || s0 > std::min(n, p)) throw std::invalid_argument("s0 out of range");
    if (replications < 1) throw std::invalid_argument("replications must be positive");
    if (signal_range && signal_values.size() > 0) {
        throw std::invalid_argument("give signal_values or signal_range, not both");
    }
    if (!signal_range && static_cast<int>(signal_values.size()) != s0) {
        throw std::invalid_argument("signal_values must have length s0");
    }
    if (signal_range && (signal_range->first <= 0.0 || signal_range->second < signal_range->first)) {
        throw std::invalid_argument("signal_range must be 0 < min <= max");
    }
    hyper.validate(n, p);
    if (s0 > hyper.s_max) throw std::invalid_argument("s0 exceeds s_max");
    if (chain.n_iter < 2) throw std::invalid_argument("chain length too small");
}

Eigen::MatrixXd gen_design(const DesignSpec& spec, int n, int p, Rng& rng) {
    Eigen::MatrixXd x(n, p);
    if (spec.kind == DesignSpec::Kind::iid_gaussian) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < p; ++j) x(i, j) = rng.normal();
        return x;
    }
    if (spec.covariance.rows() != p || spec.covariance.cols() != p) {
        throw std::invalid_argument("covariance must be p x p");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(spec.covariance);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("covariance is not positive definite");
    }
    const Eigen::MatrixXd factor = llt.matrixL();
    Eigen::VectorXd z(p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) z[j] = rng.normal();
        x.row(i) = (factor * z).transpose();
    }
    return x;
}

Eigen::VectorXd gen_response(Family family, const Eigen::MatrixXd& x,
                             const Eigen::VectorXd& theta0, Rng& rng) {
    if (theta0.size() != x.cols()) throw std::invalid_argument("theta0 length mismatch");
    const Eigen::VectorXd eta = x * theta0;
    Eigen::VectorXd y(x.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        if (family == Family::logistic) {
            y[i] = rng.bernoulli(mean_value(Family::logistic, eta[i])) ? 1.0 : 0.0;
        } else {
            if (eta[i] > kResponseEtaGuard) throw saturation_error(eta[i]);
            y[i] = static_cast<double>(rng.poisson(std::exp(eta[i])));
        }
    }
    return y;
}

Eigen::VectorXd make_truth(const SimConfig& cfg, Rng& rng) {
    Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(cfg.p);
    for (int k = 0; k < cfg.s0; ++k) {
        double value;
        if (cfg.signal_range) {
            const auto [lo, hi] = *cfg.signal_range;
            value = lo + (hi - lo) * rng.uniform();
            value = rng.bernoulli(0.5) ? value : -value;
        } else {
            value = cfg.signal_values[static_cast<std::size_t>(k)];
            if (cfg.random_signs && rng.bernoulli(0.5)) value = -value;
        }
        theta0[k] = value;
    }
    return theta0;
}

SelectionMetrics run_experiment(const SimConfig& cfg) {
    cfg.validate();

    SelectionMetrics metrics;
    metrics.replications.resize(static_cast<std::size_t>(cfg.replications));

    parallel_for(cfg.replications, cfg.threads, [&](int rep) {
        const std::uint64_t rep_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(rep));
        Rng rng(rep_seed);

        const Eigen::VectorXd theta0 = make_truth(cfg, rng);
        const ModelSupport truth = ModelSupport::nonzero_of(theta0);
        const Eigen::MatrixXd x = gen_design(cfg.design, cfg.n, cfg.p, rng);
        const Eigen::VectorXd y = gen_response(cfg.family, x, theta0, rng);
        const Dataset data(x, y);

        FitCache cache(cfg.family, data, FitOptions::defaults(cfg.family));

        ReplicationResult result;
        result.replication = rep;
        result.seed = rep_seed;

        const bool enumerable =
            cfg.prefer_exact && count_supports(cfg.p, cfg.hyper.s_max, cfg.exact_guard) <= cfg.exact_guard;
        if (enumerable) {
            const auto exact = enumerate_exact(cfg.hyper, cache, cfg.exact_guard);
            result.used_enumeration = true;
            double best = -1.0;
            for (const auto& [support, prob] : exact) {
                if (prob > best) {
                    best = prob;
                    result.modal = support;
                }
            }
            const auto it = exact.find(truth);
            result.posterior_mass_s0 = it == exact.end() ? 0.0 : it->second;
        } else {
            ChainOptions chain_opts;
            chain_opts.n_iter = cfg.chain.n_iter;
            chain_opts.n_burnin = cfg.chain.n_burnin;
            chain_opts.top_k = cfg.chain.top_k;
            chain_opts.seed = derive_seed(rep_seed, 1);
            const PosteriorSummary summary = run_chain(cfg.hyper, cache, chain_opts);
            result.acceptance_rate = summary.acceptance_rate;
            if (!summary.top_models.empty()) result.modal = summary.top_models.front().support;
            const auto it = summary.visit_counts.find(truth);
            const double kept = static_cast<double>(summary.n_iter - summary.n_burnin);
            result.posterior_mass_s0 =
                it == summary.visit_counts.end() ? 0.0 : static_cast<double>(it->second) / kept;
        }

        result.recovered = result.modal == truth;
        for (int idx : result.modal.indices()) result.false_positives += !truth.contains(idx);
        for (int idx : truth.indices()) result.false_negatives += !result.modal.contains(idx);
        metrics.replications[static_cast<std::size_t>(rep)] = std::move(result);
    });

    for (const auto& rep : metrics.replications) {
        metrics.exact_recovery_rate += rep.recovered;
        metrics.mean_posterior_mass_s0 += rep.posterior_mass_s0;
        metrics.mean_false_positives += rep.false_positives;
        metrics.mean_false_negatives += rep.false_negatives;
    }
    const double count = static_cast<double>(cfg.replications);
    metrics.exact_recovery_rate /= count;
    metrics.mean_posterior_mass_s0 /= count;
    metrics.mean_false_positives /= count;
    metrics.mean_false_negatives /= count;
    return metrics;
}

}  // namespace bvs
