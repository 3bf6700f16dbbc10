#include "bvs/marginal.hpp"

#include <cmath>

namespace bvs {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_laplace_marginal(const FitResult& fit, const Hyperparams& h, int size) {
    if (size == 0) return h.alpha * fit.loglik;
    if (!fit.valid()) return kNegInf;
    return h.alpha * fit.loglik - 0.5 * size * std::log1p(h.alpha / h.lambda);
}

McMarginal log_marginal_mc(Family family, const Dataset& data, const ModelSupport& s,
                           const FitResult& fit, const Hyperparams& h, int n_draws, Rng& rng) {
    if (n_draws < 1000) throw std::invalid_argument("log_marginal_mc needs n_draws >= 1000");
    if (s.is_empty()) {
        // The zero-dimensional integral is exp(alpha L) itself.
        return {h.alpha * fit.loglik, 0.0};
    }
    if (!fit.valid()) throw std::invalid_argument("log_marginal_mc requires a converged fit");

    // Each ratio exp(alpha (L(theta) - L(theta_hat))) lies in (0, 1] because
    // the MLE maximizes L, so the plain average is numerically safe.
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int k = 0; k < n_draws; ++k) {
        const Eigen::VectorXd draw = slab_sample(fit, h.lambda, rng);
        double ratio;
        try {
            ratio = std::exp(h.alpha * (log_likelihood(family, data, s, draw) - fit.loglik));
        } catch (const saturation_error&) {
            ratio = 0.0;  // a draw far in the Poisson tail contributes nothing
        }
        sum += ratio;
        sum_sq += ratio * ratio;
    }
    const double mean = sum / n_draws;
    const double var = std::max(0.0, sum_sq / n_draws - mean * mean) / (n_draws - 1.0);
    McMarginal out;
    out.estimate = h.alpha * fit.loglik + std::log(mean);
    out.std_err = std::sqrt(var) / mean;  // delta method for log(mean)
    return out;
}

LogWeight log_posterior_weight(const ModelSupport& s, const Hyperparams& h, FitCache& cache) {
    LogWeight out;
    const int p = static_cast<int>(cache.data().p());
    out.log_prior = log_model_prior(s, p, h);
    if (!std::isfinite(out.log_prior)) return out;  // beyond the prior support

    const auto fit = cache.fit(s);
    out.fit_status = fit->status;
    if (!s.is_empty() && !fit->valid()) return out;

    out.log_laplace = log_laplace_marginal(*fit, h, s.size());
    out.value = out.log_prior + out.log_laplace;
    return out;
}

}  // namespace bvs
