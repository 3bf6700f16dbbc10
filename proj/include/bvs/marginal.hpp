#ifndef BVS_MARGINAL_HPP
#define BVS_MARGINAL_HPP

#include "bvs/prior.hpp"

namespace bvs {

// Unnormalized log posterior weight of a support, with its audit components.
// value = log_prior + log_laplace when both are finite; -inf marks an invalid
// model (failed fit or size beyond the prior support).
struct LogWeight {
    double value = -std::numeric_limits<double>::infinity();
    double log_prior = 0.0;
    double log_laplace = 0.0;
    FitStatus fit_status = FitStatus::singular;

    bool finite() const { return std::isfinite(value); }
};

// Laplace approximation of the fractional marginal likelihood in log space:
//   alpha * L(theta_hat) - (|S|/2) * log(1 + alpha / lambda).
// For size zero the penalty vanishes and L is the empty-model log-likelihood.
double log_laplace_marginal(const FitResult& fit, const Hyperparams& h, int size);

// Monte-Carlo estimate of log integral exp(alpha L) g_S dtheta by importance
// sampling from the slab itself, centered at the MLE for stability. Returns
// the estimate and a delta-method standard error. Requires n_draws >= 1000.
struct McMarginal {
    double estimate = 0.0;
    double std_err = 0.0;
};

McMarginal log_marginal_mc(Family family, const Dataset& data, const ModelSupport& s,
                           const FitResult& fit, const Hyperparams& h, int n_draws, Rng& rng);

// Prior x Laplace marginal through the fit cache. Invalid models map to -inf
// rather than raising.
LogWeight log_posterior_weight(const ModelSupport& s, const Hyperparams& h, FitCache& cache);

}  // namespace bvs

#endif
