#ifndef BVS_PRIOR_HPP
#define BVS_PRIOR_HPP

#include <optional>

#include "bvs/mle.hpp"
#include "bvs/rng.hpp"

namespace bvs {

struct Hyperparams {
    double alpha = 0.999;   // fractional-likelihood power, in (0, 1]
    double lambda = 1e-3;   // slab precision scale
    double a4 = 0.05;       // size-penalty exponent of the complexity prior
    double a7 = 0.0;        // lambda-decay exponent, informational only
    int s_max = 10;         // largest model size with prior support
    double c_dev = 0.0;     // family constant; set via for_family

    static Hyperparams for_family(Family family) {
        Hyperparams h;
        h.c_dev = family_c_dev(family);
        return h;
    }

    void validate(Eigen::Index n, Eigen::Index p) const;
};

// Log prior mass of a support under the complexity prior
//   pi(S) = w(|S|) / C(p, |S|),  w(s) proportional to p^(-a4 * s) on 0..s_max.
// Sizes are normalized so the prior sums to one over all supports. Supports
// larger than s_max get -inf.
double log_model_prior(const ModelSupport& s, int p, const Hyperparams& h);

// Log density of the data-dependent slab N(theta_hat, (lambda * F)^{-1}) at
// theta, reusing the Cholesky factor stored in the fit.
double slab_logpdf(const Eigen::VectorXd& theta, const FitResult& fit, double lambda);

// Exact draw from the slab: theta_hat + lambda^{-1/2} * L^{-T} z.
Eigen::VectorXd slab_sample(const FitResult& fit, double lambda, Rng& rng);

// Advisory evaluation of the hyperparameter constraints
//   (1) a4 > lambda                      (a4 vs the lambda envelope)
//   (2) a4 + a7/2 > alpha * 16 * c_dev + log_p(s0) + delta1
// with the convention lambda = A6 * p^(-a7). Never blocks a run.
struct HyperparamCheck {
    bool lambda_bound_satisfied = false;
    double lambda_bound_slack = 0.0;  // a4 - lambda
    bool selection_bound_satisfied = false;
    double selection_bound_slack = 0.0;  // a4 + a7/2 - rhs
    double selection_rhs = 0.0;
    double min_a4 = 0.0;  // smallest a4 satisfying inequality (2)
};

HyperparamCheck check_hyperparams(const Hyperparams& h, int p,
                                  std::optional<int> s0_hint = std::nullopt,
                                  double delta1 = 0.0);

}  // namespace bvs

#endif
