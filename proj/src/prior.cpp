#include "bvs/prior.hpp"

#include <cmath>
#include <limits>

namespace bvs {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;

double log_binom(int p, int s) {
    return std::lgamma(p + 1.0) - std::lgamma(s + 1.0) - std::lgamma(p - s + 1.0);
}

// log of sum_{s=0}^{s_max} p^(-a4 s), the size normalizer.
double log_size_normalizer(int p, const Hyperparams& h) {
    const double step = -h.a4 * std::log(static_cast<double>(p));
    double acc = kNegInf;
    for (int s = 0; s <= h.s_max; ++s) {
        const double term = step * s;
        acc = acc > term ? acc + std::log1p(std::exp(term - acc))
                         : term + std::log1p(std::exp(acc - term));
    }
    return acc;
}

}  // namespace

void Hyperparams::validate(Eigen::Index n, Eigen::Index p) const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (!(a4 > 0.0)) throw std::invalid_argument("a4 must be positive");
    if (a7 < 0.0) throw std::invalid_argument("a7 must be nonnegative");
    if (s_max < 1 || s_max > std::min(n, p)) {
        throw std::invalid_argument("s_max must lie in [1, min(n, p)]");
    }
    if (!(c_dev > 0.0)) throw std::invalid_argument("c_dev must be positive; use for_family");
}

double log_model_prior(const ModelSupport& s, int p, const Hyperparams& h) {
    const int size = s.size();
    if (size > h.s_max || !s.within(p)) return kNegInf;
    const double log_w = -h.a4 * size * std::log(static_cast<double>(p)) - log_size_normalizer(p, h);
    return log_w - log_binom(p, size);
}

double slab_logpdf(const Eigen::VectorXd& theta, const FitResult& fit, double lambda) {
    if (!fit.valid()) throw std::invalid_argument("slab_logpdf requires a converged fit");
    const Eigen::Index dim = fit.theta_hat.size();
    if (theta.size() != dim) throw std::invalid_argument("theta length does not match the fit");
    const Eigen::VectorXd centered = theta - fit.theta_hat;
    // (theta - m)' (lambda F) (theta - m) = lambda * ||L' (theta - m)||^2
    const double quad = lambda * (fit.fisher_chol.transpose() * centered).squaredNorm();
    const double log_det = dim * std::log(lambda) + fit.logdet_fisher;
    return 0.5 * (log_det - dim * std::log(kTwoPi) - quad);
}

Eigen::VectorXd slab_sample(const FitResult& fit, double lambda, Rng& rng) {
    if (!fit.valid()) throw std::invalid_argument("slab_sample requires a converged fit");
    const Eigen::Index dim = fit.theta_hat.size();
    Eigen::VectorXd z(dim);
    for (Eigen::Index k = 0; k < dim; ++k) z[k] = rng.normal();
    const Eigen::VectorXd spread =
        fit.fisher_chol.transpose().triangularView<Eigen::Upper>().solve(z);
    return fit.theta_hat + spread / std::sqrt(lambda);
}

HyperparamCheck check_hyperparams(const Hyperparams& h, int p, std::optional<int> s0_hint,
                                  double delta1) {
    HyperparamCheck out;
    out.lambda_bound_slack = h.a4 - h.lambda;
    out.lambda_bound_satisfied = out.lambda_bound_slack > 0.0;

    const double log_p_s0 =
        s0_hint && *s0_hint > 1 ? std::log(static_cast<double>(*s0_hint)) / std::log(static_cast<double>(p))
                                : 0.0;
    out.selection_rhs = h.alpha * 16.0 * h.c_dev + log_p_s0 + delta1;
    out.selection_bound_slack = h.a4 + h.a7 / 2.0 - out.selection_rhs;
    out.selection_bound_satisfied = out.selection_bound_slack > 0.0;
    out.min_a4 = out.selection_rhs - h.a7 / 2.0;
    return out;
}

}  // namespace bvs
