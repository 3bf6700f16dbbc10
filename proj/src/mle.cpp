#include "bvs/mle.hpp"

#include <cmath>

namespace bvs {

namespace {

// Shared Newton core over an explicit design block and response vector.
FitResult newton_fit(Family family, const Eigen::MatrixXd& xs, const Eigen::VectorXd& response,
                     const FitOptions& opts, const Eigen::VectorXd* start = nullptr) {
    const Eigen::Index dim = xs.cols();
    FitResult out;
    out.theta_hat = Eigen::VectorXd::Zero(dim);

    if (dim > xs.rows()) {
        out.status = FitStatus::singular;  // Fisher necessarily rank-deficient
        return out;
    }

    Eigen::VectorXd theta = start ? *start : Eigen::VectorXd::Zero(dim);
    double loglik = log_likelihood_with_response(family, xs, response, theta);

    // A stationary point with every fitted variance collapsed means the
    // likelihood flattens out toward infinity (separation / divergence)
    // rather than peaking at an interior maximum.
    const auto finish = [&](const Eigen::LLT<Eigen::MatrixXd>& llt) {
        out.theta_hat = theta;
        out.loglik = loglik;
        const Eigen::VectorXd eta = xs * theta;
        double w_max = 0.0;
        for (Eigen::Index i = 0; i < eta.size(); ++i) {
            w_max = std::max(w_max, variance_value(family, eta[i]));
        }
        if (w_max < 1e-6) {
            out.status = FitStatus::separated;
            return;
        }
        out.fisher_chol = llt.matrixL();
        out.logdet_fisher = 2.0 * out.fisher_chol.diagonal().array().log().sum();
        out.status = FitStatus::converged;
    };

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        const Eigen::VectorXd grad = score_with_response(family, xs, response, theta);
        const double grad_norm = grad.norm();
        out.iterations = iter;
        out.grad_norm = grad_norm;

        const Eigen::MatrixXd fisher = fisher_with_design(family, xs, theta);
        Eigen::LLT<Eigen::MatrixXd> llt(fisher);
        if (llt.info() != Eigen::Success || !fisher.allFinite()) {
            out.theta_hat = theta;
            out.loglik = loglik;
            out.status = FitStatus::singular;
            return out;
        }

        if (grad_norm <= opts.grad_tol * (1.0 + std::fabs(loglik))) {
            finish(llt);
            return out;
        }

        const Eigen::VectorXd direction = llt.solve(grad);
        double step = 1.0;
        bool accepted = false;
        for (int h = 0; h <= opts.step_halvings; ++h, step *= 0.5) {
            const Eigen::VectorXd candidate = theta + step * direction;
            double cand_loglik;
            try {
                cand_loglik = log_likelihood_with_response(family, xs, response, candidate);
            } catch (const saturation_error&) {
                continue;  // overshoot into the exp() guard; shorten the step
            }
            if (std::isfinite(cand_loglik) && cand_loglik > loglik) {
                theta = candidate;
                loglik = cand_loglik;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // No step improves the log-likelihood by even one ulp. When the
            // gradient is already at a near-stationary floor this is the
            // rounding limit of a tighter-than-representable tolerance, not a
            // failure; otherwise give up.
            if (grad_norm <= 1e-7 * (1.0 + std::fabs(loglik))) {
                finish(llt);
                return out;
            }
            out.theta_hat = theta;
            out.loglik = loglik;
            out.status = FitStatus::max_iter;
            return out;
        }
        if (theta.norm() > opts.theta_norm_cap) {
            out.theta_hat = theta;
            out.loglik = loglik;
            out.status = FitStatus::separated;
            out.iterations = iter + 1;
            return out;
        }
    }

    out.theta_hat = theta;
    out.loglik = loglik;
    out.iterations = opts.max_iter;
    out.grad_norm = score_with_response(family, xs, response, theta).norm();
    if (out.grad_norm <= 1e-7 * (1.0 + std::fabs(loglik))) {
        Eigen::LLT<Eigen::MatrixXd> llt(fisher_with_design(family, xs, theta));
        if (llt.info() == Eigen::Success) {
            finish(llt);
            return out;
        }
    }
    out.status = FitStatus::max_iter;
    return out;
}

}  // namespace

std::string fit_status_name(FitStatus status) {
    switch (status) {
        case FitStatus::converged: return "converged";
        case FitStatus::max_iter: return "max_iter";
        case FitStatus::separated: return "separated";
        case FitStatus::singular: return "singular";
    }
    return "unknown";
}

FitResult fit_mle(Family family, const Dataset& data, const ModelSupport& s,
                  const FitOptions& opts, const Eigen::VectorXd* start) {
    if (s.is_empty()) throw std::invalid_argument("fit_mle requires |S| >= 1; see empty_fit");
    if (!s.within(static_cast<int>(data.p()))) {
        throw std::invalid_argument("support index exceeds the number of covariates");
    }
    if (start && start->size() != s.size()) {
        throw std::invalid_argument("start point length does not match |S|");
    }
    return newton_fit(family, s.columns(data), data.y, opts, start);
}

FitResult fit_theta_star(Family family, const Dataset& data, const ModelSupport& s,
                         const Eigen::VectorXd& theta0, const FitOptions& opts) {
    if (s.is_empty()) throw std::invalid_argument("fit_theta_star requires |S| >= 1");
    if (theta0.size() != data.p()) throw std::invalid_argument("theta0 must be full-dimensional");
    const Eigen::VectorXd eta0 = data.x * theta0;
    Eigen::VectorXd mu(eta0.size());
    for (Eigen::Index i = 0; i < eta0.size(); ++i) mu[i] = mean_value(family, eta0[i]);
    return newton_fit(family, s.columns(data), mu, opts);
}

Eigen::VectorXd theta_star(Family family, const Dataset& data, const ModelSupport& s,
                           const Eigen::VectorXd& theta0, const FitOptions& opts) {
    const FitResult fit = fit_theta_star(family, data, s, theta0, opts);
    if (!fit.valid()) {
        throw std::runtime_error("population optimizer did not converge: " +
                                 fit_status_name(fit.status));
    }
    return fit.theta_hat;
}

FitResult empty_fit(Family family, const Dataset& data) {
    FitResult out;
    out.theta_hat = Eigen::VectorXd(0);
    out.fisher_chol = Eigen::MatrixXd(0, 0);
    out.loglik = log_likelihood(family, data, ModelSupport::empty(), Eigen::VectorXd(0));
    out.logdet_fisher = 0.0;
    out.status = FitStatus::converged;
    return out;
}

FitCache::FitCache(Family family, const Dataset& data, FitOptions opts, std::size_t capacity)
    : family_(family), data_(data), opts_(opts), capacity_(std::max<std::size_t>(capacity, 1)) {}

std::shared_ptr<const FitResult> FitCache::fit(const ModelSupport& s) {
    const std::string key = s.to_string();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            ++hits_;
            lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
            return it->second.result;
        }
        ++misses_;
    }

    auto result = std::make_shared<const FitResult>(
        s.is_empty() ? empty_fit(family_, data_) : fit_mle(family_, data_, s, opts_));

    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second.result;  // raced; keep the first
    if (!s.is_empty()) result->valid() ? ++valid_fits_ : ++invalid_fits_;
    lru_.push_front(key);
    entries_.emplace(key, Entry{result, lru_.begin()});
    if (entries_.size() > capacity_) {
        entries_.erase(lru_.back());
        lru_.pop_back();
    }
    return result;
}

std::size_t FitCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

}  // namespace bvs
