#ifndef BVS_MLE_HPP
#define BVS_MLE_HPP

#include <Eigen/Dense>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "bvs/glm.hpp"

namespace bvs {

enum class FitStatus { converged, max_iter, separated, singular };

std::string fit_status_name(FitStatus status);

struct FitOptions {
    int max_iter = 100;
    double grad_tol = 1e-8;    // relative: ||grad|| <= grad_tol * (1 + |loglik|)
    int step_halvings = 30;
    double theta_norm_cap = 50.0;  // separation / divergence guard on ||theta||_2

    static FitOptions defaults(Family family) {
        FitOptions opts;
        opts.theta_norm_cap = family == Family::poisson ? 30.0 : 50.0;
        return opts;
    }

    // Tight tolerance used by the diagnostics, where theta* feeds identities
    // checked at 1e-8 and below.
    static FitOptions tight(Family family) {
        FitOptions opts = defaults(family);
        opts.grad_tol = 1e-13;
        opts.max_iter = 200;
        return opts;
    }
};

struct FitResult {
    Eigen::VectorXd theta_hat;
    double loglik = 0.0;
    Eigen::MatrixXd fisher_chol;  // lower-triangular factor of F at theta_hat
    double logdet_fisher = 0.0;
    FitStatus status = FitStatus::singular;
    int iterations = 0;
    double grad_norm = 0.0;

    bool valid() const { return status == FitStatus::converged; }
};

// Newton iterations with step halving, started at theta = 0 (or at `start`
// when given). Ascent steps are accepted only when the log-likelihood does
// not decrease, so the sequence of accepted values is monotone. Models with
// |S| > n are rejected up front.
FitResult fit_mle(Family family, const Dataset& data, const ModelSupport& s,
                  const FitOptions& opts, const Eigen::VectorXd* start = nullptr);

// Population optimizer theta*_S: the same Newton scheme applied to the
// pseudo-responses mu_i = b'(x_i' theta0). For supports covering every
// nonzero of theta0 this reproduces theta0 restricted to S.
FitResult fit_theta_star(Family family, const Dataset& data, const ModelSupport& s,
                         const Eigen::VectorXd& theta0, const FitOptions& opts);

Eigen::VectorXd theta_star(Family family, const Dataset& data, const ModelSupport& s,
                           const Eigen::VectorXd& theta0, const FitOptions& opts);

// Zero-dimensional fit used for the empty model.
FitResult empty_fit(Family family, const Dataset& data);

// Bounded per-run cache of fits keyed by canonical support, least recently
// used eviction. Safe for concurrent use; fits are deterministic given the
// options so duplicated computation under contention is harmless.
class FitCache {
  public:
    FitCache(Family family, const Dataset& data, FitOptions opts, std::size_t capacity = 100000);

    std::shared_ptr<const FitResult> fit(const ModelSupport& s);

    std::size_t size() const;
    std::int64_t hits() const { return hits_; }
    std::int64_t misses() const { return misses_; }
    std::int64_t valid_fits() const { return valid_fits_; }
    std::int64_t invalid_fits() const { return invalid_fits_; }

    Family family() const { return family_; }
    const Dataset& data() const { return data_; }
    const FitOptions& options() const { return opts_; }

  private:
    struct Entry {
        std::shared_ptr<const FitResult> result;
        std::list<std::string>::iterator lru_pos;
    };

    Family family_;
    const Dataset& data_;
    FitOptions opts_;
    std::size_t capacity_;

    mutable std::mutex mutex_;
    std::unordered_map<std::string, Entry> entries_;
    std::list<std::string> lru_;
    std::int64_t hits_ = 0;
    std::int64_t misses_ = 0;
    std::int64_t valid_fits_ = 0;
    std::int64_t invalid_fits_ = 0;
};

}  // namespace bvs

#endif
