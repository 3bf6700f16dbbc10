#ifndef BVS_SIMULATE_HPP
#define BVS_SIMULATE_HPP

#include <optional>

#include "bvs/sampler.hpp"

namespace bvs {

struct DesignSpec {
    enum class Kind { iid_gaussian, gaussian_covariance };
    Kind kind = Kind::iid_gaussian;
    Eigen::MatrixXd covariance;  // rows are N(0, covariance) when supplied
};

struct ChainSettings {
    std::int64_t n_iter = 20000;
    std::int64_t n_burnin = -1;  // negative: n_iter / 10
    int top_k = 20;
};

struct SimConfig {
    Family family = Family::logistic;
    int n = 100;
    int p = 50;
    int s0 = 3;
    // Either explicit signal values (length s0, used as given unless
    // random_signs is set) or a magnitude range with random signs.
    std::vector<double> signal_values;
    std::optional<std::pair<double, double>> signal_range;
    bool random_signs = false;
    DesignSpec design;
    std::uint64_t seed = 0;
    int replications = 20;
    Hyperparams hyper;
    ChainSettings chain;
    int threads = 1;
    bool prefer_exact = false;  // exact enumeration when the support space fits
    std::int64_t exact_guard = 20000;

    void validate() const;
};

struct ReplicationResult {
    int replication = 0;
    std::uint64_t seed = 0;
    bool recovered = false;       // modal model equals the true support
    double posterior_mass_s0 = 0.0;
    int false_positives = 0;      // of the modal model
    int false_negatives = 0;
    ModelSupport modal;
    double acceptance_rate = 0.0;  // zero when enumeration was used
    bool used_enumeration = false;
};

struct SelectionMetrics {
    double exact_recovery_rate = 0.0;
    double mean_posterior_mass_s0 = 0.0;
    double mean_false_positives = 0.0;
    double mean_false_negatives = 0.0;
    std::vector<ReplicationResult> replications;
};

// Design matrix draw: i.i.d. standard normal entries, or rows N(0, Sigma)
// through a Cholesky factor of the supplied covariance.
Eigen::MatrixXd gen_design(const DesignSpec& spec, int n, int p, Rng& rng);

// Response draw under the family at the full-dimensional truth.
Eigen::VectorXd gen_response(Family family, const Eigen::MatrixXd& x,
                             const Eigen::VectorXd& theta0, Rng& rng);

// Truth vector for a replication: s0 signals on the first s0 columns.
Eigen::VectorXd make_truth(const SimConfig& cfg, Rng& rng);

// Runs the replications (in parallel up to cfg.threads), each on its own
// data, cache, chain and derived random stream, and aggregates.
SelectionMetrics run_experiment(const SimConfig& cfg);

}  // namespace bvs

#endif
