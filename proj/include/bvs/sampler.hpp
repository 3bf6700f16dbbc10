#ifndef BVS_SAMPLER_HPP
#define BVS_SAMPLER_HPP

#include <map>

#include "bvs/marginal.hpp"

namespace bvs {

// Sizes of the add / delete / swap neighborhoods of a support, after
// truncation at s_max. Swaps preserve the size, so only adds are truncated.
struct NeighborhoodCounts {
    std::int64_t add = 0;
    std::int64_t del = 0;
    std::int64_t swap = 0;
    std::int64_t total() const { return add + del + swap; }
};

NeighborhoodCounts neighborhood_counts(const ModelSupport& s, int p, int s_max);

// One uniform draw from the neighborhood, without materializing it. The
// proposal log-densities are -log |N(S)| and -log |N(S')|.
struct Proposal {
    ModelSupport support;
    double log_q_fwd = 0.0;
    double log_q_rev = 0.0;
};

Proposal propose(const ModelSupport& s, int p, int s_max, Rng& rng);

struct ChainState {
    ModelSupport current;
    LogWeight weight;
    std::int64_t iteration = 0;
};

// Single Metropolis-Hastings update. Proposals with -inf weight are rejected
// outright, so the chain never occupies an invalid model.
ChainState mh_step(const ChainState& state, const Hyperparams& h, FitCache& cache, Rng& rng,
                   bool* accepted = nullptr);

struct TopModel {
    ModelSupport support;
    std::int64_t visits = 0;
    LogWeight weight;
};

struct PosteriorSummary {
    Eigen::VectorXd inclusion_prob;    // marginal inclusion frequencies, length p
    std::vector<TopModel> top_models;  // by visits, ties by weight then indices
    double acceptance_rate = 0.0;
    std::int64_t n_iter = 0;
    std::int64_t n_burnin = 0;
    std::map<ModelSupport, std::int64_t> visit_counts;  // post-burnin states
    std::map<ModelSupport, LogWeight> visit_weights;    // weights of visited states
};

struct ChainOptions {
    std::int64_t n_iter = 50000;
    std::int64_t n_burnin = -1;  // negative means n_iter / 10
    ModelSupport init;           // default: empty model
    std::uint64_t seed = 0;
    int top_k = 20;
};

PosteriorSummary run_chain(const Hyperparams& h, FitCache& cache, const ChainOptions& opts);

// Exact posterior over every support with prior mass, for oracle testing.
// Refuses when the number of supports of size <= s_max exceeds the guard.
// Invalid models are excluded from the normalization.
std::map<ModelSupport, double> enumerate_exact(const Hyperparams& h, FitCache& cache,
                                               std::int64_t guard = 100000);

// Number of supports of size <= s_max among p columns, saturating at the cap.
std::int64_t count_supports(int p, int s_max, std::int64_t cap);

// Weight-averaged inclusion indicator of each column under exact enumeration.
Eigen::VectorXd inclusion_from_exact(const std::map<ModelSupport, double>& exact, int p);

// Total variation distance between chain visit frequencies and an exact
// distribution over supports.
double tv_distance(const std::map<ModelSupport, std::int64_t>& counts, std::int64_t total,
                   const std::map<ModelSupport, double>& exact);

// Order-stable merge of per-chain summaries (sums visit counts, averages
// inclusion frequencies and acceptance rates).
PosteriorSummary merge_summaries(const std::vector<PosteriorSummary>& parts, int top_k);

}  // namespace bvs

#endif
