#include "bvs/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace bvs {

namespace {

// k-th (0-based) column index not contained in s, among 1..p.
int kth_excluded(const ModelSupport& s, int p, std::int64_t k) {
    int candidate = static_cast<int>(k) + 1;
    for (int idx : s.indices()) {
        if (idx <= candidate) ++candidate;
        else break;
    }
    (void)p;
    return candidate;
}

bool weight_after(const LogWeight& a, const LogWeight& b) {
    return a.value > b.value;
}

std::vector<TopModel> rank_top(const std::map<ModelSupport, TopModel>& models, int top_k) {
    std::vector<TopModel> ranked;
    ranked.reserve(models.size());
    for (const auto& [support, tm] : models) ranked.push_back(tm);
    std::stable_sort(ranked.begin(), ranked.end(), [](const TopModel& a, const TopModel& b) {
        if (a.visits != b.visits) return a.visits > b.visits;
        if (a.weight.value != b.weight.value) return weight_after(a.weight, b.weight);
        return a.support < b.support;
    });
    if (static_cast<int>(ranked.size()) > top_k) ranked.resize(static_cast<std::size_t>(top_k));
    return ranked;
}

}  // namespace

NeighborhoodCounts neighborhood_counts(const ModelSupport& s, int p, int s_max) {
    const int size = s.size();
    if (size > s_max) throw std::invalid_argument("support exceeds s_max");
    NeighborhoodCounts counts;
    counts.add = size < s_max ? p - size : 0;
    counts.del = size;
    counts.swap = static_cast<std::int64_t>(size) * (p - size);
    return counts;
}

Proposal propose(const ModelSupport& s, int p, int s_max, Rng& rng) {
    const NeighborhoodCounts counts = neighborhood_counts(s, p, s_max);
    const std::int64_t total = counts.total();
    if (total == 0) throw std::invalid_argument("empty proposal neighborhood");

    Proposal out;
    std::int64_t pick = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(total)));
    if (pick < counts.add) {
        out.support = s.with_added(kth_excluded(s, p, pick));
    } else if (pick < counts.add + counts.del) {
        out.support = s.with_removed(s[static_cast<int>(pick - counts.add)]);
    } else {
        pick -= counts.add + counts.del;
        const std::int64_t excluded = p - s.size();
        const int drop = s[static_cast<int>(pick / excluded)];
        const int gain = kth_excluded(s, p, pick % excluded);
        out.support = s.with_swapped(drop, gain);
    }
    out.log_q_fwd = -std::log(static_cast<double>(total));
    out.log_q_rev = -std::log(static_cast<double>(neighborhood_counts(out.support, p, s_max).total()));
    return out;
}

ChainState mh_step(const ChainState& state, const Hyperparams& h, FitCache& cache, Rng& rng,
                   bool* accepted) {
    const int p = static_cast<int>(cache.data().p());
    const Proposal prop = propose(state.current, p, h.s_max, rng);
    const LogWeight prop_weight = log_posterior_weight(prop.support, h, cache);

    ChainState next = state;
    next.iteration = state.iteration + 1;
    bool accept = false;
    if (prop_weight.finite()) {
        const double log_ratio =
            prop_weight.value + prop.log_q_rev - state.weight.value - prop.log_q_fwd;
        accept = log_ratio >= 0.0 || std::log(rng.uniform_pos()) < log_ratio;
    }
    if (accept) {
        next.current = prop.support;
        next.weight = prop_weight;
    }
    if (accepted) *accepted = accept;
    return next;
}

PosteriorSummary run_chain(const Hyperparams& h, FitCache& cache, const ChainOptions& opts) {
    const std::int64_t n_burnin = opts.n_burnin >= 0 ? opts.n_burnin : opts.n_iter / 10;
    if (opts.n_iter <= n_burnin) throw std::invalid_argument("n_iter must exceed n_burnin");

    const int p = static_cast<int>(cache.data().p());
    ChainState state;
    state.current = opts.init;
    state.weight = log_posterior_weight(opts.init, h, cache);
    if (!state.weight.finite()) {
        throw std::invalid_argument("initial model has -inf posterior weight");
    }

    Rng rng(opts.seed);
    std::map<ModelSupport, TopModel> seen;
    Eigen::VectorXd inclusion = Eigen::VectorXd::Zero(p);
    std::int64_t accepted_total = 0;

    for (std::int64_t t = 1; t <= opts.n_iter; ++t) {
        bool accepted = false;
        state = mh_step(state, h, cache, rng, &accepted);
        accepted_total += accepted;
        if (t <= n_burnin) continue;
        auto [it, inserted] = seen.try_emplace(state.current);
        if (inserted) {
            it->second.support = state.current;
            it->second.weight = state.weight;
        }
        ++it->second.visits;
        for (int idx : state.current.indices()) inclusion[idx - 1] += 1.0;
    }

    const double kept = static_cast<double>(opts.n_iter - n_burnin);
    PosteriorSummary summary;
    summary.inclusion_prob = inclusion / kept;
    summary.acceptance_rate = static_cast<double>(accepted_total) / static_cast<double>(opts.n_iter);
    summary.n_iter = opts.n_iter;
    summary.n_burnin = n_burnin;
    for (const auto& [support, tm] : seen) {
        summary.visit_counts[support] = tm.visits;
        summary.visit_weights[support] = tm.weight;
    }
    summary.top_models = rank_top(seen, opts.top_k);
    return summary;
}

std::int64_t count_supports(int p, int s_max, std::int64_t cap) {
    std::int64_t total = 0;
    double level = 1.0;  // C(p, 0)
    for (int s = 0; s <= s_max; ++s) {
        total += static_cast<std::int64_t>(level);
        if (total > cap) return cap + 1;
        level = level * (p - s) / (s + 1);
        if (level > static_cast<double>(cap)) return cap + 1;
    }
    return total;
}

std::map<ModelSupport, double> enumerate_exact(const Hyperparams& h, FitCache& cache,
                                               std::int64_t guard) {
    const int p = static_cast<int>(cache.data().p());
    if (count_supports(p, h.s_max, guard) > guard) {
        throw std::invalid_argument("support space too large for exact enumeration");
    }

    std::map<ModelSupport, double> log_weights;
    std::vector<int> combo;
    double log_norm = -std::numeric_limits<double>::infinity();

    // Enumerate supports of each size with a rolling combination.
    for (int size = 0; size <= h.s_max; ++size) {
        combo.assign(static_cast<std::size_t>(size), 0);
        for (int k = 0; k < size; ++k) combo[static_cast<std::size_t>(k)] = k + 1;
        for (;;) {
            ModelSupport s(combo);
            const LogWeight w = log_posterior_weight(s, h, cache);
            if (w.finite()) {
                log_weights.emplace(std::move(s), w.value);
                log_norm = std::max(log_norm, w.value);
            }
            if (size == 0) break;
            // next combination in lexicographic order
            int k = size - 1;
            while (k >= 0 && combo[static_cast<std::size_t>(k)] == p - (size - 1 - k)) --k;
            if (k < 0) break;
            ++combo[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < size; ++j) {
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    // log-sum-exp against the running maximum.
    double total = 0.0;
    for (const auto& [support, lw] : log_weights) total += std::exp(lw - log_norm);
    const double log_total = log_norm + std::log(total);

    std::map<ModelSupport, double> probs;
    for (const auto& [support, lw] : log_weights) probs[support] = std::exp(lw - log_total);
    return probs;
}

Eigen::VectorXd inclusion_from_exact(const std::map<ModelSupport, double>& exact, int p) {
    Eigen::VectorXd inclusion = Eigen::VectorXd::Zero(p);
    for (const auto& [support, prob] : exact) {
        for (int idx : support.indices()) inclusion[idx - 1] += prob;
    }
    return inclusion;
}

double tv_distance(const std::map<ModelSupport, std::int64_t>& counts, std::int64_t total,
                   const std::map<ModelSupport, double>& exact) {
    double tv = 0.0;
    for (const auto& [support, prob] : exact) {
        const auto it = counts.find(support);
        const double freq = it == counts.end() ? 0.0
                                               : static_cast<double>(it->second) /
                                                     static_cast<double>(total);
        tv += std::fabs(freq - prob);
    }
    for (const auto& [support, count] : counts) {
        if (exact.find(support) == exact.end()) {
            tv += static_cast<double>(count) / static_cast<double>(total);
        }
    }
    return tv / 2.0;
}

PosteriorSummary merge_summaries(const std::vector<PosteriorSummary>& parts, int top_k) {
    if (parts.empty()) throw std::invalid_argument("nothing to merge");
    PosteriorSummary merged;
    merged.inclusion_prob = Eigen::VectorXd::Zero(parts.front().inclusion_prob.size());
    double total_kept = 0.0;
    for (const auto& part : parts) {
        const double kept = static_cast<double>(part.n_iter - part.n_burnin);
        merged.inclusion_prob += part.inclusion_prob * kept;
        total_kept += kept;
        merged.acceptance_rate += part.acceptance_rate;
        merged.n_iter += part.n_iter;
        merged.n_burnin += part.n_burnin;
        for (const auto& [support, visits] : part.visit_counts) {
            merged.visit_counts[support] += visits;
            merged.visit_weights[support] = part.visit_weights.at(support);
        }
    }
    std::map<ModelSupport, TopModel> seen;
    for (const auto& [support, visits] : merged.visit_counts) {
        seen[support] = TopModel{support, visits, merged.visit_weights.at(support)};
    }
    merged.inclusion_prob /= total_kept;
    merged.acceptance_rate /= static_cast<double>(parts.size());
    merged.top_models = rank_top(seen, top_k);
    return merged;
}

}  // namespace bvs
