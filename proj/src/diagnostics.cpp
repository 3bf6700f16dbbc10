#include "bvs/diagnostics.hpp"

#include <cmath>

namespace bvs {

namespace {

// theta*_S, using the exact identity theta*_S = theta0|S when S covers every
// nonzero of theta0; the Newton solve is only needed for misspecified S.
Eigen::VectorXd population_optimizer(Family family, const Dataset& data, const ModelSupport& s,
                                     const Eigen::VectorXd& theta0) {
    if (s.is_superset_of(ModelSupport::nonzero_of(theta0))) return s.restrict(theta0);
    return theta_star(family, data, s, theta0, FitOptions::tight(family));
}

Eigen::MatrixXd fisher_at_star(Family family, const Dataset& data, const ModelSupport& s,
                               const Eigen::VectorXd& theta0, Eigen::VectorXd* star_out = nullptr) {
    const Eigen::VectorXd star = population_optimizer(family, data, s, theta0);
    if (star_out) *star_out = star;
    return fisher_info(family, data, s, star);
}

// Symmetric inverse square root; throws on a numerically singular matrix.
Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const double floor = 1e-12 * std::max(1.0, eig.eigenvalues().maxCoeff());
    if (eig.eigenvalues().minCoeff() <= floor) {
        throw std::runtime_error("matrix is numerically singular");
    }
    const Eigen::VectorXd scale = eig.eigenvalues().array().rsqrt();
    return eig.eigenvectors() * scale.asDiagonal() * eig.eigenvectors().transpose();
}

double largest_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return eig.eigenvalues().maxCoeff();
}

}  // namespace

Eigen::VectorXd normalized_score(Family family, const Dataset& data, const ModelSupport& s,
                                 const Eigen::VectorXd& theta0) {
    Eigen::VectorXd star;
    const Eigen::MatrixXd fisher = fisher_at_star(family, data, s, theta0, &star);
    return inverse_sqrt(fisher) * score(family, data, s, star);
}

Misspecification delta_mis(Family family, const Dataset& data, const ModelSupport& s,
                           const Eigen::VectorXd& theta0) {
    const Eigen::MatrixXd fisher = fisher_at_star(family, data, s, theta0);
    const Eigen::MatrixXd v = v_matrix(family, data, s, theta0);
    const Eigen::MatrixXd f_half = inverse_sqrt(fisher);
    const Eigen::MatrixXd v_half = inverse_sqrt(v);
    Misspecification out;
    out.delta = largest_eigenvalue(f_half * v * f_half);
    out.delta_tilde = largest_eigenvalue(v_half * fisher * v_half);
    return out;
}

double design_regularity(Family family, const Dataset& data, const ModelSupport& s,
                         const Eigen::VectorXd& theta0) {
    const Eigen::MatrixXd fisher = fisher_at_star(family, data, s, theta0);
    Eigen::LLT<Eigen::MatrixXd> llt(fisher);
    if (llt.info() != Eigen::Success) throw std::runtime_error("fisher information is singular");
    const Eigen::MatrixXd lower = llt.matrixL();
    const Eigen::MatrixXd xs = s.columns(data);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < xs.rows(); ++i) {
        const Eigen::VectorXd solved =
            lower.triangularView<Eigen::Lower>().solve(xs.row(i).transpose());
        worst = std::max(worst, solved.norm());
    }
    return worst;
}

CompatNumbers compat_numbers(const Eigen::MatrixXd& x, const Eigen::VectorXd& w_diag, int s_level,
                             std::int64_t guard) {
    const int p = static_cast<int>(x.cols());
    if (s_level < 1 || s_level > p) throw std::invalid_argument("sparsity level out of range");
    if (s_level > 12) throw std::invalid_argument("sign-orthant enumeration guarded to |S| <= 12");
    if (w_diag.size() != x.rows()) throw std::invalid_argument("weight length mismatch");

    // Count supports of size <= s_level before enumerating.
    double count = 0.0, level = 1.0;
    for (int s = 1; s <= s_level; ++s) {
        level = level * (p - s + 1) / s;
        count += level;
        if (count > static_cast<double>(guard)) {
            throw std::invalid_argument("support space too large for compatibility enumeration");
        }
    }

    const Eigen::MatrixXd sigma =
        (x.transpose() * w_diag.asDiagonal() * x) / static_cast<double>(x.rows());

    double phi2_sq = std::numeric_limits<double>::infinity();
    double phi1_sq = std::numeric_limits<double>::infinity();

    std::vector<int> combo;
    for (int size = 1; size <= s_level; ++size) {
        combo.resize(static_cast<std::size_t>(size));
        for (int k = 0; k < size; ++k) combo[static_cast<std::size_t>(k)] = k + 1;
        for (;;) {
            Eigen::MatrixXd block(size, size);
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b)
                    block(a, b) = sigma(combo[static_cast<std::size_t>(a)] - 1,
                                        combo[static_cast<std::size_t>(b)] - 1);

            if (size == s_level) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block);
                phi2_sq = std::min(phi2_sq, eig.eigenvalues().minCoeff());
            }

            // Interior minimizers of |S| theta' Sigma theta on the l1-sphere:
            // per sign orthant sigma the stationary point is Sigma^{-1} s up to
            // scale, feasible when its signs match; boundary cases belong to
            // smaller supports and are enumerated there.
            Eigen::LDLT<Eigen::MatrixXd> solver(block);
            if (solver.info() == Eigen::Success) {
                const std::uint64_t orthants = 1ULL << (size - 1);  // s and -s coincide
                Eigen::VectorXd sign(size);
                for (std::uint64_t mask = 0; mask < orthants; ++mask) {
                    sign[0] = 1.0;
                    for (int k = 1; k < size; ++k) {
                        sign[k] = (mask >> (k - 1)) & 1 ? -1.0 : 1.0;
                    }
                    const Eigen::VectorXd solved = solver.solve(sign);
                    if ((block * solved - sign).norm() > 1e-9 * std::sqrt(double(size))) {
                        continue;  // numerically singular block; boundary handled by subsets
                    }
                    const double denom = sign.dot(solved);
                    if (!(denom > 0.0)) continue;
                    bool feasible = true;
                    for (int k = 0; k < size && feasible; ++k) {
                        feasible = sign[k] * solved[k] > 0.0;
                    }
                    if (!feasible) continue;
                    phi1_sq = std::min(phi1_sq, static_cast<double>(size) / denom);
                }
            }

            int k = size - 1;
            while (k >= 0 && combo[static_cast<std::size_t>(k)] == p - (size - 1 - k)) --k;
            if (k < 0) break;
            ++combo[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < size; ++j) {
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    return {std::sqrt(std::max(phi1_sq, 0.0)), std::sqrt(std::max(phi2_sq, 0.0))};
}

ScalarDiags scalar_diags(Family family, const Dataset& data, const Eigen::VectorXd& theta0) {
    if (theta0.size() != data.p()) throw std::invalid_argument("theta0 must be full-dimensional");
    const Eigen::VectorXd eta0 = data.x * theta0;
    ScalarDiags out;
    out.sigma_min_sq = std::numeric_limits<double>::infinity();
    out.sigma_max_sq = 0.0;
    for (Eigen::Index i = 0; i < eta0.size(); ++i) {
        const double w = variance_value(family, eta0[i]);
        out.sigma_min_sq = std::min(out.sigma_min_sq, w);
        out.sigma_max_sq = std::max(out.sigma_max_sq, w);
    }
    const double log2 = std::log(2.0);
    out.nu_n = (1.0 + 2.0 / (std::exp(1.0) * log2)) * (1.0 + out.sigma_max_sq / log2);
    out.beta_min = 0.0;
    for (Eigen::Index j = 0; j < theta0.size(); ++j) {
        if (theta0[j] != 0.0) {
            const double mag = std::fabs(theta0[j]);
            out.beta_min = out.beta_min == 0.0 ? mag : std::min(out.beta_min, mag);
        }
    }
    return out;
}

double kappa_n(Family family, const Dataset& data, const ModelSupport& s,
               const Eigen::VectorXd& theta0) {
    const Eigen::MatrixXd fisher = fisher_at_star(family, data, s, theta0);
    Eigen::LLT<Eigen::MatrixXd> llt(fisher);
    if (llt.info() != Eigen::Success) throw std::runtime_error("fisher information is singular");
    const Eigen::MatrixXd inverse = llt.solve(Eigen::MatrixXd::Identity(s.size(), s.size()));
    const double row_sum = inverse.cwiseAbs().rowwise().sum().maxCoeff();
    return static_cast<double>(data.n()) * row_sum;
}

double quad_residual(Family family, const Dataset& data, const Eigen::VectorXd& theta,
                     const Eigen::VectorXd& theta0) {
    if (theta.size() != data.p() || theta0.size() != data.p()) {
        throw std::invalid_argument("quad_residual expects full-dimensional parameters");
    }
    const ModelSupport joint =
        ModelSupport::nonzero_of(theta).merged_with(ModelSupport::nonzero_of(theta0));
    if (joint.is_empty()) return 0.0;
    const Eigen::VectorXd t = joint.restrict(theta);
    const Eigen::VectorXd t0 = joint.restrict(theta0);
    const Eigen::VectorXd diff = t - t0;
    const double lik_diff = log_likelihood(family, data, joint, t) -
                            log_likelihood(family, data, joint, t0);
    const Eigen::VectorXd grad = score(family, data, joint, t0);
    const Eigen::MatrixXd fisher = fisher_info(family, data, joint, t0);
    return lik_diff - diff.dot(grad) + 0.5 * diff.dot(fisher * diff);
}

double cubic_moment_bound(const Eigen::MatrixXd& x, const ModelSupport& s, int n_directions,
                          Rng& rng) {
    Eigen::MatrixXd xs(x.rows(), s.size());
    for (int k = 0; k < s.size(); ++k) xs.col(k) = x.col(s[k] - 1);
    const double inv_n = 1.0 / static_cast<double>(x.rows());

    const auto objective = [&](const Eigen::VectorXd& u) {
        return (xs * u).array().abs().cube().sum() * inv_n;
    };
    const auto gradient = [&](const Eigen::VectorXd& u) {
        const Eigen::ArrayXd z = (xs * u).array();
        const Eigen::VectorXd g = (z.abs2() * z.sign()).matrix();
        return Eigen::VectorXd(3.0 * inv_n * (xs.transpose() * g));
    };

    double best = 0.0;
    for (int d = 0; d < n_directions; ++d) {
        Eigen::VectorXd u(s.size());
        for (int k = 0; k < s.size(); ++k) u[k] = rng.normal();
        u.normalize();
        double value = objective(u);
        // projected gradient ascent on the unit sphere
        for (int step = 0; step < 50; ++step) {
            Eigen::VectorXd next = (u + 0.1 * gradient(u)).normalized();
            const double next_value = objective(next);
            if (next_value <= value * (1.0 + 1e-10)) break;
            u = next;
            value = next_value;
        }
        best = std::max(best, value);
    }
    return best;
}

FisherEigs fisher_eigs(Family family, const Dataset& data, const ModelSupport& s,
                       const Eigen::VectorXd& theta0) {
    const Eigen::MatrixXd fisher = fisher_at_star(family, data, s, theta0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(fisher);
    if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return {eig.eigenvalues().minCoeff(), eig.eigenvalues().maxCoeff()};
}

DiagnosticsReport run_diagnostics(Family family, const Dataset& data,
                                  const Eigen::VectorXd& theta0,
                                  const std::vector<ModelSupport>& supports, int phi_level_max,
                                  std::uint64_t seed) {
    DiagnosticsReport report;
    report.scalars = scalar_diags(family, data, theta0);

    for (const auto& s : supports) {
        SupportDiagnostics d;
        d.support = s;
        d.xi_norm = normalized_score(family, data, s, theta0).norm();
        const Misspecification mis = delta_mis(family, data, s, theta0);
        d.delta_mis = mis.delta;
        d.delta_mis_tilde = mis.delta_tilde;
        d.zeta = design_regularity(family, data, s, theta0);
        const FisherEigs eigs = fisher_eigs(family, data, s, theta0);
        d.rho_min = eigs.rho_min;
        d.rho_max = eigs.rho_max;
        d.kappa = kappa_n(family, data, s, theta0);
        report.kappa_max = std::max(report.kappa_max, d.kappa);
        report.per_support.push_back(std::move(d));
    }

    const Eigen::VectorXd eta0 = data.x * theta0;
    Eigen::VectorXd w0(eta0.size());
    for (Eigen::Index i = 0; i < eta0.size(); ++i) w0[i] = variance_value(family, eta0[i]);
    for (int level = 1; level <= phi_level_max; ++level) {
        const CompatNumbers numbers = compat_numbers(data.x, w0, level);
        report.phi1.push_back(numbers.phi1);
        report.phi2.push_back(numbers.phi2);
    }

    Rng rng(seed);
    const ModelSupport s0 = ModelSupport::nonzero_of(theta0);
    if (!s0.is_empty()) {
        report.k_cubic = cubic_moment_bound(data.x, s0, 16, rng);
        // residual of the quadratic expansion along random directions
        for (double eps : {0.05, 0.1, 0.2}) {
            Eigen::VectorXd direction = Eigen::VectorXd::Zero(data.p());
            for (int idx : s0.indices()) direction[idx - 1] = rng.normal();
            direction.normalize();
            report.quad_residuals.push_back(
                {eps, quad_residual(family, data, theta0 + eps * direction, theta0)});
        }
    }
    return report;
}

}  // namespace bvs
