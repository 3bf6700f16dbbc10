#ifndef BVS_DIAGNOSTICS_HPP
#define BVS_DIAGNOSTICS_HPP

#include "bvs/mle.hpp"
#include "bvs/rng.hpp"

namespace bvs {

// All operations here take an explicit full-dimensional theta0: they are
// simulation and verification tools, never fit-time components.

// Normalized score F^{-1/2} * grad L, both evaluated at the population
// optimizer theta*_S. The inverse square root uses the symmetric
// eigendecomposition.
Eigen::VectorXd normalized_score(Family family, const Dataset& data, const ModelSupport& s,
                                 const Eigen::VectorXd& theta0);

// Misspecification magnitudes: largest eigenvalues of F^{-1/2} V F^{-1/2}
// and of V^{-1/2} F V^{-1/2}. Both equal one when S covers supp(theta0).
struct Misspecification {
    double delta = 0.0;
    double delta_tilde = 0.0;
};

Misspecification delta_mis(Family family, const Dataset& data, const ModelSupport& s,
                           const Eigen::VectorXd& theta0);

// Design regularity: max_i || F^{-1/2} x_{i,S} ||_2 at theta*_S, computed
// with one Cholesky factorization and n triangular solves.
double design_regularity(Family family, const Dataset& data, const ModelSupport& s,
                         const Eigen::VectorXd& theta0);

// Uniform compatibility number phi1 and sparse singular value phi2 at
// sparsity level s, for Sigma = n^{-1} X' diag(w) X.
//   phi2^2 = min over |S| = s of lambda_min(Sigma_SS)
//   phi1^2 = min over supports of size <= s and theta on the l1-sphere of
//            |S| theta' Sigma theta, solved per support by sign-orthant
//            enumeration of the equality-constrained quadratic minimizers.
struct CompatNumbers {
    double phi1 = 0.0;
    double phi2 = 0.0;
};

CompatNumbers compat_numbers(const Eigen::MatrixXd& x, const Eigen::VectorXd& w_diag, int s_level,
                             std::int64_t guard = 100000);

// Extremes of the true-parameter variance weights plus the derived constants:
//   nu_n = (1 + 2/(e log 2)) (1 + sigma_max^2 / log 2)
//   beta_min = min_{j in supp(theta0)} |theta0_j|   (0 when theta0 == 0)
struct ScalarDiags {
    double sigma_min_sq = 0.0;
    double sigma_max_sq = 0.0;
    double nu_n = 0.0;
    double beta_min = 0.0;
};

ScalarDiags scalar_diags(Family family, const Dataset& data, const Eigen::VectorXd& theta0);

// n * max-absolute-row-sum of F^{-1} at theta*_S.
double kappa_n(Family family, const Dataset& data, const ModelSupport& s,
               const Eigen::VectorXd& theta0);

// Remainder of the quadratic expansion of the log-likelihood around theta0,
//   r(theta) = L(theta) - L(theta0) - d'grad L(theta0) + (1/2) d'F(theta0)d,
// computed on the union support of theta and theta0.
double quad_residual(Family family, const Dataset& data, const Eigen::VectorXd& theta,
                     const Eigen::VectorXd& theta0);

// Approximate lower bound on the cubic design moment
// sup_u n^{-1} sum_i |x_{i,S}' u|^3 by random directions plus local ascent.
double cubic_moment_bound(const Eigen::MatrixXd& x, const ModelSupport& s, int n_directions,
                          Rng& rng);

// Eigenvalue extremes of F at theta*_S (rho_min, rho_max).
struct FisherEigs {
    double rho_min = 0.0;
    double rho_max = 0.0;
};

FisherEigs fisher_eigs(Family family, const Dataset& data, const ModelSupport& s,
                       const Eigen::VectorXd& theta0);

// Aggregated report for a dataset, a truth vector and a list of supports.
struct SupportDiagnostics {
    ModelSupport support;
    double xi_norm = 0.0;
    double delta_mis = 0.0;
    double delta_mis_tilde = 0.0;
    double zeta = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    double kappa = 0.0;
};

struct QuadResidualSample {
    double epsilon = 0.0;
    double residual = 0.0;
};

struct DiagnosticsReport {
    std::vector<SupportDiagnostics> per_support;
    std::vector<double> phi1;  // indexed by sparsity level 1..level_max
    std::vector<double> phi2;
    ScalarDiags scalars;
    double kappa_max = 0.0;  // max of kappa over the supplied supports
    double k_cubic = 0.0;    // approximate lower bound, random directions
    std::vector<QuadResidualSample> quad_residuals;
};

DiagnosticsReport run_diagnostics(Family family, const Dataset& data,
                                  const Eigen::VectorXd& theta0,
                                  const std::vector<ModelSupport>& supports, int phi_level_max,
                                  std::uint64_t seed);

}  // namespace bvs

#endif
