#ifndef BVS_GLM_HPP
#define BVS_GLM_HPP

#include <Eigen/Dense>

#include "bvs/data.hpp"
#include "bvs/family.hpp"

namespace bvs {

// Log-likelihood of the model restricted to support s, up to the k(y) carrier
// term. k(y) is omitted identically: every quantity computed downstream is a
// likelihood ratio or a marginal ratio in which it cancels.
//   L = sum_i [ y_i * eta_i - b(eta_i) ],  eta = X_S * theta_S
// An empty support means eta == 0.
double log_likelihood(Family family, const Dataset& data, const ModelSupport& s,
                      const Eigen::VectorXd& theta);

// Score vector: sum_i (y_i - b'(eta_i)) x_{i,S}.
Eigen::VectorXd score(Family family, const Dataset& data, const ModelSupport& s,
                      const Eigen::VectorXd& theta);

// Fisher information X_S' diag(b''(eta)) X_S (negative Hessian of L).
Eigen::MatrixXd fisher_info(Family family, const Dataset& data, const ModelSupport& s,
                            const Eigen::VectorXd& theta);

// X_S' W0 X_S with W0 = diag(b''(x_i' theta0)), theta0 a full p-vector.
// Simulation/diagnostic use only; equals fisher_info at theta0|S when the
// support covers every nonzero of theta0.
Eigen::MatrixXd v_matrix(Family family, const Dataset& data, const ModelSupport& s,
                         const Eigen::VectorXd& theta0);

// Root mean Hellinger distance between the n-observation product densities at
// two full-dimensional parameters, using the closed form
//   H_i^2 = 1 - exp{ b((eta1+eta2)/2) - (b(eta1)+b(eta2))/2 }.
double hellinger_n(Family family, const Dataset& data, const Eigen::VectorXd& theta1,
                   const Eigen::VectorXd& theta2);

// Variants used internally: likelihood pieces against an arbitrary response
// vector (e.g. the population pseudo-responses b'(x_i' theta0)).
double log_likelihood_with_response(Family family, const Eigen::MatrixXd& xs,
                                    const Eigen::VectorXd& response, const Eigen::VectorXd& theta);
Eigen::VectorXd score_with_response(Family family, const Eigen::MatrixXd& xs,
                                    const Eigen::VectorXd& response, const Eigen::VectorXd& theta);
Eigen::MatrixXd fisher_with_design(Family family, const Eigen::MatrixXd& xs,
                                   const Eigen::VectorXd& theta);

}  // namespace bvs

#endif
