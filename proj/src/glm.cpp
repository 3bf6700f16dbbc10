#include "bvs/glm.hpp"

#include <cmath>

namespace bvs {

namespace {

void check_dims(const ModelSupport& s, const Eigen::VectorXd& theta, const Dataset& data) {
    if (theta.size() != s.size()) throw std::invalid_argument("theta length does not match |S|");
    if (!s.within(static_cast<int>(data.p()))) {
        throw std::invalid_argument("support index exceeds the number of covariates");
    }
}

}  // namespace

double log_likelihood_with_response(Family family, const Eigen::MatrixXd& xs,
                                    const Eigen::VectorXd& response, const Eigen::VectorXd& theta) {
    const Eigen::VectorXd eta =
        theta.size() == 0 ? Eigen::VectorXd::Zero(response.size()) : Eigen::VectorXd(xs * theta);
    double total = 0.0;
    for (Eigen::Index i = 0; i < response.size(); ++i) {
        const LinkValues lv = link_values(family, eta[i]);
        total += response[i] * eta[i] - lv.b;
    }
    return total;
}

Eigen::VectorXd score_with_response(Family family, const Eigen::MatrixXd& xs,
                                    const Eigen::VectorXd& response, const Eigen::VectorXd& theta) {
    const Eigen::VectorXd eta = xs * theta;
    Eigen::VectorXd resid(response.size());
    for (Eigen::Index i = 0; i < response.size(); ++i) {
        resid[i] = response[i] - mean_value(family, eta[i]);
    }
    return xs.transpose() * resid;
}

Eigen::MatrixXd fisher_with_design(Family family, const Eigen::MatrixXd& xs,
                                   const Eigen::VectorXd& theta) {
    const Eigen::VectorXd eta = xs * theta;
    Eigen::VectorXd w(eta.size());
    for (Eigen::Index i = 0; i < eta.size(); ++i) w[i] = variance_value(family, eta[i]);
    Eigen::MatrixXd f = xs.transpose() * w.asDiagonal() * xs;
    return (f + f.transpose()) / 2.0;  // enforce exact symmetry
}

double log_likelihood(Family family, const Dataset& data, const ModelSupport& s,
                      const Eigen::VectorXd& theta) {
    check_dims(s, theta, data);
    if (s.is_empty()) {
        // eta == 0, so L = -n * b(0).
        return -static_cast<double>(data.n()) * link_values(family, 0.0).b;
    }
    return log_likelihood_with_response(family, s.columns(data), data.y, theta);
}

Eigen::VectorXd score(Family family, const Dataset& data, const ModelSupport& s,
                      const Eigen::VectorXd& theta) {
    check_dims(s, theta, data);
    if (s.is_empty()) return Eigen::VectorXd(0);
    return score_with_response(family, s.columns(data), data.y, theta);
}

Eigen::MatrixXd fisher_info(Family family, const Dataset& data, const ModelSupport& s,
                            const Eigen::VectorXd& theta) {
    check_dims(s, theta, data);
    if (s.is_empty()) return Eigen::MatrixXd(0, 0);
    return fisher_with_design(family, s.columns(data), theta);
}

Eigen::MatrixXd v_matrix(Family family, const Dataset& data, const ModelSupport& s,
                         const Eigen::VectorXd& theta0) {
    if (theta0.size() != data.p()) throw std::invalid_argument("theta0 must be full-dimensional");
    if (!s.within(static_cast<int>(data.p()))) {
        throw std::invalid_argument("support index exceeds the number of covariates");
    }
    const Eigen::VectorXd eta0 = data.x * theta0;
    Eigen::VectorXd w(eta0.size());
    for (Eigen::Index i = 0; i < eta0.size(); ++i) w[i] = variance_value(family, eta0[i]);
    const Eigen::MatrixXd xs = s.columns(data);
    Eigen::MatrixXd v = xs.transpose() * w.asDiagonal() * xs;
    return (v + v.transpose()) / 2.0;
}

double hellinger_n(Family family, const Dataset& data, const Eigen::VectorXd& theta1,
                   const Eigen::VectorXd& theta2) {
    if (theta1.size() != data.p() || theta2.size() != data.p()) {
        throw std::invalid_argument("hellinger_n expects full-dimensional parameters");
    }
    const Eigen::VectorXd eta1 = data.x * theta1;
    const Eigen::VectorXd eta2 = data.x * theta2;
    double total = 0.0;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        const double mid = link_values(family, 0.5 * (eta1[i] + eta2[i])).b;
        const double avg = 0.5 * (link_values(family, eta1[i]).b + link_values(family, eta2[i]).b);
        // mid - avg <= 0 by convexity of b, so the exponential is in (0, 1].
        total += 1.0 - std::exp(mid - avg);
    }
    return std::sqrt(total / static_cast<double>(data.n()));
}

}  // namespace bvs
