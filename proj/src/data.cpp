#include "bvs/data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bvs {

Dataset::Dataset(Eigen::MatrixXd design, Eigen::VectorXd response,
                 std::vector<std::string> column_labels)
    : x(std::move(design)), y(std::move(response)), labels(std::move(column_labels)) {
    if (x.rows() < 1 || x.cols() < 1) throw std::invalid_argument("dataset needs n >= 1 and p >= 1");
    if (y.size() != x.rows()) throw std::invalid_argument("response length does not match design rows");
    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(x.cols()));
        for (Eigen::Index j = 0; j < x.cols(); ++j) labels.push_back("x" + std::to_string(j + 1));
    }
    if (static_cast<Eigen::Index>(labels.size()) != x.cols()) {
        throw std::invalid_argument("label count does not match design columns");
    }
}

void Dataset::validate(Family family) const {
    if (!x.allFinite()) throw std::invalid_argument("design matrix contains non-finite entries");
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double v = y[i];
        if (!std::isfinite(v)) {
            throw std::invalid_argument("response row " + std::to_string(i + 1) + " is not finite");
        }
        if (family == Family::logistic) {
            if (v != 0.0 && v != 1.0) {
                throw std::invalid_argument("response row " + std::to_string(i + 1) + " value " +
                                            std::to_string(v) + " not in {0,1} for logistic");
            }
        } else {
            if (v < 0.0 || v != std::floor(v)) {
                throw std::invalid_argument("response row " + std::to_string(i + 1) + " value " +
                                            std::to_string(v) +
                                            " is not a nonnegative integer for poisson");
            }
        }
    }
}

ModelSupport::ModelSupport(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw std::invalid_argument("model support contains duplicate indices");
    }
    if (!indices_.empty() && indices_.front() < 1) {
        throw std::invalid_argument("model support indices are 1-based");
    }
}

bool ModelSupport::contains(int j) const {
    return std::binary_search(indices_.begin(), indices_.end(), j);
}

ModelSupport ModelSupport::with_added(int j) const {
    std::vector<int> out = indices_;
    out.insert(std::upper_bound(out.begin(), out.end(), j), j);
    ModelSupport s;
    s.indices_ = std::move(out);
    return s;
}

ModelSupport ModelSupport::with_removed(int j) const {
    std::vector<int> out;
    out.reserve(indices_.size());
    for (int v : indices_)
        if (v != j) out.push_back(v);
    ModelSupport s;
    s.indices_ = std::move(out);
    return s;
}

ModelSupport ModelSupport::with_swapped(int out_idx, int in_idx) const {
    return with_removed(out_idx).with_added(in_idx);
}

bool ModelSupport::within(int p) const {
    return indices_.empty() || (indices_.front() >= 1 && indices_.back() <= p);
}

bool ModelSupport::is_superset_of(const ModelSupport& other) const {
    return std::includes(indices_.begin(), indices_.end(), other.indices_.begin(),
                         other.indices_.end());
}

ModelSupport ModelSupport::merged_with(const ModelSupport& other) const {
    std::vector<int> out;
    out.reserve(indices_.size() + other.indices_.size());
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(out));
    ModelSupport s;
    s.indices_ = std::move(out);
    return s;
}

ModelSupport ModelSupport::nonzero_of(const Eigen::VectorXd& theta) {
    std::vector<int> idx;
    for (Eigen::Index j = 0; j < theta.size(); ++j)
        if (theta[j] != 0.0) idx.push_back(static_cast<int>(j) + 1);
    return ModelSupport(std::move(idx));
}

Eigen::MatrixXd ModelSupport::columns(const Dataset& data) const {
    if (!within(static_cast<int>(data.p()))) {
        throw std::invalid_argument("support index exceeds the number of covariates");
    }
    Eigen::MatrixXd out(data.n(), size());
    for (int k = 0; k < size(); ++k) out.col(k) = data.x.col(indices_[static_cast<std::size_t>(k)] - 1);
    return out;
}

Eigen::VectorXd ModelSupport::restrict(const Eigen::VectorXd& theta_full) const {
    Eigen::VectorXd out(size());
    for (int k = 0; k < size(); ++k) {
        const int j = indices_[static_cast<std::size_t>(k)];
        if (j > theta_full.size()) throw std::invalid_argument("support index exceeds vector length");
        out[k] = theta_full[j - 1];
    }
    return out;
}

std::string ModelSupport::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k) os << ',';
        os << indices_[k];
    }
    os << '}';
    return os.str();
}

}  // namespace bvs
