#ifndef BVS_DATA_HPP
#define BVS_DATA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "bvs/family.hpp"

namespace bvs {

// Fixed design matrix with a response vector. Column labels are carried for
// reporting; they default to "x1".."xp".
struct Dataset {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
    std::vector<std::string> labels;

    Dataset() = default;
    Dataset(Eigen::MatrixXd design, Eigen::VectorXd response,
            std::vector<std::string> column_labels = {});

    Eigen::Index n() const { return x.rows(); }
    Eigen::Index p() const { return x.cols(); }

    // Checks finiteness and response-type compatibility (binary for logistic,
    // nonnegative integer for Poisson). Throws std::invalid_argument with the
    // first offending row index in the message.
    void validate(Family family) const;
};

// Model support: strictly increasing 1-based column indices. This canonical
// form is the cache key used throughout the library.
class ModelSupport {
  public:
    ModelSupport() = default;
    explicit ModelSupport(std::vector<int> indices);

    static ModelSupport empty() { return ModelSupport(); }

    int size() const { return static_cast<int>(indices_.size()); }
    bool is_empty() const { return indices_.empty(); }
    const std::vector<int>& indices() const { return indices_; }
    int operator[](int k) const { return indices_[static_cast<std::size_t>(k)]; }

    bool contains(int j) const;
    ModelSupport with_added(int j) const;
    ModelSupport with_removed(int j) const;
    ModelSupport with_swapped(int out, int in) const;

    // True if every index lies in 1..p.
    bool within(int p) const;
    bool is_superset_of(const ModelSupport& other) const;

    // Union of two supports.
    ModelSupport merged_with(const ModelSupport& other) const;

    // Support of the nonzero entries of a full-length coefficient vector.
    static ModelSupport nonzero_of(const Eigen::VectorXd& theta);

    // Columns of the design restricted to this support (n x |S|).
    Eigen::MatrixXd columns(const Dataset& data) const;

    // Entries of a full p-vector restricted to this support.
    Eigen::VectorXd restrict(const Eigen::VectorXd& theta_full) const;

    std::string to_string() const;

    friend bool operator==(const ModelSupport& a, const ModelSupport& b) {
        return a.indices_ == b.indices_;
    }
    friend bool operator!=(const ModelSupport& a, const ModelSupport& b) { return !(a == b); }
    friend bool operator<(const ModelSupport& a, const ModelSupport& b) {
        return a.indices_ < b.indices_;
    }

  private:
    std::vector<int> indices_;
};

}  // namespace bvs

#endif
