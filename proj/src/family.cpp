#include "bvs/family.hpp"

#include <cmath>

namespace bvs {

LinkValues link_values(Family family, double eta) {
    LinkValues v{};
    switch (family) {
        case Family::logistic: {
            const double e = std::exp(-std::fabs(eta));
            const double denom = 1.0 + e;
            v.b = std::max(eta, 0.0) + std::log1p(e);
            v.b1 = eta >= 0.0 ? 1.0 / denom : e / denom;
            v.b2 = e / (denom * denom);
            v.b3 = v.b2 * (1.0 - 2.0 * v.b1);
            break;
        }
        case Family::poisson: {
            if (eta > kPoissonEtaGuard) throw saturation_error(eta);
            const double e = std::exp(eta);
            v.b = v.b1 = v.b2 = v.b3 = e;
            break;
        }
    }
    return v;
}

double mean_value(Family family, double eta) {
    if (family == Family::logistic) {
        const double e = std::exp(-std::fabs(eta));
        return eta >= 0.0 ? 1.0 / (1.0 + e) : e / (1.0 + e);
    }
    if (eta > kPoissonEtaGuard) throw saturation_error(eta);
    return std::exp(eta);
}

double variance_value(Family family, double eta) {
    if (family == Family::logistic) {
        const double e = std::exp(-std::fabs(eta));
        const double denom = 1.0 + e;
        return e / (denom * denom);
    }
    if (eta > kPoissonEtaGuard) throw saturation_error(eta);
    return std::exp(eta);
}

double family_c_dev(Family family) {
    return family == Family::poisson ? std::exp(0.5) : std::exp(1.5);
}

std::string family_name(Family family) {
    return family == Family::poisson ? "poisson" : "logistic";
}

Family family_from_name(const std::string& name) {
    if (name == "logistic" || name == "binomial") return Family::logistic;
    if (name == "poisson") return Family::poisson;
    throw std::invalid_argument("unknown family '" + name + "' (expected logistic or poisson)");
}

}  // namespace bvs
