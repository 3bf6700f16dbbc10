#ifndef BVS_FAMILY_HPP
#define BVS_FAMILY_HPP

#include <stdexcept>
#include <string>

namespace bvs {

// Exponential families with canonical link supported by the library.
enum class Family { logistic, poisson };

// Thrown when a Poisson linear predictor exceeds the representable range of
// exp(). Callers must not treat the result as a valid density value; silent
// infinities would corrupt sampler weights.
class saturation_error : public std::runtime_error {
  public:
    explicit saturation_error(double eta)
        : std::runtime_error("poisson linear predictor " + std::to_string(eta) +
                             " exceeds the exp() saturation guard") {}
};

// b(eta) and its first three derivatives at a single linear-predictor value.
struct LinkValues {
    double b;
    double b1;
    double b2;
    double b3;
};

// Largest Poisson linear predictor accepted before raising saturation_error.
inline constexpr double kPoissonEtaGuard = 700.0;

// Cumulant function values, overflow-safe.
//   logistic: b(eta) = log(1 + e^eta), evaluated as max(eta,0) + log1p(e^-|eta|)
//   poisson : b(eta) = e^eta, so b = b' = b'' = b'''
LinkValues link_values(Family family, double eta);

// Mean function b'(eta) alone (same stable forms as link_values).
double mean_value(Family family, double eta);

// Variance function b''(eta) alone.
double variance_value(Family family, double eta);

// Family constant bounding b''(x + y) <= c_dev * b''(x) for |y| <= 1/2.
// Poisson: e^{1/2}. Logistic: e^{3/2}, from b''(a)/b''(b) <= e^{3|a-b|}.
double family_c_dev(Family family);

std::string family_name(Family family);
Family family_from_name(const std::string& name);

}  // namespace bvs

#endif
