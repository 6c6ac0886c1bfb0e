#include "survite/error_law.hpp"

#include <cmath>

#include "survite/common.hpp"

namespace survite {

namespace {

double logistic_cdf(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double ez = std::exp(z);
  return ez / (1.0 + ez);
}

// Hazard of the standard normal, phi(z) / (1 - Phi(z)), stable in both tails.
double norm_hazard(double z) {
  return std::exp(stats::norm_logpdf(z) - stats::norm_logsf(z));
}

}  // namespace

std::string dist_name(Dist d) {
  switch (d) {
    case Dist::Weibull: return "weibull";
    case Dist::LogNormal: return "lognormal";
    case Dist::LogLogistic: return "loglogistic";
  }
  return "unknown";
}

Dist dist_from_name(const std::string& name) {
  if (name == "weibull") return Dist::Weibull;
  if (name == "lognormal") return Dist::LogNormal;
  if (name == "loglogistic") return Dist::LogLogistic;
  throw InputError("unknown distribution: " + name +
                   " (expected weibull|lognormal|loglogistic)");
}

double ErrorLaw::log_g(double z) const {
  switch (tag_) {
    case Dist::Weibull: return z - std::exp(z);
    case Dist::LogNormal: return stats::norm_logpdf(z);
    case Dist::LogLogistic: return z - 2.0 * stats::softplus(z);
  }
  return 0.0;
}

double ErrorLaw::log_G(double z) const {
  switch (tag_) {
    case Dist::Weibull: return -std::exp(z);
    case Dist::LogNormal: return stats::norm_logsf(z);
    case Dist::LogLogistic: return -stats::softplus(z);
  }
  return 0.0;
}

double ErrorLaw::g(double z) const { return std::exp(log_g(z)); }

double ErrorLaw::G(double z) const { return std::exp(log_G(z)); }

double ErrorLaw::dlog_g(double z) const {
  switch (tag_) {
    case Dist::Weibull: return 1.0 - std::exp(z);
    case Dist::LogNormal: return -z;
    case Dist::LogLogistic: return 1.0 - 2.0 * logistic_cdf(z);
  }
  return 0.0;
}

double ErrorLaw::d2log_g(double z) const {
  switch (tag_) {
    case Dist::Weibull: return -std::exp(z);
    case Dist::LogNormal: return -1.0;
    case Dist::LogLogistic: {
      const double F = logistic_cdf(z);
      return -2.0 * F * (1.0 - F);
    }
  }
  return 0.0;
}

double ErrorLaw::dlog_G(double z) const {
  switch (tag_) {
    case Dist::Weibull: return -std::exp(z);
    case Dist::LogNormal: return -norm_hazard(z);
    case Dist::LogLogistic: return -logistic_cdf(z);
  }
  return 0.0;
}

double ErrorLaw::d2log_G(double z) const {
  switch (tag_) {
    case Dist::Weibull: return -std::exp(z);
    case Dist::LogNormal: {
      const double h = norm_hazard(z);
      return -h * (h - z);
    }
    case Dist::LogLogistic: {
      const double F = logistic_cdf(z);
      return -F * (1.0 - F);
    }
  }
  return 0.0;
}

double ErrorLaw::survival_quantile(double s) const {
  if (!(s > 0.0 && s < 1.0)) {
    throw NumericError("survival_quantile: level must lie in (0, 1)");
  }
  switch (tag_) {
    case Dist::Weibull: return std::log(-std::log(s));
    case Dist::LogNormal: return -stats::inv_norm_cdf(s);
    case Dist::LogLogistic: return std::log((1.0 - s) / s);
  }
  return 0.0;
}

double ErrorLaw::mean() const {
  switch (tag_) {
    case Dist::Weibull: return -stats::kEulerGamma;
    case Dist::LogNormal: return 0.0;
    case Dist::LogLogistic: return 0.0;
  }
  return 0.0;
}

double ErrorLaw::sample(stats::Rng& rng) const {
  // Treat the draw as a survival level: z = G^{-1}(u).
  return survival_quantile(rng.u01_open());
}

}  // namespace survite
