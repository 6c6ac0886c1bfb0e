#pragma once

#include <string>

#include "survite/stats.hpp"

namespace survite {

enum class Dist { Weibull, LogNormal, LogLogistic };

std::string dist_name(Dist d);
Dist dist_from_name(const std::string& name);

// Law of the standardized residual z = (log t - eta) / sigma in the AFT model
// log T = eta + sigma * z.
//
//   Weibull      -> minimum extreme value: g(z) = exp(z - e^z), G(z) = exp(-e^z)
//   LogNormal    -> standard normal:       g = phi,             G = 1 - Phi
//   LogLogistic  -> standard logistic:     g(z) = e^z/(1+e^z)^2, G(z) = 1/(1+e^z)
//
// Alongside g and G the law exposes the first two derivatives of log g and
// log G, which is exactly what the censored likelihood, score, and observed
// information need:
//
//   event     contribution: log g(z) - log sigma - log t
//   censored  contribution: log G(z)
class ErrorLaw {
 public:
  explicit ErrorLaw(Dist tag) : tag_(tag) {}

  Dist tag() const { return tag_; }

  double g(double z) const;
  double G(double z) const;
  double log_g(double z) const;
  double log_G(double z) const;
  double dlog_g(double z) const;
  double dlog_G(double z) const;
  double d2log_g(double z) const;
  double d2log_G(double z) const;

  // z such that G(z) = s, for s in (0, 1).
  double survival_quantile(double s) const;

  // Mean of the standardized law (Weibull: -Euler gamma; others 0).
  double mean() const;

  // Inverse-CDF draw; deterministic given the Rng stream.
  double sample(stats::Rng& rng) const;

 private:
  Dist tag_;
};

}  // namespace survite
