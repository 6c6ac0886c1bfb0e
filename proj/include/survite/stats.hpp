#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace survite::stats {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Standard normal density / distribution. The survival and log-survival
// variants stay accurate deep into the upper tail (|z| up to ~37 via erfc,
// asymptotic beyond), which the log-normal censored likelihood needs.
double norm_pdf(double z);
double norm_logpdf(double z);
double norm_cdf(double z);
double norm_sf(double z);
double norm_logsf(double z);

// Inverse of the standard normal CDF (Wichura's AS241, ~1e-15 relative).
double inv_norm_cdf(double p);

// Upper-tail probability of a chi-square with 1 degree of freedom.
double chi2_sf_1df(double x);

// log(1 + e^x) without overflow.
double softplus(double x);

// SplitMix64, used to derive independent per-replicate seeds from a master
// seed. The derivation is pure arithmetic, so replicate streams are
// reproducible across platforms and independent of scheduling.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Deterministic RNG: mt19937_64 (bit-exact by the standard) with hand-rolled
// variate mappings, avoiding the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // Uniform on [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1), safe for log / inverse-CDF transforms.
  double u01_open() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return inv_norm_cdf(u01_open()); }
  double exponential(double rate);

  // Uniform index in [0, n) via multiply-shift.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return u01() < p; }

 private:
  std::mt19937_64 eng_;
};

// FNV-1a, used to stamp model-spec hashes into output metadata.
std::uint64_t fnv1a(std::string_view data);

}  // namespace survite::stats
