#pragma once

/// @file
/// @brief Seeded initial-condition families, sampled bit-reproducibly.

#include <cstdint>
#include <functional>
#include <string>

#include "pbb/core/rng.hpp"

namespace pbb {

enum class IcKind { SumOfSines, GaussianBump, TaylorGreen, Custom };

const char* to_string(IcKind kind);

struct IcSpec {
  IcKind kind = IcKind::SumOfSines;
  std::uint64_t seed = 0;

  // SumOfSines: sum of `modes` terms A_m sin(2 pi k_m x + phi_m) with
  // A_m in [amp_min, amp_max], integer k_m in [k_min, k_max], phase in [0, 2 pi).
  int modes = 3;
  double amp_min = 0.2;
  double amp_max = 1.0;
  int k_min = 1;
  int k_max = 3;
  /// Constant offset added on top (lets Burgers runs stay away from u = 0).
  double mean = 0.0;

  // GaussianBump: amplitude drawn from [amp_min, amp_max].
  double bump_center = 0.5;
  double bump_width = 0.1;

  std::function<double(double)> custom;

  /// Stable one-line description entering config digests.
  std::string descriptor() const;
};

/// A sampled initial condition, evaluable in space. TaylorGreen is 2D
/// (vorticity 2 cos x cos y); the other kinds are 1D.
class SampledIc {
 public:
  double operator()(double x) const;
  double operator()(double x, double y) const;
  int dim() const { return dim_; }

  std::function<double(double)> fn1d() const;
  std::function<double(double, double)> fn2d() const;

  const std::string& prng_name() const { return prng_name_; }
  int prng_version() const { return prng_version_; }

 private:
  friend SampledIc sample_ic(const IcSpec&);
  SampledIc() = default;

  int dim_ = 1;
  std::function<double(double)> f1_;
  std::function<double(double, double)> f2_;
  std::string prng_name_ = CounterRng::kName;
  int prng_version_ = CounterRng::kVersion;
};

/// Deterministic in (kind, seed, params): equal specs sample bit-identical
/// functions on every platform.
SampledIc sample_ic(const IcSpec& spec);

}  // namespace pbb
