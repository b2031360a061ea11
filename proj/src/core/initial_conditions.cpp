#include "pbb/core/initial_conditions.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "pbb/core/errors.hpp"

namespace pbb {

const char* to_string(IcKind kind) {
  switch (kind) {
    case IcKind::SumOfSines: return "sum_of_sines";
    case IcKind::GaussianBump: return "gaussian_bump";
    case IcKind::TaylorGreen: return "taylor_green";
    case IcKind::Custom: return "custom";
  }
  return "unknown";
}

std::string IcSpec::descriptor() const {
  std::ostringstream os;
  os << to_string(kind) << ",seed=" << seed;
  switch (kind) {
    case IcKind::SumOfSines:
      os << ",modes=" << modes << ",amp=[" << amp_min << "," << amp_max << "],k=[" << k_min
         << "," << k_max << "],mean=" << mean;
      break;
    case IcKind::GaussianBump:
      os << ",amp=[" << amp_min << "," << amp_max << "],center=" << bump_center
         << ",width=" << bump_width << ",mean=" << mean;
      break;
    case IcKind::TaylorGreen:
    case IcKind::Custom:
      break;
  }
  return os.str();
}

double SampledIc::operator()(double x) const {
  require(dim_ == 1, ErrorCode::InvalidArgument, "2D initial condition evaluated with one coordinate");
  return f1_(x);
}

double SampledIc::operator()(double x, double y) const {
  require(dim_ == 2, ErrorCode::InvalidArgument, "1D initial condition evaluated with two coordinates");
  return f2_(x, y);
}

std::function<double(double)> SampledIc::fn1d() const {
  require(dim_ == 1, ErrorCode::InvalidArgument, "not a 1D initial condition");
  return f1_;
}

std::function<double(double, double)> SampledIc::fn2d() const {
  require(dim_ == 2, ErrorCode::InvalidArgument, "not a 2D initial condition");
  return f2_;
}

SampledIc sample_ic(const IcSpec& spec) {
  SampledIc out;
  switch (spec.kind) {
    case IcKind::SumOfSines: {
      require(spec.modes >= 1, ErrorCode::EmptyModeSet, "SumOfSines needs at least one mode");
      require(spec.amp_min <= spec.amp_max && spec.k_min <= spec.k_max,
              ErrorCode::InvalidArgument, "empty amplitude or wavenumber range");
      const CounterRng rng(spec.seed);
      struct Mode {
        double amp, k, phase;
      };
      std::vector<Mode> ms(spec.modes);
      for (int m = 0; m < spec.modes; ++m) {
        // three counters per mode, in a fixed order
        const std::uint64_t c = 3ull * m;
        ms[m].amp = rng.uniform(c, spec.amp_min, spec.amp_max);
        ms[m].k = static_cast<double>(rng.uniform_int(c + 1, spec.k_min, spec.k_max));
        ms[m].phase = rng.uniform(c + 2, 0.0, 2.0 * M_PI);
      }
      const double mean = spec.mean;
      out.f1_ = [ms, mean](double x) {
        double u = mean;
        for (const Mode& m : ms) u += m.amp * std::sin(2.0 * M_PI * m.k * x + m.phase);
        return u;
      };
      break;
    }
    case IcKind::GaussianBump: {
      require(spec.bump_width > 0.0, ErrorCode::InvalidArgument, "bump width must be positive");
      const CounterRng rng(spec.seed);
      const double amp = rng.uniform(0, spec.amp_min, spec.amp_max);
      const double c = spec.bump_center, w = spec.bump_width, mean = spec.mean;
      out.f1_ = [amp, c, w, mean](double x) {
        const double z = (x - c) / w;
        return mean + amp * std::exp(-0.5 * z * z);
      };
      break;
    }
    case IcKind::TaylorGreen: {
      out.dim_ = 2;
      out.f2_ = [](double x, double y) { return 2.0 * std::cos(x) * std::cos(y); };
      break;
    }
    case IcKind::Custom: {
      require(static_cast<bool>(spec.custom), ErrorCode::InvalidArgument,
              "custom initial condition not provided");
      out.f1_ = spec.custom;
      break;
    }
  }
  return out;
}

}  // namespace pbb
