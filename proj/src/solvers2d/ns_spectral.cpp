#include "pbb/solvers2d/ns_spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>

#include "pbb/core/errors.hpp"

namespace pbb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// In-place 2D transform: 1D passes over rows then columns. Forward leaves
/// coefficients unscaled; inverse carries the full 1/n^2 normalization.
class Fft2 {
 public:
  explicit Fft2(int n) : n_(n), line_(n), out_(n) {}

  void forward(Eigen::ArrayXcd& a) { run(a, true); }
  void inverse(Eigen::ArrayXcd& a) { run(a, false); }

 private:
  void run(Eigen::ArrayXcd& a, bool fwd) {
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < n_; ++i) line_(i) = a(j * n_ + i);
      if (fwd) {
        fft_.fwd(out_, line_);
      } else {
        fft_.inv(out_, line_);
      }
      for (int i = 0; i < n_; ++i) a(j * n_ + i) = out_(i);
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) line_(j) = a(j * n_ + i);
      if (fwd) {
        fft_.fwd(out_, line_);
      } else {
        fft_.inv(out_, line_);
      }
      for (int j = 0; j < n_; ++j) a(j * n_ + i) = out_(j);
    }
  }

  int n_;
  Eigen::FFT<double> fft_;
  Eigen::VectorXcd line_;
  Eigen::VectorXcd out_;
};

class VorticitySolver {
 public:
  VorticitySolver(const Grid2D& grid, double nu, const NsConfig& config)
      : n_(grid.nx()), nu_(nu), cfl_(config.cfl_factor), dx_(grid.dx()), fft_(n_) {
    const int m = n_ * n_;
    const std::complex<double> im(0.0, 1.0);
    ikx_.resize(m);
    iky_.resize(m);
    ksq_.resize(m);
    inv_ksq_.resize(m);
    mask_.resize(m);
    const double cutoff = n_ / 3.0;
    for (int j = 0; j < n_; ++j) {
      const double ky = j <= n_ / 2 ? j : j - n_;
      for (int i = 0; i < n_; ++i) {
        const double kx = i <= n_ / 2 ? i : i - n_;
        const int idx = j * n_ + i;
        ikx_(idx) = im * kx;
        iky_(idx) = im * ky;
        ksq_(idx) = kx * kx + ky * ky;
        inv_ksq_(idx) = ksq_(idx) > 0.0 ? 1.0 / ksq_(idx) : 0.0;
        mask_(idx) = (std::abs(kx) > cutoff || std::abs(ky) > cutoff) ? 0.0 : 1.0;
      }
    }
    if (config.forcing) {
      forcing_hat_ = sample(config.forcing);
      fft_.forward(forcing_hat_);
      forcing_hat_ *= mask_;
      forced_ = true;
    }
  }

  Eigen::ArrayXcd sample(const std::function<double(double, double)>& f) const {
    Eigen::ArrayXcd v(n_ * n_);
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < n_; ++i) v(j * n_ + i) = f(i * dx_, j * dx_);
    }
    return v;
  }

  Eigen::ArrayXcd project(const std::function<double(double, double)>& f) {
    Eigen::ArrayXcd w = sample(f);
    fft_.forward(w);
    w *= mask_;
    return w;
  }

  double max_speed(const Eigen::ArrayXcd& w) {
    velocity(w);
    return std::max(u_.real().abs().maxCoeff(), v_.real().abs().maxCoeff());
  }

  void advance(Eigen::ArrayXcd& w, double t_final) {
    double t = 0.0;
    while (t_final - t > 1e-12 * std::max(1.0, t_final)) {
      const double speed = max_speed(w);
      double dt = t_final - t;
      if (speed > 1e-12) dt = std::min(dt, cfl_ * dx_ / speed);
      require(dt > 1e-12 * std::max(1.0, t_final), ErrorCode::UnstableStep,
              "time step collapsed; velocity field is blowing up");
      step(w, dt);
      require(w.allFinite(), ErrorCode::UnstableStep, "non-finite vorticity coefficients");
      symmetrize(w);
      t += dt;
    }
  }

 private:
  // Velocity components into u_ and v_, in physical space.
  void velocity(const Eigen::ArrayXcd& w) {
    psi_ = w * inv_ksq_;
    u_ = iky_ * psi_;
    v_ = -ikx_ * psi_;
    fft_.inverse(u_);
    fft_.inverse(v_);
  }

  // Dealiased -(u.grad(w)) plus forcing, written to out.
  void nonlinear(const Eigen::ArrayXcd& w, Eigen::ArrayXcd& out) {
    velocity(w);
    wx_ = ikx_ * w;
    wy_ = iky_ * w;
    fft_.inverse(wx_);
    fft_.inverse(wy_);
    nl_ = (-(u_.real() * wx_.real() + v_.real() * wy_.real()))
              .cast<std::complex<double>>();
    fft_.forward(nl_);
    out = nl_ * mask_;
    out(0) = 0.0;
    if (forced_) out += forcing_hat_;
  }

  // One SSPRK3 step with the viscous factor exp(-nu k^2 dt) folded in
  // exactly, so a vanishing advective term decays without time error.
  void step(Eigen::ArrayXcd& w, double dt) {
    const Eigen::ArrayXcd e_full = (-nu_ * dt * ksq_).exp().cast<std::complex<double>>();
    const Eigen::ArrayXcd e_half = (-0.5 * nu_ * dt * ksq_).exp().cast<std::complex<double>>();
    const Eigen::ArrayXcd e_back = (0.5 * nu_ * dt * ksq_).exp().cast<std::complex<double>>();

    nonlinear(w, nl_stage_);
    stage1_ = e_full * (w + dt * nl_stage_);
    nonlinear(stage1_, nl_stage_);
    stage2_ = 0.75 * e_half * w + 0.25 * e_back * (stage1_ + dt * nl_stage_);
    nonlinear(stage2_, nl_stage_);
    w = (1.0 / 3.0) * e_full * w + (2.0 / 3.0) * e_half * (stage2_ + dt * nl_stage_);
  }

  // Enforce conjugate symmetry about k = 0 so the physical field stays real.
  void symmetrize(Eigen::ArrayXcd& w) const {
    for (int j = 0; j < n_; ++j) {
      const int jm = (n_ - j) % n_;
      for (int i = 0; i < n_; ++i) {
        const int im = (n_ - i) % n_;
        const int idx = j * n_ + i;
        const int mirror = jm * n_ + im;
        if (idx < mirror) {
          const std::complex<double> avg = 0.5 * (w(idx) + std::conj(w(mirror)));
          w(idx) = avg;
          w(mirror) = std::conj(avg);
        } else if (idx == mirror) {
          w(idx) = w(idx).real();
        }
      }
    }
  }

  int n_;
  double nu_;
  double cfl_;
  double dx_;
  Fft2 fft_;
  bool forced_ = false;
  Eigen::ArrayXcd ikx_, iky_, inv_ksq_, mask_;
  Eigen::ArrayXd ksq_;
  Eigen::ArrayXcd forcing_hat_;
  Eigen::ArrayXcd psi_, u_, v_, wx_, wy_, nl_;
  Eigen::ArrayXcd stage1_, stage2_, nl_stage_;
};

void check_grid(const Grid2D& grid) {
  require(grid.periodic_x() && grid.periodic_y(), ErrorCode::UnsupportedBoundary,
          "spectral solver needs a grid periodic on both axes");
  require(grid.nx() == grid.ny(), ErrorCode::InvalidArgument,
          "spectral solver needs a square grid");
  require(std::abs(grid.x_min()) < 1e-12 && std::abs(grid.y_min()) < 1e-12 &&
              std::abs(grid.x_max() - kTwoPi) < 1e-12 && std::abs(grid.y_max() - kTwoPi) < 1e-12,
          ErrorCode::InvalidArgument, "spectral solver runs on the [0, 2*pi]^2 square");
  require(power_of_two(grid.nx()) && grid.nx() >= 4, ErrorCode::NonPowerOfTwo,
          "side resolution must be a power of two (at least 4)");
}

}  // namespace

SpectralState ps_ns_solve(const std::function<double(double, double)>& initial_vorticity,
                          const Grid2D& grid, double nu, double t_final, const NsConfig& config) {
  require(static_cast<bool>(initial_vorticity), ErrorCode::InvalidArgument,
          "initial vorticity is required");
  check_grid(grid);
  require(nu >= 0.0, ErrorCode::InvalidArgument, "viscosity must be nonnegative");
  require(t_final >= 0.0, ErrorCode::InvalidArgument, "final time must be nonnegative");
  require(config.cfl_factor > 0.0 && config.cfl_factor <= 1.0, ErrorCode::InvalidArgument,
          "cfl factor must lie in (0, 1]");

  VorticitySolver solver(grid, nu, config);
  SpectralState state;
  state.grid = grid;
  state.nu = nu;
  state.omega_hat = solver.project(initial_vorticity);
  if (config.forcing) state.forcing_descriptor = "custom";
  if (t_final > 0.0) solver.advance(state.omega_hat, t_final);
  state.time = t_final;
  return state;
}

Field SpectralState::physical_vorticity() const {
  const int n = grid.nx();
  Fft2 fft(n);
  Eigen::ArrayXcd w = omega_hat;
  fft.inverse(w);
  Field out = Field::nodal2d(grid);
  out.values() = w.real();
  return out;
}

Field SpectralState::spectral_field() const {
  Field out = Field::spectral2d(grid);
  out.cvalues() = omega_hat;
  return out;
}

double hermitian_asymmetry(const SpectralState& state) {
  const int n = state.grid.nx();
  const Eigen::ArrayXcd& w = state.omega_hat;
  const double scale = w.abs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const int jm = (n - j) % n;
    for (int i = 0; i < n; ++i) {
      const int im = (n - i) % n;
      worst = std::max(worst, std::abs(w(j * n + i) - std::conj(w(jm * n + im))));
    }
  }
  return worst / scale;
}

double spectral_enstrophy(const SpectralState& state) {
  const int n = state.grid.nx();
  const double scale = 0.5 * kTwoPi * kTwoPi / (static_cast<double>(n) * n * n * n);
  return scale * state.omega_hat.abs2().sum();
}

double spectral_energy(const SpectralState& state) {
  const int n = state.grid.nx();
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double ky = j <= n / 2 ? j : j - n;
    for (int i = 0; i < n; ++i) {
      const double kx = i <= n / 2 ? i : i - n;
      const double ksq = kx * kx + ky * ky;
      if (ksq > 0.0) sum += std::norm(state.omega_hat(j * n + i)) / ksq;
    }
  }
  const double scale = 0.5 * kTwoPi * kTwoPi / (static_cast<double>(n) * n * n * n);
  return scale * sum;
}

}  // namespace pbb
