#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ndgs/types.hpp"

namespace ndgs {

/// Periodic box [-L, L)^3 with N points per axis plus the physical model
/// parameters. The frequency lattice is xi = (pi/L) * k with integer
/// k in {-N/2, ..., N/2-1} per axis.
struct GridSpec {
  int N = 48;        ///< points per axis
  double L = 12.0;   ///< box half-width
  double m = 1.0;    ///< mass
  double c = 1.0;    ///< speed of light
  double p = 2.5;    ///< nonlinearity exponent, 2 < p < 3
  double tau = 1.0;  ///< functional parameter, tau in [0, 1]

  GridSpec() = default;
  GridSpec(int N_, double L_, double m_, double c_, double p_, double tau_);

  std::size_t points() const { return std::size_t(N) * N * N; }
  double spacing() const { return 2.0 * L / N; }
  double cell_volume() const {
    const double h = spacing();
    return h * h * h;
  }
  double box_volume() const { return 8.0 * L * L * L; }
  double rest_energy() const { return m * c * c; }

  /// Signed lattice index of axis position i (FFT storage order).
  int signed_index(int i) const { return i < N / 2 ? i : i - N; }
  /// Physical coordinate of axis node i.
  double coord(int i) const { return -L + spacing() * i; }
  /// Lattice frequency of axis node i.
  double freq(int i) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Per-grid tables used by the Fourier-side kernels: axis frequencies,
/// |xi|^2, the dispersion lambda_c(xi) = sqrt(m^2 c^4 + c^2 |xi|^2) and the
/// cancellation-free rest-subtracted weight
/// lambda_c(xi) - mc^2 = c^2 |xi|^2 / (lambda_c(xi) + mc^2).
class ModeTable {
 public:
  explicit ModeTable(const GridSpec& g);

  const GridSpec& grid() const { return grid_; }
  std::size_t n_modes() const { return grid_.points(); }
  double mc2() const { return grid_.rest_energy(); }

  const double* axis_freq() const { return axis_.data(); }
  const double* lambda() const { return lambda_.data(); }
  const double* xi_sq() const { return xi2_.data(); }
  const double* lambda_minus_rest() const { return lam_mr_.data(); }

  /// Frequency vector of flat mode index n (x fastest).
  std::array<double, 3> xi(std::size_t n) const;

 private:
  GridSpec grid_;
  std::vector<double> axis_;
  std::vector<double> lambda_;
  std::vector<double> xi2_;
  std::vector<double> lam_mr_;
};

/// Shared table for a grid; built once and cached per (N, L, m, c).
const ModeTable& mode_table(const GridSpec& g);

}  // namespace ndgs
