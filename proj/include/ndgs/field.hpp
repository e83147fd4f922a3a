#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "ndgs/grid.hpp"
#include "ndgs/types.hpp"

namespace ndgs {

/// NC-component complex field sampled on a periodic grid. Storage is
/// component-major, x fastest within a component; the same container holds
/// either physical samples or Fourier coefficients depending on context.
template <int NC>
struct Field {
  GridSpec grid;
  std::vector<cplx> data;

  Field() = default;
  explicit Field(const GridSpec& g) : grid(g), data(NC * g.points()) {}

  static constexpr int n_comp = NC;
  std::size_t points() const { return grid.points(); }
  std::size_t size() const { return data.size(); }

  cplx* comp(int k) { return data.data() + std::size_t(k) * points(); }
  const cplx* comp(int k) const { return data.data() + std::size_t(k) * points(); }

  cplx& at(int k, std::size_t n) { return data[std::size_t(k) * points() + n]; }
  const cplx& at(int k, std::size_t n) const { return data[std::size_t(k) * points() + n]; }

  void set_zero() { std::fill(data.begin(), data.end(), cplx(0.0)); }
};

using SpinorField = Field<4>;  ///< C^4 spinor, the unknown of the Dirac model
using PairField = Field<2>;    ///< C^2 pair: upper/lower components, orbitals

/// Upper (first two) or lower (last two) pair of a spinor as a PairField.
PairField upper_pair(const SpinorField& u);
PairField lower_pair(const SpinorField& u);

/// Embed a pair into the upper (sign=+1) or lower (sign=-1) spinor slots.
SpinorField embed_pair(const PairField& f, int sign);

}  // namespace ndgs
