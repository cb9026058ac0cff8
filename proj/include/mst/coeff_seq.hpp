#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace mst {

/// Finite truncation of a coefficient sequence (Taylor coefficients or
/// moments), indexed from 0. `p_exponent` is the ℓ^p context of the norm.
struct CoeffSeq {
  std::vector<double> coeffs;
  double p_exponent = 2.0;

  std::size_t size() const noexcept { return coeffs.size(); }
  double operator[](std::size_t i) const { return coeffs[i]; }

  /// ℓ^p norm in the sequence's own exponent (p = inf gives the max norm).
  double norm() const;
  void validate() const;
};

}  // namespace mst
