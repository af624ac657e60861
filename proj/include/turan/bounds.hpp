#pragma once

// Closed-form bounds: the random-tuple upper bound, the lower bound for
// unimodular tuples over nu <= m, and the envelope pairs A(alpha), B(alpha).

#include <cmath>
#include <cstdint>
#include <utility>

#include "turan/errors.hpp"

namespace turan {

/// sqrt(6 n log(m+1)).
inline double erdos_renyi_bound(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) throw domain_error("erdos_renyi_bound: n, m must be >= 1");
  return std::sqrt(6.0 * static_cast<double>(n) * std::log(static_cast<double>(m) + 1.0));
}

/// sqrt(n (1 - (n-1)/m)), for m >= n.
inline double ncs_lower_bound(std::uint64_t n, std::uint64_t m) {
  if (n < 1) throw domain_error("ncs_lower_bound: n must be >= 1");
  if (m < n) throw domain_error("ncs_lower_bound: requires m >= n");
  const double nd = static_cast<double>(n);
  return std::sqrt(nd * (1.0 - (nd - 1.0) / static_cast<double>(m)));
}

struct Envelope {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds for the excess over nu <= alpha n^2, in units of sqrt(n).
inline Envelope envelope_A(double alpha) {
  if (!(alpha > 0.0)) throw domain_error("envelope_A: alpha must be > 0");
  Envelope e;
  e.lower = alpha <= 1.0 ? 1.0 - std::sqrt(1.0 - alpha) : 1.0;
  if (alpha <= 1.0) {
    e.upper = 1.0;
  } else if (alpha <= 2.0) {
    e.upper = std::sqrt(2.0);
  } else if (alpha <= 3.0) {
    e.upper = std::sqrt(3.0);
  } else {
    e.upper = 2.0;
  }
  return e;
}

inline Envelope envelope_B(double alpha) {
  if (!(alpha > 0.0)) throw domain_error("envelope_B: alpha must be > 0");
  Envelope e;
  if (alpha <= 1.0) {
    e.lower = 1.0;
  } else if (alpha <= 3.0) {
    e.lower = std::sqrt(1.5 - 0.5 / alpha);
  } else {
    e.lower = std::sqrt(2.0 - 2.0 / alpha);
  }
  e.upper = envelope_A(alpha).upper;
  return e;
}

}  // namespace turan
