// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/binlucas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace loewy::binlucas {

namespace {

PathCount binomial(Nat n, Nat k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  PathCount result = 1;
  for (Nat i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace

unsigned nu(Nat n) {
  if (n == 0) throw std::domain_error("nu(0) is undefined");
  return static_cast<unsigned>(std::countr_zero(n));
}

unsigned disjoint_from(Nat l, Nat m) noexcept {
  return static_cast<unsigned>(std::bit_width(l & m));
}

Nat hash(Nat l, Nat m) noexcept {
  const unsigned s = disjoint_from(l, m);
  if (s == 0) return l + m;
  const Nat low = (s >= 64) ? ~Nat{0} : (Nat{1} << s) - 1;
  return (l & ~low) + (m & ~low) + low;
}

PathCount q_count(Nat t, Nat l, Nat m) {
  if (t < std::max(l, m) || t > l + m) return 0;
  return binomial(2 * t - l - m, t - m) * binomial((l + m) / 2, l + m - t);
}

int q_parity(Nat t, Nat l, Nat m) noexcept {
  if (t < std::max(l, m) || t > l + m) return 0;
  // With j = l + m - t the count is congruent to C(t+j, l+j) * C(l+j, 2j).
  const Nat j = l + m - t;
  return binom_parity(t + j, l + j) & binom_parity(l + j, 2 * j);
}

std::optional<std::pair<Nat, Nat>> back_diag_witness(Nat t, Nat l, Nat m) {
  if (q_parity(t, l, m) != 1) {
    throw std::domain_error("back_diag_witness requires an odd path count");
  }
  const Nat lo = t > m ? t - m : 0;
  for (Nat a = std::min(l, t) + 1; a-- > lo;) {
    if (q_parity(t, a, t - a) == 1) return std::pair{a, t - a};
  }
  return std::nullopt;
}

Nat tau(Nat l, Nat m) noexcept {
  for (Nat t = l + m + 1; t-- > 0;) {
    for (Nat a = 0; a <= std::min(l, t); ++a) {
      const Nat b_lo = t - a;
      for (Nat b = b_lo; b <= std::min(m, t); ++b) {
        if (q_parity(t, a, b) == 1) return t;
      }
    }
  }
  return 0;
}

}  // namespace loewy::binlucas
