// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file binlucas.hpp
 * @brief Bit combinatorics of binary expansions.
 *
 * Disjointness of binary expansions, the lowest set bit, the `#` operation on
 * naturals, binomial parity by Lucas' theorem for p = 2, and the number of
 * lattice paths Q_t^(l,m) in the quiver on N x N whose arrows step right, up,
 * or diagonally (the diagonal only from points with even coordinate sum).
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>

namespace loewy::binlucas {

using Nat = std::uint64_t;
using PathCount = boost::multiprecision::cpp_int;

/// Index of the least set bit. Throws std::domain_error for n == 0.
[[nodiscard]] unsigned nu(Nat n);

/// True iff l and m have no set bit in common.
[[nodiscard]] constexpr bool perp(Nat l, Nat m) noexcept { return (l & m) == 0; }

/// Smallest s such that l and m are disjoint at every bit position >= s.
[[nodiscard]] unsigned disjoint_from(Nat l, Nat m) noexcept;

/**
 * l # m = lambda + mu + 2^s - 1, where s = disjoint_from(l, m) and lambda, mu
 * are l and m with all bits below s cleared.
 */
[[nodiscard]] Nat hash(Nat l, Nat m) noexcept;

/// binomial(r, s) mod 2: 1 iff the bits of s are a subset of the bits of r.
[[nodiscard]] constexpr int binom_parity(Nat r, Nat s) noexcept {
  return (s & ~r) == 0 ? 1 : 0;
}

/// Exact Q_t^(l,m) from the closed binomial product; zero outside max(l,m) <= t <= l+m.
[[nodiscard]] PathCount q_count(Nat t, Nat l, Nat m);

/// Q_t^(l,m) mod 2 using only bit operations.
[[nodiscard]] int q_parity(Nat t, Nat l, Nat m) noexcept;

/**
 * For odd Q_t^(l,m), a point (l', m') on the back diagonal l' + m' = t with
 * l' <= l, m' <= m and odd Q_t^(l',m'). Candidates are tried with l'
 * descending. Throws std::domain_error when Q_t^(l,m) is even; returns
 * nullopt only if no witness exists.
 */
[[nodiscard]] std::optional<std::pair<Nat, Nat>> back_diag_witness(Nat t, Nat l, Nat m);

/// Largest t for which some (a, b) <= (l, m) has odd Q_t^(a,b), by direct scan.
[[nodiscard]] Nat tau(Nat l, Nat m) noexcept;

}  // namespace loewy::binlucas
