// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file formulas.hpp
 * @brief Closed formulas for the Loewy length of tensor products of modules
 *        of the dihedral 2-groups in characteristic 2.
 *
 * The base cases are products of modules with simple top and simple socle:
 * uniserials M(A_l), M(B_l) and two-component bands M(A_l1 B_l2^-1, rho).
 * Every other indecomposable is first replaced by the uniserials of its
 * directed components, which does not change the Loewy length of a product.
 */

#pragma once

#include "loewy/binlucas.hpp"
#include "loewy/gf2e.hpp"
#include "loewy/words.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace loewy {

using binlucas::Nat;

struct UniserialSpec {
  Kind kind{Kind::A};
  Nat length{0};
  friend bool operator==(const UniserialSpec&, const UniserialSpec&) = default;
};

struct StringSpec {
  Word word;
  friend bool operator==(const StringSpec&, const StringSpec&) = default;
};

/// Band M(word, J_n(rho)).
struct BandSpec {
  Word word;
  FieldElem rho{kOne};
  std::size_t n{1};
  friend bool operator==(const BandSpec&, const BandSpec&) = default;
};

using ModuleSpec = std::variant<UniserialSpec, StringSpec, BandSpec>;

/// M(A_l1 B_l2^-1, J_n(rho)); throws std::domain_error when l1 + l2 is odd or a length is 0.
[[nodiscard]] BandSpec two_component_band(Nat l1, Nat l2, FieldElem rho, std::size_t n = 1);
/// The regular module: the band on A_2q B_2q^-1 with rho = 1, n = 1.
[[nodiscard]] BandSpec regular_spec(std::size_t q);
[[nodiscard]] bool is_regular(const ModuleSpec& spec, std::size_t q);

/// The same module twisted by the X <-> Y automorphism.
[[nodiscard]] ModuleSpec swap_letters(const ModuleSpec& spec);

/// Loewy length of the module itself.
[[nodiscard]] std::size_t loewy_length_of(const ModuleSpec& spec);

/**
 * Throws std::domain_error unless the spec describes a module of the group
 * algebra of order 4q over `field`: words well formed, band parameters
 * nonzero field elements, and every directed component shorter than 2q
 * (the regular module is the one admitted exception).
 */
void validate(const ModuleSpec& spec, std::size_t q, const FieldDesc& field);

enum class Engine { formula, oracle, both };

struct LoewyReport {
  std::size_t length{0};
  Engine engine{Engine::formula};
  bool projective_summand{false};
  std::vector<std::string> trace;
};

/// M(kl_l) (x) M(kr_m) for uniserials.
[[nodiscard]] std::size_t loewy_uniserial(Kind kl, Nat l, Kind kr, Nat m);

/// M(A_l1 B_l2^-1, rho) (x) M(kr_m). Throws std::domain_error if l1 or l2 is 0.
[[nodiscard]] std::size_t loewy_band_uniserial(Nat l1, Nat l2, FieldElem rho, Kind kr, Nat m);

/// Which branch of the band-by-band formula applies.
enum class BandBandCase {
  unequal_legs,      ///< l1 != l2 or m1 != m2
  none_perp,         ///< no disjointness among (l,m), (l,m-1), (l-1,m)
  perp_l_and_lm1_m,  ///< l _|_ m and (l-1) _|_ m
  perp_l_and_l_mm1,  ///< l _|_ m and l _|_ (m-1)
  perp_shifted,      ///< (l-1) _|_ m and l _|_ (m-1)
};
[[nodiscard]] BandBandCase band_band_case(Nat l1, Nat l2, Nat m1, Nat m2);
[[nodiscard]] char case_label(BandBandCase c) noexcept;

/// M(A_l1 B_l2^-1, rho) (x) M(A_m1 B_m2^-1, sigma). Throws std::domain_error on a zero length.
[[nodiscard]] std::size_t loewy_band_band(Nat l1, Nat l2, FieldElem rho, Nat m1, Nat m2,
                                          FieldElem sigma);

/// Loewy length of a (x) b over the group algebra of order 4q, with a reduction trace.
[[nodiscard]] LoewyReport loewy_general(const ModuleSpec& a, const ModuleSpec& b, std::size_t q,
                                        const FieldDesc& field);

/// Whether a (x) b has a projective summand, decided by the case analysis on lengths
/// and band parameters (independently of loewy_general).
[[nodiscard]] bool projective_summand(const ModuleSpec& a, const ModuleSpec& b, std::size_t q,
                                      const FieldDesc& field);

}  // namespace loewy
