// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Loewy lengths of tensor products computed from explicit matrices.
 */

#pragma once

#include "loewy/formulas.hpp"
#include "loewy/modrep.hpp"

#include <cstddef>
#include <stdexcept>

namespace loewy {

inline constexpr std::size_t kDefaultMaxDim = 4096;

/// Thrown when a tensor product would exceed the oracle dimension cap.
class DimensionCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// LOEWY_MAX_DIM if set to a positive integer, else kDefaultMaxDim.
[[nodiscard]] std::size_t max_oracle_dim();

/// Dimension of the module described by `spec`.
[[nodiscard]] std::size_t module_dim(const ModuleSpec& spec);

/// Matrices for `spec`; validates it first (see validate()).
[[nodiscard]] Representation representation_of(const ModuleSpec& spec, std::size_t q, const FieldDesc& field);

/**
 * Loewy length of a (x) b from the radical series of the tensored matrices.
 * Throws DimensionCapError above `max_dim`, std::logic_error if a factor
 * fails the dihedral relation.
 */
[[nodiscard]] std::size_t oracle_loewy(const ModuleSpec& a, const ModuleSpec& b, std::size_t q,
                                       const FieldDesc& field, std::size_t max_dim);
[[nodiscard]] std::size_t oracle_loewy(const ModuleSpec& a, const ModuleSpec& b, std::size_t q,
                                       const FieldDesc& field);

}  // namespace loewy
