// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Exhaustive formula-versus-oracle grids.
 */

#pragma once

#include "loewy/formulas.hpp"
#include "loewy/oracle.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace loewy {

enum class Grid { uniserial, band_string, band_band };

[[nodiscard]] const char* grid_name(Grid g) noexcept;

struct GridCell {
  Grid grid{Grid::uniserial};
  ModuleSpec left;
  ModuleSpec right;
  /// Band-by-band case label, or 0 for other grids.
  char band_case{0};
};

/**
 * Cells of one grid in lexicographic order. Lengths are clamped to 2q-1;
 * band parameters run over all nonzero elements of `field`; band legs of
 * different parity are skipped since they do not form a band word.
 *
 *   uniserial:   M(k_l) (x) M(k'_m),              0 <= l <= max_l, 0 <= m <= max_m
 *   band_string: M(A_l1 B_l2^-1, rho) (x) M(k_m), 1 <= l1,l2 <= max_l, 0 <= m <= max_m
 *   band_band:   M(A_l1 B_l2^-1, rho) (x) M(A_m1 B_m2^-1, sigma)
 */
[[nodiscard]] std::vector<GridCell> grid_cells(Grid grid, std::size_t q, const FieldDesc& field, Nat max_l,
                                               Nat max_m);

using FormulaFn = std::function<std::size_t(const ModuleSpec&, const ModuleSpec&, std::size_t, const FieldDesc&)>;

struct VerifyOptions {
  std::size_t q{2};
  unsigned field_e{2};
  Nat max_l{3};
  Nat max_m{3};
  std::vector<Grid> grids{Grid::uniserial, Grid::band_string, Grid::band_band};
  std::size_t max_dim{kDefaultMaxDim};
  unsigned jobs{1};
  /// Replaces loewy_general(...).length when set.
  FormulaFn formula;
};

struct Mismatch {
  Grid grid{Grid::uniserial};
  std::string left;
  std::string right;
  std::size_t formula{0};
  std::size_t oracle{0};
  bool projective_formula{false};
};

struct VerifySummary {
  std::size_t checked{0};
  std::size_t skipped{0};
  std::size_t mismatch_count{0};
  /// Cells where projective_summand disagrees with a length of 2q+1.
  std::size_t projective_exceptions{0};
  /// First kMaxReported disagreements of either kind, in cell order.
  std::vector<Mismatch> mismatches;
  std::map<Grid, std::size_t> checked_per_grid;
  std::map<char, std::size_t> band_band_cases;

  static constexpr std::size_t kMaxReported = 10;
  [[nodiscard]] bool ok() const noexcept { return mismatch_count == 0 && projective_exceptions == 0; }
};

/// Runs the selected grids; results are aggregated in cell order regardless of `jobs`.
[[nodiscard]] VerifySummary run_verify(const VerifyOptions& options);

}  // namespace loewy
