// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file modrep.hpp
 * @brief Explicit matrix representations of k<X,Y>/(X^2, Y^2)-modules.
 *
 * A group algebra element sigma acts as 1 + X and tau as 1 + Y, so a module of
 * the dihedral group of order 4q is a pair of square-zero matrices with
 * (XY)^q = (YX)^q. Everything here is computed by brute-force exact linear
 * algebra and serves as the reference engine for the closed formulas.
 */

#pragma once

#include "loewy/gf2e.hpp"
#include "loewy/words.hpp"

#include <cstddef>
#include <vector>

namespace loewy {

class Representation {
 public:
  /// Throws std::domain_error unless x and y are square, equal-sized and square to zero.
  Representation(Matrix x, Matrix y, const FieldDesc& field);

  [[nodiscard]] std::size_t dim() const noexcept { return x_.rows(); }
  [[nodiscard]] const Matrix& x() const noexcept { return x_; }
  [[nodiscard]] const Matrix& y() const noexcept { return y_; }
  [[nodiscard]] const FieldDesc& field() const noexcept { return *field_; }

 private:
  Matrix x_;
  Matrix y_;
  const FieldDesc* field_;
};

struct RadicalSeries {
  /// dim of rad^t M for t = 0, 1, ...; strictly decreasing, ends at 0.
  std::vector<std::size_t> dims;

  [[nodiscard]] std::size_t loewy_length() const noexcept { return dims.empty() ? 0 : dims.size() - 1; }
};

/// String module M(w): basis e_0..e_|w|, letter a_i links e_i and e_{i-1}.
[[nodiscard]] Representation string_rep(const Word& w, const FieldDesc& f);

/**
 * Band module M(w, J_n(rho)) with J_n(rho) the Jordan block (rho on the
 * diagonal, 1 on the subdiagonal). Throws std::domain_error if w is not a band
 * word, rho is zero or outside the field, or n == 0.
 */
[[nodiscard]] Representation band_rep(const Word& w, FieldElem rho, std::size_t n, const FieldDesc& f);

/// Jordan block J_n(rho).
[[nodiscard]] Matrix jordan_block(FieldElem rho, std::size_t n);

/// Action on R (x) S through the group-like comultiplication.
[[nodiscard]] Representation tensor_rep(const Representation& r, const Representation& s);

/// The representation twisted by the X <-> Y automorphism.
[[nodiscard]] Representation swap_xy(const Representation& r);

[[nodiscard]] RadicalSeries radical_series(const Representation& r);
[[nodiscard]] std::size_t loewy_length(const Representation& r);
[[nodiscard]] std::size_t socle_dim(const Representation& r);
[[nodiscard]] std::size_t top_dim(const Representation& r);

/// True iff (XY)^q + (YX)^q vanishes.
[[nodiscard]] bool check_dihedral(const Representation& r, std::size_t q);

/// The regular module, a band on (XY)^q (X^-1 Y^-1)^q with rho = 1, n = 1.
[[nodiscard]] Representation regular_rep(std::size_t q, const FieldDesc& f);

/// Throws std::domain_error unless q is a power of two and at least 2.
void require_valid_q(std::size_t q);

}  // namespace loewy
