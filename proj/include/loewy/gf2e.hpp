// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gf2e.hpp
 * @brief GF(2^e) arithmetic (1 <= e <= 8) and exact dense linear algebra.
 *
 * Elements are encoded as the coefficient bit vector of a polynomial in the
 * generator g, reduced by a fixed irreducible polynomial per degree:
 *
 *   e=1: x            e=2: x^2+x+1      e=3: x^3+x+1      e=4: x^4+x+1
 *   e=5: x^5+x^2+1    e=6: x^6+x+1      e=7: x^7+x+1      e=8: x^8+x^4+x^3+x+1
 *
 * Subspaces are returned in reduced column echelon form: basis vectors are
 * columns, each column's first nonzero entry (its pivot) is 1, no other basis
 * column is nonzero in a pivot row, and columns are sorted by pivot row.
 * Equal subspaces therefore yield equal matrices.
 */

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace loewy {

struct FieldElem {
  std::uint8_t bits{0};

  constexpr FieldElem() = default;
  constexpr explicit FieldElem(unsigned b) : bits(static_cast<std::uint8_t>(b)) {}

  [[nodiscard]] constexpr bool is_zero() const noexcept { return bits == 0; }
  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline constexpr FieldElem kZero{0};
inline constexpr FieldElem kOne{1};

class FieldDesc {
 public:
  /// Shared descriptor for GF(2^e); throws std::domain_error outside 1..8.
  static const FieldDesc& gf(unsigned e);

  [[nodiscard]] unsigned degree() const noexcept { return e_; }
  [[nodiscard]] unsigned order() const noexcept { return 1u << e_; }
  [[nodiscard]] unsigned reduction_poly() const noexcept { return poly_; }
  [[nodiscard]] bool contains(FieldElem a) const noexcept { return a.bits < order(); }
  [[nodiscard]] std::string name() const { return "gf:" + std::to_string(e_); }

  [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return FieldElem{mul_[(static_cast<unsigned>(a.bits) << e_) | b.bits]};
  }
  /// Throws std::domain_error for zero.
  [[nodiscard]] FieldElem inv(FieldElem a) const;

  /// Row j holds the bits of c * g^j; multiplication by c as a GF(2)-linear map.
  [[nodiscard]] const std::array<std::uint8_t, 8>& mul_planes(FieldElem c) const noexcept {
    return planes_[c.bits];
  }

  friend bool operator==(const FieldDesc& a, const FieldDesc& b) noexcept { return a.e_ == b.e_; }

 private:
  explicit FieldDesc(unsigned e);

  unsigned e_;
  unsigned poly_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
  std::vector<std::array<std::uint8_t, 8>> planes_;
};

[[nodiscard]] constexpr FieldElem f_add(FieldElem a, FieldElem b) noexcept {
  return FieldElem{static_cast<unsigned>(a.bits ^ b.bits)};
}
[[nodiscard]] FieldElem f_mul(FieldElem a, FieldElem b, const FieldDesc& f);
[[nodiscard]] FieldElem f_inv(FieldElem a, const FieldDesc& f);

/// Dense row-major matrix over GF(2^e).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors, all of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<FieldElem>>& cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] FieldElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  [[nodiscard]] FieldElem operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  [[nodiscard]] std::span<const FieldElem> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::vector<FieldElem> column(std::size_t c) const;
  [[nodiscard]] const std::vector<FieldElem>& entries() const noexcept { return entries_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<FieldElem> entries_;
};

[[nodiscard]] Matrix operator+(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix multiply(const Matrix& a, const Matrix& b, const FieldDesc& f);
[[nodiscard]] Matrix scale(const Matrix& a, FieldElem c, const FieldDesc& f);
/// Throws std::domain_error when singular or not square.
[[nodiscard]] Matrix inverse(const Matrix& a, const FieldDesc& f);

[[nodiscard]] std::size_t rank(const Matrix& m, const FieldDesc& f);

/// Basis of the sum of column spaces. Throws std::domain_error on row-count mismatch.
[[nodiscard]] Matrix col_space_sum(std::span<const Matrix> ms, const FieldDesc& f);

/// Kronecker product; entry (i*rows(b)+k, j*cols(b)+l) = a(i,j) * b(k,l).
[[nodiscard]] Matrix kron(const Matrix& a, const Matrix& b, const FieldDesc& f);

/// Basis of the intersection of kernels. Throws std::domain_error on column-count mismatch.
[[nodiscard]] Matrix kernel_meet(std::span<const Matrix> ms, const FieldDesc& f);

/**
 * Incrementally built subspace of GF(2^e)^n kept in reduced echelon form,
 * stored bit-sliced (one 64-bit lane per bit of the element encoding).
 * Produces the same canonical basis as col_space_sum.
 */
class SubspaceBasis {
 public:
  SubspaceBasis(std::size_t ambient_dim, const FieldDesc& f);

  /// Adds v to the span; returns true iff the dimension grew.
  bool insert(std::span<const FieldElem> v);

  [[nodiscard]] std::size_t dim() const noexcept { return pivots_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return n_; }
  /// Basis vectors in ascending pivot order.
  [[nodiscard]] std::vector<std::vector<FieldElem>> vectors() const;
  [[nodiscard]] Matrix matrix() const;

 private:
  using Lanes = std::vector<std::uint64_t>;

  [[nodiscard]] FieldElem coeff(const std::uint64_t* v, std::size_t i) const noexcept;
  void axpy(std::uint64_t* dst, FieldElem c, const std::uint64_t* src) const noexcept;
  void unpack(const std::uint64_t* v, std::vector<FieldElem>& out) const;

  const FieldDesc* field_;
  std::size_t n_;
  std::size_t words_;
  std::size_t stride_;
  Lanes data_;
  std::vector<std::size_t> pivots_;
};

}  // namespace loewy
