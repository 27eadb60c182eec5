// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/gf2e.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace loewy {

namespace {

constexpr std::array<unsigned, 9> kReductionPoly = {
    0,
    0b10,         // x
    0b111,        // x^2+x+1
    0b1011,       // x^3+x+1
    0b10011,      // x^4+x+1
    0b100101,     // x^5+x^2+1
    0b1000011,    // x^6+x+1
    0b10000011,   // x^7+x+1
    0b100011011,  // x^8+x^4+x^3+x+1
};

unsigned clmul_reduce(unsigned a, unsigned b, unsigned e, unsigned poly) {
  unsigned p = 0;
  for (unsigned i = 0; i < e; ++i) {
    if ((b >> i) & 1u) p ^= a << i;
  }
  for (unsigned i = 2 * e; i-- > e;) {
    if ((p >> i) & 1u) p ^= poly << (i - e);
  }
  return p;
}

// Row-reduces `rows` in place to reduced echelon form (pivot = first nonzero
// coordinate, normalized to 1) and returns the rank; the first `rank` rows
// hold the basis in ascending pivot order.
std::size_t rref(std::vector<std::vector<FieldElem>>& rows, std::size_t width,
                 const FieldDesc& f, std::vector<std::size_t>* pivot_cols = nullptr) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c].is_zero()) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    auto& piv = rows[rank];
    const FieldElem inv = f.inv(piv[c]);
    for (std::size_t k = c; k < width; ++k) piv[k] = f.mul(piv[k], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      const FieldElem factor = rows[i][c];
      for (std::size_t k = c; k < width; ++k) {
        rows[i][k] = f_add(rows[i][k], f.mul(factor, piv[k]));
      }
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

}  // namespace

FieldDesc::FieldDesc(unsigned e) : e_(e), poly_(kReductionPoly[e]) {
  const unsigned q = 1u << e;
  mul_.resize(static_cast<std::size_t>(q) * q);
  inv_.assign(q, 0);
  planes_.assign(q, {});
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      const unsigned p = clmul_reduce(a, b, e, poly_);
      mul_[(a << e) | b] = static_cast<std::uint8_t>(p);
      if (p == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
    for (unsigned j = 0; j < e; ++j) {
      planes_[a][j] = static_cast<std::uint8_t>(clmul_reduce(a, 1u << j, e, poly_));
    }
  }
}

const FieldDesc& FieldDesc::gf(unsigned e) {
  if (e < 1 || e > 8) throw std::domain_error("field degree must be in 1..8, got " + std::to_string(e));
  static std::array<std::unique_ptr<FieldDesc>, 9> fields;
  static std::once_flag once;
  std::call_once(once, [] {
    for (unsigned d = 1; d <= 8; ++d) fields[d].reset(new FieldDesc(d));
  });
  return *fields[e];
}

FieldElem FieldDesc::inv(FieldElem a) const {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  return FieldElem{inv_[a.bits]};
}

FieldElem f_mul(FieldElem a, FieldElem b, const FieldDesc& f) { return f.mul(a, b); }
FieldElem f_inv(FieldElem a, const FieldDesc& f) { return f.inv(a); }

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<FieldElem>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::domain_error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<FieldElem> Matrix::column(std::size_t c) const {
  std::vector<FieldElem> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](FieldElem e) { return e.is_zero(); });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::domain_error("matrix shape mismatch");
  Matrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) = f_add(a(r, c), b(r, c));
  }
  return s;
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldDesc& f) {
  if (a.cols() != b.rows()) throw std::domain_error("matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const FieldElem bkj = b(k, j);
        if (!bkj.is_zero()) p(i, j) = f_add(p(i, j), f.mul(aik, bkj));
      }
    }
  }
  return p;
}

Matrix scale(const Matrix& a, FieldElem c, const FieldDesc& f) {
  Matrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) s(r, k) = f.mul(a(r, k), c);
  }
  return s;
}

Matrix inverse(const Matrix& a, const FieldDesc& f) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::domain_error("only square matrices are invertible");
  std::vector<std::vector<FieldElem>> rows(n, std::vector<FieldElem>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = a(r, c);
    rows[r][n + r] = kOne;
  }
  std::vector<std::size_t> pivots;
  rref(rows, 2 * n, f, &pivots);
  if (rows.size() != n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw std::domain_error("matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  }
  return inv;
}

std::size_t rank(const Matrix& m, const FieldDesc& f) {
  std::vector<std::vector<FieldElem>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());
  return rref(rows, m.cols(), f);
}

Matrix col_space_sum(std::span<const Matrix> ms, const FieldDesc& f) {
  if (ms.empty()) return Matrix(0, 0);
  const std::size_t n = ms.front().rows();
  std::vector<std::vector<FieldElem>> vecs;
  for (const Matrix& m : ms) {
    if (m.rows() != n) throw std::domain_error("col_space_sum: row counts differ");
    for (std::size_t c = 0; c < m.cols(); ++c) vecs.push_back(m.column(c));
  }
  rref(vecs, n, f);
  return Matrix::from_columns(n, vecs);
}

Matrix kron(const Matrix& a, const Matrix& b, const FieldDesc& f) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const FieldElem aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          k(i * b.rows() + r, j * b.cols() + c) = f.mul(aij, b(r, c));
        }
      }
    }
  }
  return k;
}

Matrix kernel_meet(std::span<const Matrix> ms, const FieldDesc& f) {
  if (ms.empty()) return Matrix(0, 0);
  const std::size_t n = ms.front().cols();
  std::vector<std::vector<FieldElem>> rows;
  for (const Matrix& m : ms) {
    if (m.cols() != n) throw std::domain_error("kernel_meet: column counts differ");
    for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  }
  std::vector<std::size_t> pivots;
  rref(rows, n, f, &pivots);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> v(n);
    v[free] = kOne;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = rows[r][free];
    basis.push_back(std::move(v));
  }
  const Matrix raw = Matrix::from_columns(n, basis);
  return col_space_sum(std::span(&raw, 1), f);
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, const FieldDesc& f)
    : field_(&f),
      n_(ambient_dim),
      words_((ambient_dim + 63) / 64),
      stride_(words_ * f.degree()) {}

FieldElem SubspaceBasis::coeff(const std::uint64_t* v, std::size_t i) const noexcept {
  const std::size_t w = i / 64;
  const unsigned b = static_cast<unsigned>(i % 64);
  unsigned bits = 0;
  for (unsigned k = 0; k < field_->degree(); ++k) bits |= static_cast<unsigned>((v[k * words_ + w] >> b) & 1u) << k;
  return FieldElem{bits};
}

void SubspaceBasis::axpy(std::uint64_t* dst, FieldElem c, const std::uint64_t* src) const noexcept {
  const unsigned e = field_->degree();
  if (e == 1) {
    for (std::size_t w = 0; w < words_; ++w) dst[w] ^= src[w];
    return;
  }
  const auto& planes = field_->mul_planes(c);
  for (unsigned j = 0; j < e; ++j) {
    const std::uint64_t* s = src + j * words_;
    for (unsigned k = 0; k < e; ++k) {
      if (!((planes[j] >> k) & 1u)) continue;
      std::uint64_t* d = dst + k * words_;
      for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }
  }
}

void SubspaceBasis::unpack(const std::uint64_t* v, std::vector<FieldElem>& out) const {
  out.assign(n_, kZero);
  for (std::size_t i = 0; i < n_; ++i) out[i] = coeff(v, i);
}

bool SubspaceBasis::insert(std::span<const FieldElem> v) {
  if (v.size() != n_) throw std::domain_error("SubspaceBasis::insert: length mismatch");
  const unsigned e = field_->degree();
  Lanes tmp(stride_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    const unsigned bits = v[i].bits;
    if (bits == 0) continue;
    for (unsigned k = 0; k < e; ++k) {
      if ((bits >> k) & 1u) tmp[k * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  for (std::size_t s = 0; s < pivots_.size(); ++s) {
    const FieldElem c = coeff(tmp.data(), pivots_[s]);
    if (!c.is_zero()) axpy(tmp.data(), c, data_.data() + s * stride_);
  }
  std::size_t lead = n_;
  for (std::size_t w = 0; w < words_ && lead == n_; ++w) {
    std::uint64_t any = 0;
    for (unsigned k = 0; k < e; ++k) any |= tmp[k * words_ + w];
    if (any) lead = w * 64 + static_cast<std::size_t>(std::countr_zero(any));
  }
  if (lead == n_) return false;

  const FieldElem lc = coeff(tmp.data(), lead);
  if (lc != kOne) {
    Lanes scaled(stride_, 0);
    axpy(scaled.data(), field_->inv(lc), tmp.data());
    tmp.swap(scaled);
  }
  for (std::size_t s = 0; s < pivots_.size(); ++s) {
    std::uint64_t* b = data_.data() + s * stride_;
    const FieldElem c = coeff(b, lead);
    if (!c.is_zero()) axpy(b, c, tmp.data());
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  data_.insert(data_.begin() + static_cast<std::ptrdiff_t>(pos * stride_), tmp.begin(), tmp.end());
  return true;
}

std::vector<std::vector<FieldElem>> SubspaceBasis::vectors() const {
  std::vector<std::vector<FieldElem>> out(pivots_.size());
  for (std::size_t s = 0; s < pivots_.size(); ++s) unpack(data_.data() + s * stride_, out[s]);
  return out;
}

Matrix SubspaceBasis::matrix() const { return Matrix::from_columns(n_, vectors()); }

}  // namespace loewy
