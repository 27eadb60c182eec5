// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/modrep.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace loewy {

namespace {

using SparseColumns = std::vector<std::vector<std::pair<std::size_t, FieldElem>>>;

SparseColumns sparse_columns(const Matrix& m) {
  SparseColumns cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) cols[c].emplace_back(r, m(r, c));
    }
  }
  return cols;
}

void apply(const SparseColumns& cols, const std::vector<FieldElem>& v, const FieldDesc& f,
           std::vector<FieldElem>& out) {
  out.assign(v.size(), kZero);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, a] : cols[j]) out[i] = f_add(out[i], f.mul(a, v[j]));
  }
}

Matrix power(const Matrix& m, std::size_t k, const FieldDesc& f) {
  Matrix acc = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) acc = multiply(m, acc, f);
  return acc;
}

// Letter a_i of a band word, 1-based and read cyclically (a_0 = a_m).
const Letter& band_letter(const Word& w, std::size_t i) { return w[(i + w.size() - 1) % w.size()]; }

}  // namespace

Representation::Representation(Matrix x, Matrix y, const FieldDesc& field)
    : x_(std::move(x)), y_(std::move(y)), field_(&field) {
  if (x_.rows() != x_.cols() || y_.rows() != y_.cols() || x_.rows() != y_.rows()) {
    throw std::domain_error("representation matrices must be square and of equal size");
  }
  if (!multiply(x_, x_, field).is_zero() || !multiply(y_, y_, field).is_zero()) {
    throw std::domain_error("representation violates X^2 = Y^2 = 0");
  }
}

void require_valid_q(std::size_t q) {
  if (q < 2 || !std::has_single_bit(q)) {
    throw std::domain_error("q must be a power of 2 with q >= 2, got " + std::to_string(q));
  }
}

Representation string_rep(const Word& w, const FieldDesc& f) {
  const std::size_t n = w.size() + 1;
  Matrix x(n, n);
  Matrix y(n, n);
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const Letter& a = w[i - 1];
    Matrix& z = a.base == Base::X ? x : y;
    if (a.inverted) {
      z(i, i - 1) = kOne;  // Z e_{i-1} = e_i
    } else {
      z(i - 1, i) = kOne;  // Z e_i = e_{i-1}
    }
  }
  return Representation(std::move(x), std::move(y), f);
}

Matrix jordan_block(FieldElem rho, std::size_t n) {
  Matrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = rho;
    if (i + 1 < n) j(i + 1, i) = kOne;
  }
  return j;
}

Representation band_rep(const Word& w, FieldElem rho, std::size_t n, const FieldDesc& f) {
  if (!in_w_prime(w)) throw std::domain_error("band word '" + w.str() + "' is not admissible");
  if (rho.is_zero() || !f.contains(rho)) {
    throw std::domain_error("band parameter must be a nonzero element of " + f.name());
  }
  if (n == 0) throw std::domain_error("band block size must be positive");

  const std::size_t m = w.size();
  const Matrix phi = jordan_block(rho, n);
  const Matrix phi_inv = inverse(phi, f);
  const auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };

  // T maps V_i to V_{i-1}, applying phi on V_1 -> V_0 and wrapping V_0 -> V_{m-1}.
  // Column idx(i, j) of `t` is T(e_j^(i)).
  Matrix t(m * n, m * n);
  Matrix t_inv(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == 1) {
        for (std::size_t k = 0; k < n; ++k) t(idx(0, k), idx(1, j)) = phi(k, j);
      } else {
        t(idx((i + m - 1) % m, j), idx(i, j)) = kOne;
      }
      if (i == 0) {
        for (std::size_t k = 0; k < n; ++k) t_inv(idx(1, k), idx(0, j)) = phi_inv(k, j);
      } else {
        t_inv(idx((i + 1) % m, j), idx(i, j)) = kOne;
      }
    }
  }

  Matrix x(m * n, m * n);
  Matrix y(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const Letter& own = band_letter(w, i);       // a_i links V_i and V_{i-1}
    const Letter& next = band_letter(w, i + 1);  // a_{i+1} links V_{i+1} and V_i
    for (Base z : {Base::X, Base::Y}) {
      Matrix& target = z == Base::X ? x : y;
      const Matrix* source = nullptr;
      if (own.base == z && !own.inverted) {
        source = &t;
      } else if (next.base == z && next.inverted) {
        source = &t_inv;
      }
      if (!source) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t col = idx(i, j);
        for (std::size_t r = 0; r < m * n; ++r) target(r, col) = (*source)(r, col);
      }
    }
  }
  return Representation(std::move(x), std::move(y), f);
}

Representation tensor_rep(const Representation& r, const Representation& s) {
  if (!(r.field() == s.field())) throw std::domain_error("tensor factors live over different fields");
  const FieldDesc& f = r.field();
  const Matrix ir = Matrix::identity(r.dim());
  const Matrix is = Matrix::identity(s.dim());
  const auto act = [&](const Matrix& a, const Matrix& b) {
    return kron(a, is, f) + kron(ir, b, f) + kron(a, b, f);
  };
  return Representation(act(r.x(), s.x()), act(r.y(), s.y()), f);
}

Representation swap_xy(const Representation& r) { return Representation(r.y(), r.x(), r.field()); }

RadicalSeries radical_series(const Representation& r) {
  const FieldDesc& f = r.field();
  const std::size_t n = r.dim();
  const SparseColumns xs = sparse_columns(r.x());
  const SparseColumns ys = sparse_columns(r.y());

  RadicalSeries series;
  series.dims.push_back(n);
  std::vector<std::vector<FieldElem>> layer(n, std::vector<FieldElem>(n));
  for (std::size_t i = 0; i < n; ++i) layer[i][i] = kOne;

  std::vector<FieldElem> image;
  while (!layer.empty()) {
    SubspaceBasis next(n, f);
    for (const auto& v : layer) {
      apply(xs, v, f, image);
      next.insert(image);
      apply(ys, v, f, image);
      next.insert(image);
    }
    if (next.dim() == layer.size()) throw std::domain_error("representation is not nilpotent");
    series.dims.push_back(next.dim());
    layer = next.vectors();
  }
  return series;
}

std::size_t loewy_length(const Representation& r) { return radical_series(r).loewy_length(); }

std::size_t socle_dim(const Representation& r) {
  const Matrix ms[] = {r.x(), r.y()};
  return kernel_meet(ms, r.field()).cols();
}

std::size_t top_dim(const Representation& r) {
  const Matrix ms[] = {r.x(), r.y()};
  return r.dim() - rank(col_space_sum(ms, r.field()), r.field());
}

bool check_dihedral(const Representation& r, std::size_t q) {
  require_valid_q(q);
  const FieldDesc& f = r.field();
  const Matrix xy = multiply(r.x(), r.y(), f);
  const Matrix yx = multiply(r.y(), r.x(), f);
  return (power(xy, q, f) + power(yx, q, f)).is_zero();
}

Representation regular_rep(std::size_t q, const FieldDesc& f) {
  require_valid_q(q);
  return band_rep(a_word(2 * q) + inverse(b_word(2 * q)), kOne, 1, f);
}

}  // namespace loewy
