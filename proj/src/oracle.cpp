// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace loewy {

std::size_t max_oracle_dim() {
  const char* env = std::getenv("LOEWY_MAX_DIM");
  if (!env) return kDefaultMaxDim;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultMaxDim;
  return value;
}

std::size_t module_dim(const ModuleSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniserialSpec>) {
          return s.length + 1;
        } else if constexpr (std::is_same_v<T, StringSpec>) {
          return s.word.size() + 1;
        } else {
          return s.word.size() * s.n;
        }
      },
      spec);
}

Representation representation_of(const ModuleSpec& spec, std::size_t q, const FieldDesc& field) {
  validate(spec, q, field);
  return std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniserialSpec>) {
          return string_rep(kind_word(s.kind, s.length), field);
        } else if constexpr (std::is_same_v<T, StringSpec>) {
          return string_rep(s.word, field);
        } else {
          return band_rep(s.word, s.rho, s.n, field);
        }
      },
      spec);
}

std::size_t oracle_loewy(const ModuleSpec& a, const ModuleSpec& b, std::size_t q, const FieldDesc& field,
                         std::size_t max_dim) {
  const std::size_t dim = module_dim(a) * module_dim(b);
  if (dim > max_dim) {
    throw DimensionCapError("tensor dimension " + std::to_string(dim) + " exceeds the cap " +
                            std::to_string(max_dim));
  }
  const Representation ra = representation_of(a, q, field);
  const Representation rb = representation_of(b, q, field);
  if (!check_dihedral(ra, q) || !check_dihedral(rb, q)) {
    throw std::logic_error("factor does not satisfy (XY)^q = (YX)^q");
  }
  return loewy_length(tensor_rep(ra, rb));
}

std::size_t oracle_loewy(const ModuleSpec& a, const ModuleSpec& b, std::size_t q, const FieldDesc& field) {
  return oracle_loewy(a, b, q, field, max_oracle_dim());
}

}  // namespace loewy
