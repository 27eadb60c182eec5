// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spec_text.hpp
 * @brief Text form of module specs.
 *
 *   A:<l>                     uniserial M(A_l)
 *   B:<l>                     uniserial M(B_l)
 *   S:<word>                  string module
 *   N:<l1>,<l2>,<rho>[,<n>]   band M(A_l1 B_l2^-1, J_n(rho))
 *   W:<word>,<rho>[,<n>]      band on an arbitrary band word
 *   P                         the regular module
 *
 * rho is the decimal bit encoding of a field element.
 */

#pragma once

#include "loewy/formulas.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace loewy {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses and validates a spec for the group of order 4q over `field`.
/// Throws SpecError on syntax errors and std::domain_error on invalid modules.
[[nodiscard]] ModuleSpec parse_module_spec(std::string_view text, std::size_t q, const FieldDesc& field);

/// Text form accepted by parse_module_spec; A_l1 B_l2^-1 bands use the N: form.
[[nodiscard]] std::string format_module_spec(const ModuleSpec& spec);

}  // namespace loewy
