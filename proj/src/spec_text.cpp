// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/spec_text.hpp"

#include <charconv>
#include <vector>

namespace loewy {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Nat parse_nat(std::string_view s, std::string_view what) {
  Nat value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw SpecError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

FieldElem parse_rho(std::string_view s, const FieldDesc& field) {
  const Nat v = parse_nat(s, "band parameter");
  if (v == 0 || v >= field.order()) {
    throw std::domain_error("band parameter " + std::string(s) + " is not a nonzero element of " + field.name());
  }
  return FieldElem{static_cast<unsigned>(v)};
}

Word parse_word(std::string_view s) {
  try {
    return Word::parse(s);
  } catch (const WordError& e) {
    throw SpecError("invalid word '" + std::string(s) + "' at position " + std::to_string(e.position()) + ": " +
                    e.what());
  }
}

std::size_t parse_block(const std::vector<std::string_view>& parts, std::size_t index) {
  if (parts.size() <= index) return 1;
  const Nat n = parse_nat(parts[index], "block size");
  if (n == 0) throw std::domain_error("band block size must be positive");
  return n;
}

}  // namespace

ModuleSpec parse_module_spec(std::string_view text, std::size_t q, const FieldDesc& field) {
  ModuleSpec spec;
  if (text == "P") {
    spec = regular_spec(q);
  } else if (text.size() >= 2 && text[1] == ':') {
    const char tag = text[0];
    const std::string_view body = text.substr(2);
    switch (tag) {
      case 'A':
      case 'B':
        spec = UniserialSpec{tag == 'A' ? Kind::A : Kind::B, parse_nat(body, "length")};
        break;
      case 'S':
        spec = StringSpec{parse_word(body)};
        break;
      case 'N': {
        const auto parts = split(body, ',');
        if (parts.size() < 3 || parts.size() > 4) throw SpecError("expected N:<l1>,<l2>,<rho>[,<n>]");
        spec = two_component_band(parse_nat(parts[0], "length"), parse_nat(parts[1], "length"),
                                  parse_rho(parts[2], field), parse_block(parts, 3));
        break;
      }
      case 'W': {
        const auto parts = split(body, ',');
        if (parts.size() < 2 || parts.size() > 3) throw SpecError("expected W:<word>,<rho>[,<n>]");
        spec = BandSpec{parse_word(parts[0]), parse_rho(parts[1], field), parse_block(parts, 2)};
        break;
      }
      default:
        throw SpecError("unknown module tag '" + std::string(1, tag) + "'");
    }
  } else {
    throw SpecError("invalid module spec '" + std::string(text) + "'");
  }
  validate(spec, q, field);
  return spec;
}

std::string format_module_spec(const ModuleSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniserialSpec>) {
          return std::string(1, to_char(s.kind)) + ":" + std::to_string(s.length);
        } else if constexpr (std::is_same_v<T, StringSpec>) {
          return "S:" + s.word.str();
        } else {
          const auto comps = directed_components(s.word);
          std::string out;
          if (comps.size() == 2 && comps[0] == DirectedComponent{Kind::A, comps[0].length, false} &&
              comps[1] == DirectedComponent{Kind::B, comps[1].length, true}) {
            out = "N:" + std::to_string(comps[0].length) + "," + std::to_string(comps[1].length) + ",";
          } else {
            out = "W:" + s.word.str() + ",";
          }
          out += std::to_string(s.rho.bits);
          if (s.n != 1) out += "," + std::to_string(s.n);
          return out;
        }
      },
      spec);
}

}  // namespace loewy
