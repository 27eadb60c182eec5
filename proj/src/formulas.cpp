// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/formulas.hpp"

#include "loewy/modrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace loewy {

using binlucas::hash;
using binlucas::perp;

namespace {

// Modules with simple top and simple socle; bands are kept in the A_l1 B_l2^-1 form.
struct UniAtom {
  Kind kind;
  Nat length;
};
struct BandAtom {
  Nat l1;
  Nat l2;
  FieldElem rho;
};
using Atom = std::variant<UniAtom, BandAtom>;

std::string describe(const Atom& atom) {
  if (const auto* u = std::get_if<UniAtom>(&atom)) {
    return std::string(1, to_char(u->kind)) + std::to_string(u->length);
  }
  const auto& b = std::get<BandAtom>(atom);
  return "Band(A" + std::to_string(b.l1) + " B" + std::to_string(b.l2) + "^-1, rho=" +
         std::to_string(b.rho.bits) + ")";
}

// (l-1) and (m-1) are only meaningful for positive arguments; a negative
// argument has every bit set and is disjoint from nothing but 0.
bool perp_minus_one(Nat l, Nat m) { return m >= 1 && perp(l, m - 1); }

std::vector<Atom> reduce(const ModuleSpec& spec, const FieldDesc& field, std::vector<std::string>& trace,
                         const char* side) {
  std::vector<Atom> atoms;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniserialSpec>) {
          atoms.push_back(UniAtom{s.kind, s.length});
        } else if constexpr (std::is_same_v<T, StringSpec>) {
          const auto comps = directed_components(s.word);
          if (comps.empty()) {
            atoms.push_back(UniAtom{Kind::A, 0});
          } else {
            for (const auto& c : comps) atoms.push_back(UniAtom{c.kind, c.length});
          }
          if (comps.size() > 1) {
            trace.push_back(std::string(side) + ": string " + s.word.str() + " reduced to its " +
                            std::to_string(comps.size()) + " directed components");
          }
        } else {
          const BandShape shape = band_canonical(s.word);
          if (shape.two_component_scalar && s.n == 1) {
            const auto& tc = *shape.two_component_scalar;
            const FieldElem rho = shape.from_inverse ? field.inv(s.rho) : s.rho;
            atoms.push_back(BandAtom{tc.l1, tc.l2, rho});
            if (shape.word != s.word) {
              trace.push_back(std::string(side) + ": band " + s.word.str() + " rewritten as " +
                              shape.word.str() + (shape.from_inverse ? " (inverted, rho -> rho^-1)" : ""));
            }
          } else {
            for (const auto& c : shape.components) atoms.push_back(UniAtom{c.kind, c.length});
            trace.push_back(std::string(side) + ": band " + s.word.str() + " with n=" + std::to_string(s.n) +
                            " reduced to its " + std::to_string(shape.components.size()) +
                            " directed components");
          }
        }
      },
      spec);
  return atoms;
}

std::size_t loewy_atoms(const Atom& a, const Atom& b) {
  const auto* ua = std::get_if<UniAtom>(&a);
  const auto* ub = std::get_if<UniAtom>(&b);
  if (ua && ub) return loewy_uniserial(ua->kind, ua->length, ub->kind, ub->length);
  if (ub) {
    const auto& ba = std::get<BandAtom>(a);
    return loewy_band_uniserial(ba.l1, ba.l2, ba.rho, ub->kind, ub->length);
  }
  const auto& bb = std::get<BandAtom>(b);
  if (ua) return loewy_band_uniserial(bb.l1, bb.l2, bb.rho, ua->kind, ua->length);
  const auto& ba = std::get<BandAtom>(a);
  return loewy_band_band(ba.l1, ba.l2, ba.rho, bb.l1, bb.l2, bb.rho);
}

bool projective_atoms(const Atom& a, const Atom& b, Nat q) {
  const Nat two_q = 2 * q;
  const auto* ua = std::get_if<UniAtom>(&a);
  const auto* ub = std::get_if<UniAtom>(&b);
  if (ua && ub) {
    const Nat sum = ua->length + ub->length;
    return ua->kind != ub->kind ? sum >= two_q : sum >= two_q + 1;
  }
  if (ua || ub) {
    const auto& band = std::get<BandAtom>(ua ? b : a);
    const UniAtom& uni = ua ? *ua : *ub;
    // For M(B_m) apply the X <-> Y swap, which exchanges the band's legs.
    const Nat first = uni.kind == Kind::A ? band.l1 : band.l2;
    const Nat second = uni.kind == Kind::A ? band.l2 : band.l1;
    return std::max(first + uni.length - 1, second + uni.length) >= two_q;
  }
  const auto& x = std::get<BandAtom>(a);
  const auto& y = std::get<BandAtom>(b);
  if (x.l1 != x.l2 || y.l1 != y.l2) {
    return std::max({x.l1 + y.l1 - 1, x.l1 + y.l2, x.l2 + y.l1, x.l2 + y.l2 - 1}) >= two_q;
  }
  const Nat l = x.l1;
  const Nat m = y.l1;
  if (!perp(l, m - 1)) return l + m >= two_q;
  return x.rho != y.rho && l + m == two_q;
}

std::size_t max_component(const ModuleSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniserialSpec>) {
          return s.length;
        } else {
          std::vector<DirectedComponent> comps;
          if constexpr (std::is_same_v<T, StringSpec>) {
            comps = directed_components(s.word);
          } else {
            comps = band_canonical(s.word).components;
          }
          std::size_t h = 0;
          for (const auto& c : comps) h = std::max(h, c.length);
          return h;
        }
      },
      spec);
}

}  // namespace

BandSpec two_component_band(Nat l1, Nat l2, FieldElem rho, std::size_t n) {
  if (l1 == 0 || l2 == 0) throw std::domain_error("band legs must be positive");
  if ((l1 + l2) % 2 != 0) {
    throw std::domain_error("band A" + std::to_string(l1) + " B" + std::to_string(l2) +
                            "^-1 needs legs of equal parity");
  }
  return BandSpec{a_word(l1) + inverse(b_word(l2)), rho, n};
}

BandSpec regular_spec(std::size_t q) {
  require_valid_q(q);
  return two_component_band(2 * q, 2 * q, kOne, 1);
}

bool is_regular(const ModuleSpec& spec, std::size_t q) {
  const auto* band = std::get_if<BandSpec>(&spec);
  if (!band || band->n != 1 || band->rho != kOne || !in_w_prime(band->word)) return false;
  const BandShape shape = band_canonical(band->word);
  return shape.two_component_scalar &&
         *shape.two_component_scalar == TwoComponentScalar{2 * q, 2 * q, Kind::A};
}

ModuleSpec swap_letters(const ModuleSpec& spec) {
  return std::visit(
      [](const auto& s) -> ModuleSpec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniserialSpec>) {
          return UniserialSpec{other(s.kind), s.length};
        } else if constexpr (std::is_same_v<T, StringSpec>) {
          return StringSpec{swap_letters(s.word)};
        } else {
          return BandSpec{swap_letters(s.word), s.rho, s.n};
        }
      },
      spec);
}

std::size_t loewy_length_of(const ModuleSpec& spec) { return max_component(spec) + 1; }

void validate(const ModuleSpec& spec, std::size_t q, const FieldDesc& field) {
  require_valid_q(q);
  if (const auto* band = std::get_if<BandSpec>(&spec)) {
    if (!in_w_prime(band->word)) {
      throw std::domain_error("band word '" + band->word.str() +
                              "' must have even positive length, be primitive and use both "
                              "direct and inverse letters");
    }
    if (band->rho.is_zero() || !field.contains(band->rho)) {
      throw std::domain_error("band parameter " + std::to_string(band->rho.bits) +
                              " is not a nonzero element of " + field.name());
    }
    if (band->n == 0) throw std::domain_error("band block size must be positive");
    if (is_regular(spec, q)) return;
  }
  const std::size_t h = max_component(spec);
  if (h >= 2 * q) {
    throw std::domain_error("directed component of length " + std::to_string(h) +
                            " exceeds the maximum " + std::to_string(2 * q - 1) + " for q=" +
                            std::to_string(q));
  }
}

std::size_t loewy_uniserial(Kind kl, Nat l, Kind kr, Nat m) {
  if (kl != kr) return perp(l, m) ? 1 + l + m : 2 + hash(l, m);
  const unsigned s = binlucas::disjoint_from(l, m);
  const Nat below = s >= 2 ? (Nat{1} << (s - 1)) - 1 : 0;
  return ((l | m) & below) == 0 ? 1 + hash(l, m) : 2 + hash(l, m);
}

std::size_t loewy_band_uniserial(Nat l1, Nat l2, FieldElem rho, Kind kr, Nat m) {
  if (l1 == 0 || l2 == 0) throw std::domain_error("band legs must be positive");
  if (kr == Kind::B) {
    // The X <-> Y swap turns the band into M(A_l2 B_l1^-1, rho^-1) and M(B_m)
    // into M(A_m); only whether rho equals 1 matters below.
    return loewy_band_uniserial(l2, l1, rho, Kind::A, m);
  }
  if (rho == kOne && l1 == l2 && perp(l1, m) && perp_minus_one(l1, m)) return 2 + hash(l1 - 1, m);
  return std::max(loewy_uniserial(Kind::A, l1, Kind::A, m), loewy_uniserial(Kind::B, l2, Kind::A, m));
}

BandBandCase band_band_case(Nat l1, Nat l2, Nat m1, Nat m2) {
  if (l1 != l2 || m1 != m2) return BandBandCase::unequal_legs;
  const Nat l = l1;
  const Nat m = m1;
  const bool p = perp(l, m);
  const bool pl = perp(l - 1, m);
  const bool pm = perp(l, m - 1);
  if (p && pl) return BandBandCase::perp_l_and_lm1_m;
  if (p && pm) return BandBandCase::perp_l_and_l_mm1;
  if (pl && pm) return BandBandCase::perp_shifted;
  return BandBandCase::none_perp;
}

char case_label(BandBandCase c) noexcept {
  switch (c) {
    case BandBandCase::unequal_legs: return 'a';
    case BandBandCase::none_perp: return 'b';
    case BandBandCase::perp_l_and_lm1_m: return 'c';
    case BandBandCase::perp_l_and_l_mm1: return 'd';
    case BandBandCase::perp_shifted: return 'e';
  }
  return '?';
}

std::size_t loewy_band_band(Nat l1, Nat l2, FieldElem rho, Nat m1, Nat m2, FieldElem sigma) {
  if (l1 == 0 || l2 == 0 || m1 == 0 || m2 == 0) throw std::domain_error("band legs must be positive");
  const BandBandCase c = band_band_case(l1, l2, m1, m2);
  if (c == BandBandCase::unequal_legs) {
    if (l1 != l2) {
      return std::max(loewy_band_uniserial(m1, m2, sigma, Kind::A, l1),
                      loewy_band_uniserial(m1, m2, sigma, Kind::B, l2));
    }
    return std::max(loewy_band_uniserial(l1, l2, rho, Kind::A, m1),
                    loewy_band_uniserial(l1, l2, rho, Kind::B, m2));
  }
  const Nat l = l1;
  const Nat m = m1;
  const std::size_t shifted = 2 + hash(l - 1, m - 1);
  switch (c) {
    case BandBandCase::none_perp: return shifted;
    case BandBandCase::perp_l_and_lm1_m: return sigma == kOne ? shifted : l + m + 1;
    case BandBandCase::perp_l_and_l_mm1: return rho == kOne ? shifted : l + m + 1;
    case BandBandCase::perp_shifted:
      if (rho == sigma) return rho == kOne ? shifted : l + m;
      return l + m + 1;
    case BandBandCase::unequal_legs: break;
  }
  return 0;
}

LoewyReport loewy_general(const ModuleSpec& a, const ModuleSpec& b, std::size_t q,
                          const FieldDesc& field) {
  validate(a, q, field);
  validate(b, q, field);
  LoewyReport report;
  report.engine = Engine::formula;
  report.projective_summand = projective_summand(a, b, q, field);
  if (is_regular(a, q) || is_regular(b, q)) {
    report.length = 2 * q + 1;
    report.trace.push_back("regular module factor: the product is projective, length 2q+1 = " +
                           std::to_string(report.length));
    return report;
  }

  const auto left = reduce(a, field, report.trace, "left");
  const auto right = reduce(b, field, report.trace, "right");
  for (const Atom& x : left) {
    for (const Atom& y : right) {
      const std::size_t len = loewy_atoms(x, y);
      std::string line = describe(x) + " (x) " + describe(y) + " -> " + std::to_string(len);
      const auto* bx = std::get_if<BandAtom>(&x);
      const auto* by = std::get_if<BandAtom>(&y);
      if (bx && by) {
        line += std::string(" [band-band case ") +
                case_label(band_band_case(bx->l1, bx->l2, by->l1, by->l2)) + "]";
      }
      report.trace.push_back(std::move(line));
      report.length = std::max(report.length, len);
    }
  }
  const std::size_t cap = std::min(loewy_length_of(a) + loewy_length_of(b) - 1, 2 * q + 1);
  if (report.length < 1 || report.length > cap) {
    throw std::logic_error("formula result " + std::to_string(report.length) + " outside [1, " +
                           std::to_string(cap) + "]");
  }
  return report;
}

bool projective_summand(const ModuleSpec& a, const ModuleSpec& b, std::size_t q, const FieldDesc& field) {
  validate(a, q, field);
  validate(b, q, field);
  if (is_regular(a, q) || is_regular(b, q)) return true;
  std::vector<std::string> ignored;
  const auto left = reduce(a, field, ignored, "left");
  const auto right = reduce(b, field, ignored, "right");
  for (const Atom& x : left) {
    for (const Atom& y : right) {
      if (projective_atoms(x, y, q)) return true;
    }
  }
  return false;
}

}  // namespace loewy
