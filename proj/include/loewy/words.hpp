// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file words.hpp
 * @brief Alternating words over X, Y and their inverses.
 *
 * Words index string modules (any alternating word) and band modules (cyclic,
 * primitive words using both direct and inverse letters). Text form uses one
 * character per letter: `X`, `Y` for direct letters, `x`, `y` for inverses.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loewy {

enum class Base : std::uint8_t { X, Y };

/// Isomorphism type of a uniserial string module: M(A_t) or M(B_t).
enum class Kind : std::uint8_t { A, B };

[[nodiscard]] constexpr Kind other(Kind k) noexcept { return k == Kind::A ? Kind::B : Kind::A; }
[[nodiscard]] constexpr char to_char(Kind k) noexcept { return k == Kind::A ? 'A' : 'B'; }

struct Letter {
  Base base{Base::X};
  bool inverted{false};

  [[nodiscard]] char to_char() const noexcept;
  [[nodiscard]] Letter inverse() const noexcept { return {base, !inverted}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  /// Orders letters as X < Y < x < y.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) noexcept {
    if (auto c = a.inverted <=> b.inverted; c != 0) return c;
    return a.base <=> b.base;
  }
};

class WordError : public std::invalid_argument {
 public:
  WordError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A finite alternating word; consecutive letters never share a base.
class Word {
 public:
  Word() = default;
  /// Throws WordError if the letters do not alternate.
  explicit Word(std::vector<Letter> letters);

  /// Parses the text form; the empty string is the empty word.
  static Word parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] const Letter& operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  [[nodiscard]] std::string str() const;

  /// Concatenation; throws WordError if the junction does not alternate.
  [[nodiscard]] Word operator+(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

[[nodiscard]] Word inverse(const Word& w);

/// The X <-> Y letter swap (an automorphism of the algebra sending A_t to B_t).
[[nodiscard]] Word swap_letters(const Word& w);

/// Cyclic rotation: the result starts at letter `shift` of w.
[[nodiscard]] Word rotate(const Word& w, std::size_t shift);

/// A_0 = B_0 = 1, A_{t+1} = B_t Y, B_{t+1} = A_t X.
[[nodiscard]] Word a_word(std::size_t t);
[[nodiscard]] Word b_word(std::size_t t);
[[nodiscard]] Word kind_word(Kind kind, std::size_t t);

struct DirectedComponent {
  Kind kind{Kind::A};
  std::size_t length{0};
  bool inverted{false};

  /// The letters of this component as they appear inside the word.
  [[nodiscard]] Word word() const;

  friend bool operator==(const DirectedComponent&, const DirectedComponent&) = default;
};

/// Maximal runs of direct or of inverse letters, left to right.
[[nodiscard]] std::vector<DirectedComponent> directed_components(const Word& w);

/// w ~1 v: equal or mutually inverse.
[[nodiscard]] bool eq_string(const Word& w, const Word& v);

/// True iff w is a proper power of a shorter word.
[[nodiscard]] bool is_proper_power(const Word& w);

/// Membership in the band word set: even positive length, primitive, uses both
/// direct and inverse letters, and alternates across the wraparound.
[[nodiscard]] bool in_w_prime(const Word& w);

struct TwoComponentScalar {
  std::size_t l1{0};
  std::size_t l2{0};
  Kind kind1{Kind::A};

  friend bool operator==(const TwoComponentScalar&, const TwoComponentScalar&) = default;
};

/**
 * Canonical representative of the cyclic class of a band word: among the
 * rotations of w and of inverse(w) that start at a component boundary with a
 * direct component of kind A, the least one in letter order X < Y < x < y.
 * Two-component bands thus always come out as A_l1 B_l2^{-1}.
 */
struct BandShape {
  Word word;
  std::vector<DirectedComponent> components;
  std::optional<TwoComponentScalar> two_component_scalar;
  /// Whether `word` is a rotation of inverse(w) rather than of w.
  bool from_inverse{false};
};

/// Throws std::domain_error if !in_w_prime(w).
[[nodiscard]] BandShape band_canonical(const Word& w);

}  // namespace loewy
