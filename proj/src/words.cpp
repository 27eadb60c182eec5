// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/words.hpp"

#include <algorithm>

namespace loewy {

namespace {

void check_alternation(const std::vector<Letter>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].base == letters[i - 1].base) {
      throw WordError("letters " + std::to_string(i - 1) + " and " + std::to_string(i) +
                          " share a base",
                      i);
    }
  }
}

}  // namespace

char Letter::to_char() const noexcept {
  const char c = base == Base::X ? 'X' : 'Y';
  return inverted ? static_cast<char>(c - 'A' + 'a') : c;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  check_alternation(letters_);
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'X': letters.push_back({Base::X, false}); break;
      case 'Y': letters.push_back({Base::Y, false}); break;
      case 'x': letters.push_back({Base::X, true}); break;
      case 'y': letters.push_back({Base::Y, true}); break;
      default:
        throw WordError("invalid character '" + std::string(1, text[i]) + "' at position " +
                            std::to_string(i),
                        i);
    }
  }
  try {
    return Word(std::move(letters));
  } catch (const WordError& e) {
    throw WordError("alternation violated at position " + std::to_string(e.position()),
                    e.position());
  }
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) s.push_back(l.to_char());
  return s;
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(letters));
}

Word inverse(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return Word(std::move(letters));
}

Word swap_letters(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const Letter& l : w) {
    letters.push_back({l.base == Base::X ? Base::Y : Base::X, l.inverted});
  }
  return Word(std::move(letters));
}

Word rotate(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  std::vector<Letter> letters = w.letters();
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(shift % w.size()),
              letters.end());
  return Word(std::move(letters));
}

Word a_word(std::size_t t) { return kind_word(Kind::A, t); }
Word b_word(std::size_t t) { return kind_word(Kind::B, t); }

Word kind_word(Kind kind, std::size_t t) {
  // A_t ends in Y and B_t ends in X; reading backwards the bases alternate.
  std::vector<Letter> letters(t);
  Base last = kind == Kind::A ? Base::Y : Base::X;
  for (std::size_t i = t; i-- > 0;) {
    letters[i] = {last, false};
    last = last == Base::X ? Base::Y : Base::X;
  }
  return Word(std::move(letters));
}

Word DirectedComponent::word() const {
  Word w = kind_word(kind, length);
  return inverted ? inverse(w) : w;
}

std::vector<DirectedComponent> directed_components(const Word& w) {
  std::vector<DirectedComponent> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i < w.size() && w[i].inverted == w[i - 1].inverted) continue;
    const bool inv = w[start].inverted;
    // A direct run is A_t iff it ends in Y; an inverse run r has r^{-1} ending
    // in the inverse of r's first letter.
    const Base tail = inv ? w[start].base : w[i - 1].base;
    out.push_back({tail == Base::Y ? Kind::A : Kind::B, i - start, inv});
    start = i;
  }
  return out;
}

bool eq_string(const Word& w, const Word& v) { return w == v || w == inverse(v); }

bool is_proper_power(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w.size() % k == 0 && rotate(w, k) == w) return true;
  }
  return false;
}

bool in_w_prime(const Word& w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  if (w[0].base == w[w.size() - 1].base) return false;
  const bool has_direct = std::any_of(w.begin(), w.end(), [](Letter l) { return !l.inverted; });
  const bool has_inverse = std::any_of(w.begin(), w.end(), [](Letter l) { return l.inverted; });
  return has_direct && has_inverse && !is_proper_power(w);
}

BandShape band_canonical(const Word& w) {
  if (!in_w_prime(w)) {
    throw std::domain_error("word '" + w.str() + "' is not a band word");
  }
  // Rotations leading with a direct A-kind component always exist (possibly
  // after inversion); among those the letter-wise least wins.
  std::optional<Word> best;
  bool best_from_inverse = false;
  for (const bool from_inverse : {false, true}) {
    const Word base = from_inverse ? inverse(w) : w;
    const std::size_t n = base.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& cur = base[i];
      const Letter& prev = base[(i + n - 1) % n];
      if (cur.inverted || !prev.inverted) continue;
      Word candidate = rotate(base, i);
      if (directed_components(candidate).front().kind != Kind::A) continue;
      if (!best || candidate < *best) {
        best = std::move(candidate);
        best_from_inverse = from_inverse;
      }
    }
  }
  BandShape shape;
  shape.word = std::move(*best);
  shape.from_inverse = best_from_inverse;
  shape.components = directed_components(shape.word);
  if (shape.components.size() == 2) {
    shape.two_component_scalar =
        TwoComponentScalar{shape.components[0].length, shape.components[1].length,
                           shape.components[0].kind};
  }
  return shape;
}

}  // namespace loewy
