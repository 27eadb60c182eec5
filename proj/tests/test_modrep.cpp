#include "loewy/modrep.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace loewy;

namespace {

const FieldDesc& gf2() { return FieldDesc::gf(1); }
const FieldDesc& gf4() { return FieldDesc::gf(2); }

// rad^t M is spanned by the images of the two alternating monomials of length t.
std::vector<std::size_t> monomial_radical_dims(const Representation& r) {
  const FieldDesc& f = r.field();
  std::vector<std::size_t> dims{r.dim()};
  Matrix xy = Matrix::identity(r.dim());
  Matrix yx = Matrix::identity(r.dim());
  for (std::size_t t = 1;; ++t) {
    xy = multiply(t % 2 ? r.x() : r.y(), xy, f);
    yx = multiply(t % 2 ? r.y() : r.x(), yx, f);
    const Matrix both[] = {xy, yx};
    dims.push_back(rank(col_space_sum(both, f), f));
    if (dims.back() == 0 || t > 4 * r.dim()) break;
  }
  return dims;
}

std::size_t socle_by_stacking(const Representation& r) {
  const std::size_t n = r.dim();
  Matrix stacked(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      stacked(i, j) = r.x()(i, j);
      stacked(i + n, j) = r.y()(i, j);
    }
  }
  return n - rank(stacked, r.field());
}

Word two_band(std::size_t l1, std::size_t l2) { return a_word(l1) + inverse(b_word(l2)); }

}  // namespace

TEST_CASE("uniserial string modules") {
  for (std::size_t l = 0; l <= 9; ++l) {
    for (Kind k : {Kind::A, Kind::B}) {
      const Representation r = string_rep(kind_word(k, l), gf2());
      CHECK(r.dim() == l + 1);
      CHECK(loewy_length(r) == l + 1);
      CHECK(top_dim(r) == 1);
      CHECK(socle_dim(r) == 1);
    }
  }
  CHECK(radical_series(string_rep(a_word(2), gf2())).dims == std::vector<std::size_t>{3, 2, 1, 0});
  const Representation trivial = string_rep(Word{}, gf2());
  CHECK(radical_series(trivial).dims == std::vector<std::size_t>{1, 0});
  CHECK(loewy_length(trivial) == 1);
  CHECK(socle_dim(trivial) == 1);
}

TEST_CASE("string module tops") {
  // e_2 generates M(XYx); e_0 and e_3 span its socle.
  CHECK(top_dim(string_rep(Word::parse("XYx"), gf2())) == 1);
  CHECK(socle_dim(string_rep(Word::parse("XYx"), gf2())) == 2);
  CHECK(top_dim(string_rep(Word::parse("xY"), gf2())) == 2);
  CHECK(socle_dim(string_rep(Word::parse("xY"), gf2())) == 1);
  const Word schema = Word::parse("XYXyxYxy");
  CHECK(top_dim(string_rep(schema, gf2())) == 2);
  CHECK(socle_dim(string_rep(schema, gf2())) == 3);
}

TEST_CASE("radical series agrees with monomial images") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Letter> letters;
    Base b = coin(rng) ? Base::X : Base::Y;
    for (int i = 0; i < 1 + trial % 9; ++i) {
      letters.push_back({b, coin(rng) == 1});
      b = b == Base::X ? Base::Y : Base::X;
    }
    const Word w(letters);
    const Representation r = string_rep(w, gf2());
    CAPTURE(w.str());
    CHECK(radical_series(r).dims == monomial_radical_dims(r));
    CHECK(socle_dim(r) == socle_by_stacking(r));
    const Representation t = tensor_rep(r, string_rep(a_word(1 + trial % 3), gf2()));
    CHECK(radical_series(t).dims == monomial_radical_dims(t));
  }
}

TEST_CASE("band modules") {
  const FieldElem g{2};
  const Representation yx = band_rep(Word::parse("Yx"), g, 1, gf4());
  CHECK(yx.dim() == 2);
  CHECK(loewy_length(yx) == 2);

  for (std::size_t l = 1; l <= 5; ++l) {
    for (unsigned rho = 1; rho < 4; ++rho) {
      const Representation r = band_rep(two_band(l, l), FieldElem{rho}, 1, gf4());
      CHECK(r.dim() == 2 * l);
      CHECK(loewy_length(r) == l + 1);
      CHECK(top_dim(r) == 1);
      CHECK(socle_dim(r) == 1);
      CHECK(check_dihedral(r, 4));
    }
  }
  const Representation big = band_rep(two_band(3, 1), kOne, 3, gf4());
  CHECK(big.dim() == 12);
  CHECK(top_dim(big) == 3);
  CHECK(radical_series(big).dims == monomial_radical_dims(big));

  CHECK_THROWS_AS((void)band_rep(Word::parse("XY"), kOne, 1, gf4()), std::domain_error);
  CHECK_THROWS_AS((void)band_rep(Word::parse("Yx"), kZero, 1, gf4()), std::domain_error);
  CHECK_THROWS_AS((void)band_rep(Word::parse("Yx"), g, 1, gf2()), std::domain_error);
  CHECK_THROWS_AS((void)band_rep(Word::parse("Yx"), kOne, 0, gf4()), std::domain_error);
}

TEST_CASE("band modules up to rotation and inversion") {
  const FieldDesc& f = gf4();
  const Word w = Word::parse("XYxYXy");
  REQUIRE(in_w_prime(w));
  const Representation probe = band_rep(Word::parse("Yx"), FieldElem{2}, 1, f);
  for (unsigned rho = 1; rho < 4; ++rho) {
    const FieldElem r{rho};
    const std::size_t base = loewy_length(tensor_rep(band_rep(w, r, 1, f), probe));
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(radical_series(band_rep(rotate(w, k), r, 1, f)).dims == radical_series(band_rep(w, r, 1, f)).dims);
      CHECK(loewy_length(tensor_rep(band_rep(rotate(w, k), r, 1, f), probe)) == base);
    }
  }
  for (unsigned rho = 1; rho < 4; ++rho) {
    for (unsigned sigma = 1; sigma < 4; ++sigma) {
      const Representation p = band_rep(Word::parse("Yx"), FieldElem{sigma}, 1, f);
      const Representation m = band_rep(Word::parse("Yx"), FieldElem{rho}, 1, f);
      const Representation inv = band_rep(Word::parse("Xy"), f.inv(FieldElem{rho}), 1, f);
      CHECK(loewy_length(tensor_rep(m, p)) == loewy_length(tensor_rep(inv, p)));
    }
  }
  CHECK(loewy_length(tensor_rep(band_rep(Word::parse("Yx"), FieldElem{2}, 1, f),
                                band_rep(Word::parse("Yx"), FieldElem{2}, 1, f))) == 2);
  CHECK(loewy_length(tensor_rep(band_rep(Word::parse("Yx"), FieldElem{2}, 1, f),
                                band_rep(Word::parse("Xy"), FieldElem{3}, 1, f))) == 2);
  CHECK(loewy_length(tensor_rep(band_rep(Word::parse("Yx"), FieldElem{2}, 1, f),
                                band_rep(Word::parse("Xy"), FieldElem{2}, 1, f))) == 3);
}

TEST_CASE("tensor products") {
  const Representation a1 = string_rep(a_word(1), gf2());
  const Representation b1 = string_rep(b_word(1), gf2());
  const Representation t = tensor_rep(a1, b1);
  CHECK(t.dim() == 4);
  CHECK(loewy_length(t) == 3);
  CHECK(loewy_length(tensor_rep(b1, a1)) == 3);
  const Representation trivial = string_rep(Word{}, gf2());
  CHECK(loewy_length(tensor_rep(trivial, a1)) == 2);
  CHECK_THROWS_AS((void)tensor_rep(a1, string_rep(a_word(1), gf4())), std::domain_error);
  CHECK(check_dihedral(tensor_rep(string_rep(a_word(3), gf2()), string_rep(b_word(2), gf2())), 2));
}

TEST_CASE("letter swap") {
  const Word w = Word::parse("XYxYx");
  const Representation r = swap_xy(string_rep(w, gf2()));
  const Representation s = string_rep(swap_letters(w), gf2());
  CHECK(r.x() == s.x());
  CHECK(r.y() == s.y());
}

TEST_CASE("dihedral relation") {
  for (std::size_t q : {2u, 4u, 8u}) {
    CHECK_FALSE(check_dihedral(string_rep(a_word(2 * q + 1), gf2()), q));
    CHECK_FALSE(check_dihedral(string_rep(a_word(2 * q), gf2()), q));
    CHECK(check_dihedral(string_rep(a_word(2 * q - 1), gf2()), q));
    CHECK(check_dihedral(regular_rep(q, gf2()), q));
  }
  CHECK_THROWS_AS(require_valid_q(3), std::domain_error);
  CHECK_THROWS_AS(require_valid_q(1), std::domain_error);
}

TEST_CASE("regular module") {
  for (std::size_t q : {2u, 4u, 8u}) {
    const Representation r = regular_rep(q, gf2());
    CHECK(r.dim() == 4 * q);
    CHECK(loewy_length(r) == 2 * q + 1);
    CHECK(top_dim(r) == 1);
    CHECK(socle_dim(r) == 1);
  }
}

TEST_CASE("invalid representations") {
  Matrix x(2, 2);
  Matrix y(2, 2);
  x(0, 1) = kOne;
  y(1, 0) = kOne;
  const Representation r(x, y, gf2());
  CHECK_THROWS_AS((void)radical_series(r), std::domain_error);
  Matrix bad(2, 2);
  bad(0, 0) = kOne;
  CHECK_THROWS_AS(Representation(bad, y, gf2()), std::domain_error);
  CHECK_THROWS_AS(Representation(Matrix(2, 3), Matrix(2, 3), gf2()), std::domain_error);
}
