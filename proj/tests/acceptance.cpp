// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "loewy/binlucas.hpp"
#include "loewy/formulas.hpp"
#include "loewy/modrep.hpp"
#include "loewy/oracle.hpp"
#include "loewy/spec_text.hpp"
#include "loewy/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

using namespace loewy;
using binlucas::Nat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok{true};
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  if (out.detail.ends_with("; ")) out.detail.resize(out.detail.size() - 2);
  char limit[32] = "no limit";
  if (limit_seconds > 0) std::snprintf(limit, sizeof limit, "limit %g s", limit_seconds);
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %-36s %9.3f s (%s)%s%s\n", pass ? "PASS" : "FAIL", id, title, secs, limit,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  if (!in_time) std::printf("       runtime limit exceeded\n");
  std::fflush(stdout);
}

std::string summary_text(const VerifySummary& s) {
  std::string text = std::to_string(s.checked) + " cells, " + std::to_string(s.mismatch_count) + " mismatches";
  if (s.skipped) text += ", " + std::to_string(s.skipped) + " over the dimension cap";
  for (const auto& m : s.mismatches) text += "\n       " + m.left + " (x) " + m.right + ": formula " +
                                            std::to_string(m.formula) + ", oracle " + std::to_string(m.oracle);
  return text;
}

VerifySummary grid(Grid g, std::size_t q, unsigned e) {
  VerifyOptions o;
  o.q = q;
  o.field_e = e;
  o.max_l = 2 * q - 1;
  o.max_m = 2 * q - 1;
  o.grids = {g};
  o.max_dim = kDefaultMaxDim;
  return run_verify(o);
}

Word random_word(std::mt19937& rng, std::size_t len) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> coin(0, 1);
  Base b = coin(rng) ? Base::X : Base::Y;
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back({b, coin(rng) == 1});
    b = b == Base::X ? Base::Y : Base::X;
  }
  return Word(letters);
}

std::size_t longest(const std::vector<DirectedComponent>& comps) {
  std::size_t h = 0;
  for (const auto& c : comps) h = std::max(h, c.length);
  return h;
}

}  // namespace

int main() {
  std::printf("loewy acceptance\n");
  std::vector<VerifySummary> grids5;
  std::vector<VerifySummary> grids6;
  std::vector<VerifySummary> grids7;

  criterion(1, "worked examples (formula engine)", 0.001, [] {
    const bool ok = binlucas::hash(146, 1304) == 1439 && binlucas::hash(146, 266) == 411 &&
                    loewy_uniserial(Kind::A, 146, Kind::A, 266) == 412 &&
                    loewy_uniserial(Kind::A, 146, Kind::B, 266) == 413 &&
                    loewy_band_band(146, 146, kOne, 266, 266, kOne) == 411;
    return Outcome{ok, ""};
  });

  criterion(2, "tau = hash for l, m <= 64", 5.0, [] {
    std::size_t bad = 0;
    for (Nat l = 0; l <= 64; ++l) {
      for (Nat m = 0; m <= 64; ++m) bad += binlucas::tau(l, m) != binlucas::hash(l, m);
    }
    return Outcome{bad == 0, std::to_string(65 * 65) + " pairs, " + std::to_string(bad) + " failures"};
  });

  criterion(3, "back-diagonal witnesses, t <= 64", 10.0, [] {
    std::size_t odd = 0;
    std::size_t bad = 0;
    for (Nat t = 0; t <= 64; ++t) {
      for (Nat l = 0; l <= t; ++l) {
        for (Nat m = 0; m <= t; ++m) {
          if (binlucas::q_parity(t, l, m) == 0) continue;
          ++odd;
          const auto w = binlucas::back_diag_witness(t, l, m);
          if (!w || w->first > l || w->second > m || w->first + w->second != t ||
              binlucas::q_parity(t, w->first, w->second) != 1) {
            ++bad;
          }
        }
      }
    }
    return Outcome{bad == 0 && odd > 0, std::to_string(odd) + " odd counts, " + std::to_string(bad) + " failures"};
  });

  criterion(4, "path-count parity, t, l, m <= 40", 10.0, [] {
    constexpr Nat N = 40;
    // parity[i][j] of the number of paths of the current length from (0,0) to (i,j)
    std::vector<std::vector<int>> cur(N + 1, std::vector<int>(N + 1));
    cur[0][0] = 1;
    std::size_t bad = 0;
    for (Nat t = 0; t <= N; ++t) {
      for (Nat l = 0; l <= N; ++l) {
        for (Nat m = 0; m <= N; ++m) {
          const int closed = binlucas::q_parity(t, l, m);
          const int exact = static_cast<int>(binlucas::q_count(t, l, m) % 2);
          bad += closed != exact || closed != cur[l][m];
        }
      }
      std::vector<std::vector<int>> next(N + 1, std::vector<int>(N + 1));
      for (Nat i = 0; i <= N; ++i) {
        for (Nat j = 0; j <= N; ++j) {
          if (!cur[i][j]) continue;
          if (j < N) next[i][j + 1] ^= 1;
          if (i < N) next[i + 1][j] ^= 1;
          if ((i + j) % 2 == 0 && i < N && j < N) next[i + 1][j + 1] ^= 1;
        }
      }
      cur = std::move(next);
    }
    return Outcome{bad == 0, std::to_string(41 * 41 * 41) + " triples, " + std::to_string(bad) + " failures"};
  });

  criterion(5, "uniserial grid, q = 2, 4, 8, GF(2)", 60.0, [&] {
    Outcome out;
    for (std::size_t q : {2u, 4u, 8u}) {
      grids5.push_back(grid(Grid::uniserial, q, 1));
      out.ok = out.ok && grids5.back().mismatch_count == 0 && grids5.back().skipped == 0;
      out.detail += "q=" + std::to_string(q) + ": " + summary_text(grids5.back()) + "; ";
    }
    return out;
  });

  criterion(6, "band x string grid, q = 2, 4, GF(4)", 300.0, [&] {
    Outcome out;
    for (std::size_t q : {2u, 4u}) {
      grids6.push_back(grid(Grid::band_string, q, 2));
      out.ok = out.ok && grids6.back().mismatch_count == 0 && grids6.back().skipped == 0;
      out.detail += "q=" + std::to_string(q) + ": " + summary_text(grids6.back()) + "; ";
    }
    return out;
  });

  criterion(7, "band x band grid, q = 2, 4, GF(4)", 900.0, [&] {
    Outcome out;
    std::map<char, std::size_t> cases;
    for (std::size_t q : {2u, 4u}) {
      grids7.push_back(grid(Grid::band_band, q, 2));
      out.ok = out.ok && grids7.back().mismatch_count == 0;
      out.detail += "q=" + std::to_string(q) + ": " + summary_text(grids7.back()) + "; ";
      for (const auto& [c, n] : grids7.back().band_band_cases) cases[c] += n;
    }
    out.detail += "cases";
    for (char c : {'a', 'b', 'c', 'd', 'e'}) {
      out.detail += std::string(" ") + c + "=" + std::to_string(cases[c]);
      out.ok = out.ok && cases[c] > 0;
    }
    return out;
  });

  criterion(8, "multi-component reduction, q = 4", 300.0, [] {
    constexpr std::size_t q = 4;
    const FieldDesc& f = FieldDesc::gf(2);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<unsigned> rho_dist(1, 3);
    std::uniform_int_distribution<Nat> len(0, 2 * q - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<ModuleSpec> strings;
    std::vector<ModuleSpec> bands;
    while (strings.size() < 50) {
      const Word w = random_word(rng, 1 + rng() % 12);
      const auto comps = directed_components(w);
      if (comps.size() >= 2 && comps.size() <= 3 && longest(comps) <= 2 * q - 1) strings.push_back(StringSpec{w});
    }
    while (bands.size() < 50) {
      const Word w = random_word(rng, 2 * (1 + rng() % 5));
      if (!in_w_prime(w) || longest(band_canonical(w).components) > 2 * q - 1) continue;
      bands.push_back(BandSpec{w, FieldElem{rho_dist(rng)}, 1 + rng() % 2});
    }
    std::size_t checked = 0;
    std::size_t bad = 0;
    std::string first;
    for (const auto* group : {&strings, &bands}) {
      for (const ModuleSpec& a : *group) {
        std::vector<ModuleSpec> partners{UniserialSpec{coin(rng) ? Kind::A : Kind::B, len(rng)}};
        Nat l1 = 1 + len(rng) % (2 * q - 1);
        Nat l2 = 1 + len(rng) % (2 * q - 1);
        if ((l1 + l2) % 2) l2 = l2 == 1 ? 2 : l2 - 1;
        partners.push_back(two_component_band(l1, l2, FieldElem{rho_dist(rng)}));
        for (const ModuleSpec& b : partners) {
          ++checked;
          const std::size_t fv = loewy_general(a, b, q, f).length;
          const std::size_t ov = oracle_loewy(a, b, q, f);
          if (fv != ov) {
            ++bad;
            if (first.empty()) {
              first = "; first: " + format_module_spec(a) + " (x) " + format_module_spec(b) + " formula " +
                      std::to_string(fv) + " oracle " + std::to_string(ov);
            }
          }
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " products, " + std::to_string(bad) + " mismatches" + first};
  });

  criterion(9, "projective summand agreement", 0, [&] {
    std::size_t cells = 0;
    std::size_t exceptions = 0;
    for (const auto* set : {&grids5, &grids6, &grids7}) {
      for (const auto& s : *set) {
        cells += s.checked;
        exceptions += s.projective_exceptions;
      }
    }
    const bool complete = grids5.size() == 3 && grids6.size() == 2 && grids7.size() == 2;
    return Outcome{complete && exceptions == 0,
                   std::to_string(cells) + " cells, " + std::to_string(exceptions) + " exceptions"};
  });

  criterion(10, "regular module, q = 2, 4, 8", 10.0, [] {
    Outcome out;
    for (std::size_t q : {2u, 4u, 8u}) {
      const Representation r = regular_rep(q, FieldDesc::gf(1));
      const bool ok = r.dim() == 4 * q && loewy_length(r) == 2 * q + 1 && top_dim(r) == 1 && check_dihedral(r, q);
      out.ok = out.ok && ok;
      out.detail += "q=" + std::to_string(q) + ": dim " + std::to_string(r.dim()) + ", length " +
                    std::to_string(loewy_length(r)) + ", top " + std::to_string(top_dim(r)) + "; ";
    }
    return out;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
