// Copyright 2026 The loewy Authors
// SPDX-License-Identifier: Apache-2.0

#include "loewy/verify.hpp"

#include "loewy/spec_text.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

namespace loewy {

namespace {

std::vector<FieldElem> nonzero_elements(const FieldDesc& field) {
  std::vector<FieldElem> out;
  for (unsigned b = 1; b < field.order(); ++b) out.emplace_back(b);
  return out;
}

struct CellResult {
  bool skipped{false};
  std::size_t formula{0};
  std::size_t oracle{0};
  bool projective{false};
};

CellResult evaluate(const GridCell& cell, const VerifyOptions& options, const FieldDesc& field) {
  CellResult r;
  try {
    r.oracle = oracle_loewy(cell.left, cell.right, options.q, field, options.max_dim);
  } catch (const DimensionCapError&) {
    r.skipped = true;
    return r;
  }
  r.formula = options.formula ? options.formula(cell.left, cell.right, options.q, field)
                              : loewy_general(cell.left, cell.right, options.q, field).length;
  r.projective = projective_summand(cell.left, cell.right, options.q, field);
  return r;
}

}  // namespace

const char* grid_name(Grid g) noexcept {
  switch (g) {
    case Grid::uniserial: return "uniserial";
    case Grid::band_string: return "band_string";
    case Grid::band_band: return "band_band";
  }
  return "?";
}

std::vector<GridCell> grid_cells(Grid grid, std::size_t q, const FieldDesc& field, Nat max_l, Nat max_m) {
  require_valid_q(q);
  const Nat top = 2 * q - 1;
  max_l = std::min(max_l, top);
  max_m = std::min(max_m, top);
  const auto params = nonzero_elements(field);
  std::vector<GridCell> cells;
  switch (grid) {
    case Grid::uniserial:
      for (Kind kl : {Kind::A, Kind::B}) {
        for (Kind kr : {Kind::A, Kind::B}) {
          for (Nat l = 0; l <= max_l; ++l) {
            for (Nat m = 0; m <= max_m; ++m) {
              cells.push_back({grid, UniserialSpec{kl, l}, UniserialSpec{kr, m}, 0});
            }
          }
        }
      }
      break;
    case Grid::band_string:
      for (Nat l1 = 1; l1 <= max_l; ++l1) {
        for (Nat l2 = 1; l2 <= max_l; ++l2) {
          if ((l1 + l2) % 2 != 0) continue;
          for (FieldElem rho : params) {
            for (Kind kr : {Kind::A, Kind::B}) {
              for (Nat m = 0; m <= max_m; ++m) {
                cells.push_back({grid, two_component_band(l1, l2, rho), UniserialSpec{kr, m}, 0});
              }
            }
          }
        }
      }
      break;
    case Grid::band_band:
      for (Nat l1 = 1; l1 <= max_l; ++l1) {
        for (Nat l2 = 1; l2 <= max_l; ++l2) {
          if ((l1 + l2) % 2 != 0) continue;
          for (Nat m1 = 1; m1 <= max_m; ++m1) {
            for (Nat m2 = 1; m2 <= max_m; ++m2) {
              if ((m1 + m2) % 2 != 0) continue;
              const char label = case_label(band_band_case(l1, l2, m1, m2));
              for (FieldElem rho : params) {
                for (FieldElem sigma : params) {
                  cells.push_back({grid, two_component_band(l1, l2, rho), two_component_band(m1, m2, sigma), label});
                }
              }
            }
          }
        }
      }
      break;
  }
  return cells;
}

VerifySummary run_verify(const VerifyOptions& options) {
  const FieldDesc& field = FieldDesc::gf(options.field_e);
  std::vector<GridCell> cells;
  for (Grid g : options.grids) {
    auto part = grid_cells(g, options.q, field, options.max_l, options.max_m);
    cells.insert(cells.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }

  std::vector<CellResult> results(cells.size());
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = evaluate(cells[i], options, field);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = evaluate(cells[i], options, field);
        } catch (...) {
          errors[w] = std::current_exception();
          next = cells.size();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  VerifySummary summary;
  const std::size_t full = 2 * options.q + 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const GridCell& cell = cells[i];
    const CellResult& r = results[i];
    if (r.skipped) {
      ++summary.skipped;
      continue;
    }
    ++summary.checked;
    ++summary.checked_per_grid[cell.grid];
    if (cell.band_case != 0) ++summary.band_band_cases[cell.band_case];
    const bool length_bad = r.formula != r.oracle;
    const bool projective_bad = r.projective != (r.formula == full) || r.projective != (r.oracle == full);
    if (length_bad) ++summary.mismatch_count;
    if (projective_bad) ++summary.projective_exceptions;
    if ((length_bad || projective_bad) && summary.mismatches.size() < VerifySummary::kMaxReported) {
      summary.mismatches.push_back({cell.grid, format_module_spec(cell.left), format_module_spec(cell.right),
                                    r.formula, r.oracle, r.projective});
    }
  }
  return summary;
}

}  // namespace loewy
