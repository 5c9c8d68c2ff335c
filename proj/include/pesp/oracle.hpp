#pragma once

#include "pesp/cycle_basis.hpp"
#include "pesp/fixed_offset.hpp"
#include "pesp/instance.hpp"
#include "pesp/search.hpp"

#include <optional>
#include <string>

namespace pesp {

struct OracleCaps {
  std::size_t max_width = 10000;
  GridCaps grid;
};

// Minimum over the feasible cycle offsets of the per-polytrope optimum; ties
// go to the lexicographically smallest z. nullopt iff infeasible.
std::optional<Solution> solve_exact(const PespInstance& inst, const CycleBasis& basis,
                                    const OracleCaps& caps = {});

// Exhaustive timetable grid with pi_0 = 0; first optimum in grid order.
std::optional<Solution> brute_force_timetable(const PespInstance& inst,
                                              const CycleBasis& basis,
                                              const OracleCaps& caps = {});

struct CrosscheckReport {
  std::optional<Solution> exact;
  std::optional<Solution> brute_force;
};

// Runs both oracles; throws CrosscheckMismatch with both certificates when
// their objectives differ or a certificate is inconsistent.
CrosscheckReport crosscheck(const PespInstance& inst, const CycleBasis& basis,
                            const OracleCaps& caps = {});

std::string describe(const std::optional<Solution>& s);

}  // namespace pesp
