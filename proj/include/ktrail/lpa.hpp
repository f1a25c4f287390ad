#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ktrail/auxgraph.hpp"
#include "ktrail/lp.hpp"

namespace ktrail {

/// Live data of the bounded-degree spanning-tree relaxation on G'.
///
/// Variables are the live G'-edges. Rows:
///   x(E*) = |V'| - 1
///   x(E*(S)) <= |S| - 1 for every S in the cut pool
///   for v in Q: sum over live matching edges e of (#slots of e in V'_v) x_e
///               + k x(live K_v) <= k deg(v)
struct LpaState {
    std::size_t k = 0;
    std::vector<bool> live;      // per G'-edge
    std::vector<bool> in_q;      // per G-vertex
    std::vector<Rational> cost;  // per G'-edge; clique edges cost 0
    std::vector<std::vector<SlotId>> cut_pool;

    std::size_t num_live() const;
};

/// E* = E', Q = V, matching edge i costs weight[i].
LpaState initial_lpa_state(const AuxGraph& aux, std::size_t k, const std::vector<std::int64_t>& weight);

struct LpaProblem {
    LpProblem lp;
    std::vector<EdgeId> var_edge;  // G'-edge of each variable
};

LpaProblem build_lpa(const AuxGraph& aux, const LpaState& state);

/// Same variables and degree rows, but a subtour row for every vertex set S
/// with |S| >= 2 that is connected through live edges. Exponential; for
/// cross-checking the cutting-plane loop on small G'.
LpaProblem build_lpa_all_subtours(const AuxGraph& aux, const LpaState& state, std::size_t max_slots = 14);

struct LpaSolution {
    LpResult result;
    std::vector<Rational> x;  // per G'-edge, zero on dead edges; set when optimal
    Rational objective;
    std::size_t cuts_added = 0;
    std::size_t solves = 0;
};

/// Cutting-plane loop: solve, separate, add every violated set the per-root
/// minimum cuts find to the pool, repeat until no row is violated. The pool lives in `state`.
LpaSolution solve_with_cuts(const AuxGraph& aux, LpaState& state);

/// The subtour row for S is violated by x (per G'-edge).
bool subtour_violated(const AuxGraph& aux, const LpaState& state, const std::vector<Rational>& x,
                      const std::vector<SlotId>& set);

}  // namespace ktrail
