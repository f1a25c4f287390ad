#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktrail/rational.hpp"

namespace ktrail {

enum class RowSense { LessEqual, Equal, GreaterEqual };

struct LpRow {
    std::vector<std::pair<std::size_t, Rational>> coef;  // (variable, coefficient), variables distinct
    RowSense sense = RowSense::LessEqual;
    Rational rhs;
    std::string name;
};

/// minimize objective·x subject to rows, x >= 0.
struct LpProblem {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<std::string> var_names;  // optional, used by render_lp

    void check() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

/// An optimal basic solution together with the constraints tight at it.
struct LpBasicSolution {
    std::vector<Rational> x;
    Rational objective;
    std::vector<std::size_t> tight_rows;  // rows holding with equality
    std::vector<std::size_t> zero_vars;   // variables at their bound 0
    std::size_t tight_rank = 0;           // rank of the tight system, equals num_vars at a vertex
    std::size_t pivots = 0;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::optional<LpBasicSolution> solution;
    /// Infeasible: one multiplier per row with y <= 0 on <= rows, y >= 0 on >= rows,
    /// y^T A <= 0 componentwise and y^T b > 0.
    std::vector<Rational> farkas;
    /// Unbounded: a feasible point and a ray r >= 0 keeping it feasible with objective·r < 0.
    std::vector<Rational> ray;
    std::vector<Rational> ray_origin;
};

/// Two-phase primal simplex over exact rationals with Bland's rule. Every
/// result carries a certificate that is checked before returning.
LpResult simplex_solve(const LpProblem& p);

/// Rank of a rational matrix given as rows of (column, value) pairs.
std::size_t rational_rank(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rows,
                          std::size_t num_cols);

/// Plain-text LP listing (objective, rows, bounds) in the usual CPLEX-like layout.
std::string render_lp(const LpProblem& p);

// Subtour separation on a graph with fractional edge values.

struct SeparationResult {
    std::vector<std::size_t> set;  // sorted vertex ids, empty when nothing is violated
    Rational violation;            // x(E(S)) - |S| + 1
};

/// Finds S maximizing x(E(S)) - |S| + 1 over vertex subsets of a graph on
/// `num_vertices` vertices, by one minimum cut per root. Loops are rejected. `edges[i]` carries
/// value x[i] >= 0. Returns an empty set when the maximum is <= 0.
SeparationResult separate_forest(std::size_t num_vertices,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                 const std::vector<Rational>& x);

/// Every distinct violated set found by the per-root minimum cuts, most
/// violated first. Empty when no subtour row is violated.
std::vector<SeparationResult> separate_forest_all(std::size_t num_vertices,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                                 const std::vector<Rational>& x);
/// x(E(S)) for a vertex set S.
Rational induced_value(const std::vector<std::pair<std::size_t, std::size_t>>& edges, const std::vector<Rational>& x,
                       const std::vector<std::size_t>& set);

}  // namespace ktrail

namespace ktrail {

/// The LP dual of p, written again as a minimisation: p's optimum equals
/// minus the optimum of the returned problem whenever either is finite.
/// Equality rows become a pair of nonnegative variables.
LpProblem dual_problem(const LpProblem& p);

}  // namespace ktrail
