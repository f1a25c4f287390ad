#include "ktrail/lpa.hpp"

#include <algorithm>

#include "ktrail/errors.hpp"
#include "ktrail/union_find.hpp"

namespace ktrail {

std::size_t LpaState::num_live() const { return static_cast<std::size_t>(std::count(live.begin(), live.end(), true)); }

LpaState initial_lpa_state(const AuxGraph& aux, std::size_t k, const std::vector<std::int64_t>& weight) {
    if (weight.size() != aux.num_matching_edges()) throw UsageError("one weight per edge required");
    LpaState s;
    s.k = k;
    s.live.assign(aux.gprime().num_edges(), true);
    s.in_q.assign(aux.base().num_vertices(), true);
    s.cost.assign(aux.gprime().num_edges(), Rational(0));
    for (EdgeId e = 0; e < weight.size(); ++e) s.cost[e] = make_rational(weight[e]);
    return s;
}

namespace {

std::vector<std::pair<std::size_t, Rational>> degree_row(const AuxGraph& aux, const LpaState& state,
                                                       const std::vector<std::size_t>& var_of, VertexId v) {
    std::vector<std::pair<std::size_t, Rational>> coef;
    for (EdgeId e = 0; e < aux.num_matching_edges(); ++e) {
        if (!state.live[e]) continue;
        const auto& slots = aux.edge_slots(e);
        long c = (aux.slot_vertex(slots[0]) == v ? 1 : 0) + (aux.slot_vertex(slots[1]) == v ? 1 : 0);
        if (c) coef.emplace_back(var_of[e], Rational(c));
    }
    for (EdgeId e : aux.clique_edges(v)) {
        if (state.live[e]) coef.emplace_back(var_of[e], Rational(static_cast<long>(state.k)));
    }
    return coef;
}

LpRow subtour_row(const AuxGraph& aux, const LpaState& state, const std::vector<std::size_t>& var_of,
                  const std::vector<SlotId>& set) {
    std::vector<bool> in(aux.num_slots(), false);
    for (SlotId s : set) in[s] = true;
    LpRow row;
    row.sense = RowSense::LessEqual;
    row.rhs = static_cast<long>(set.size()) - 1;
    for (EdgeId e = 0; e < aux.gprime().num_edges(); ++e) {
        if (!state.live[e]) continue;
        const Edge& x = aux.gprime().edge(e);
        if (in[x.u] && in[x.v]) row.coef.emplace_back(var_of[e], Rational(1));
    }
    row.name = "sub";
    for (SlotId s : set) row.name += "_" + std::to_string(s);
    return row;
}

LpaProblem base_problem(const AuxGraph& aux, const LpaState& state, std::vector<std::size_t>& var_of) {
    LpaProblem out;
    const std::size_t none = static_cast<std::size_t>(-1);
    var_of.assign(aux.gprime().num_edges(), none);
    for (EdgeId e = 0; e < aux.gprime().num_edges(); ++e) {
        if (!state.live[e]) continue;
        var_of[e] = out.var_edge.size();
        out.var_edge.push_back(e);
        out.lp.objective.push_back(state.cost[e]);
        out.lp.var_names.push_back((aux.is_matching_edge(e) ? "b" : "k") + std::to_string(e));
    }
    out.lp.num_vars = out.var_edge.size();

    LpRow total;
    total.sense = RowSense::Equal;
    total.rhs = static_cast<long>(aux.num_slots()) - 1;
    total.name = "tree";
    for (std::size_t j = 0; j < out.lp.num_vars; ++j) total.coef.emplace_back(j, Rational(1));
    out.lp.rows.push_back(std::move(total));

    for (VertexId v = 0; v < aux.base().num_vertices(); ++v) {
        if (!state.in_q[v]) continue;
        LpRow row;
        row.sense = RowSense::LessEqual;
        row.rhs = static_cast<long>(state.k * aux.base().degree(v));
        row.coef = degree_row(aux, state, var_of, v);
        row.name = "deg" + std::to_string(v);
        out.lp.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace

LpaProblem build_lpa(const AuxGraph& aux, const LpaState& state) {
    std::vector<std::size_t> var_of;
    LpaProblem out = base_problem(aux, state, var_of);
    for (const auto& set : state.cut_pool) out.lp.rows.push_back(subtour_row(aux, state, var_of, set));
    return out;
}

LpaProblem build_lpa_all_subtours(const AuxGraph& aux, const LpaState& state, std::size_t max_slots) {
    const std::size_t n = aux.num_slots();
    if (n > max_slots) throw SizeGuardError("full subtour system limited to " + std::to_string(max_slots) + " slots");
    std::vector<std::size_t> var_of;
    LpaProblem out = base_problem(aux, state, var_of);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<SlotId> set;
        for (SlotId s = 0; s < n; ++s) {
            if (mask >> s & 1) set.push_back(s);
        }
        if (set.size() < 2) continue;
        // sets that fall apart along live edges are implied by their pieces
        UnionFind uf(n);
        for (EdgeId e = 0; e < aux.gprime().num_edges(); ++e) {
            const Edge& x = aux.gprime().edge(e);
            if (state.live[e] && (mask >> x.u & 1) && (mask >> x.v & 1)) uf.unite(x.u, x.v);
        }
        if (uf.num_sets() != n - set.size() + 1) continue;
        out.lp.rows.push_back(subtour_row(aux, state, var_of, set));
    }
    return out;
}

bool subtour_violated(const AuxGraph& aux, const LpaState& state, const std::vector<Rational>& x,
                      const std::vector<SlotId>& set) {
    std::vector<bool> in(aux.num_slots(), false);
    for (SlotId s : set) in[s] = true;
    Rational inside = 0;
    for (EdgeId e = 0; e < aux.gprime().num_edges(); ++e) {
        const Edge& ed = aux.gprime().edge(e);
        if (state.live[e] && in[ed.u] && in[ed.v]) inside += x[e];
    }
    return inside > static_cast<long>(set.size()) - 1;
}

LpaSolution solve_with_cuts(const AuxGraph& aux, LpaState& state) {
    LpaSolution out;
    while (true) {
        LpaProblem prob = build_lpa(aux, state);
        out.result = simplex_solve(prob.lp);
        ++out.solves;
        if (out.result.status != LpStatus::Optimal) return out;

        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (EdgeId e : prob.var_edge) edges.emplace_back(aux.gprime().edge(e).u, aux.gprime().edge(e).v);
        auto cuts = separate_forest_all(aux.num_slots(), edges, out.result.solution->x);
        if (cuts.empty()) {
            out.x.assign(aux.gprime().num_edges(), Rational(0));
            for (std::size_t j = 0; j < prob.var_edge.size(); ++j) out.x[prob.var_edge[j]] = out.result.solution->x[j];
            out.objective = out.result.solution->objective;
            return out;
        }
        for (const auto& cut : cuts) {
            std::vector<SlotId> set(cut.set.begin(), cut.set.end());
            if (std::find(state.cut_pool.begin(), state.cut_pool.end(), set) != state.cut_pool.end()) {
                throw InvariantViolation("separation returned a set already in the cut pool");
            }
            state.cut_pool.push_back(std::move(set));
            ++out.cuts_added;
        }
    }
}

}  // namespace ktrail
