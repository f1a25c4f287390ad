#include "ktrail/weighted.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ktrail/auxgraph.hpp"
#include "ktrail/containment.hpp"
#include "ktrail/errors.hpp"
#include "ktrail/lpa.hpp"
#include "ktrail/recognition.hpp"

namespace ktrail {

const char* to_string(RelaxAction a) {
    switch (a) {
        case RelaxAction::Solve: return "solve";
        case RelaxAction::DeleteEdge: return "delete_edge";
        case RelaxAction::DropSupport: return "drop_support";
        case RelaxAction::DropMixed: return "drop_mixed";
        case RelaxAction::Finish: return "finish";
    }
    return "?";
}

namespace {

// Live matching-edge endpoints inside V'_v (a loop counts twice).
std::size_t live_matching_degree(const AuxGraph& aux, const std::vector<bool>& live, VertexId v) {
    std::size_t d = 0;
    for (EdgeId e = 0; e < aux.num_matching_edges(); ++e) {
        if (!live[e]) continue;
        for (SlotId s : aux.edge_slots(e)) d += aux.slot_vertex(s) == v ? 1 : 0;
    }
    return d;
}

std::size_t live_clique_count(const AuxGraph& aux, const std::vector<bool>& live, VertexId v) {
    std::size_t c = 0;
    for (EdgeId e : aux.clique_edges(v)) c += live[e] ? 1 : 0;
    return c;
}

}  // namespace

ApproxResult approx_min_weight_trail(const WeightedMultiGraph& wg, std::size_t k) {
    if (k < 2) throw UsageError("approximation needs k >= 2");
    const MultiGraph& g = wg.graph;
    const AuxGraph aux = build_aux(g);
    const std::size_t bound = 2 * k - 1;

    ApproxResult out;
    out.bound = bound;
    LpaState state = initial_lpa_state(aux, k, wg.weight);
    auto record = [&](RelaxAction a, std::size_t target, const Rational& value) {
        out.trace.push_back({out.iterations, a, target, value, state.num_live(),
                             static_cast<std::size_t>(std::count(state.in_q.begin(), state.in_q.end(), true)),
                             state.cut_pool.size()});
    };

    LpaSolution sol = solve_with_cuts(aux, state);
    if (sol.result.status == LpStatus::Infeasible) {
        out.certificate = NoKTrailCertificate{build_lpa(aux, state).lp, sol.result.farkas};
        return out;
    }
    if (sol.result.status != LpStatus::Optimal) throw InvariantViolation("relaxation of a bounded polytope is unbounded");
    out.lp_value = sol.objective;
    record(RelaxAction::Solve, 0, sol.objective);

    std::vector<Rational> x = sol.x;
    Rational value = sol.objective;
    enum class Drop { None, Support, Mixed };
    std::vector<Drop> dropped(g.num_vertices(), Drop::None);
    const std::size_t limit = aux.gprime().num_edges() + g.num_vertices();

    while (std::find(state.in_q.begin(), state.in_q.end(), true) != state.in_q.end()) {
        if (++out.iterations > limit) throw InvariantViolation("iterative relaxation exceeded |E'| + |V| iterations");

        EdgeId zero = static_cast<EdgeId>(aux.gprime().num_edges());
        for (EdgeId e = 0; e < aux.gprime().num_edges(); ++e) {
            if (state.live[e] && x[e] == 0) {
                zero = e;
                break;
            }
        }
        if (zero < aux.gprime().num_edges()) {
            // x stays an optimal vertex of the smaller system, no re-solve needed
            state.live[zero] = false;
            record(RelaxAction::DeleteEdge, zero, value);
            continue;
        }

        VertexId pick = static_cast<VertexId>(g.num_vertices());
        Drop how = Drop::None;
        for (VertexId v = 0; v < g.num_vertices() && how == Drop::None; ++v) {
            if (!state.in_q[v]) continue;
            const std::size_t d = live_matching_degree(aux, state.live, v);
            const std::size_t a = live_clique_count(aux, state.live, v);
            if (d + bound * a <= bound * g.degree(v)) {
                how = Drop::Mixed;
            } else if (d <= bound) {
                how = Drop::Support;
            }
            if (how != Drop::None) pick = v;
        }
        if (how == Drop::None) throw InvariantViolation("iterative relaxation is stuck: no zero edge and no droppable vertex");
        state.in_q[pick] = false;
        dropped[pick] = how;

        sol = solve_with_cuts(aux, state);
        if (sol.result.status != LpStatus::Optimal) throw InvariantViolation("relaxation became infeasible after a drop");
        if (sol.objective > value) throw InvariantViolation("relaxation value increased after a drop");
        x = sol.x;
        value = sol.objective;
        record(how == Drop::Mixed ? RelaxAction::DropMixed : RelaxAction::DropSupport, pick, value);
    }

    AuxTree t;
    for (EdgeId e = 0; e < aux.gprime().num_edges(); ++e) {
        if (!state.live[e] || x[e] == 0) continue;
        if (x[e] != 1) throw InvariantViolation("final relaxation solution is fractional");
        t.edges.push_back(e);
    }
    if (!is_spanning_tree(aux, t.edges)) throw InvariantViolation("final relaxation solution is not a spanning tree");

    const std::vector<std::size_t> alpha = alpha_of(aux, t);
    std::vector<bool> in_tree(aux.gprime().num_edges(), false);
    for (EdgeId e : t.edges) in_tree[e] = true;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const std::size_t d = live_matching_degree(aux, in_tree, v);
        bool ok = dropped[v] == Drop::Support ? d <= bound : d + bound * alpha[v] <= bound * g.degree(v);
        if (!ok) throw InvariantViolation("dropped vertex " + std::to_string(v) + " ends above its relaxed bound");
    }

    AuxPreimage pre = tree_to_witness(aux, t);
    out.edges = pre.image_edges;
    MultiGraph sub = spanning_subgraph(g, out.edges);
    PreimageWitness balanced = balance_degrees(sub, to_subgraph_ids(pre.witness, out.edges));
    out.witness = from_subgraph_ids(balanced, out.edges);
    auto check = verify_subgraph_witness(g, out.edges, out.witness, bound);
    if (!check) throw InvariantViolation("approximation witness failed verification: " + check.reason);

    out.weight = wg.total_weight(out.edges);
    if (make_rational(out.weight) != value) throw InvariantViolation("tree weight differs from the final relaxation value");
    if (make_rational(out.weight) > out.lp_value) throw InvariantViolation("tree weight exceeds the first relaxation");
    record(RelaxAction::Finish, 0, value);
    out.found = true;
    return out;
}

MinWeightAnswer oracle_min_weight_k_trail(const WeightedMultiGraph& wg, std::size_t k, std::size_t max_free_edges) {
    const MultiGraph& g = wg.graph;
    if (k < 1) throw UsageError("k must be at least 1");
    MinWeightAnswer out;
    if (!is_connected(g)) return out;
    const std::vector<EdgeId> forced = bridges(g);
    std::vector<bool> is_forced(g.num_edges(), false);
    for (EdgeId e : forced) is_forced[e] = true;
    std::vector<EdgeId> free;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!is_forced[e]) free.push_back(e);
    }
    if (free.size() > max_free_edges) {
        throw SizeGuardError("min-weight oracle: " + std::to_string(free.size()) + " non-bridge edges exceed the guard of " +
                             std::to_string(max_free_edges));
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::vector<EdgeId> subset = forced;
        for (std::size_t i = 0; i < free.size(); ++i) {
            if (mask >> i & 1) subset.push_back(free[i]);
        }
        std::sort(subset.begin(), subset.end());
        if (!is_connected_spanning(g, subset)) continue;
        const std::int64_t w = wg.total_weight(subset);
        if (out.exists && w >= out.weight) continue;
        ++out.subsets_tested;
        RecognitionResult r = is_k_trail(spanning_subgraph(g, subset), k);
        if (!r.yes) continue;
        out.exists = true;
        out.weight = w;
        out.witness = from_subgraph_ids(*r.witness, subset);
        out.subset = std::move(subset);
    }
    return out;
}

std::string render_trace_jsonl(const std::vector<RelaxationStep>& trace) {
    std::ostringstream os;
    for (const RelaxationStep& s : trace) {
        nlohmann::json j;
        j["iteration"] = s.iteration;
        j["action"] = to_string(s.action);
        j["target"] = s.target;
        j["lp_value"] = s.lp_value.get_str();
        j["live_edges"] = s.live_edges;
        j["q_size"] = s.q_size;
        j["cuts"] = s.cuts;
        os << j.dump() << '\n';
    }
    return os.str();
}

}  // namespace ktrail
