#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktrail/lp.hpp"
#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"

namespace ktrail {

enum class RelaxAction { Solve, DeleteEdge, DropSupport, DropMixed, Finish };

const char* to_string(RelaxAction a);

struct RelaxationStep {
    std::size_t iteration = 0;
    RelaxAction action = RelaxAction::Solve;
    std::size_t target = 0;  // G'-edge for DeleteEdge, vertex for the drops
    Rational lp_value;
    std::size_t live_edges = 0;
    std::size_t q_size = 0;
    std::size_t cuts = 0;
};

/// Proof that no k-trail is contained in G: the first relaxation is infeasible.
struct NoKTrailCertificate {
    LpProblem lp;
    std::vector<Rational> farkas;
};

struct ApproxResult {
    bool found = false;
    std::vector<EdgeId> edges;         // U, sorted
    PreimageWitness witness;           // witness of (V, U); edge_map holds G-edge ids
    std::size_t bound = 0;             // 2k - 1
    std::int64_t weight = 0;           // w(U)
    Rational lp_value;                 // optimum of the first relaxation
    std::size_t iterations = 0;
    std::vector<RelaxationStep> trace;
    std::optional<NoKTrailCertificate> certificate;
};

/// Iterative relaxation: returns a (2k-1)-trail contained in G whose weight
/// is at most that of every k-trail contained in G, or a certificate that no
/// k-trail is contained in G. Requires k >= 2 and G connected.
ApproxResult approx_min_weight_trail(const WeightedMultiGraph& g, std::size_t k);

struct MinWeightAnswer {
    bool exists = false;
    std::int64_t weight = 0;
    std::vector<EdgeId> subset;
    std::optional<PreimageWitness> witness;
    std::size_t subsets_tested = 0;
};

/// Exhaustive minimum-weight contained k-trail. Bridges are in every
/// candidate; more than `max_free_edges` other edges raises SizeGuardError.
MinWeightAnswer oracle_min_weight_k_trail(const WeightedMultiGraph& g, std::size_t k, std::size_t max_free_edges = 16);

/// One JSON object per line: iteration, action, target, lp_value, live_edges, q_size, cuts.
std::string render_trace_jsonl(const std::vector<RelaxationStep>& trace);

}  // namespace ktrail
