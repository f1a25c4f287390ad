#pragma once

// Shared graphs for the test suites. Vertex i of a drawing labelled 1..n is id i-1.

#include <vector>

#include "ktrail/multigraph.hpp"
#include "ktrail/preimage.hpp"

namespace fixtures {

using ktrail::Edge;
using ktrail::MultiGraph;
using ktrail::PreimageWitness;

inline MultiGraph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back({static_cast<ktrail::VertexId>(i), static_cast<ktrail::VertexId>((i + 1) % n)});
    }
    return MultiGraph(n, e);
}

inline MultiGraph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.push_back({static_cast<ktrail::VertexId>(i), static_cast<ktrail::VertexId>(i + 1)});
    }
    return MultiGraph(n, e);
}

inline MultiGraph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, static_cast<ktrail::VertexId>(i)});
    return MultiGraph(leaves + 1, e);
}

inline MultiGraph complete(std::size_t n) {
    std::vector<Edge> e;
    for (ktrail::VertexId a = 0; a < n; ++a) {
        for (ktrail::VertexId b = a + 1; b < n; ++b) e.push_back({a, b});
    }
    return MultiGraph(n, e);
}

inline MultiGraph single_edge() { return MultiGraph(2, {{0, 1}}); }

// triangle 0-1-2 plus pendant 2-3
inline MultiGraph paw() { return MultiGraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }

inline MultiGraph k33() {
    std::vector<Edge> e;
    for (ktrail::VertexId a = 0; a < 3; ++a) {
        for (ktrail::VertexId b = 3; b < 6; ++b) e.push_back({a, b});
    }
    return MultiGraph(6, e);
}

// Worked example G: 7 vertices, 11 edges, loop at vertex 6.
inline MultiGraph worked_graph() {
    return MultiGraph(7, {{0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 3}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {6, 6}});
}

// H1: nodes 1,2,3a,3b,4,5a,5b,6,7a,7b.
inline PreimageWitness worked_h1() {
    PreimageWitness w;
    w.h = MultiGraph::unchecked(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {1, 4}, {3, 6}, {4, 5}, {6, 7}, {5, 8}, {8, 9}});
    w.phi = {0, 1, 2, 2, 3, 4, 4, 5, 6, 6};
    w.edge_map = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    return w;
}

// H2: nodes 1,2a,2b,3a,3b,4,5a,5b,6,7a,7b; the drawing repeats 2a-4, kept once here.
inline PreimageWitness worked_h2() {
    PreimageWitness w;
    w.h = MultiGraph::unchecked(11, {{0, 1}, {0, 3}, {0, 4}, {3, 2}, {2, 5}, {1, 5}, {4, 7}, {5, 6}, {7, 8}, {6, 9}, {9, 10}});
    w.phi = {0, 1, 1, 2, 2, 3, 4, 4, 5, 6, 6};
    w.edge_map = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    return w;
}

// Slot-graph example: 9 vertices, 14 edges, loop at vertex 8.
inline MultiGraph slot_example_graph() {
    return MultiGraph(9, {{0, 4}, {1, 2}, {1, 4}, {2, 5}, {2, 4}, {3, 4}, {3, 6}, {4, 5}, {4, 7}, {4, 6},
                          {5, 8}, {5, 8}, {6, 7}, {8, 8}});
}

}  // namespace fixtures
