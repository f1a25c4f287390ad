// ktrail: command-line front end.
//
// Exit codes: 0 yes / success, 1 no / infeasible, 2 usage or parse error,
// 3 size guard refused, 4 internal invariant broken.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ktrail/auxgraph.hpp"
#include "ktrail/containment.hpp"
#include "ktrail/errors.hpp"
#include "ktrail/instances.hpp"
#include "ktrail/json_io.hpp"
#include "ktrail/lpa.hpp"
#include "ktrail/multigraph.hpp"
#include "ktrail/oracles.hpp"
#include "ktrail/recognition.hpp"
#include "ktrail/weighted.hpp"

using namespace ktrail;
using nlohmann::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;
constexpr int kInternal = 4;

struct Common {
    std::string file;
    std::size_t k = 0;
    std::string out;
    bool json = false;
    bool dot = false;
    std::size_t max_edges = 16;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(out_path, text);
    }
}

// Nothing leaves the tool without passing the checker first.
void check_or_die(const MultiGraph& g, const PreimageWitness& wit, std::size_t bound) {
    if (auto c = verify_witness(g, wit, bound); !c) {
        throw InvariantViolation("refusing to print a witness that fails verification: " + c.reason);
    }
}

void check_or_die(const MultiGraph& g, const std::vector<EdgeId>& sub, const PreimageWitness& wit,
                  std::size_t bound) {
    if (auto c = verify_subgraph_witness(g, sub, wit, bound); !c) {
        throw InvariantViolation("refusing to print a witness that fails verification: " + c.reason);
    }
}

json to_json(const std::vector<std::size_t>& v) { return json(v); }

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

int run_recognize(const Common& c, bool require_output) {
    auto g = read_graph_file(c.file).graph;
    auto r = is_k_trail(g, c.k);
    if (r.yes) check_or_die(g, *r.witness, c.k);

    if (require_output && c.out.empty()) throw UsageError("witness needs -o <file>");
    if (r.yes && !c.out.empty()) write_text(c.out, witness_to_json(*r.witness).dump(2) + "\n");

    if (c.json) {
        json j{{"k", c.k}, {"answer", r.yes ? "yes" : "no"}, {"mu", to_json(r.mu)}};
        if (r.yes) {
            j["witness"] = witness_to_json(*r.witness);
        } else {
            j["capacity"] = to_json(r.capacity);
            if (r.deficiency) j["intersection_size"] = r.deficiency->common.size();
        }
        std::cout << j.dump(2) << "\n";
    } else if (c.dot && r.yes) {
        std::cout << render_dot(r.witness->h, "witness");
    } else {
        std::cout << (r.yes ? "yes" : "no") << "\n";
    }
    return r.yes ? kYes : kNo;
}

int run_min_k(const Common& c) {
    auto g = read_graph_file(c.file).graph;
    std::size_t k = min_trail_k(g);
    auto r = is_k_trail(g, k);
    check_or_die(g, *r.witness, k);
    if (c.json) {
        std::cout << json{{"min_k", k}, {"witness", witness_to_json(*r.witness)}}.dump(2) << "\n";
    } else {
        std::cout << k << "\n";
    }
    return kYes;
}

int run_extend(const Common& c, const std::string& subgraph_path, const std::string& witness_path) {
    auto g = read_graph_file(c.file).graph;
    auto u = subgraph_from_json(read_json_file(subgraph_path));
    PreimageWitness wit;
    if (witness_path.empty()) {
        auto r = is_k_trail(spanning_subgraph(g, u), c.k);
        if (!r.yes) {
            std::cerr << "the subgraph is not a " << c.k << "-trail\n";
            return kNo;
        }
        wit = from_subgraph_ids(*r.witness, u);
    } else {
        wit = witness_from_json(read_json_file(witness_path));
    }
    if (auto chk = verify_subgraph_witness(g, u, wit, c.k); !chk) {
        throw UsageError("input witness rejected: " + chk.reason);
    }
    auto ext = extend_to_full_trail(g, u, wit, c.k);
    check_or_die(g, ext.witness, c.k + 1);
    json j{{"k", c.k + 1},
           {"cycles_absorbed", ext.cycles_absorbed},
           {"leaves_attached", ext.leaves_attached},
           {"witness", witness_to_json(ext.witness)}};
    if (!c.out.empty()) write_text(c.out, witness_to_json(ext.witness).dump(2) + "\n");
    if (c.dot) {
        std::cout << render_dot(ext.witness.h, "witness");
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kYes;
}

int run_approx(const Common& c, const std::string& trace_path, const std::string& lp_path) {
    auto parsed = read_graph_file(c.file);
    if (!parsed.weights) parsed.weights = std::vector<std::int64_t>(parsed.graph.num_edges(), 1);
    auto wg = require_weighted(std::move(parsed));
    auto r = approx_min_weight_trail(wg, c.k);
    if (!trace_path.empty()) write_text(trace_path, render_trace_jsonl(r.trace));

    if (!r.found) {
        if (!lp_path.empty()) write_text(lp_path, render_lp(r.certificate->lp));
        if (c.json) {
            std::cout << json{{"k", c.k}, {"found", false}, {"farkas", rationals(r.certificate->farkas)}}.dump(2)
                      << "\n";
        } else {
            std::cout << "no " << c.k << "-trail is contained in the graph (relaxation infeasible)\n";
        }
        return kNo;
    }
    check_or_die(wg.graph, r.edges, r.witness, r.bound);
    if (!lp_path.empty()) {
        AuxGraph aux(wg.graph);
        auto state = initial_lpa_state(aux, c.k, wg.weight);
        solve_with_cuts(aux, state);
        write_text(lp_path, render_lp(build_lpa(aux, state).lp));
    }
    if (!c.out.empty()) write_text(c.out, witness_to_json(r.witness).dump(2) + "\n");
    if (c.json) {
        json j{{"k", c.k},
               {"found", true},
               {"bound", r.bound},
               {"weight", r.weight},
               {"lp_value", to_string(r.lp_value)},
               {"iterations", r.iterations},
               {"edges", r.edges},
               {"witness", witness_to_json(r.witness)}};
        std::cout << j.dump(2) << "\n";
    } else if (c.dot) {
        std::cout << render_dot(r.witness.h, "witness");
    } else {
        std::cout << "weight " << r.weight << " lp " << to_string(r.lp_value) << " bound " << r.bound << "\n";
    }
    return kYes;
}

int run_aux(const Common& c, bool dump) {
    auto g = read_graph_file(c.file).graph;
    AuxGraph aux(g);
    std::string text = (dump || !c.dot) ? render_aux_dump(aux) : render_aux_dot(aux);
    emit(text, c.out);
    return kYes;
}

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoul(tok));
        } catch (const std::exception&) {
            throw UsageError("bad list entry '" + tok + "'");
        }
    }
    return out;
}

int run_oracle(const Common& c, const std::string& which, const std::string& mu_text) {
    auto parsed = read_graph_file(c.file);
    const auto& g = parsed.graph;
    if (which == "min-k") {
        std::size_t k = oracle_min_k(g, c.max_edges);
        std::cout << (c.json ? json{{"min_k", k}}.dump() : std::to_string(k)) << "\n";
        return kYes;
    }
    if (which == "feasible") {
        auto mu = parse_list(mu_text);
        if (mu.size() != g.num_vertices()) throw UsageError("--mu needs one entry per vertex");
        bool ok = oracle_feasible_split(g, mu, c.max_edges);
        std::cout << (ok ? "yes" : "no") << "\n";
        return ok ? kYes : kNo;
    }
    if (c.k == 0) throw UsageError("this oracle needs -k");
    if (which == "contains") {
        auto a = oracle_contains_k_trail(g, c.k, c.max_edges);
        if (a.contains) check_or_die(g, a.subset, *a.witness, c.k);
        if (c.json) {
            json j{{"contains", a.contains}, {"subsets_tested", a.subsets_tested}};
            if (a.contains) {
                j["edges"] = a.subset;
                j["witness"] = witness_to_json(*a.witness);
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (a.contains ? "yes" : "no") << "\n";
        }
        return a.contains ? kYes : kNo;
    }
    if (which == "min-weight") {
        auto wg = require_weighted(std::move(parsed));
        auto a = oracle_min_weight_k_trail(wg, c.k, c.max_edges);
        if (a.exists) check_or_die(wg.graph, a.subset, *a.witness, c.k);
        if (c.json) {
            json j{{"exists", a.exists}, {"subsets_tested", a.subsets_tested}};
            if (a.exists) {
                j["weight"] = a.weight;
                j["edges"] = a.subset;
            }
            std::cout << j.dump(2) << "\n";
        } else if (a.exists) {
            std::cout << a.weight << "\n";
        } else {
            std::cout << "none\n";
        }
        return a.exists ? kYes : kNo;
    }
    throw UsageError("unknown oracle '" + which + "'");
}

struct GenOptions {
    std::string kind;
    std::size_t n = 0, m = 0, k = 2, index = 0;
    std::int64_t weight = 1, lo = 0, hi = 0;
    double loop_p = 0, parallel_p = 0;
    std::uint64_t seed = 1;
    bool weighted = false;
    std::string cubic_file;
};

int run_gen(const GenOptions& o, const std::string& out) {
    if (o.kind == "gadget") {
        MultiGraph cubic = MultiGraph::unchecked(0, {});
        if (!o.cubic_file.empty()) {
            cubic = read_graph_file(o.cubic_file).graph;
        } else {
            auto all = all_cubic_graphs(o.n);
            if (o.index >= all.size()) throw UsageError("--index past the " + std::to_string(all.size()) + " cubic graphs");
            cubic = all[o.index];
        }
        emit(render_graph(gen_hardness_gadget(cubic, o.k)), out);
    } else if (o.kind == "gap") {
        emit(render_graph(gen_gap_instance(o.k, o.n, o.weight)), out);
    } else if (o.kind == "random") {
        auto g = gen_random_multigraph(o.n, o.m, o.loop_p, o.parallel_p, o.seed);
        emit(o.weighted ? render_graph(gen_random_weights(g, o.lo, o.hi, o.seed)) : render_graph(g), out);
    } else if (o.kind == "cubic") {
        auto all = all_cubic_graphs(o.n);
        if (o.index >= all.size()) throw UsageError("--index past the " + std::to_string(all.size()) + " cubic graphs");
        emit(render_graph(all[o.index]), out);
    } else {
        throw UsageError("unknown generator '" + o.kind + "'");
    }
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-trail recognition, containment and approximation"};
    app.require_subcommand(1);

    Common c;
    auto add_file = [&](CLI::App* s) { s->add_option("file", c.file, "graph file")->required(); };
    auto add_k = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("-k", c.k, "degree bound");
        if (required) opt->required();
        opt->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App* s) {
        s->add_option("-o", c.out, "output file");
        s->add_flag("--json", c.json, "machine-readable output");
        s->add_flag("--dot", c.dot, "DOT output");
    };

    auto* recognize = app.add_subcommand("recognize", "decide whether the graph is a k-trail");
    add_k(recognize, true), add_file(recognize), add_out(recognize);

    auto* min_k = app.add_subcommand("min-k", "smallest k for which the graph is a k-trail");
    add_file(min_k), add_out(min_k);

    auto* witness = app.add_subcommand("witness", "write a k-tree witness to -o");
    add_k(witness, true), add_file(witness), add_out(witness);

    std::string subgraph_path, witness_path;
    auto* extend = app.add_subcommand("extend", "turn a k-trail subgraph into a (k+1)-trail witness of the graph");
    add_k(extend, true), add_file(extend), add_out(extend);
    extend->add_option("--subgraph", subgraph_path, "JSON edge ids of the spanning subgraph")->required();
    extend->add_option("--witness", witness_path, "witness JSON for the subgraph (edge_map in graph ids)");

    std::string trace_path, lp_path;
    auto* approx = app.add_subcommand("approx", "iterative relaxation for a cheap (2k-1)-trail (unit weights if none)");
    add_k(approx, true), add_file(approx), add_out(approx);
    approx->add_option("--trace", trace_path, "write the relaxation trace as JSON lines");
    approx->add_option("--lp-dump", lp_path, "write the final relaxation in LP format");

    GenOptions gen_opts;
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->add_option("kind", gen_opts.kind, "gadget | gap | random | cubic")->required();
    gen->add_option("-n", gen_opts.n, "vertices (ring length for gap)");
    gen->add_option("-m", gen_opts.m, "edges");
    gen->add_option("-k", gen_opts.k, "degree parameter");
    gen->add_option("--index", gen_opts.index, "which cubic graph of the catalogue");
    gen->add_option("--cubic", gen_opts.cubic_file, "cubic graph file for the gadget");
    gen->add_option("--weight", gen_opts.weight, "uniform weight for gap instances");
    gen->add_option("--loop-p", gen_opts.loop_p, "loop probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--parallel-p", gen_opts.parallel_p, "parallel edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_opts.seed, "random seed");
    gen->add_option("--lo", gen_opts.lo, "lowest random weight");
    gen->add_option("--hi", gen_opts.hi, "highest random weight");
    gen->add_flag("--weighted", gen_opts.weighted, "attach random weights in [lo, hi]");
    gen->add_option("-o", c.out, "output file");

    bool aux_dump = false;
    auto* aux = app.add_subcommand("aux", "print the slot graph");
    add_file(aux), add_out(aux);
    aux->add_flag("--dump", aux_dump, "graph text with slot comments (default)");

    std::string oracle_kind, mu_text;
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference answers for small graphs");
    oracle->add_option("which", oracle_kind, "min-k | feasible | contains | min-weight")->required();
    add_file(oracle), add_out(oracle);
    add_k(oracle, false);
    oracle->add_option("--mu", mu_text, "comma-separated split vector for feasible");
    oracle->add_option("--max-edges", c.max_edges, "size guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kYes : kUsage;
    }

    try {
        if (*recognize) return run_recognize(c, false);
        if (*witness) return run_recognize(c, true);
        if (*min_k) return run_min_k(c);
        if (*extend) return run_extend(c, subgraph_path, witness_path);
        if (*approx) return run_approx(c, trace_path, lp_path);
        if (*gen) return run_gen(gen_opts, c.out);
        if (*aux) return run_aux(c, aux_dump);
        if (*oracle) return run_oracle(c, oracle_kind, mu_text);
    } catch (const SizeGuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kGuard;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
