#include "nodecut/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "nodecut/landscape.hpp"

namespace nodecut {

std::string_view to_string(Move m) {
    switch (m) {
        case Move::seed: return "seed";
        case Move::add: return "add";
        case Move::remove: return "remove";
        case Move::record_minimum: return "record-minimum";
    }
    return "unknown";
}

TieBreaker::TieBreaker(TieBreakPolicy policy, std::uint64_t stream) : policy_(policy) {
    std::seed_seq seq{static_cast<std::uint32_t>(policy.rng_seed), static_cast<std::uint32_t>(policy.rng_seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

std::size_t TieBreaker::choose(const std::vector<double>& values) {
    double best = *std::min_element(values.begin(), values.end());
    std::vector<std::size_t> tied;
    for (std::size_t k = 0; k < values.size(); ++k)
        if (values[k] <= best + kPsiTolerance) tied.push_back(k);
    if (policy_.mode == TieBreakMode::deterministic || tied.size() == 1) return tied.front();
    return tied[engine_() % tied.size()];
}

namespace {

std::vector<NodeId> sorted_frontier(const SubgraphState& s) {
    std::vector<NodeId> f(s.frontier().begin(), s.frontier().end());
    std::sort(f.begin(), f.end());
    return f;
}

void require_frontier(const SubgraphState& s) {
    if (s.frontier().empty()) throw Error(ErrorKind::NoFrontier, "subgraph has no outside neighbour");
}

}  // namespace

Choice best_addition(const SubgraphState& s, TieBreaker& tb) {
    require_frontier(s);
    auto nodes = sorted_frontier(s);
    std::vector<double> values;
    values.reserve(nodes.size());
    for (auto i : nodes) values.push_back(s.psi_after_add(i));
    auto k = tb.choose(values);
    return {nodes[k], values[k] - s.psi()};
}

std::vector<NodeId> prune(SubgraphState& s, TieBreaker& tb,
                          const std::function<void(NodeId, const SubgraphState&)>& on_remove) {
    std::vector<NodeId> removed;
    while (s.size() >= 3) {
        auto cut_nodes = articulation_points(s.graph(), s.members());
        std::vector<NodeId> nodes;
        std::vector<double> values;
        for (auto i : s.members().members()) {
            if (cut_nodes.contains(i)) continue;
            if (auto p = s.psi_after_remove(i)) {
                nodes.push_back(i);
                values.push_back(*p);
            }
        }
        if (nodes.empty()) break;
        auto k = tb.choose(values);
        if (!(values[k] < s.psi() - kPsiTolerance)) break;
        s.remove(nodes[k]);
        removed.push_back(nodes[k]);
        if (on_remove) on_remove(nodes[k], s);
    }
    return removed;
}

NodeId escape_step(SubgraphState& s, TieBreaker& tb, std::size_t rank) {
    require_frontier(s);
    NodeId pick = kNoNode;
    if (rank == 0) {
        pick = best_addition(s, tb).node;
    } else {
        auto nodes = sorted_frontier(s);
        std::vector<std::pair<double, NodeId>> ranked;
        ranked.reserve(nodes.size());
        for (auto i : nodes) ranked.emplace_back(s.psi_after_add(i), i);
        std::sort(ranked.begin(), ranked.end());
        pick = ranked[std::min(rank, ranked.size() - 1)].second;
    }
    s.add(pick);
    return pick;
}

Trajectory run_from_seed(const Graph& g, LinkId seed, const TieBreakPolicy& policy, const RunOptions& options) {
    Trajectory t;
    t.seed = seed;
    const auto& link = g.link(seed);
    const auto component = component_of(g, link.u);
    if (component.size() != g.node_count()) {
        if (!options.allow_disconnected)
            throw Error(ErrorKind::DisconnectedGraph, "graph is disconnected (" + std::to_string(component.size()) +
                                                          " of " + std::to_string(g.node_count()) +
                                                          " nodes reachable from the seed)");
        t.confined_to_component = true;
    }

    SubgraphState s(g, NodeSet(g.node_count(), {link.u, link.v}));
    TieBreaker tb(policy, seed);
    std::size_t step = 0;
    auto log = [&](Move action, NodeId node) { t.steps.push_back({step++, action, node, s.psi(), s.size()}); };
    log(Move::seed, link.u);

    // Escape attempts per recorded minimum; a revisit escapes via the next-best candidate.
    std::unordered_map<NodeSet, std::size_t, SetHash<NodeSet>> escapes;
    const std::size_t phase_cap = options.phase_cap_factor * std::max<std::size_t>(g.node_count(), 1);
    std::size_t phases = 0;
    bool climbing = false;

    while (s.size() < component.size()) {
        auto choice = best_addition(s, tb);
        if (climbing || choice.delta_psi < -kPsiTolerance) {
            s.add(choice.node);
            log(Move::add, choice.node);
            if (choice.delta_psi < -kPsiTolerance) climbing = false;
            continue;
        }
        auto removed = prune(s, tb, [&](NodeId r, const SubgraphState&) { log(Move::remove, r); });
        if (!removed.empty()) continue;

        s.recompute();
        auto& attempts = escapes[s.members()];
        if (attempts == 0) {
            t.minima.push_back({s.members(), psi(g, s.members())});
            log(Move::record_minimum, kNoNode);
        }
        if (++phases > phase_cap) {
            t.aborted = true;
            t.diagnostic = "phase cap of " + std::to_string(phase_cap) + " exceeded at |C|=" + std::to_string(s.size());
            break;
        }
        NodeId x = escape_step(s, tb, attempts);
        ++attempts;
        log(Move::add, x);
        climbing = true;
    }

    s.recompute();
    if (!t.steps.empty() && s.size() == component.size()) t.steps.back().psi = s.psi();
    t.reached_ground_state = s.size() == component.size();
    return t;
}

Detection run_seeds(const Graph& g, const std::vector<LinkId>& seeds, const TieBreakPolicy& policy, std::size_t jobs,
                    const RunOptions& options) {
    Detection d;
    d.connected = is_connected(g);
    if (!d.connected && !options.allow_disconnected)
        throw Error(ErrorKind::DisconnectedGraph, "graph is disconnected");

    d.runs.resize(seeds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < seeds.size(); k = next++) {
            auto& run = d.runs[k];
            run.trajectory.seed = seeds[k];
            try {
                run.trajectory = run_from_seed(g, seeds[k], policy, options);
                if (run.trajectory.aborted) run.error = run.trajectory.diagnostic;
            } catch (const std::exception& e) {
                run.error = e.what();
            }
        }
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(seeds.size(), 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Merge in seed order.
    std::map<std::vector<NodeId>, std::size_t> counts;
    for (const auto& run : d.runs) {
        std::map<std::vector<NodeId>, bool> seen;
        for (const auto& m : run.trajectory.minima) seen[m.nodes.members()] = true;
        if (!run.error) ++d.minima_histogram[seen.size()];
        for (const auto& [key, unused] : seen) ++counts[key];
    }
    for (const auto& [key, count] : counts) {
        auto c = make_community(g, NodeSet::from(g.node_count(), key));
        c.seed_count = count;
        d.communities.push_back(std::move(c));
    }
    std::stable_sort(d.communities.begin(), d.communities.end(), [](const Community& a, const Community& b) {
        if (a.psi != b.psi) return a.psi < b.psi;
        return a.nodes.size() > b.nodes.size();
    });
    for (std::size_t k = 0; k < d.communities.size(); ++k) {
        auto& c = d.communities[k];
        c.name = "C" + std::to_string(k + 1);
        try {
            c.stability = stability(c, d.communities);
        } catch (const Error&) {
            c.stability.reset();
        }
    }
    return d;
}

Detection run_all_seeds(const Graph& g, const TieBreakPolicy& policy, std::size_t jobs, const RunOptions& options) {
    std::vector<LinkId> seeds(g.link_count());
    std::iota(seeds.begin(), seeds.end(), LinkId{0});
    return run_seeds(g, seeds, policy, jobs, options);
}

}  // namespace nodecut
