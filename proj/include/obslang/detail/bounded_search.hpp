#ifndef OBSLANG_DETAIL_BOUNDED_SEARCH_HPP
#define OBSLANG_DETAIL_BOUNDED_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "obslang/enumeration.hpp"
#include "obslang/observer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace obslang::detail {

// Breadth-first exploration over (configuration, emitted-output) pairs.
//
// The dedup key must be the pair, not the configuration alone: outputs are
// path-dependent, so two nodes agreeing on both configuration and output
// have identical futures while nodes agreeing on the configuration alone do
// not. Levels are processed in lockstep, so the first arrival of a pair is
// a minimal-depth arrival and later ones are subsumed.
//
// An adapter provides:
//   using Config = ...;           value type, hashable via encode()
//   using Edge = ...;             witness attached to one step
//   std::vector<Config> roots() const;
//   void expand(const Config&, std::vector<std::pair<Config, Edge>>&) const;
//   bool is_final(const Config&) const;        // record the output here
//   OutputSymbol observe(const Config&) const;
//   std::size_t size(const Config&) const;     // for the length bound
//   std::size_t diagnostic(const Config&) const;
//   void encode(const Config&, std::vector<std::uint32_t>&) const;

struct SearchBounds {
    std::size_t max_steps = 0;
    std::optional<std::size_t> max_config_len;
    std::optional<std::size_t> max_output_len;
};

struct SearchOutcome {
    std::vector<OutputWord> words;  // unsorted, may contain duplicates
    bool exhausted = true;
    std::uint64_t explored = 0;
    std::size_t max_diagnostic = 0;
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline constexpr std::uint32_t kKeySeparator = 0xffffffffu;

template <class Adapter>
class BoundedSearch {
public:
    using Config = typename Adapter::Config;

    BoundedSearch(const Adapter& adapter, const SearchBounds& bounds, Mode mode)
        : adapter_(adapter), bounds_(bounds), mode_(mode) {}

    SearchOutcome run(int jobs) {
        std::vector<Node> frontier = make_roots();
        for (std::size_t depth = 0; depth < bounds_.max_steps && !frontier.empty(); ++depth) {
            std::vector<std::vector<Node>> batches =
                jobs > 1 ? expand_parallel(frontier, jobs) : expand_serial(frontier);
            frontier = place(batches);
        }
        return std::move(outcome_);
    }

private:
    struct Node {
        Config cfg;
        OutputWord out;
    };

    std::vector<Node> make_roots() {
        std::vector<std::vector<Node>> batch(1);
        bool cut = false;
        for (Config& cfg : adapter_.roots()) {
            OutputSymbol obs = adapter_.observe(cfg);
            if (mode_ == Mode::bottom_filtered && obs.is_bottom())
                continue;
            if (bounds_.max_config_len && adapter_.size(cfg) > *bounds_.max_config_len) {
                cut = true;
                continue;
            }
            OutputWord out;
            if (!obs.is_lambda())
                out.push_back(obs.raw());
            if (bounds_.max_output_len && out.size() > *bounds_.max_output_len) {
                cut = true;
                continue;
            }
            batch[0].push_back(Node{std::move(cfg), std::move(out)});
        }
        if (cut)
            outcome_.exhausted = false;
        return place(batch);
    }

    // Successor candidates of one node. Kept identical for the serial and
    // parallel paths so their cut flags and frontiers agree exactly.
    void expand_node(const Node& node, std::vector<Node>& cand, bool& cut) const {
        std::vector<std::pair<Config, typename Adapter::Edge>> succ;
        adapter_.expand(node.cfg, succ);
        for (auto& [cfg, edge] : succ) {
            (void)edge;
            OutputSymbol obs = adapter_.observe(cfg);
            if (mode_ == Mode::bottom_filtered && obs.is_bottom())
                continue;
            if (bounds_.max_config_len && adapter_.size(cfg) > *bounds_.max_config_len) {
                cut = true;
                continue;
            }
            OutputWord out = node.out;
            if (!obs.is_lambda())
                out.push_back(obs.raw());
            if (bounds_.max_output_len && out.size() > *bounds_.max_output_len) {
                cut = true;
                continue;
            }
            cand.push_back(Node{std::move(cfg), std::move(out)});
        }
    }

    std::vector<std::vector<Node>> expand_serial(const std::vector<Node>& frontier) const {
        std::vector<std::vector<Node>> batches(1);
        bool cut = false;
        for (const Node& node : frontier)
            expand_node(node, batches[0], cut);
        if (cut)
            outcome_.exhausted = false;
        return batches;
    }

    std::vector<std::vector<Node>> expand_parallel(const std::vector<Node>& frontier, int jobs) const {
#ifdef _OPENMP
        std::vector<std::vector<Node>> batches(static_cast<std::size_t>(jobs));
        std::vector<char> cuts(static_cast<std::size_t>(jobs), 0);
#pragma omp parallel num_threads(jobs)
        {
            const int tid = omp_get_thread_num();
            bool cut = false;
#pragma omp for schedule(dynamic, 16)
            for (std::size_t i = 0; i < frontier.size(); ++i)
                expand_node(frontier[i], batches[static_cast<std::size_t>(tid)], cut);
            if (cut)
                cuts[static_cast<std::size_t>(tid)] = 1;
        }
        if (std::any_of(cuts.begin(), cuts.end(), [](char c) { return c != 0; }))
            outcome_.exhausted = false;
        return batches;
#else
        (void)jobs;
        return expand_serial(frontier);
#endif
    }

    // Serial merge: set-dedup against every pair seen so far, then record
    // finals and stats. Everything downstream depends only on the resulting
    // set, so batch order (and hence thread scheduling) cannot leak into
    // the outcome.
    std::vector<Node> place(std::vector<std::vector<Node>>& batches) {
        std::vector<Node> next;
        std::vector<std::uint32_t> key;
        for (std::vector<Node>& batch : batches) {
            for (Node& node : batch) {
                key.clear();
                adapter_.encode(node.cfg, key);
                key.push_back(kKeySeparator);
                key.insert(key.end(), node.out.begin(), node.out.end());
                if (!visited_.insert(key).second)
                    continue;
                outcome_.explored += 1;
                outcome_.max_diagnostic = std::max(outcome_.max_diagnostic, adapter_.diagnostic(node.cfg));
                if (adapter_.is_final(node.cfg))
                    outcome_.words.push_back(node.out);
                next.push_back(std::move(node));
            }
            batch.clear();
        }
        return next;
    }

    const Adapter& adapter_;
    SearchBounds bounds_;
    Mode mode_;
    mutable SearchOutcome outcome_;
    std::unordered_set<std::vector<std::uint32_t>, KeyHash> visited_;
};

// A found witness: which root it starts from (ordinal in roots() order)
// and the edges of the path.
template <class Edge>
struct MemberWitness {
    std::size_t root;
    std::vector<Edge> edges;
};

// Membership search over the same graph, specialized to one target word:
// the emitted output must stay a prefix of `word`, so a node is identified
// by (configuration, matched-prefix length) and carries its parent for
// witness extraction. Serial; witnesses are deterministic.
template <class Adapter>
std::optional<MemberWitness<typename Adapter::Edge>> member_search(const Adapter& adapter,
                                                                   const OutputWord& word,
                                                                   const SearchBounds& bounds) {
    using Edge = typename Adapter::Edge;
    struct MemberNode {
        typename Adapter::Config cfg;
        std::size_t matched;
        std::size_t parent;
        std::size_t root;
        Edge edge;
    };

    std::vector<MemberNode> arena;
    std::unordered_set<std::vector<std::uint32_t>, KeyHash> visited;
    std::vector<std::uint32_t> key;

    auto next_matched = [&](OutputSymbol obs, std::size_t matched) -> std::optional<std::size_t> {
        if (obs.is_lambda())
            return matched;
        if (obs.is_bottom())
            return std::nullopt;  // the target word is over the output alphabet
        if (matched == word.size() || word[matched] != obs.raw())
            return std::nullopt;
        return matched + 1;
    };

    auto witness = [&](std::size_t index) {
        MemberWitness<Edge> w;
        std::size_t at = index;
        for (; arena[at].parent != at; at = arena[at].parent)
            w.edges.push_back(arena[at].edge);
        w.root = arena[at].root;
        std::reverse(w.edges.begin(), w.edges.end());
        return w;
    };

    auto try_place = [&](typename Adapter::Config&& cfg, std::size_t matched, std::size_t parent,
                         std::size_t root, Edge edge) -> std::optional<std::size_t> {
        if (bounds.max_config_len && adapter.size(cfg) > *bounds.max_config_len)
            return std::nullopt;
        if (bounds.max_output_len && matched > *bounds.max_output_len)
            return std::nullopt;
        key.clear();
        adapter.encode(cfg, key);
        key.push_back(kKeySeparator);
        key.push_back(static_cast<std::uint32_t>(matched));
        if (!visited.insert(key).second)
            return std::nullopt;
        arena.push_back(MemberNode{std::move(cfg), matched, parent, root, edge});
        return arena.size() - 1;
    };

    std::vector<std::size_t> frontier;
    std::size_t root_ordinal = 0;
    for (typename Adapter::Config& cfg : adapter.roots()) {
        OutputSymbol obs = adapter.observe(cfg);
        auto matched = next_matched(obs, 0);
        std::size_t ordinal = root_ordinal++;
        if (!matched)
            continue;
        auto idx = try_place(std::move(cfg), *matched, arena.size(), ordinal, Edge{});
        if (!idx)
            continue;
        arena[*idx].parent = *idx;  // root marker
        if (adapter.is_final(arena[*idx].cfg) && *matched == word.size())
            return witness(*idx);
        frontier.push_back(*idx);
    }

    std::vector<std::pair<typename Adapter::Config, Edge>> succ;
    for (std::size_t depth = 0; depth < bounds.max_steps && !frontier.empty(); ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t index : frontier) {
            succ.clear();
            adapter.expand(arena[index].cfg, succ);
            for (auto& [cfg, edge] : succ) {
                OutputSymbol obs = adapter.observe(cfg);
                auto matched = next_matched(obs, arena[index].matched);
                if (!matched)
                    continue;
                auto idx = try_place(std::move(cfg), *matched, index, arena[index].root, edge);
                if (!idx)
                    continue;
                if (adapter.is_final(arena[*idx].cfg) && *matched == word.size())
                    return witness(*idx);
                next.push_back(*idx);
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace obslang::detail

#endif
