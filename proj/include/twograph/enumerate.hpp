#pragma once

#include <map>
#include <string>
#include <vector>

#include "twograph/grammar.hpp"

namespace twograph {

inline constexpr int kDefaultEnumerateLimit = 8;

// Bounded-enumeration oracle: exactly the graphs of L(g) with at most
// max_edges edges, deduplicated up to isomorphism. Exhaustive derivation
// search with per-nonterminal minimal-yield pruning. Throws BoundExceeded
// when max_edges exceeds `limit`.
std::vector<Graph> enumerate_language(const Grammar& g, int max_edges,
                                      int limit = kDefaultEnumerateLimit);

// Per-nonterminal variant: every graph derivable from `start`.
std::vector<Graph> enumerate_from(const Grammar& g, const std::string& start, int max_edges,
                                  int limit = kDefaultEnumerateLimit);

// Minimal number of edges of a graph derivable from each nonterminal
// (kInfinity when unproductive).
std::map<std::string, std::uint64_t> minimal_yield(const Grammar& g);

// Set-level helpers for oracle comparisons.
bool graph_in(const std::vector<Graph>& set, const Graph& g);
bool same_graph_set(const std::vector<Graph>& a, const std::vector<Graph>& b);
bool subset_of(const std::vector<Graph>& a, const std::vector<Graph>& b);

}  // namespace twograph
