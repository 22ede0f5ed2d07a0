#pragma once

#include <random>
#include <vector>

#include "twograph/classes.hpp"
#include "twograph/graph.hpp"
#include "twograph/grammar.hpp"
#include "twograph/recognizer.hpp"

namespace twograph {

// Independent desk-scale oracles. Everything here is deliberately brute
// force and kept apart from the implementation paths it cross-checks.

// All rooted unordered trees with at most max_edges edges over the given
// tree alphabet, up to isomorphism. Built by multiset-of-subtree recursion,
// not by grammar derivation.
std::vector<Graph> all_trees(const ClassId& cls, int max_edges);

// All series-parallel (or disoriented SP) graphs with <= max_edges edges,
// generated by closing the constants under the class operations.
std::vector<Graph> all_sp_graphs(const ClassId& cls, int max_edges);

// All connected sort-{1} multigraphs over binary labels with <= max_edges
// edges and no self-loops, generated by edge additions.
std::vector<Graph> all_connected_graphs(const ClassId& cls, int max_edges);

// Tree-width <= 2 by elimination-order search over vertex subsets.
bool treewidth_le2_bruteforce(const Graph& g);

// Brute-force profile straight from the view definitions, using bounded
// derivation enumeration; independent of Recognizer::eval.
Profile bruteforce_profile(const Recognizer& r, const Graph& g);

// Brute-force leads-to: breadth-first pump search over counts bounded
// pointwise by the target multiset.
bool leadsto_bruteforce(const std::string& x, const Multiset& m, const Grammar& g);

// Random well-sorted ground terms for property tests.
Term random_term(const ClassId& cls, const Sort& sort, int max_edges, std::mt19937_64& rng);

// Mutates one random parallel node (swap or rebracket) or applies one
// series-rebracketing axiom at a random admissible position; returns false
// if the term admits no such rewrite.
bool random_ac_rewrite(Term& t, std::mt19937_64& rng);

}  // namespace twograph
