#include "twograph/enumerate.hpp"

#include <algorithm>
#include <cassert>

namespace twograph {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

struct RuleInfo {
  const Rule* rule;
  std::vector<std::string> leaves;  // nonterminal leaves in pre-order
  int const_edges = 0;
};

// Substitutes graphs for the nonterminal leaves in pre-order and evaluates.
Graph eval_with(const ClassId& cls, const Term& t, const std::vector<Graph>& subst,
                std::size_t& next) {
  if (t.op == TermOp::Nonterminal) return subst[next++];
  std::vector<Graph> args;
  args.reserve(t.children.size());
  for (const auto& c : t.children) args.push_back(eval_with(cls, c, subst, next));
  return class_apply(cls, t, args);
}

struct Enumerator {
  const Grammar& g;
  int max_edges;
  std::vector<RuleInfo> rules;
  std::map<std::string, std::uint64_t> min_yield;
  std::map<std::string, GraphSet> sets;
  std::map<std::string, std::vector<int>> rounds;  // per graph: round of discovery

  explicit Enumerator(const Grammar& grammar, int bound) : g(grammar), max_edges(bound) {
    for (const auto& r : g.rules) {
      RuleInfo info{&r, {}, r.rhs.constant_edge_count()};
      r.rhs.collect_nonterminals(info.leaves);
      rules.push_back(std::move(info));
    }
    min_yield = minimal_yield(g);
    for (const auto& n : g.nonterminals) {
      sets.emplace(n.name, GraphSet(max_edges + 2));
      rounds.emplace(n.name, std::vector<int>{});
    }
  }

  void run() {
    int round = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& ri : rules) {
        std::vector<Graph> chosen(ri.leaves.size());
        grew |= instantiate(ri, 0, ri.const_edges, false, chosen, round);
      }
      ++round;
    }
  }

  // Recursively assigns graphs to leaves. Semi-naive: at least one chosen
  // graph must come from the previous round (or the rule is leafless and
  // only fires in round 0).
  bool instantiate(const RuleInfo& ri, std::size_t i, int edges_so_far, bool used_new,
                   std::vector<Graph>& chosen, int round) {
    if (i == ri.leaves.size()) {
      if (!ri.leaves.empty() && round > 0 && !used_new) return false;
      if (ri.leaves.empty() && round != 0) return false;
      std::size_t next = 0;
      Graph value = eval_with(g.cls, ri.rule->rhs, chosen, next);
      if (value.edge_count() > max_edges) return false;
      if (!sets.at(ri.rule->lhs).insert(value)) return false;
      rounds.at(ri.rule->lhs).push_back(round);
      return true;
    }
    // Remaining minimum over the leaves still to fill.
    std::uint64_t rest = 0;
    for (std::size_t j = i + 1; j < ri.leaves.size(); ++j)
      rest = sat_add(rest, min_yield.at(ri.leaves[j]));
    if (rest == kInfinity) return false;

    const auto& pool = sets.at(ri.leaves[i]).graphs();
    const auto& pool_rounds = rounds.at(ri.leaves[i]);
    bool grew = false;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      int e = pool[k].edge_count();
      if (edges_so_far + e + static_cast<int>(rest) > max_edges) continue;
      bool is_new = pool_rounds[k] == round - 1;
      // Last chance to satisfy the semi-naive requirement.
      bool last = i + 1 == ri.leaves.size();
      if (round > 0 && last && !used_new && !is_new) continue;
      chosen[i] = pool[k];
      grew |= instantiate(ri, i + 1, edges_so_far + e, used_new || is_new, chosen, round);
    }
    return grew;
  }
};

}  // namespace

std::map<std::string, std::uint64_t> minimal_yield(const Grammar& g) {
  std::map<std::string, std::uint64_t> yield;
  for (const auto& n : g.nonterminals) yield[n.name] = kInfinity;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules) {
      std::vector<std::string> leaves;
      r.rhs.collect_nonterminals(leaves);
      std::uint64_t total = r.rhs.constant_edge_count();
      for (const auto& l : leaves) total = sat_add(total, yield.at(l));
      if (total < yield.at(r.lhs)) {
        yield[r.lhs] = total;
        changed = true;
      }
    }
  }
  return yield;
}

namespace {

Enumerator make_enumerator(const Grammar& g, int max_edges, int limit) {
  if (max_edges > limit)
    fail(Errc::BoundExceeded, "enumeration bound " + std::to_string(max_edges) +
                                  " exceeds the oracle limit " + std::to_string(limit));
  Enumerator e(g, max_edges);
  e.run();
  return e;
}

}  // namespace

std::vector<Graph> enumerate_from(const Grammar& g, const std::string& start, int max_edges,
                                  int limit) {
  g.at(start);
  Enumerator e = make_enumerator(g, max_edges, limit);
  return e.sets.at(start).graphs();
}

std::vector<Graph> enumerate_language(const Grammar& g, int max_edges, int limit) {
  Enumerator e = make_enumerator(g, max_edges, limit);
  GraphSet lang(max_edges + 2);
  for (const auto& a : g.axioms)
    for (const auto& gr : e.sets.at(a).graphs()) lang.insert(gr);
  return lang.graphs();
}

bool graph_in(const std::vector<Graph>& set, const Graph& g) {
  for (const auto& h : set) {
    if (h.vertex_count != g.vertex_count || h.edges.size() != g.edges.size()) continue;
    if (isomorphic(h, g, std::max(kDefaultIsoVertexLimit, g.vertex_count + 1))) return true;
  }
  return false;
}

bool subset_of(const std::vector<Graph>& a, const std::vector<Graph>& b) {
  for (const auto& g : a)
    if (!graph_in(b, g)) return false;
  return true;
}

bool same_graph_set(const std::vector<Graph>& a, const std::vector<Graph>& b) {
  return a.size() == b.size() && subset_of(a, b) && subset_of(b, a);
}

}  // namespace twograph
