#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twograph/decompose.hpp"
#include "twograph/grammar.hpp"
#include "twograph/recognizer.hpp"

namespace twograph {

using AcceptFn = std::function<bool(const Profile&)>;

struct FilterStats {
  std::size_t reachable = 0;
  std::size_t filtered_rules = 0;
};

// The filtered grammar: nonterminals X^b for reachable pairs only, rules
// instantiated along the recognizer's reachability fixpoint, axioms at
// accepted elements. Output is in free form.
Grammar filter_grammar(const Grammar& g, const Recognizer& r, const AcceptFn& accept,
                       FilterStats* stats = nullptr);

// True iff no axiom nonterminal is productive.
bool is_empty(const Grammar& g);

struct MemberResult {
  bool member = false;
  std::string diagnostic;  // set when the graph is outside the class domain
};

MemberResult member(const Graph& g, const Grammar& grammar,
                    std::size_t profile_budget = kDefaultProfileBudget);
MemberResult member(const Graph& g, const Recognizer& r);

struct InclusionVerdict {
  bool holds = false;
  std::optional<Graph> witness;  // minimal-edge member of L(lhs) \ L(rhs)
  FilterStats stats;
  std::int64_t millis = 0;
};

// Decides L(lhs) subseteq L(rhs) for a regular rhs; lhs may be stratified or
// free-form. A failed inclusion carries a minimal counterexample.
InclusionVerdict includes(const Grammar& lhs, const Grammar& rhs,
                          std::size_t profile_budget = kDefaultProfileBudget);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<Graph> witness;
  bool witness_in_lhs = false;  // witness lies in L(lhs) \ L(rhs) when true
};

EquivalenceVerdict equivalent(const Grammar& a, const Grammar& b,
                              std::size_t profile_budget = kDefaultProfileBudget);

// The stratified refinement of Thm-refinement shape: variants X_a with
// pumping exponents re-expressed over the recognizer's universe. The
// construction is exponential; `rule_budget` caps emitted rules.
inline constexpr std::size_t kDefaultRefineRuleBudget = 2000000;
Grammar refine(const Grammar& g, const Recognizer& r, const AcceptFn& accept,
               std::size_t rule_budget = kDefaultRefineRuleBudget);

// Shortest-derivation witness extraction: a minimal-edge graph of L(g), if any.
std::optional<Graph> shortest_member(const Grammar& g);

}  // namespace twograph
