#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twograph/grammar.hpp"

namespace twograph {

// A view of an S-graph: (s, q) for the series classes, (s, q, x) for the
// two-sorted class. Empty q encodes the closed view (s, bot); x is empty for
// closed views and for the single-sorted series class.
struct STuple {
  std::string s, q, x;

  bool closed() const { return q.empty(); }
  bool operator==(const STuple& o) const;
  bool operator<(const STuple& o) const;
  std::string str() const;
};

enum class ProfileVariant { Multisets, Tuples };

// A recognizer-algebra element: the set of reduced views of some graph.
// Canonically sorted; empty profiles normalize to the Multisets variant.
struct Profile {
  Sort sort;
  ProfileVariant variant = ProfileVariant::Multisets;
  std::vector<Multiset> multisets;
  std::vector<STuple> tuples;

  static Profile multiset_profile(Sort sort, std::vector<Multiset> ms);
  static Profile tuple_profile(Sort sort, std::vector<STuple> ts);

  bool empty() const { return multisets.empty() && tuples.empty(); }
  bool operator==(const Profile& o) const;
  bool operator<(const Profile& o) const;
  std::string str() const;
};

struct OpSym {
  TermOp op = TermOp::Par;
  std::string label;
  bool reversed = false;
};

struct ReachableSets {
  std::map<Sort, std::vector<Profile>> per_sort;
  std::size_t total = 0;
  bool complete = false;  // false when the budget aborted the fixpoint

  bool contains(const Profile& p) const;
};

inline constexpr std::size_t kDefaultProfileBudget = 200000;

// The grammar-derived finite algebra together with its accepting predicate.
// Construction normalizes the grammar and, outside the tree class, moves it
// to alternative form. The reachable set is computed lazily and memoized.
class Recognizer {
 public:
  static Recognizer build(const Grammar& g,
                          std::size_t profile_budget = kDefaultProfileBudget);

  const ClassId& cls() const { return cls_; }
  const Grammar& grammar() const { return g_; }
  const GrammarConstants& constants() const { return consts_; }
  std::size_t budget() const { return budget_; }

  // The least set closed under the inference rules of the class figure for
  // one operation, applied to the given argument profiles.
  Profile apply(const OpSym& op, const std::vector<Profile>& args) const;

  // Bottom-up profile of a ground term; equals the homomorphic image of the
  // term's graph.
  Profile eval(const Term& t) const;

  bool accepting(const Profile& a) const;

  // Kleene fixpoint over apply from the constants; aborts at the budget.
  const ReachableSets& reachable() const;

  // Cached leads-to over the normalized grammar.
  bool leads(const std::string& x, const Multiset& m) const;

  Multiset reduce(const Multiset& m) const { return trunk(m, consts_); }

 private:
  ClassId cls_;
  Grammar g_;
  GrammarConstants consts_;
  std::size_t budget_ = kDefaultProfileBudget;

  mutable std::map<std::pair<std::string, Multiset>, bool> leads_cache_;
  mutable std::optional<ReachableSets> reachable_;

  Profile apply_par(const std::vector<Profile>& args) const;
  Profile apply_seq(const std::vector<Profile>& args) const;
  Profile apply_seq3(const std::vector<Profile>& args) const;
  Profile apply_graft(const std::vector<Profile>& args) const;
  Profile apply_extend(const OpSym& op, const std::vector<Profile>& args) const;
  Profile apply_edge(const OpSym& op) const;
};

// Checks that every reachable element a satisfies a# || a = a#, where a# is
// the idempotent power of a under the sort's parallel composition.
bool is_aperiodic_algebra(const Recognizer& r);

// Componentwise product with a boolean connective over the accepting
// predicates; complement(r) pairs r with the trivial recognizer of its class
// and negates acceptance.
class ProductRecognizer {
 public:
  using Combine = std::function<bool(bool, bool)>;
  using Elem = std::pair<Profile, Profile>;

  ProductRecognizer(Recognizer r1, Recognizer r2, Combine combine);

  Elem apply(const OpSym& op, const std::vector<Elem>& args) const;
  Elem eval(const Term& t) const;
  bool accepting(const Elem& e) const;

  const Recognizer& left() const { return r1_; }
  const Recognizer& right() const { return r2_; }

 private:
  Recognizer r1_, r2_;
  Combine combine_;
};

ProductRecognizer product(Recognizer r1, Recognizer r2, ProductRecognizer::Combine combine);
ProductRecognizer complement(Recognizer r);

}  // namespace twograph
