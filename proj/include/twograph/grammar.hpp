#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twograph/classes.hpp"
#include "twograph/term.hpp"

namespace twograph {

enum class NtKind { Iter, Base };  // the X- and Y-partitions of a stratified grammar

struct Nonterminal {
  std::string name;
  Sort sort;
  NtKind kind = NtKind::Iter;
};

struct Rule {
  std::string lhs;
  Term rhs;
};

struct Grammar {
  ClassId cls;
  std::vector<Nonterminal> nonterminals;
  std::vector<Rule> rules;
  std::vector<std::string> axioms;
  // Filtered grammars have rules of arbitrary shape; stratified-only
  // operations reject them.
  bool free_form = false;

  const Nonterminal* find(const std::string& name) const;
  const Nonterminal& at(const std::string& name) const;
  bool is_iter(const std::string& name) const { return at(name).kind == NtKind::Iter; }
  bool is_base(const std::string& name) const { return at(name).kind == NtKind::Base; }
};

// ---------------------------------------------------------------------------
// Rule classification (forms A-E; axioms are kept apart in Grammar::axioms).

enum class RuleForm { A, B, C, D };

struct ClassifiedRule {
  RuleForm form = RuleForm::C;
  const Rule* rule = nullptr;
  // A: lhs -> lhs || y^q
  std::string y;
  std::uint64_t q = 0;
  // B: lhs -> y1^q1 || ... || yk^qk, grouped, pairwise distinct, k >= 0
  std::vector<std::pair<std::string, std::uint64_t>> factors;
};

// Tags every rule or throws NotStratified naming the first offender.
std::vector<ClassifiedRule> classify_rules(const Grammar& g);
bool is_stratified(const Grammar& g, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Footprints.

inline constexpr std::uint64_t kInfinity = UINT64_MAX;

struct Footprint {
  // Type-1 templates: per sort, the minimal total base-rule exponent.
  // Absent sort means no iter nonterminal of that sort: treated as infinity.
  std::map<Sort, std::uint64_t> iter_bound;
  // Type-2 templates: rule skeletons with nonterminals replaced by their
  // kind/sort markers, serialized textually for set comparison.
  std::set<std::string> templates;
  // Type-3 templates: axiom markers.
  std::set<std::string> axiom_templates;

  std::uint64_t bound_for(const Sort& s) const;
};

std::string template_marker(NtKind kind, const Sort& sort);

Footprint footprint(const Grammar& g);
bool footprint_leq(const Footprint& fp1, const Footprint& fp2);
Footprint class_footprint(const ClassId& cls);
// The relaxed footprint of grammars in alternative form (SP/DSP/TW2 only).
Footprint class_footprint_alternative(const ClassId& cls);

bool is_regular(const Grammar& g);
// Regular either directly or in alternative form; recognizers accept both.
bool is_regular_or_alternative(const Grammar& g);

bool is_aperiodic_grammar(const Grammar& g);

// ---------------------------------------------------------------------------
// Multisets over base nonterminals, grammar constants, trunk, leads-to.

using Multiset = std::map<std::string, std::uint64_t>;  // zero counts erased

Multiset multiset_add(const Multiset& a, const Multiset& b);
std::string multiset_str(const Multiset& m);

struct GrammarConstants {
  // Per base nonterminal Y: b = max B-rule exponent, p = max(1, lcm of
  // A-rule exponents over all X), q = b + p.
  std::map<std::string, std::uint64_t> b, p, q;

  std::uint64_t b_of(const std::string& y) const;
  std::uint64_t p_of(const std::string& y) const;
  std::uint64_t q_of(const std::string& y) const;
  std::uint64_t max_q() const;
};

GrammarConstants grammar_constants(const Grammar& g);

Multiset trunk(const Multiset& m, const GrammarConstants& c);

// X can derive exactly the multiset m of base nonterminals using A-rules
// followed by one B-rule. Requires a normalized grammar.
bool leadsto(const std::string& x, const Multiset& m, const Grammar& g);

bool is_normalized(const Grammar& g);

// Language-exact normalization by per-(X,Y) mode splitting. Preserves the
// language, keeps the footprint dominated, and turns every A-rule of an
// aperiodic grammar into one with exponent 1.
Grammar normalize(const Grammar& g);

// The universal grammars of the four classes.
Grammar universal_grammar(const ClassId& cls);

// Replaces each ground edge rule of an iter nonterminal P by P -> S_b,
// S_b -> edge with a fresh base nonterminal per constant. Tree class: WrongClass.
Grammar alternative_form(const Grammar& g);

// Reported size with unary exponent weights.
std::uint64_t grammar_unary_size(const Grammar& g);

}  // namespace twograph
