#pragma once

#include <string>
#include <vector>

#include "twograph/graph.hpp"

namespace twograph {

enum class TermOp {
  Zero1,        // 0_{1}
  Edge,         // binary edge constant; reversed picks the 2,1 orientation
  Par,          // parallel composition at the sort of the children
  Seq,          // series composition of sort-{1,2} graphs
  Seq3,         // ternary series composition with a sort-{1} graph at the join
  Graft,        // joins the 2-source of x with the root of y, result sort {1}
  Extend,       // joins the roots of the children to positions 2..n of a fresh edge
  Nonterminal,  // leaf naming a grammar nonterminal; not evaluable
};

const char* term_op_name(TermOp op);

struct Term {
  TermOp op = TermOp::Zero1;
  std::string label;     // Edge / Extend
  bool reversed = false;  // Edge orientation: false = 1,2, true = 2,1
  std::string nt;        // Nonterminal
  std::vector<Term> children;

  static Term zero1();
  static Term edge(const std::string& label, bool reversed = false);
  static Term par(Term a, Term b);
  static Term par_all(std::vector<Term> parts);  // left-nested fold; requires >= 1 part
  static Term seq(Term a, Term b);
  static Term seq3(Term a, Term b, Term c);
  static Term graft(Term a, Term b);
  static Term extend(const std::string& label, std::vector<Term> children);
  static Term nonterminal(const std::string& name);

  bool operator==(const Term& o) const;
  bool operator<(const Term& o) const;

  bool is_ground() const;
  int constant_edge_count() const;  // edges contributed by Edge/Extend nodes
  void collect_nonterminals(std::vector<std::string>& out) const;
  std::string str() const;
};

// Sort of a term, independent of any class signature. Nonterminal sorts are
// resolved through the callback (may be null when the term is ground).
using NtSortFn = const Sort& (*)(const void* ctx, const std::string& name);
Sort sort_of_term(const Term& t);
Sort sort_of_term(const Term& t, const void* ctx, NtSortFn nt_sort);

// AC-canonical copy: children of nested Par chains are flattened, sorted and
// re-nested left-to-right. Used to compare decompositions up to AC.
Term ac_normal_form(const Term& t);

}  // namespace twograph
