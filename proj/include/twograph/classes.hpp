#pragma once

#include <map>
#include <string>
#include <vector>

#include "twograph/graph.hpp"
#include "twograph/term.hpp"

namespace twograph {

enum class ClassKind { Tree, Sp, Dsp, Tw2 };

const char* class_kind_name(ClassKind k);
ClassKind class_kind_from_name(const std::string& name);

// A graph class: one of the four derived algebras, together with its edge
// alphabet. Tree labels have arity >= 2; the other classes are binary only.
struct ClassId {
  ClassKind kind = ClassKind::Tree;
  std::map<std::string, int> alphabet;  // label -> arity

  static ClassId tree(std::map<std::string, int> alphabet);
  static ClassId sp(std::vector<std::string> labels);
  static ClassId dsp(std::vector<std::string> labels);
  static ClassId tw2(std::vector<std::string> labels);

  int arity(const std::string& label) const;  // throws UnknownSymbol
  std::vector<Sort> sorts() const;            // {1} and/or {1,2}
  bool has_op(TermOp op) const;
  bool allows_reversed_edges() const { return kind == ClassKind::Dsp || kind == ClassKind::Tw2; }
};

// Applies one class operation to already-evaluated arguments, checking sorts.
Graph class_apply(const ClassId& cls, const Term& node, const std::vector<Graph>& args);

// Bottom-up term evaluation. The term must be ground and well-sorted.
Graph eval_term(const ClassId& cls, const Term& t);

// Well-sortedness check for ground or nonterminal-bearing terms; returns the
// sort or throws (SortMismatch/UnknownSymbol).
Sort check_term(const ClassId& cls, const Term& t,
                const std::map<std::string, Sort>* nt_sorts);

// Validates a graph as a member of the class domain representation:
// structural invariants plus per-class restrictions (sort, label arities,
// self-loop ban outside the tree class). Does not decide decomposability.
void validate_class_graph(const ClassId& cls, const Graph& g);

}  // namespace twograph
