#include "twograph/classes.hpp"

#include <algorithm>

namespace twograph {

const char* class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Tree: return "tree";
    case ClassKind::Sp: return "sp";
    case ClassKind::Dsp: return "dsp";
    case ClassKind::Tw2: return "tw2";
  }
  return "?";
}

ClassKind class_kind_from_name(const std::string& name) {
  if (name == "tree") return ClassKind::Tree;
  if (name == "sp") return ClassKind::Sp;
  if (name == "dsp") return ClassKind::Dsp;
  if (name == "tw2") return ClassKind::Tw2;
  fail(Errc::ParseError, "unknown class '" + name + "'");
}

ClassId ClassId::tree(std::map<std::string, int> alphabet) {
  if (alphabet.empty()) fail(Errc::UnknownSymbol, "empty alphabet");
  for (auto& [l, a] : alphabet)
    if (a < 2) fail(Errc::ArityMismatch, "tree label '" + l + "' needs arity >= 2");
  return ClassId{ClassKind::Tree, std::move(alphabet)};
}

namespace {
ClassId binary_class(ClassKind kind, std::vector<std::string> labels) {
  if (labels.empty()) fail(Errc::UnknownSymbol, "empty alphabet");
  std::map<std::string, int> alphabet;
  for (auto& l : labels) alphabet[l] = 2;
  return ClassId{kind, std::move(alphabet)};
}
}  // namespace

ClassId ClassId::sp(std::vector<std::string> labels) { return binary_class(ClassKind::Sp, std::move(labels)); }
ClassId ClassId::dsp(std::vector<std::string> labels) { return binary_class(ClassKind::Dsp, std::move(labels)); }
ClassId ClassId::tw2(std::vector<std::string> labels) { return binary_class(ClassKind::Tw2, std::move(labels)); }

int ClassId::arity(const std::string& label) const {
  auto it = alphabet.find(label);
  if (it == alphabet.end()) fail(Errc::UnknownSymbol, "label '" + label + "' not in alphabet");
  return it->second;
}

std::vector<Sort> ClassId::sorts() const {
  switch (kind) {
    case ClassKind::Tree: return {kSort1};
    case ClassKind::Sp:
    case ClassKind::Dsp: return {kSort12};
    case ClassKind::Tw2: return {kSort1, kSort12};
  }
  return {};
}

bool ClassId::has_op(TermOp op) const {
  switch (kind) {
    case ClassKind::Tree:
      return op == TermOp::Zero1 || op == TermOp::Par || op == TermOp::Extend;
    case ClassKind::Sp:
    case ClassKind::Dsp:
      return op == TermOp::Edge || op == TermOp::Par || op == TermOp::Seq;
    case ClassKind::Tw2:
      return op == TermOp::Zero1 || op == TermOp::Edge || op == TermOp::Par ||
             op == TermOp::Seq3 || op == TermOp::Graft;
  }
  return false;
}

namespace {

// Disjoint union fusing the listed vertex groups; each group collapses onto
// its first member. Arguments are laid out left to right.
struct Assembly {
  Graph out;
  std::vector<std::vector<int>> maps;  // per argument: old vertex id -> new id

  explicit Assembly(const std::vector<Graph>& args) {
    maps.reserve(args.size());
    for (const auto& g : args) {
      std::vector<int> m(g.vertex_count);
      for (int v = 0; v < g.vertex_count; ++v) m[v] = out.vertex_count + v;
      out.vertex_count += g.vertex_count;
      maps.push_back(std::move(m));
    }
    for (const auto& g : args)
      for (const auto& e : g.edges) out.edges.push_back(e);
    int base = 0, k = 0, edge_base = 0;
    for (const auto& g : args) {
      for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (auto& v : out.edges[edge_base + i].attach) v = maps[k][v];
      edge_base += static_cast<int>(g.edges.size());
      base += g.vertex_count;
      ++k;
    }
  }

  // Fuse new-id vertex b into new-id vertex a, compacting ids.
  void fuse(int a, int b) {
    if (a == b) return;
    for (auto& m : maps)
      for (auto& v : m) {
        if (v == b) v = a;
        if (v > b) --v;
      }
    for (auto& e : out.edges)
      for (auto& v : e.attach) {
        if (v == b) v = a;
        if (v > b) --v;
      }
    --out.vertex_count;
  }

  int of(int arg, int v) const { return maps[arg][v]; }
};

void need_sort(const Graph& g, const Sort& s, const char* what) {
  if (g.sort() != s)
    fail(Errc::SortMismatch,
         std::string(what) + ": expected sort " + s.str() + ", got " + g.sort().str());
}

}  // namespace

Graph class_apply(const ClassId& cls, const Term& node, const std::vector<Graph>& args) {
  if (!cls.has_op(node.op))
    fail(Errc::UnknownSymbol, std::string(term_op_name(node.op)) + " is not an operation of class " +
                                  class_kind_name(cls.kind));
  switch (node.op) {
    case TermOp::Zero1:
      return hr_empty(kSort1);
    case TermOp::Edge: {
      if (cls.arity(node.label) != 2) fail(Errc::ArityMismatch, "edge constants are binary");
      if (node.reversed && !cls.allows_reversed_edges())
        fail(Errc::UnknownSymbol, "reversed edge constant outside a disoriented class");
      return hr_edge(node.label, node.reversed ? std::vector<int>{2, 1} : std::vector<int>{1, 2});
    }
    case TermOp::Par: {
      if (args.size() != 2) fail(Errc::ArityMismatch, "parallel composition is binary");
      Sort s = args[0].sort();
      bool sort_ok = false;
      for (const Sort& cs : cls.sorts()) sort_ok = sort_ok || cs == s;
      if (!sort_ok) fail(Errc::SortMismatch, "parallel composition at sort " + s.str());
      return hr_parallel(args[0], args[1]);
    }
    case TermOp::Seq: {
      if (args.size() != 2) fail(Errc::ArityMismatch, "series composition is binary");
      need_sort(args[0], kSort12, "series composition");
      need_sort(args[1], kSort12, "series composition");
      Assembly a(args);
      a.fuse(a.of(0, args[0].source(2)), a.of(1, args[1].source(1)));
      a.out.sources = {{1, a.of(0, args[0].source(1))}, {2, a.of(1, args[1].source(2))}};
      return a.out;
    }
    case TermOp::Seq3: {
      if (args.size() != 3) fail(Errc::ArityMismatch, "ternary series composition takes 3 args");
      need_sort(args[0], kSort12, "ternary series composition");
      need_sort(args[1], kSort12, "ternary series composition");
      need_sort(args[2], kSort1, "ternary series composition");
      Assembly a(args);
      a.fuse(a.of(0, args[0].source(2)), a.of(1, args[1].source(1)));
      a.fuse(a.of(0, args[0].source(2)), a.of(2, args[2].source(1)));
      a.out.sources = {{1, a.of(0, args[0].source(1))}, {2, a.of(1, args[1].source(2))}};
      return a.out;
    }
    case TermOp::Graft: {
      if (args.size() != 2) fail(Errc::ArityMismatch, "graft is binary");
      need_sort(args[0], kSort12, "graft");
      need_sort(args[1], kSort1, "graft");
      Assembly a(args);
      a.fuse(a.of(0, args[0].source(2)), a.of(1, args[1].source(1)));
      a.out.sources = {{1, a.of(0, args[0].source(1))}};
      return a.out;
    }
    case TermOp::Extend: {
      int ar = cls.arity(node.label);
      if (static_cast<int>(args.size()) != ar - 1)
        fail(Errc::ArityMismatch, "extend with label '" + node.label + "' takes " +
                                      std::to_string(ar - 1) + " arguments");
      for (const auto& g : args) need_sort(g, kSort1, "extend");
      Assembly a(args);
      // New root first; shift all ids up by one.
      Graph out;
      out.vertex_count = a.out.vertex_count + 1;
      out.edges = a.out.edges;
      for (auto& e : out.edges)
        for (auto& v : e.attach) ++v;
      GraphEdge e{node.label, {0}};
      for (std::size_t i = 0; i < args.size(); ++i)
        e.attach.push_back(a.of(static_cast<int>(i), args[i].source(1)) + 1);
      out.edges.push_back(std::move(e));
      out.sources = {{1, 0}};
      return out;
    }
    case TermOp::Nonterminal:
      break;
  }
  fail(Errc::UnknownSymbol, "cannot evaluate a nonterminal");
}

Graph eval_term(const ClassId& cls, const Term& t) {
  std::vector<Graph> args;
  args.reserve(t.children.size());
  for (const auto& c : t.children) args.push_back(eval_term(cls, c));
  return class_apply(cls, t, args);
}

Sort check_term(const ClassId& cls, const Term& t, const std::map<std::string, Sort>* nt_sorts) {
  if (t.op == TermOp::Nonterminal) {
    if (!nt_sorts) fail(Errc::SortMismatch, "nonterminal " + t.nt + " in ground context");
    auto it = nt_sorts->find(t.nt);
    if (it == nt_sorts->end()) fail(Errc::DanglingId, "unknown nonterminal " + t.nt);
    return it->second;
  }
  if (!cls.has_op(t.op))
    fail(Errc::UnknownSymbol, std::string(term_op_name(t.op)) + " is not an operation of class " +
                                  class_kind_name(cls.kind));
  if (t.op == TermOp::Edge) {
    cls.arity(t.label);
    if (t.reversed && !cls.allows_reversed_edges())
      fail(Errc::UnknownSymbol, "reversed edge constant outside a disoriented class");
  }
  if (t.op == TermOp::Extend && static_cast<int>(t.children.size()) != cls.arity(t.label) - 1)
    fail(Errc::ArityMismatch, "extend with label '" + t.label + "'");
  struct Ctx {
    const ClassId* cls;
    const std::map<std::string, Sort>* nts;
  } ctx{&cls, nt_sorts};
  NtSortFn fn = [](const void* c, const std::string& name) -> const Sort& {
    auto* cc = static_cast<const Ctx*>(c);
    auto it = cc->nts->find(name);
    if (it == cc->nts->end()) fail(Errc::DanglingId, "unknown nonterminal " + name);
    return it->second;
  };
  return sort_of_term(t, &ctx, nt_sorts ? fn : nullptr);
}

void validate_class_graph(const ClassId& cls, const Graph& g) {
  validate_graph(g);
  for (const auto& e : g.edges) {
    auto it = cls.alphabet.find(e.label);
    if (it == cls.alphabet.end())
      fail(Errc::UnknownSymbol, "edge label '" + e.label + "' not in the class alphabet");
    if (static_cast<int>(e.attach.size()) != it->second)
      fail(Errc::ArityMismatch, "edge label '" + e.label + "' used with the wrong arity");
  }
  switch (cls.kind) {
    case ClassKind::Tree:
      if (g.sort() != kSort1) fail(Errc::SortMismatch, "tree graphs have sort {1}");
      break;
    case ClassKind::Sp:
    case ClassKind::Dsp:
      if (g.sort() != kSort12) fail(Errc::SortMismatch, "series-parallel graphs have sort {1,2}");
      if (g.has_self_loop()) fail(Errc::NotSeriesParallel, "self-loops are not allowed");
      break;
    case ClassKind::Tw2:
      if (g.sort() != kSort1 && g.sort() != kSort12)
        fail(Errc::SortMismatch, "tree-width 2 graphs have sort {1} or {1,2}");
      if (g.has_self_loop()) fail(Errc::NotTreewidth2, "self-loops are not allowed");
      break;
  }
}

}  // namespace twograph
