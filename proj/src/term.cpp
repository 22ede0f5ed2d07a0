#include "twograph/term.hpp"

#include <algorithm>
#include <tuple>

namespace twograph {

const char* term_op_name(TermOp op) {
  switch (op) {
    case TermOp::Zero1: return "zero1";
    case TermOp::Edge: return "edge";
    case TermOp::Par: return "par";
    case TermOp::Seq: return "seq";
    case TermOp::Seq3: return "seq3";
    case TermOp::Graft: return "graft";
    case TermOp::Extend: return "extend";
    case TermOp::Nonterminal: return "nt";
  }
  return "?";
}

Term Term::zero1() { return Term{TermOp::Zero1, "", false, "", {}}; }

Term Term::edge(const std::string& label, bool reversed) {
  return Term{TermOp::Edge, label, reversed, "", {}};
}

Term Term::par(Term a, Term b) {
  Term t{TermOp::Par, "", false, "", {}};
  t.children.push_back(std::move(a));
  t.children.push_back(std::move(b));
  return t;
}

Term Term::par_all(std::vector<Term> parts) {
  if (parts.empty()) fail(Errc::SortMismatch, "empty parallel composition has no term");
  Term acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = par(std::move(acc), std::move(parts[i]));
  return acc;
}

Term Term::seq(Term a, Term b) {
  Term t{TermOp::Seq, "", false, "", {}};
  t.children.push_back(std::move(a));
  t.children.push_back(std::move(b));
  return t;
}

Term Term::seq3(Term a, Term b, Term c) {
  Term t{TermOp::Seq3, "", false, "", {}};
  t.children.push_back(std::move(a));
  t.children.push_back(std::move(b));
  t.children.push_back(std::move(c));
  return t;
}

Term Term::graft(Term a, Term b) {
  Term t{TermOp::Graft, "", false, "", {}};
  t.children.push_back(std::move(a));
  t.children.push_back(std::move(b));
  return t;
}

Term Term::extend(const std::string& label, std::vector<Term> children) {
  Term t{TermOp::Extend, label, false, "", std::move(children)};
  return t;
}

Term Term::nonterminal(const std::string& name) {
  return Term{TermOp::Nonterminal, "", false, name, {}};
}

bool Term::operator==(const Term& o) const {
  return op == o.op && label == o.label && reversed == o.reversed && nt == o.nt &&
         children == o.children;
}

bool Term::operator<(const Term& o) const {
  if (op != o.op) return op < o.op;
  if (label != o.label) return label < o.label;
  if (reversed != o.reversed) return reversed < o.reversed;
  if (nt != o.nt) return nt < o.nt;
  return children < o.children;
}

bool Term::is_ground() const {
  if (op == TermOp::Nonterminal) return false;
  for (const auto& c : children)
    if (!c.is_ground()) return false;
  return true;
}

int Term::constant_edge_count() const {
  int n = (op == TermOp::Edge || op == TermOp::Extend) ? 1 : 0;
  for (const auto& c : children) n += c.constant_edge_count();
  return n;
}

void Term::collect_nonterminals(std::vector<std::string>& out) const {
  if (op == TermOp::Nonterminal) out.push_back(nt);
  for (const auto& c : children) c.collect_nonterminals(out);
}

std::string Term::str() const {
  switch (op) {
    case TermOp::Zero1: return "0";
    case TermOp::Edge: return label + (reversed ? "(2,1)" : "(1,2)");
    case TermOp::Nonterminal: return nt;
    default: break;
  }
  std::string s = op == TermOp::Extend ? "ext_" + label : term_op_name(op);
  s += "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) s += ",";
    s += children[i].str();
  }
  return s + ")";
}

Sort sort_of_term(const Term& t) { return sort_of_term(t, nullptr, nullptr); }

Sort sort_of_term(const Term& t, const void* ctx, NtSortFn nt_sort) {
  auto child = [&](std::size_t i) { return sort_of_term(t.children[i], ctx, nt_sort); };
  auto need = [&](bool ok, const char* what) {
    if (!ok) fail(Errc::SortMismatch, std::string(what) + " in " + t.str());
  };
  switch (t.op) {
    case TermOp::Zero1:
      need(t.children.empty(), "constant takes no arguments");
      return kSort1;
    case TermOp::Edge:
      need(t.children.empty(), "constant takes no arguments");
      return kSort12;
    case TermOp::Par: {
      need(t.children.size() == 2, "parallel composition is binary");
      Sort a = child(0), b = child(1);
      need(a == b, "parallel composition needs equal sorts");
      return a;
    }
    case TermOp::Seq:
      need(t.children.size() == 2, "series composition is binary");
      need(child(0) == kSort12 && child(1) == kSort12, "series composition needs sort {1,2}");
      return kSort12;
    case TermOp::Seq3:
      need(t.children.size() == 3, "ternary series composition takes three arguments");
      need(child(0) == kSort12 && child(1) == kSort12 && child(2) == kSort1,
           "ternary series composition needs sorts ({1,2},{1,2},{1})");
      return kSort12;
    case TermOp::Graft:
      need(t.children.size() == 2, "graft is binary");
      need(child(0) == kSort12 && child(1) == kSort1, "graft needs sorts ({1,2},{1})");
      return kSort1;
    case TermOp::Extend:
      for (std::size_t i = 0; i < t.children.size(); ++i)
        need(child(i) == kSort1, "extend needs sort-{1} arguments");
      return kSort1;
    case TermOp::Nonterminal:
      if (!nt_sort) fail(Errc::SortMismatch, "nonterminal " + t.nt + " in a ground context");
      return nt_sort(ctx, t.nt);
  }
  fail(Errc::UnknownSymbol, "unhandled term operation");
}

namespace {

void flatten_par(const Term& t, std::vector<Term>& out) {
  if (t.op == TermOp::Par) {
    flatten_par(t.children[0], out);
    flatten_par(t.children[1], out);
  } else {
    out.push_back(ac_normal_form(t));
  }
}

}  // namespace

Term ac_normal_form(const Term& t) {
  if (t.op == TermOp::Par) {
    std::vector<Term> parts;
    flatten_par(t, parts);
    std::sort(parts.begin(), parts.end());
    return Term::par_all(std::move(parts));
  }
  Term out = t;
  for (auto& c : out.children) c = ac_normal_form(c);
  return out;
}

}  // namespace twograph
