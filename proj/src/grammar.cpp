#include "twograph/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

namespace twograph {

const Nonterminal* Grammar::find(const std::string& name) const {
  for (const auto& n : nonterminals)
    if (n.name == name) return &n;
  return nullptr;
}

const Nonterminal& Grammar::at(const std::string& name) const {
  const Nonterminal* n = find(name);
  if (!n) fail(Errc::DanglingId, "unknown nonterminal " + name);
  return *n;
}

namespace {

std::map<std::string, Sort> nt_sort_map(const Grammar& g) {
  std::map<std::string, Sort> m;
  for (const auto& n : g.nonterminals) m.emplace(n.name, n.sort);
  return m;
}

Sort rhs_sort(const Grammar& g, const Term& t) {
  struct Ctx {
    const Grammar* g;
  } ctx{&g};
  NtSortFn fn = [](const void* c, const std::string& name) -> const Sort& {
    return static_cast<const Ctx*>(c)->g->at(name).sort;
  };
  return sort_of_term(t, &ctx, fn);
}

// Flattens a pure parallel composition of nonterminal leaves; nullopt when
// the term is not of that shape. The single-leaf term counts.
std::optional<std::vector<std::string>> par_chain_leaves(const Term& t) {
  if (t.op == TermOp::Nonterminal) return std::vector<std::string>{t.nt};
  if (t.op != TermOp::Par) return std::nullopt;
  auto l = par_chain_leaves(t.children[0]);
  auto r = par_chain_leaves(t.children[1]);
  if (!l || !r) return std::nullopt;
  l->insert(l->end(), r->begin(), r->end());
  return l;
}

}  // namespace

std::vector<ClassifiedRule> classify_rules(const Grammar& g) {
  if (g.free_form) fail(Errc::NotStratified, "grammar is in free form");
  std::vector<ClassifiedRule> out;
  out.reserve(g.rules.size());
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const Rule& rule = g.rules[i];
    auto reject = [&](const std::string& why) {
      fail(Errc::NotStratified, "rule #" + std::to_string(i) + " (" + rule.lhs + " -> " +
                                    rule.rhs.str() + "): " + why);
    };
    const Nonterminal* lhs = g.find(rule.lhs);
    if (!lhs) reject("unknown left-hand side");
    Sort rs;
    try {
      rs = rhs_sort(g, rule.rhs);
    } catch (const Error& e) {
      reject(e.what());
    }
    if (rs != lhs->sort) reject("right-hand sort " + rs.str() + " differs from " + lhs->sort.str());

    ClassifiedRule cr;
    cr.rule = &rule;
    auto leaves = par_chain_leaves(rule.rhs);
    if (lhs->kind == NtKind::Iter) {
      if (rule.rhs.op == TermOp::Zero1) {
        cr.form = RuleForm::B;  // the empty parallel composition
        out.push_back(std::move(cr));
        continue;
      }
      if (leaves) {
        int self = 0;
        std::map<std::string, std::uint64_t> base_counts;
        for (const auto& name : *leaves) {
          const Nonterminal& n = g.at(name);
          if (name == rule.lhs)
            ++self;
          else if (n.kind == NtKind::Base)
            ++base_counts[name];
          else
            reject("iter nonterminal " + name + " on the right of an iteration shape");
        }
        if (self > 1) reject("left-hand side repeats on the right");
        if (self == 1) {
          if (base_counts.size() != 1) reject("iterating rule must repeat a single base nonterminal");
          cr.form = RuleForm::A;
          cr.y = base_counts.begin()->first;
          cr.q = base_counts.begin()->second;
          if (cr.q < 1) reject("iteration exponent must be positive");
        } else {
          cr.form = RuleForm::B;
          for (auto& [y, q] : base_counts) cr.factors.emplace_back(y, q);
        }
        out.push_back(std::move(cr));
        continue;
      }
      if (rule.rhs.is_ground()) {
        cr.form = RuleForm::D;
        out.push_back(std::move(cr));
        continue;
      }
      reject("iter nonterminal with a right-hand side that is neither an iteration shape nor ground");
    } else {
      if (leaves && leaves->size() >= 2)
        reject("base nonterminal on the left of an iteration shape");
      cr.form = RuleForm::C;
      out.push_back(std::move(cr));
    }
  }
  for (const auto& a : g.axioms) g.at(a);
  return out;
}

bool is_stratified(const Grammar& g, std::string* why) {
  try {
    classify_rules(g);
    return true;
  } catch (const Error& e) {
    if (why) *why = e.what();
    return false;
  }
}

// ---------------------------------------------------------------------------
// Footprints.

std::string template_marker(NtKind kind, const Sort& sort) {
  return std::string(kind == NtKind::Iter ? "X" : "Y") + sort.str();
}

namespace {

std::string skeleton(const Grammar& g, const Term& t) {
  if (t.op == TermOp::Nonterminal) {
    const Nonterminal& n = g.at(t.nt);
    return template_marker(n.kind, n.sort);
  }
  std::string s = term_op_name(t.op);
  if (t.op == TermOp::Edge) s += "[" + t.label + (t.reversed ? ",21]" : ",12]");
  if (t.op == TermOp::Extend) s += "[" + t.label + "]";
  if (t.children.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ",";
    s += skeleton(g, t.children[i]);
  }
  return s + ")";
}

std::string edge_template(NtKind kind, const std::string& label, bool reversed) {
  return template_marker(kind, kSort12) + "->edge[" + label + (reversed ? ",21]" : ",12]");
}

}  // namespace

std::uint64_t Footprint::bound_for(const Sort& s) const {
  auto it = iter_bound.find(s);
  return it == iter_bound.end() ? kInfinity : it->second;
}

Footprint footprint(const Grammar& g) {
  auto classified = classify_rules(g);
  Footprint fp;
  for (const auto& cr : classified) {
    const Nonterminal& lhs = g.at(cr.rule->lhs);
    switch (cr.form) {
      case RuleForm::A:
        break;
      case RuleForm::B: {
        std::uint64_t total = 0;
        for (auto& [y, q] : cr.factors) total += q;
        auto [it, inserted] = fp.iter_bound.emplace(lhs.sort, total);
        if (!inserted) it->second = std::min(it->second, total);
        break;
      }
      case RuleForm::C:
      case RuleForm::D:
        fp.templates.insert(template_marker(lhs.kind, lhs.sort) + "->" + skeleton(g, cr.rule->rhs));
        break;
    }
  }
  for (const auto& a : g.axioms) {
    const Nonterminal& n = g.at(a);
    fp.axiom_templates.insert(template_marker(n.kind, n.sort));
  }
  return fp;
}

bool footprint_leq(const Footprint& fp1, const Footprint& fp2) {
  for (const auto& [sort, m1] : fp1.iter_bound)
    if (m1 < fp2.bound_for(sort)) return false;
  for (const auto& t : fp1.templates)
    if (!fp2.templates.count(t)) return false;
  for (const auto& t : fp1.axiom_templates)
    if (!fp2.axiom_templates.count(t)) return false;
  return true;
}

namespace {

Footprint class_footprint_impl(const ClassId& cls, bool alternative) {
  Footprint fp;
  std::string x1 = template_marker(NtKind::Iter, kSort1);
  std::string y1 = template_marker(NtKind::Base, kSort1);
  std::string p = template_marker(NtKind::Iter, kSort12);
  std::string s = template_marker(NtKind::Base, kSort12);
  switch (cls.kind) {
    case ClassKind::Tree: {
      fp.iter_bound[kSort1] = 0;
      for (auto& [label, arity] : cls.alphabet) {
        std::string t = y1 + "->extend[" + label + "](";
        for (int i = 0; i + 1 < arity; ++i) t += (i ? "," : "") + x1;
        fp.templates.insert(t + ")");
      }
      fp.axiom_templates.insert(x1);
      break;
    }
    case ClassKind::Sp:
    case ClassKind::Dsp: {
      fp.iter_bound[kSort12] = alternative ? 1 : 2;
      fp.templates.insert(s + "->seq(" + p + "," + s + ")");
      fp.templates.insert(s + "->seq(" + p + "," + p + ")");
      for (auto& [label, arity] : cls.alphabet) {
        fp.templates.insert(edge_template(NtKind::Base, label, false));
        if (!alternative) fp.templates.insert(edge_template(NtKind::Iter, label, false));
        if (cls.kind == ClassKind::Dsp) {
          fp.templates.insert(edge_template(NtKind::Base, label, true));
          if (!alternative) fp.templates.insert(edge_template(NtKind::Iter, label, true));
        }
      }
      fp.axiom_templates.insert(p);
      fp.axiom_templates.insert(s);
      break;
    }
    case ClassKind::Tw2: {
      fp.iter_bound[kSort1] = 0;
      fp.iter_bound[kSort12] = alternative ? 1 : 2;
      fp.templates.insert(y1 + "->graft(" + p + "," + x1 + ")");
      fp.templates.insert(s + "->seq3(" + p + "," + s + "," + x1 + ")");
      fp.templates.insert(s + "->seq3(" + p + "," + p + "," + x1 + ")");
      for (auto& [label, arity] : cls.alphabet)
        for (bool rev : {false, true}) {
          fp.templates.insert(edge_template(NtKind::Base, label, rev));
          if (!alternative) fp.templates.insert(edge_template(NtKind::Iter, label, rev));
        }
      fp.axiom_templates.insert(x1);
      break;
    }
  }
  return fp;
}

}  // namespace

Footprint class_footprint(const ClassId& cls) { return class_footprint_impl(cls, false); }

Footprint class_footprint_alternative(const ClassId& cls) {
  if (cls.kind == ClassKind::Tree) fail(Errc::WrongClass, "trees have no alternative form");
  return class_footprint_impl(cls, true);
}

bool is_regular(const Grammar& g) {
  if (g.free_form) return false;
  std::string why;
  if (!is_stratified(g, &why)) return false;
  return footprint_leq(footprint(g), class_footprint(g.cls));
}

bool is_regular_or_alternative(const Grammar& g) {
  if (is_regular(g)) return true;
  if (g.free_form || g.cls.kind == ClassKind::Tree) return false;
  std::string why;
  if (!is_stratified(g, &why)) return false;
  return footprint_leq(footprint(g), class_footprint_alternative(g.cls));
}

bool is_aperiodic_grammar(const Grammar& g) {
  auto classified = classify_rules(g);
  std::map<std::pair<std::string, std::string>, std::vector<std::uint64_t>> exps;
  for (const auto& cr : classified)
    if (cr.form == RuleForm::A) exps[{cr.rule->lhs, cr.y}].push_back(cr.q);
  for (auto& [xy, qs] : exps) {
    if (qs.size() == 1 && qs[0] == 1) continue;
    if (qs.size() >= 2) {
      std::uint64_t d = 0;
      for (auto q : qs) d = std::gcd(d, q);
      if (d == 1) continue;
    }
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Multisets, constants, trunk, leads-to.

Multiset multiset_add(const Multiset& a, const Multiset& b) {
  Multiset out = a;
  for (auto& [y, n] : b) out[y] += n;
  return out;
}

std::string multiset_str(const Multiset& m) {
  std::string s = "[";
  bool first = true;
  for (auto& [y, n] : m) {
    if (!first) s += ",";
    first = false;
    s += y + ":" + std::to_string(n);
  }
  return s + "]";
}

std::uint64_t GrammarConstants::b_of(const std::string& y) const {
  auto it = b.find(y);
  return it == b.end() ? 0 : it->second;
}

std::uint64_t GrammarConstants::p_of(const std::string& y) const {
  auto it = p.find(y);
  return it == p.end() ? 1 : it->second;
}

std::uint64_t GrammarConstants::q_of(const std::string& y) const { return b_of(y) + p_of(y); }

std::uint64_t GrammarConstants::max_q() const {
  std::uint64_t m = 1;
  for (auto& [y, bb] : b) m = std::max(m, q_of(y));
  for (auto& [y, pp] : p) m = std::max(m, q_of(y));
  return m;
}

GrammarConstants grammar_constants(const Grammar& g) {
  auto classified = classify_rules(g);
  GrammarConstants c;
  for (const auto& n : g.nonterminals)
    if (n.kind == NtKind::Base) {
      c.b[n.name] = 0;
      c.p[n.name] = 1;
    }
  for (const auto& cr : classified) {
    if (cr.form == RuleForm::B)
      for (auto& [y, q] : cr.factors) c.b[y] = std::max(c.b[y], q);
    if (cr.form == RuleForm::A) c.p[cr.y] = std::lcm(c.p[cr.y], cr.q);
  }
  for (auto& [y, bb] : c.b) c.q[y] = bb + c.p[y];
  return c;
}

Multiset trunk(const Multiset& m, const GrammarConstants& c) {
  Multiset out;
  for (auto& [y, n] : m) {
    if (n == 0) continue;
    std::uint64_t q = c.q_of(y), p = c.p_of(y);
    out[y] = n < q ? n : q + (n - q) % p;
  }
  return out;
}

bool is_normalized(const Grammar& g) {
  auto classified = classify_rules(g);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& cr : classified)
    if (cr.form == RuleForm::A && !seen.insert({cr.rule->lhs, cr.y}).second) return false;
  return true;
}

bool leadsto(const std::string& x, const Multiset& m, const Grammar& g) {
  auto classified = classify_rules(g);
  if (g.at(x).kind != NtKind::Iter) fail(Errc::DanglingId, x + " is not an iter nonterminal");
  std::map<std::string, std::uint64_t> a_exp;  // per base nonterminal: the unique A-exponent
  for (const auto& cr : classified)
    if (cr.form == RuleForm::A && cr.rule->lhs == x) {
      if (a_exp.count(cr.y))
        fail(Errc::NotNormalized, "two iteration rules for (" + x + "," + cr.y + ")");
      a_exp[cr.y] = cr.q;
    }
  for (const auto& cr : classified) {
    if (cr.form != RuleForm::B || cr.rule->lhs != x) continue;
    Multiset s;
    for (auto& [y, q] : cr.factors) s[y] = q;
    bool ok = true;
    // Every base nonterminal matters, including those absent from the rule.
    std::set<std::string> ys;
    for (auto& [y, n] : m) ys.insert(y);
    for (auto& [y, n] : s) ys.insert(y);
    for (auto& [y, q] : a_exp) ys.insert(y);
    for (const auto& y : ys) {
      std::uint64_t have = m.count(y) ? m.at(y) : 0;
      std::uint64_t need = s.count(y) ? s.at(y) : 0;
      auto it = a_exp.find(y);
      if (it != a_exp.end()) {
        if (have < need || (have - need) % it->second != 0) {
          ok = false;
          break;
        }
      } else if (have != need) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Normalization by per-(X,Y) mode splitting.

namespace {

std::string fresh_name(const Grammar& g, std::string base) {
  while (g.find(base)) base += "'";
  return base;
}

// All ways of replacing occurrences of `target` leaves in t by variant names.
void expand_occurrences(const Term& t, const std::string& target,
                        const std::vector<std::string>& variants, std::vector<Term>& out) {
  if (t.op == TermOp::Nonterminal) {
    if (t.nt == target)
      for (const auto& v : variants) out.push_back(Term::nonterminal(v));
    else
      out.push_back(t);
    return;
  }
  std::vector<std::vector<Term>> child_choices(t.children.size());
  for (std::size_t i = 0; i < t.children.size(); ++i)
    expand_occurrences(t.children[i], target, variants, child_choices[i]);
  std::vector<std::size_t> idx(t.children.size(), 0);
  while (true) {
    Term copy = t;
    for (std::size_t i = 0; i < t.children.size(); ++i) copy.children[i] = child_choices[i][idx[i]];
    out.push_back(std::move(copy));
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < child_choices[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
}

Term par_power_term(const std::vector<std::pair<std::string, std::uint64_t>>& factors,
                    const Sort& sort) {
  std::vector<Term> parts;
  for (auto& [y, q] : factors)
    for (std::uint64_t i = 0; i < q; ++i) parts.push_back(Term::nonterminal(y));
  if (parts.empty()) {
    if (sort != kSort1)
      fail(Errc::SortMismatch, "empty parallel composition needs a zero constant of sort " + sort.str());
    return Term::zero1();
  }
  return Term::par_all(std::move(parts));
}

Term a_rule_term(const std::string& x, const std::string& y, std::uint64_t q) {
  std::vector<Term> parts = {Term::nonterminal(x)};
  for (std::uint64_t i = 0; i < q; ++i) parts.push_back(Term::nonterminal(y));
  return Term::par_all(std::move(parts));
}

// Exponent sums reachable from the A-rule exponents: the numerical semigroup
// generated by qs, split into the finite exceptional part below `threshold`
// and the arithmetic tail {threshold + k*d}.
struct PumpShape {
  std::uint64_t d = 0;          // gcd of the exponents
  std::uint64_t threshold = 0;  // from here on every multiple of d is reachable
  std::vector<std::uint64_t> exceptional;  // reachable sums in [0, threshold)
};

PumpShape pump_shape(std::vector<std::uint64_t> qs) {
  std::sort(qs.begin(), qs.end());
  PumpShape shape;
  for (auto q : qs) shape.d = std::gcd(shape.d, q);
  // Frobenius-style bound: every multiple d*x with x >= (q1/d-1)(qh/d-1) is a
  // nonnegative combination of the qi.
  std::uint64_t f = (qs.front() / shape.d - 1) * (qs.back() / shape.d - 1);
  shape.threshold = shape.d * f;
  if (shape.threshold > 0) {
    std::vector<char> reach(shape.threshold, 0);
    reach[0] = 1;
    for (std::uint64_t v = 0; v < shape.threshold; ++v) {
      if (!reach[v]) continue;
      for (auto q : qs)
        if (v + q < shape.threshold) reach[v + q] = 1;
    }
    for (std::uint64_t v = 0; v < shape.threshold; ++v)
      if (reach[v]) shape.exceptional.push_back(v);
  }
  return shape;
}

// Splits `x` on `y` in place: two variants, one carrying each exceptional
// exponent via widened base rules, one carrying the periodic tail.
void split_pair(Grammar& g, const std::string& x, const std::string& y) {
  auto classified = classify_rules(g);

  // Rewrite ground rules of x as base rules first so they participate in the
  // exponent widening below.
  std::vector<std::size_t> ground_rules;
  for (std::size_t i = 0; i < classified.size(); ++i)
    if (classified[i].form == RuleForm::D && classified[i].rule->lhs == x) ground_rules.push_back(i);
  for (std::size_t i : ground_rules) {
    std::string yt = fresh_name(g, x + "#g");
    g.nonterminals.push_back({yt, g.at(x).sort, NtKind::Base});
    Term ground = g.rules[i].rhs;
    g.rules[i].rhs = Term::nonterminal(yt);
    g.rules.push_back({yt, ground});
  }
  if (!ground_rules.empty()) classified = classify_rules(g);

  std::vector<std::uint64_t> qs;
  for (const auto& cr : classified)
    if (cr.form == RuleForm::A && cr.rule->lhs == x && cr.y == y) qs.push_back(cr.q);
  PumpShape shape = pump_shape(qs);

  const Nonterminal info = g.at(x);
  std::string xf = fresh_name(g, x + "@f");
  std::string xp = fresh_name(g, x + "@p");
  Grammar out;
  out.cls = g.cls;
  out.free_form = g.free_form;
  for (const auto& n : g.nonterminals) {
    if (n.name == x) {
      out.nonterminals.push_back({xf, info.sort, NtKind::Iter});
      out.nonterminals.push_back({xp, info.sort, NtKind::Iter});
    } else {
      out.nonterminals.push_back(n);
    }
  }
  std::vector<std::string> variants = {xf, xp};

  for (const auto& cr : classified) {
    const Rule& rule = *cr.rule;
    if (rule.lhs != x) {
      // Occurrences of x inside other rules fan out over the variants.
      std::vector<Term> rhss;
      expand_occurrences(rule.rhs, x, variants, rhss);
      for (auto& t : rhss) out.rules.push_back({rule.lhs, std::move(t)});
      continue;
    }
    switch (cr.form) {
      case RuleForm::A:
        if (cr.y == y) break;  // replaced below
        out.rules.push_back({xf, a_rule_term(xf, cr.y, cr.q)});
        out.rules.push_back({xp, a_rule_term(xp, cr.y, cr.q)});
        break;
      case RuleForm::B: {
        std::uint64_t base = 0;
        std::vector<std::pair<std::string, std::uint64_t>> others;
        for (auto& [yy, q] : cr.factors) {
          if (yy == y)
            base = q;
          else
            others.emplace_back(yy, q);
        }
        auto with_y = [&](std::uint64_t extra) {
          auto fs = others;
          if (base + extra > 0) fs.emplace_back(y, base + extra);
          std::sort(fs.begin(), fs.end());
          return par_power_term(fs, info.sort);
        };
        for (auto r : shape.exceptional) out.rules.push_back({xf, with_y(r)});
        out.rules.push_back({xp, with_y(shape.threshold)});
        break;
      }
      case RuleForm::C:
      case RuleForm::D:
        // C is impossible for an iter lhs; D was rewritten above.
        fail(Errc::NotStratified, "unexpected rule shape while normalizing");
    }
  }
  out.rules.push_back({xp, a_rule_term(xp, y, shape.d)});

  for (const auto& a : g.axioms) {
    if (a == x) {
      out.axioms.push_back(xf);
      out.axioms.push_back(xp);
    } else {
      out.axioms.push_back(a);
    }
  }
  g = std::move(out);
}

}  // namespace

Grammar normalize(const Grammar& g) {
  Grammar cur = g;
  while (true) {
    auto classified = classify_rules(cur);
    std::map<std::pair<std::string, std::string>, int> count;
    std::pair<std::string, std::string> bad;
    bool found = false;
    for (const auto& cr : classified)
      if (cr.form == RuleForm::A && ++count[{cr.rule->lhs, cr.y}] == 2 && !found) {
        bad = {cr.rule->lhs, cr.y};
        found = true;
      }
    if (!found) return cur;
    split_pair(cur, bad.first, bad.second);
  }
}

// ---------------------------------------------------------------------------
// Universal grammars and the alternative form.

Grammar universal_grammar(const ClassId& cls) {
  Grammar g;
  g.cls = cls;
  switch (cls.kind) {
    case ClassKind::Tree: {
      g.nonterminals = {{"X", kSort1, NtKind::Iter}, {"Y", kSort1, NtKind::Base}};
      for (auto& [label, arity] : cls.alphabet) {
        std::vector<Term> xs(static_cast<std::size_t>(arity - 1), Term::nonterminal("X"));
        g.rules.push_back({"Y", Term::extend(label, std::move(xs))});
      }
      g.rules.push_back({"X", Term::par(Term::nonterminal("X"), Term::nonterminal("Y"))});
      g.rules.push_back({"X", Term::zero1()});
      g.axioms = {"X"};
      break;
    }
    case ClassKind::Sp:
    case ClassKind::Dsp: {
      g.nonterminals = {{"P", kSort12, NtKind::Iter}, {"S", kSort12, NtKind::Base}};
      for (auto& [label, arity] : cls.alphabet)
        for (bool rev : {false, true}) {
          if (rev && cls.kind != ClassKind::Dsp) continue;
          g.rules.push_back({"S", Term::edge(label, rev)});
          g.rules.push_back({"P", Term::edge(label, rev)});
        }
      g.rules.push_back({"S", Term::seq(Term::nonterminal("P"), Term::nonterminal("S"))});
      g.rules.push_back({"S", Term::seq(Term::nonterminal("P"), Term::nonterminal("P"))});
      g.rules.push_back({"P", Term::par(Term::nonterminal("P"), Term::nonterminal("S"))});
      g.rules.push_back({"P", Term::par(Term::nonterminal("S"), Term::nonterminal("S"))});
      g.axioms = {"P", "S"};
      break;
    }
    case ClassKind::Tw2: {
      g.nonterminals = {{"X", kSort1, NtKind::Iter},
                        {"Y", kSort1, NtKind::Base},
                        {"P", kSort12, NtKind::Iter},
                        {"S", kSort12, NtKind::Base}};
      g.rules.push_back({"X", Term::par(Term::nonterminal("X"), Term::nonterminal("Y"))});
      g.rules.push_back({"X", Term::zero1()});
      g.rules.push_back({"Y", Term::graft(Term::nonterminal("P"), Term::nonterminal("X"))});
      g.rules.push_back(
          {"S", Term::seq3(Term::nonterminal("P"), Term::nonterminal("S"), Term::nonterminal("X"))});
      g.rules.push_back(
          {"S", Term::seq3(Term::nonterminal("P"), Term::nonterminal("P"), Term::nonterminal("X"))});
      for (auto& [label, arity] : cls.alphabet)
        for (bool rev : {false, true}) {
          g.rules.push_back({"S", Term::edge(label, rev)});
          g.rules.push_back({"P", Term::edge(label, rev)});
        }
      g.rules.push_back({"P", Term::par(Term::nonterminal("P"), Term::nonterminal("S"))});
      g.rules.push_back({"P", Term::par(Term::nonterminal("S"), Term::nonterminal("S"))});
      g.axioms = {"X"};
      break;
    }
  }
  return g;
}

Grammar alternative_form(const Grammar& g) {
  if (g.cls.kind == ClassKind::Tree)
    fail(Errc::WrongClass, "the tree class has no alternative form");
  auto classified = classify_rules(g);
  Grammar out = g;
  std::map<std::pair<std::string, bool>, std::string> fresh;  // (label, reversed) -> S_b
  std::vector<Rule> rules;
  for (const auto& cr : classified) {
    const Rule& rule = *cr.rule;
    if (cr.form == RuleForm::D && rule.rhs.op == TermOp::Edge) {
      auto key = std::make_pair(rule.rhs.label, rule.rhs.reversed);
      auto it = fresh.find(key);
      if (it == fresh.end()) {
        std::string name = fresh_name(out, "S_" + rule.rhs.label + (rule.rhs.reversed ? "21" : ""));
        out.nonterminals.push_back({name, kSort12, NtKind::Base});
        it = fresh.emplace(key, name).first;
        rules.push_back({name, rule.rhs});
      }
      rules.push_back({rule.lhs, Term::nonterminal(it->second)});
    } else {
      rules.push_back(rule);
    }
  }
  out.rules = std::move(rules);
  return out;
}

std::uint64_t grammar_unary_size(const Grammar& g) {
  std::uint64_t total = 0;
  std::function<std::uint64_t(const Term&)> size = [&](const Term& t) {
    std::uint64_t n = 1;
    for (const auto& c : t.children) n += size(c);
    return n;
  };
  for (const auto& r : g.rules) total += 1 + size(r.rhs);
  total += g.axioms.size();
  return total;
}

}  // namespace twograph
