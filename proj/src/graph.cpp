#include "twograph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace twograph {

Sort::Sort(std::vector<int> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (int l : labels_)
    if (l <= 0) fail(Errc::SortMismatch, "source labels must be positive, got " + std::to_string(l));
}

Sort Sort::of(std::initializer_list<int> labels) { return Sort(std::vector<int>(labels)); }

bool Sort::contains(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

Sort Sort::intersect(const Sort& other) const {
  std::vector<int> out;
  std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                        other.labels_.end(), std::back_inserter(out));
  return Sort(std::move(out));
}

Sort Sort::unite(const Sort& other) const {
  std::vector<int> out;
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(out));
  return Sort(std::move(out));
}

std::string Sort::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels_[i]);
  }
  return s + "}";
}

Sort Graph::sort() const {
  std::vector<int> labels;
  labels.reserve(sources.size());
  for (auto& [l, v] : sources) labels.push_back(l);
  return Sort(std::move(labels));
}

int Graph::source(int label) const {
  for (auto& [l, v] : sources)
    if (l == label) return v;
  return -1;
}

bool Graph::has_self_loop() const {
  for (const auto& e : edges) {
    std::set<int> distinct(e.attach.begin(), e.attach.end());
    if (distinct.size() < e.attach.size()) return true;
  }
  return false;
}

bool Graph::connected() const {
  if (vertex_count == 0) return false;
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& e : edges)
    for (std::size_t i = 0; i + 1 < e.attach.size(); ++i)
      for (std::size_t j = i + 1; j < e.attach.size(); ++j) {
        adj[e.attach[i]].push_back(e.attach[j]);
        adj[e.attach[j]].push_back(e.attach[i]);
      }
  std::vector<bool> seen(vertex_count, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == vertex_count;
}

std::string Graph::vertex_name(int v) const {
  if (v >= 0 && v < static_cast<int>(vertex_names.size()) && !vertex_names[v].empty())
    return vertex_names[v];
  return std::to_string(v);
}

std::string Graph::edge_name(int e) const {
  if (e >= 0 && e < static_cast<int>(edge_names.size()) && !edge_names[e].empty())
    return edge_names[e];
  return "e" + std::to_string(e);
}

void validate_graph(const Graph& g) {
  std::map<std::string, std::size_t> arities;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.attach.empty())
      fail(Errc::ArityMismatch, "edge " + g.edge_name((int)i) + " attaches no vertices");
    auto [it, inserted] = arities.emplace(e.label, e.attach.size());
    if (!inserted && it->second != e.attach.size())
      fail(Errc::ArityMismatch, "edge " + g.edge_name((int)i) + " has arity " +
                                    std::to_string(e.attach.size()) + " for label '" + e.label +
                                    "' seen with arity " + std::to_string(it->second));
    for (int v : e.attach)
      if (v < 0 || v >= g.vertex_count)
        fail(Errc::DanglingId, "edge " + g.edge_name((int)i) + " attaches unknown vertex id " +
                                   std::to_string(v));
  }
  std::set<int> labels, verts;
  for (auto& [l, v] : g.sources) {
    if (l <= 0) fail(Errc::SortMismatch, "source label " + std::to_string(l) + " is not positive");
    if (!labels.insert(l).second)
      fail(Errc::NonInjectiveSources, "source label " + std::to_string(l) + " mapped twice");
    if (v < 0 || v >= g.vertex_count)
      fail(Errc::DanglingId, "source " + std::to_string(l) + " points at unknown vertex id " +
                                 std::to_string(v));
    if (!verts.insert(v).second)
      fail(Errc::NonInjectiveSources,
           "vertex " + g.vertex_name(v) + " carries more than one source label");
  }
}

Graph hr_empty(const Sort& sort) {
  Graph g;
  g.vertex_count = static_cast<int>(sort.size());
  int i = 0;
  for (int l : sort.labels()) g.sources.emplace_back(l, i++);
  return g;
}

Graph hr_edge(const std::string& label, const std::vector<int>& source_labels) {
  if (source_labels.empty()) fail(Errc::ArityMismatch, "edge constant with empty label sequence");
  Graph g;
  std::map<int, int> vertex_of;
  std::vector<int> attach;
  for (int s : source_labels) {
    auto [it, inserted] = vertex_of.emplace(s, g.vertex_count);
    if (inserted) ++g.vertex_count;
    attach.push_back(it->second);
  }
  for (auto& [l, v] : vertex_of) g.sources.emplace_back(l, v);
  g.edges.push_back({label, attach});
  return g;
}

Graph hr_restrict(const Sort& keep, const Graph& g) {
  Graph out = g;
  out.vertex_names.clear();
  out.edge_names.clear();
  out.sources.clear();
  for (auto& [l, v] : g.sources)
    if (keep.contains(l)) out.sources.emplace_back(l, v);
  return out;
}

Graph hr_rename(const std::map<int, int>& perm, const Graph& g) {
  auto image = [&perm](int l) {
    auto it = perm.find(l);
    return it == perm.end() ? l : it->second;
  };
  // Check the map is a finite permutation: injective, image = domain.
  std::set<int> keys, values;
  for (auto& [k, v] : perm) {
    if (k <= 0 || v <= 0) fail(Errc::SortMismatch, "renaming must move positive labels");
    keys.insert(k);
    if (!values.insert(v).second) fail(Errc::SortMismatch, "renaming is not injective");
  }
  if (keys != values) fail(Errc::SortMismatch, "renaming is not a permutation");
  Graph out = g;
  out.vertex_names.clear();
  out.edge_names.clear();
  for (auto& [l, v] : out.sources) l = image(l);
  std::sort(out.sources.begin(), out.sources.end());
  return out;
}

namespace {

Graph parallel_impl(const Graph& a, const Graph& b) {
  Graph out;
  out.vertex_count = a.vertex_count;
  out.edges = a.edges;
  out.sources = a.sources;

  // Fusion keeps the first argument's source vertex id.
  std::vector<int> map_b(b.vertex_count, -1);
  Sort shared = a.sort().intersect(b.sort());
  for (int l : shared.labels()) map_b[b.source(l)] = a.source(l);
  for (int v = 0; v < b.vertex_count; ++v)
    if (map_b[v] < 0) map_b[v] = out.vertex_count++;
  for (const auto& e : b.edges) {
    GraphEdge ne{e.label, {}};
    ne.attach.reserve(e.attach.size());
    for (int v : e.attach) ne.attach.push_back(map_b[v]);
    out.edges.push_back(std::move(ne));
  }
  for (auto& [l, v] : b.sources)
    if (!shared.contains(l)) out.sources.emplace_back(l, map_b[v]);
  std::sort(out.sources.begin(), out.sources.end());
  return out;
}

}  // namespace

Graph hr_parallel(const Graph& a, const Graph& b) {
  if (a.sort() != b.sort())
    fail(Errc::SortMismatch,
         "parallel composition at unequal sorts " + a.sort().str() + " vs " + b.sort().str());
  return parallel_impl(a, b);
}

Graph hr_parallel_general(const Graph& a, const Graph& b) { return parallel_impl(a, b); }

// --------------------------------------------------------------------------
// Isomorphism.

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_str(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

// One vertex-color refinement pass: color <- hash(color, sorted multiset of
// (edge label, own position, other position, other color)).
std::vector<std::uint64_t> refine_colors(const Graph& g, std::vector<std::uint64_t> color) {
  std::vector<std::vector<std::uint64_t>> incident(g.vertex_count);
  for (const auto& e : g.edges) {
    std::uint64_t lbl = hash_str(e.label);
    for (std::size_t i = 0; i < e.attach.size(); ++i)
      for (std::size_t j = 0; j < e.attach.size(); ++j) {
        if (i == j) continue;
        std::uint64_t h = hash_mix(hash_mix(hash_mix(lbl, i), j), color[e.attach[j]]);
        incident[e.attach[i]].push_back(h);
      }
    if (e.attach.size() == 1) incident[e.attach[0]].push_back(hash_mix(lbl, 77));
  }
  std::vector<std::uint64_t> next(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    std::sort(incident[v].begin(), incident[v].end());
    std::uint64_t h = hash_mix(color[v], 0x51ed2701);
    for (auto x : incident[v]) h = hash_mix(h, x);
    next[v] = h;
  }
  return next;
}

std::vector<std::uint64_t> stable_colors(const Graph& g) {
  std::vector<std::uint64_t> color(g.vertex_count, 0x42);
  for (auto& [l, v] : g.sources) color[v] = hash_mix(0xabcdef, l);
  for (int round = 0; round < 3; ++round) color = refine_colors(g, color);
  return color;
}

struct EdgeKey {
  std::string label;
  std::vector<int> attach;
  bool operator<(const EdgeKey& o) const {
    return std::tie(label, attach) < std::tie(o.label, o.attach);
  }
  bool operator==(const EdgeKey& o) const { return label == o.label && attach == o.attach; }
};

std::vector<EdgeKey> mapped_edges(const Graph& g, const std::vector<int>& vmap) {
  std::vector<EdgeKey> keys;
  keys.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    EdgeKey k{e.label, {}};
    k.attach.reserve(e.attach.size());
    for (int v : e.attach) k.attach.push_back(vmap.empty() ? v : vmap[v]);
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<std::uint64_t>& ca,
                    const std::vector<std::uint64_t>& cb, std::vector<int>& vmap,
                    std::vector<bool>& used, int next) {
  if (next == a.vertex_count) {
    return mapped_edges(a, vmap) == mapped_edges(b, {});
  }
  if (vmap[next] >= 0) return extend_mapping(a, b, ca, cb, vmap, used, next + 1);
  for (int w = 0; w < b.vertex_count; ++w) {
    if (used[w] || cb[w] != ca[next]) continue;
    vmap[next] = w;
    used[w] = true;
    if (extend_mapping(a, b, ca, cb, vmap, used, next + 1)) return true;
    vmap[next] = -1;
    used[w] = false;
  }
  return false;
}

}  // namespace

std::uint64_t iso_signature(const Graph& g) {
  auto color = stable_colors(g);
  std::sort(color.begin(), color.end());
  std::uint64_t h = hash_mix(0x5157, g.vertex_count);
  h = hash_mix(h, g.edges.size());
  for (auto c : color) h = hash_mix(h, c);
  // Edge label multiset.
  std::vector<std::uint64_t> ls;
  for (const auto& e : g.edges) ls.push_back(hash_mix(hash_str(e.label), e.attach.size()));
  std::sort(ls.begin(), ls.end());
  for (auto l : ls) h = hash_mix(h, l);
  for (auto& [l, v] : g.sources) h = hash_mix(h, l);
  return h;
}

bool isomorphic(const Graph& a, const Graph& b, int vertex_limit) {
  if (a.vertex_count > vertex_limit || b.vertex_count > vertex_limit)
    fail(Errc::SizeLimitExceeded,
         "isomorphism check beyond the oracle bound of " + std::to_string(vertex_limit) +
             " vertices");
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  if (a.sort() != b.sort()) return false;

  auto ca = stable_colors(a);
  auto cb = stable_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> vmap(a.vertex_count, -1);
  std::vector<bool> used(b.vertex_count, false);
  // Sources map pointwise.
  for (auto& [l, va] : a.sources) {
    int vb = b.source(l);
    if (ca[va] != cb[vb]) return false;
    vmap[va] = vb;
    used[vb] = true;
  }
  return extend_mapping(a, b, ca, cb, vmap, used, 0);
}

bool GraphSet::insert(Graph g) {
  std::uint64_t sig = iso_signature(g);
  auto [lo, hi] = buckets_.equal_range(sig);
  for (auto it = lo; it != hi; ++it)
    if (isomorphic(graphs_[it->second], g, vertex_limit_)) return false;
  buckets_.emplace(sig, static_cast<int>(graphs_.size()));
  graphs_.push_back(std::move(g));
  return true;
}

bool GraphSet::contains(const Graph& g) const {
  std::uint64_t sig = iso_signature(g);
  auto [lo, hi] = buckets_.equal_range(sig);
  for (auto it = lo; it != hi; ++it)
    if (isomorphic(graphs_[it->second], g, vertex_limit_)) return true;
  return false;
}

}  // namespace twograph
