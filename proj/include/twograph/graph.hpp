#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twograph/errors.hpp"

namespace twograph {

// A sort is a finite set of source labels. Kept as a sorted unique vector.
class Sort {
 public:
  Sort() = default;
  explicit Sort(std::vector<int> labels);
  static Sort of(std::initializer_list<int> labels);

  bool contains(int label) const;
  bool empty() const { return labels_.empty(); }
  std::size_t size() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }

  Sort intersect(const Sort& other) const;
  Sort unite(const Sort& other) const;

  bool operator==(const Sort& o) const { return labels_ == o.labels_; }
  bool operator!=(const Sort& o) const { return labels_ != o.labels_; }
  bool operator<(const Sort& o) const { return labels_ < o.labels_; }

  std::string str() const;

 private:
  std::vector<int> labels_;
};

inline const Sort kSort1 = Sort::of({1});
inline const Sort kSort12 = Sort::of({1, 2});

struct GraphEdge {
  std::string label;
  std::vector<int> attach;  // vertex ids, order significant, repeats allowed
};

// Source-labeled hypergraph. Vertex ids are dense 0..vertex_count-1; edge ids
// are positions in `edges`. Optional name vectors preserve external string
// ids across a parse/serialize round trip; operations leave them empty.
struct Graph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::pair<int, int>> sources;  // (source label, vertex), sorted by label
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;

  Sort sort() const;
  int source(int label) const;  // -1 if absent
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_self_loop() const;
  bool connected() const;  // single vertex counts as connected; empty graph does not
  std::string vertex_name(int v) const;
  std::string edge_name(int e) const;
};

// Checks the Def. invariants: attachment lengths match a fixed per-label
// arity, sources are injective, all referenced ids exist.
void validate_graph(const Graph& g);

// HR algebra operations. Fresh ids are assigned deterministically: the first
// argument's vertices keep their ids, the second argument's follow.
Graph hr_empty(const Sort& sort);
Graph hr_edge(const std::string& label, const std::vector<int>& source_labels);
Graph hr_restrict(const Sort& keep, const Graph& g);
Graph hr_rename(const std::map<int, int>& perm, const Graph& g);  // finite permutation
// Equal-sort parallel composition (the class-level operation).
Graph hr_parallel(const Graph& a, const Graph& b);
// General parallel composition, fusing sources with labels in both sorts.
Graph hr_parallel_general(const Graph& a, const Graph& b);

// Brute-force isomorphism respecting labels, attachment order and sources
// (source labels map pointwise). Only intended for oracle-scale graphs.
inline constexpr int kDefaultIsoVertexLimit = 10;
bool isomorphic(const Graph& a, const Graph& b, int vertex_limit = kDefaultIsoVertexLimit);

// Invariant under isomorphism; used to bucket graphs before exact checks.
std::uint64_t iso_signature(const Graph& g);

// Deduplicating container of graphs keyed by iso_signature.
class GraphSet {
 public:
  explicit GraphSet(int vertex_limit = kDefaultIsoVertexLimit) : vertex_limit_(vertex_limit) {}

  // Returns true if the graph was new.
  bool insert(Graph g);
  bool contains(const Graph& g) const;
  std::size_t size() const { return graphs_.size(); }
  const std::vector<Graph>& graphs() const { return graphs_; }

 private:
  int vertex_limit_;
  std::vector<Graph> graphs_;
  std::multimap<std::uint64_t, int> buckets_;
};

}  // namespace twograph
