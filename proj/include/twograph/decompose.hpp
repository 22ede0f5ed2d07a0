#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twograph/classes.hpp"
#include "twograph/graph.hpp"
#include "twograph/term.hpp"

namespace twograph {

// Block-cutvertex tree of a connected graph, rooted at the 1-source. When
// the 1-source is not a cutvertex it is added as an explicit root node above
// its block.
struct BlockCutTree {
  struct Block {
    std::vector<int> edges;     // edge ids of the input graph
    std::vector<int> vertices;  // vertex ids, sorted
    int parent_vertex = -1;     // vertex node above this block
    std::vector<int> child_vertices;  // cutvertices below this block
  };

  std::vector<Block> blocks;
  std::vector<int> cutvertices;  // sorted vertex ids
  int root_vertex = -1;          // the 1-source (or the sole vertex)
  // Per vertex: blocks hanging below it (children in the rooted tree).
  std::vector<std::vector<int>> blocks_below;

  bool is_cutvertex(int v) const;
};

BlockCutTree block_cut_tree(const Graph& g);

// Tree of sort {1} -> the unique term up to AC evaluating back to it.
Term tree_term(const ClassId& cls, const Graph& g);

// Canonical series-parallel decomposition; fails with NotSeriesParallel when
// the graph is not SP or some edge is reversed.
Term sp_decompose(const Graph& g);

// Disoriented variant: reversed edges become 2,1 constants.
Term dsp_decompose(const Graph& g);

// Full decomposition of a connected sort-{1} graph of tree-width <= 2 into a
// term over the two-sorted signature, by recursion over the block-cut tree.
Term tw2_term(const Graph& g);

// tw2_term-based check.
bool is_treewidth_le2(const Graph& g);

// Enumerates, for one block with fixed 1-source x, the 2-source choices y
// that make (x, y) a decomposable disoriented P-graph. Used by tests probing
// the freedom in the 2-source choice.
std::vector<int> valid_block_second_sources(const Graph& g, const BlockCutTree& bct,
                                            int block_index, int x);

// Decompose a graph according to the class of `cls`.
Term decompose(const ClassId& cls, const Graph& g);

}  // namespace twograph
