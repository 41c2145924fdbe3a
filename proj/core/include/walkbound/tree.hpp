#pragma once

#include <vector>

#include "walkbound/graph.hpp"
#include "walkbound/solver.hpp"

namespace walkbound {

// Tree rooted at the target vertex. tail[x] counts the edges of the subtree
// hanging from x (the part of the tree the walk must escape through x):
// 0 exactly for leaves other than the root, n-1 at the root itself.
struct TreeStructure {
  int root = 0;
  std::vector<int> parent;        // parent[root] = -1
  std::vector<int> depth;         // edge distance to root
  std::vector<int> subtree_size;  // vertices, rooted at root
  std::vector<int> tail;          // subtree_size - 1

  // Tail of the root as seen from x: edges hanging from the root's child on
  // the path to x, plus the connecting edge. This is the root-side quantity
  // the square-difference bound uses.
  int tail_toward(int x) const;

  // First hop from the root towards x.
  int child_toward(int x) const;

  // Deepest common vertex of the root->x and root->u paths.
  int junction(int x, int u) const;
};

bool is_tree(const Graph& g);

// NotATree unless g is connected with exactly n-1 edges.
TreeStructure tree_structure(const Graph& g, int a);

// O(n) closed-form hitting times on trees under the simple walk: walking
// outward from the root, crossing into a subtree with t trailing edges costs
// 2t+1 expected steps. Values are always integers. NotATree / NotSimpleWalk
// guard the preconditions.
SolveResult tree_hitting_times(const WalkSpec& spec);

// Closed-form expected visits to x on trees under the simple walk:
// S_x(u) = depth(junction(x, u)) * deg(x).
SolveResult tree_visit_counts(const WalkSpec& spec, int x);

}  // namespace walkbound
