#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "catnum/bintree.hpp"

namespace catnum {

enum class DagView { Multiway, Binary };

struct DagNode {
  std::size_t id;
  bool odd;
  std::string label;
};

struct DagEdge {
  std::size_t parent;
  std::size_t child;
  std::size_t position;  // 0-based child index
};

/// A value folded to a DAG: identical subtrees share one node. Node ids
/// follow a post-order walk with children visited in order, so the leaf
/// comes first and the root last.
struct DagExport {
  std::vector<DagNode> nodes;
  std::vector<DagEdge> edges;
  std::size_t root = 0;
};

DagExport build_dag(const BinTree& x, DagView view);

/// Directed graph text with `label` attributes on nodes and edges.
void write_dot(const DagExport& dag, std::ostream& out);

}  // namespace catnum
