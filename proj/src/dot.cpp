#include "catnum/dot.hpp"

#include <map>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "catnum/complexity.hpp"
#include "catnum/convert.hpp"

namespace catnum {

namespace {

std::string node_label(const BinTree& x) {
  if (fits_bits(x, 64)) return std::to_string(to_u64(x));
  return "catsize " + std::to_string(to_u64(catsize(x)));
}

class DagBuilder {
 public:
  explicit DagBuilder(DagView view) : view_(view) {}

  DagExport finish(const BinTree& root) {
    dag_.root = visit(root);
    return std::move(dag_);
  }

 private:
  std::size_t visit(const BinTree& x) {
    // Shared nodes are recognised by address first, then by structure.
    if (auto it = by_address_.find(x.identity()); it != by_address_.end()) return it->second;
    std::vector<BinTree> kids;
    if (view_ == DagView::Multiway) {
      kids = to_list(x);
    } else if (!x.is_empty()) {
      kids = {x.left(), x.right()};
    }
    std::vector<std::size_t> ids;
    ids.reserve(kids.size());
    for (const BinTree& k : kids) ids.push_back(visit(k));

    auto [it, inserted] = by_children_.try_emplace(ids, dag_.nodes.size());
    const std::size_t id = it->second;
    if (inserted) {
      dag_.nodes.push_back({id, x.is_odd(), node_label(x)});
      for (std::size_t pos = 0; pos < ids.size(); ++pos) dag_.edges.push_back({id, ids[pos], pos});
    }
    by_address_.emplace(x.identity(), id);
    return id;
  }

  DagView view_;
  DagExport dag_;
  std::map<std::vector<std::size_t>, std::size_t> by_children_;
  std::unordered_map<const void*, std::size_t> by_address_;
};

}  // namespace

DagExport build_dag(const BinTree& x, DagView view) { return DagBuilder(view).finish(x); }

void write_dot(const DagExport& dag, std::ostream& out) {
  out << "digraph catnum {\n";
  out << "  rankdir=TB;\n";
  for (const DagNode& n : dag.nodes) {
    out << "  n" << n.id << " [label=\"" << n.label << "\", parity=\"" << (n.odd ? "odd" : "even")
        << "\"];\n";
  }
  for (const DagEdge& e : dag.edges) {
    out << "  n" << e.parent << " -> n" << e.child << " [label=\"" << e.position << "\"];\n";
  }
  out << "}\n";
}

}  // namespace catnum
