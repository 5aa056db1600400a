#ifndef SEG2TREE_TREE_HPP
#define SEG2TREE_TREE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seg2tree/document.hpp"

namespace seg2tree {

class Document;

// One node of a binary constituency tree over contiguous unit spans.
// Children are indexes into the owning tree's node pool, -1 for leaves.
struct TreeNode {
  int lo = 0;
  int hi = 0;
  int left = -1;
  int right = -1;

  bool is_leaf() const { return left < 0; }
};

using Span = std::pair<int, int>;

// Full binary tree over units [lo..hi] at a declared granularity. Leaves are
// single units; every internal node has exactly two children partitioning its
// span. Spans are absolute document-level unit indexes, so trees cut out of a
// larger tree keep their positions.
class DiscTree {
 public:
  DiscTree(Granularity granularity, std::vector<TreeNode> nodes, int root);

  static DiscTree single_leaf(Granularity granularity, int unit);

  Granularity granularity() const { return granularity_; }
  int root() const { return root_; }
  const TreeNode& node(int index) const { return nodes_[index]; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  int lo() const { return nodes_[root_].lo; }
  int hi() const { return nodes_[root_].hi; }
  int leaf_count() const { return hi() - lo() + 1; }

  // All node spans, sorted; a full binary tree over a fixed leaf interval is
  // uniquely determined by this set, so it doubles as the canonical form.
  std::vector<Span> spans() const;
  std::vector<Span> internal_spans() const;

  std::string to_bracket() const;

  DiscTree subtree(int node_index) const;

  // Joins two span-adjacent trees under a fresh root.
  static DiscTree join(const DiscTree& left, const DiscTree& right);

  bool operator==(const DiscTree& other) const;
  bool operator!=(const DiscTree& other) const { return !(*this == other); }

 private:
  Granularity granularity_;
  std::vector<TreeNode> nodes_;
  int root_;

  void check_structure() const;
};

// Incremental construction; add_internal derives and checks spans.
class TreeBuilder {
 public:
  int add_leaf(int unit);
  int add_internal(int left, int right);
  DiscTree finish(Granularity granularity, int root);

 private:
  std::vector<TreeNode> nodes_;
};

// Parses the bracketed span format, e.g. "((0 1) 2)". Leaves must read
// 0..n-1 left to right; a well-formed tree whose leaf count differs from
// expected_leaves raises LeafMismatch.
DiscTree parse_tree(const std::string& text, Granularity granularity,
                    int expected_leaves);

// Reads "doc_id<TAB>(...)" lines; duplicate ids are rejected.
std::vector<std::pair<std::string, std::string>> read_tree_lines(
    const std::string& path);

// The spec'd single-document loader: finds `doc.id()` in the file and parses
// it against the document's unit count at `granularity`.
DiscTree load_tree(const std::string& path, const Document& doc,
                   Granularity granularity);

// Bulk form used by the CLI; every line must name a known document.
std::map<std::string, DiscTree> load_treebank(
    const std::string& path, const std::vector<Document>& docs,
    Granularity granularity);

// Ordered list of trees covering a document, one per scope unit.
class Forest {
 public:
  Forest(Granularity unit_granularity, Granularity scope_granularity,
         std::vector<DiscTree> trees);

  Granularity unit_granularity() const { return unit_gran_; }
  Granularity scope_granularity() const { return scope_gran_; }
  const std::vector<DiscTree>& trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }

  bool operator==(const Forest& other) const;
  bool operator!=(const Forest& other) const { return !(*this == other); }

  // One line per tree: "doc_id<TAB>scope=para:0<TAB>(...)".
  std::string to_lines(const std::string& doc_id) const;

 private:
  Granularity unit_gran_;
  Granularity scope_gran_;
  std::vector<DiscTree> trees_;
};

}  // namespace seg2tree

#endif  // SEG2TREE_TREE_HPP
