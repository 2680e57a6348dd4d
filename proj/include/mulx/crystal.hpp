#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mulx/partition.hpp"

namespace mulx {

enum class OrderKind { uglov, kleshchev };

/// Total order on the equal-residue boundary nodes of a multipartition.
///
/// uglov: content ascending, ties broken by component descending; depends on
/// the integer multicharge. kleshchev: component ascending, ties broken by
/// content ascending; depends only on the residue class, so finite-e charges
/// are reduced into [0, e) on construction.
class NodeOrder {
 public:
  static NodeOrder uglov(Multicharge s) { return NodeOrder(OrderKind::uglov, std::move(s)); }
  static NodeOrder kleshchev(Multicharge s);

  OrderKind kind() const noexcept { return kind_; }
  const Multicharge& charge() const noexcept { return charge_; }
  int level() const noexcept { return charge_.level(); }

  /// Strict comparison; callers pass nodes of one residue class.
  bool less(const Node& a, const Node& b) const;

 private:
  NodeOrder(OrderKind kind, Multicharge s) : kind_(kind), charge_(std::move(s)) {}
  OrderKind kind_;
  Multicharge charge_;
};

struct SigLetter {
  Node node;
  bool addable = true;  // A when true, R when false
  bool operator==(const SigLetter&) const = default;
};

/// Letters in increasing node order.
using SignatureWord = std::vector<SigLetter>;

SignatureWord signature_word(const Multipartition& mp, int i, const NodeOrder& ord);

/// Deletes RA factors until the word has shape A^p R^q.
SignatureWord reduce(const SignatureWord& word);

/// The rightmost A of the reduced word, if any.
std::optional<Node> good_addable(const Multipartition& mp, int i, const NodeOrder& ord);
/// The leftmost R of the reduced word, if any; removing it inverts f_op.
std::optional<Node> good_removable(const Multipartition& mp, int i, const NodeOrder& ord);

std::optional<Multipartition> f_op(const Multipartition& mp, int i, const NodeOrder& ord);
std::optional<Multipartition> e_op(const Multipartition& mp, int i, const NodeOrder& ord);

/// Residues carried by at least one addable (resp. removable) node, ascending.
/// For finite e these are drawn from [0, e); at infinity they are contents.
std::vector<int> addable_residues(const Multipartition& mp, const Multicharge& s);
std::vector<int> removable_residues(const Multipartition& mp, const Multicharge& s);

struct CrystalEdge {
  int source = 0;  // global vertex index
  int residue = 0;
  int target = 0;
  auto operator<=>(const CrystalEdge&) const = default;
};

/// Layered closure of the empty multipartition under f_op. Layer n holds the
/// rank-n vertices sorted lexicographically; vertex indices are global across
/// layers in that order.
struct CrystalGraph {
  std::vector<std::vector<Multipartition>> layers;
  std::vector<CrystalEdge> edges;  // sorted by (source, residue); empty in set-only mode
  bool with_edges = true;

  int vertex_count() const noexcept;
  int layer_offset(int n) const;  // global index of the first rank-n vertex
  const Multipartition& vertex(int global_index) const;
  /// Global index, or nullopt when the multipartition is not a vertex.
  std::optional<int> find(const Multipartition& mp) const;
};

struct EnumerateOptions {
  bool with_edges = true;
  std::size_t layer_cap = 5'000'000;
};

CrystalGraph enumerate_crystal(const NodeOrder& ord, int n_max, const EnumerateOptions& opts = {});

/// True iff repeated e_op reduces mp to the empty multipartition.
bool in_crystal(const Multipartition& mp, const NodeOrder& ord);

/// Canonical path: descend by e_op at the smallest defined residue, reversed.
/// Throws not_in_crystal when the descent sticks at a nonempty vertex.
std::vector<int> highest_weight_path(const Multipartition& mp, const NodeOrder& ord);

/// Applies f_op along the residues from the empty multipartition.
/// Throws dead_end (detail = 1-based step) when some step has no good node.
Multipartition follow_path(std::span<const int> residues, const NodeOrder& ord);

std::string to_dot(const CrystalGraph& graph,
                   const std::function<std::string(const Multipartition&)>& label);

}  // namespace mulx
