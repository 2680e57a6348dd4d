#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mulx/errors.hpp"

namespace mulx {

/// Residue modulus: a finite e >= 2, or infinity (contents are not reduced).
class Modulus {
 public:
  static Modulus finite(int e) {
    if (e < 2) fail(errc::malformed_input, "modulus must be >= 2 or infinity");
    return Modulus(e);
  }
  static Modulus infinity() noexcept { return Modulus(0); }

  bool is_finite() const noexcept { return e_ != 0; }
  /// The finite value; only meaningful when is_finite().
  int value() const {
    internal_check(e_ != 0, "finite modulus required");
    return e_;
  }
  /// Content reduced into [0, e), or the content itself at e = infinity.
  int reduce(int content) const noexcept {
    if (e_ == 0) return content;
    int r = content % e_;
    return r < 0 ? r + e_ : r;
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  explicit Modulus(int e) : e_(e) {}
  int e_;  // 0 encodes infinity
};

/// A partition: weakly decreasing positive parts, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros (stripped); rejects negative parts and increases.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int rank() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based row length; 0 beyond the last row.
  int part(int row) const noexcept {
    return row >= 1 && row <= rows() ? parts_[row - 1] : 0;
  }

  /// Rows (1-based) where a cell can be added; always nonempty, ascending.
  std::vector<int> addable_rows() const;
  /// Rows (1-based) whose last cell can be removed; ascending.
  std::vector<int> removable_rows() const;

  Partition with_cell_added(int row) const;
  Partition with_cell_removed(int row) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A cell position: 1-based row and column, 0-based component.
struct Node {
  int row = 1;
  int col = 1;
  int comp = 0;
  auto operator<=>(const Node&) const = default;
};

/// An ordered tuple of l >= 1 partitions.
class Multipartition {
 public:
  Multipartition() : components_(1) {}  // the empty 1-partition
  explicit Multipartition(std::vector<Partition> components);
  static Multipartition empty(int level);

  int level() const noexcept { return static_cast<int>(components_.size()); }
  int rank() const noexcept;
  bool is_empty() const noexcept;
  const Partition& component(int c) const { return components_.at(c); }
  const std::vector<Partition>& components() const noexcept { return components_; }

  Multipartition with_node_added(const Node& node) const;
  Multipartition with_node_removed(const Node& node) const;

  auto operator<=>(const Multipartition&) const = default;

 private:
  std::vector<Partition> components_;
};

/// Integer multicharge together with the residue modulus.
struct Multicharge {
  std::vector<int> charges;
  Modulus e = Modulus::infinity();

  int level() const noexcept { return static_cast<int>(charges.size()); }
  /// Each entry reduced into [0, e); the charges themselves at e = infinity.
  std::vector<int> residue_class() const;
};

int content(const Node& node, const Multicharge& s);
int residue(const Node& node, const Multicharge& s);

struct BoundaryNodes {
  std::vector<Node> addable;
  std::vector<Node> removable;
};

/// All addable and removable i-nodes, each list sorted by (component, row).
BoundaryNodes boundary_nodes(const Multipartition& mp, const Multicharge& s, int i);

/// True iff no positive part occurs e or more times.
bool is_e_regular(const Partition& p, int e);

Partition conjugate(const Partition& p);

/// "4.1" notation; the empty partition prints as an empty-set sign.
std::string compact(const Partition& p);
/// "(4.1,2,3)" notation.
std::string compact(const Multipartition& mp);

}  // namespace mulx
