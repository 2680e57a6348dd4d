#include "mulx/partition.hpp"

#include <algorithm>
#include <numeric>

namespace mulx {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(errc::malformed_input, "partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      fail(errc::malformed_input, "partition parts must be weakly decreasing");
  }
}

int Partition::rank() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::addable_rows() const {
  std::vector<int> out;
  const int k = rows();
  for (int a = 1; a <= k + 1; ++a) {
    if (a == 1 || part(a - 1) > part(a)) out.push_back(a);
  }
  return out;
}

std::vector<int> Partition::removable_rows() const {
  std::vector<int> out;
  const int k = rows();
  for (int a = 1; a <= k; ++a) {
    if (part(a) > part(a + 1)) out.push_back(a);
  }
  return out;
}

Partition Partition::with_cell_added(int row) const {
  internal_check(row >= 1 && row <= rows() + 1 && (row == 1 || part(row - 1) > part(row)),
                 "cell not addable");
  std::vector<int> next = parts_;
  if (row == rows() + 1) {
    next.push_back(1);
  } else {
    ++next[row - 1];
  }
  return Partition(std::move(next));
}

Partition Partition::with_cell_removed(int row) const {
  internal_check(row >= 1 && row <= rows() && part(row) > part(row + 1), "cell not removable");
  std::vector<int> next = parts_;
  --next[row - 1];
  return Partition(std::move(next));
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) fail(errc::malformed_input, "multipartition needs at least one component");
}

Multipartition Multipartition::empty(int level) {
  if (level < 1) fail(errc::malformed_input, "level must be >= 1");
  return Multipartition(std::vector<Partition>(level));
}

int Multipartition::rank() const noexcept {
  int n = 0;
  for (const auto& p : components_) n += p.rank();
  return n;
}

bool Multipartition::is_empty() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Partition& p) { return p.empty(); });
}

Multipartition Multipartition::with_node_added(const Node& node) const {
  internal_check(node.comp >= 0 && node.comp < level(), "component out of range");
  internal_check(node.col == components_[node.comp].part(node.row) + 1, "node column mismatch");
  std::vector<Partition> next = components_;
  next[node.comp] = next[node.comp].with_cell_added(node.row);
  return Multipartition(std::move(next));
}

Multipartition Multipartition::with_node_removed(const Node& node) const {
  internal_check(node.comp >= 0 && node.comp < level(), "component out of range");
  internal_check(node.col == components_[node.comp].part(node.row), "node column mismatch");
  std::vector<Partition> next = components_;
  next[node.comp] = next[node.comp].with_cell_removed(node.row);
  return Multipartition(std::move(next));
}

std::vector<int> Multicharge::residue_class() const {
  std::vector<int> out;
  out.reserve(charges.size());
  for (int c : charges) out.push_back(e.reduce(c));
  return out;
}

int content(const Node& node, const Multicharge& s) {
  return node.col - node.row + s.charges.at(node.comp);
}

int residue(const Node& node, const Multicharge& s) {
  return s.e.reduce(content(node, s));
}

BoundaryNodes boundary_nodes(const Multipartition& mp, const Multicharge& s, int i) {
  BoundaryNodes out;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& p = mp.component(c);
    for (int a : p.addable_rows()) {
      Node node{a, p.part(a) + 1, c};
      if (residue(node, s) == i) out.addable.push_back(node);
    }
    for (int a : p.removable_rows()) {
      Node node{a, p.part(a), c};
      if (residue(node, s) == i) out.removable.push_back(node);
    }
  }
  // rows come out ascending per component already
  auto by_comp_row = [](const Node& x, const Node& y) {
    return std::pair(x.comp, x.row) < std::pair(y.comp, y.row);
  };
  std::sort(out.addable.begin(), out.addable.end(), by_comp_row);
  std::sort(out.removable.begin(), out.removable.end(), by_comp_row);
  return out;
}

bool is_e_regular(const Partition& p, int e) {
  if (e < 2) fail(errc::malformed_input, "regularity needs e >= 2");
  int run = 0;
  int prev = -1;
  for (int part : p.parts()) {
    run = part == prev ? run + 1 : 1;
    if (run >= e) return false;
    prev = part;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition();
  std::vector<int> cols(p.parts()[0], 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

std::string compact(const Partition& p) {
  if (p.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string compact(const Multipartition& mp) {
  std::string out = "(";
  for (int c = 0; c < mp.level(); ++c) {
    if (c > 0) out += ',';
    out += compact(mp.component(c));
  }
  out += ')';
  return out;
}

}  // namespace mulx
