#include "mulx/crystal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mulx {

NodeOrder NodeOrder::kleshchev(Multicharge s) {
  if (s.e.is_finite()) s.charges = s.residue_class();
  return NodeOrder(OrderKind::kleshchev, std::move(s));
}

bool NodeOrder::less(const Node& a, const Node& b) const {
  const int ca = content(a, charge_);
  const int cb = content(b, charge_);
  if (kind_ == OrderKind::uglov) {
    if (ca != cb) return ca < cb;
    return a.comp > b.comp;
  }
  if (a.comp != b.comp) return a.comp < b.comp;
  return ca < cb;
}

SignatureWord signature_word(const Multipartition& mp, int i, const NodeOrder& ord) {
  BoundaryNodes nodes = boundary_nodes(mp, ord.charge(), i);
  SignatureWord word;
  word.reserve(nodes.addable.size() + nodes.removable.size());
  for (const Node& n : nodes.addable) word.push_back({n, true});
  for (const Node& n : nodes.removable) word.push_back({n, false});
  std::sort(word.begin(), word.end(),
            [&](const SigLetter& x, const SigLetter& y) { return ord.less(x.node, y.node); });
  return word;
}

SignatureWord reduce(const SignatureWord& word) {
  SignatureWord stack;
  for (const SigLetter& letter : word) {
    if (letter.addable && !stack.empty() && !stack.back().addable) {
      stack.pop_back();  // an RA factor cancels
    } else {
      stack.push_back(letter);
    }
  }
  return stack;
}

std::optional<Node> good_addable(const Multipartition& mp, int i, const NodeOrder& ord) {
  SignatureWord w = reduce(signature_word(mp, i, ord));
  // w has shape A^p R^q; the rightmost A is the last addable letter
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->addable) return it->node;
  }
  return std::nullopt;
}

std::optional<Node> good_removable(const Multipartition& mp, int i, const NodeOrder& ord) {
  SignatureWord w = reduce(signature_word(mp, i, ord));
  for (const SigLetter& letter : w) {
    if (!letter.addable) return letter.node;
  }
  return std::nullopt;
}

std::optional<Multipartition> f_op(const Multipartition& mp, int i, const NodeOrder& ord) {
  if (auto node = good_addable(mp, i, ord)) return mp.with_node_added(*node);
  return std::nullopt;
}

std::optional<Multipartition> e_op(const Multipartition& mp, int i, const NodeOrder& ord) {
  if (auto node = good_removable(mp, i, ord)) return mp.with_node_removed(*node);
  return std::nullopt;
}

namespace {

std::vector<int> sorted_unique(std::set<int>&& s) {
  return std::vector<int>(s.begin(), s.end());
}

}  // namespace

std::vector<int> addable_residues(const Multipartition& mp, const Multicharge& s) {
  std::set<int> out;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& p = mp.component(c);
    for (int a : p.addable_rows()) out.insert(residue(Node{a, p.part(a) + 1, c}, s));
  }
  return sorted_unique(std::move(out));
}

std::vector<int> removable_residues(const Multipartition& mp, const Multicharge& s) {
  std::set<int> out;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& p = mp.component(c);
    for (int a : p.removable_rows()) out.insert(residue(Node{a, p.part(a), c}, s));
  }
  return sorted_unique(std::move(out));
}

int CrystalGraph::vertex_count() const noexcept {
  int n = 0;
  for (const auto& layer : layers) n += static_cast<int>(layer.size());
  return n;
}

int CrystalGraph::layer_offset(int n) const {
  int off = 0;
  for (int k = 0; k < n; ++k) off += static_cast<int>(layers.at(k).size());
  return off;
}

const Multipartition& CrystalGraph::vertex(int global_index) const {
  for (const auto& layer : layers) {
    if (global_index < static_cast<int>(layer.size())) return layer[global_index];
    global_index -= static_cast<int>(layer.size());
  }
  throw std::out_of_range("vertex index");
}

std::optional<int> CrystalGraph::find(const Multipartition& mp) const {
  const int n = mp.rank();
  if (n >= static_cast<int>(layers.size())) return std::nullopt;
  const auto& layer = layers[n];
  auto it = std::lower_bound(layer.begin(), layer.end(), mp);
  if (it == layer.end() || *it != mp) return std::nullopt;
  return layer_offset(n) + static_cast<int>(it - layer.begin());
}

namespace {

std::vector<int> edge_residues(const Multipartition& mp, const NodeOrder& ord) {
  if (ord.charge().e.is_finite()) {
    std::vector<int> out(ord.charge().e.value());
    for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = i;
    return out;
  }
  return addable_residues(mp, ord.charge());
}

}  // namespace

CrystalGraph enumerate_crystal(const NodeOrder& ord, int n_max, const EnumerateOptions& opts) {
  if (n_max < 0) fail(errc::malformed_input, "n_max must be >= 0");
  CrystalGraph graph;
  graph.with_edges = opts.with_edges;
  graph.layers.push_back({Multipartition::empty(ord.level())});
  for (int n = 0; n < n_max; ++n) {
    std::set<Multipartition> next;
    for (const Multipartition& mp : graph.layers[n]) {
      for (int i : edge_residues(mp, ord)) {
        if (auto target = f_op(mp, i, ord)) next.insert(std::move(*target));
      }
    }
    if (next.size() > opts.layer_cap)
      fail(errc::resource_limit, "layer " + std::to_string(n + 1) + " exceeds cap of " +
                                     std::to_string(opts.layer_cap) + " vertices");
    std::vector<Multipartition> layer(next.begin(), next.end());
    if (opts.with_edges) {
      const int src_base = graph.layer_offset(n);
      const int dst_base = src_base + static_cast<int>(graph.layers[n].size());
      for (int si = 0; si < static_cast<int>(graph.layers[n].size()); ++si) {
        const Multipartition& mp = graph.layers[n][si];
        for (int i : edge_residues(mp, ord)) {
          if (auto target = f_op(mp, i, ord)) {
            auto it = std::lower_bound(layer.begin(), layer.end(), *target);
            graph.edges.push_back(
                {src_base + si, i, dst_base + static_cast<int>(it - layer.begin())});
          }
        }
      }
    }
    graph.layers.push_back(std::move(layer));
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

namespace {

// One descent step at the smallest defined residue; nullopt when stuck.
std::optional<std::pair<int, Multipartition>> descend(const Multipartition& mp,
                                                      const NodeOrder& ord) {
  for (int i : removable_residues(mp, ord.charge())) {
    if (auto down = e_op(mp, i, ord)) return std::pair(i, std::move(*down));
  }
  return std::nullopt;
}

}  // namespace

bool in_crystal(const Multipartition& mp, const NodeOrder& ord) {
  Multipartition cur = mp;
  while (!cur.is_empty()) {
    auto step = descend(cur, ord);
    if (!step) return false;
    cur = std::move(step->second);
  }
  return true;
}

std::vector<int> highest_weight_path(const Multipartition& mp, const NodeOrder& ord) {
  std::vector<int> path;
  Multipartition cur = mp;
  while (!cur.is_empty()) {
    auto step = descend(cur, ord);
    if (!step)
      fail(errc::not_in_crystal,
           "descent stuck at nonempty vertex " + compact(cur) + "; not a crystal vertex");
    path.push_back(step->first);
    cur = std::move(step->second);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Multipartition follow_path(std::span<const int> residues, const NodeOrder& ord) {
  Multipartition cur = Multipartition::empty(ord.level());
  for (std::size_t k = 0; k < residues.size(); ++k) {
    auto next = f_op(cur, residues[k], ord);
    if (!next)
      fail(errc::dead_end,
           "no good " + std::to_string(residues[k]) + "-node at step " + std::to_string(k + 1),
           static_cast<long long>(k + 1));
    cur = std::move(*next);
  }
  return cur;
}

std::string to_dot(const CrystalGraph& graph,
                   const std::function<std::string(const Multipartition&)>& label) {
  std::ostringstream out;
  out << "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
  int gidx = 0;
  for (const auto& layer : graph.layers) {
    for (const Multipartition& mp : layer) {
      out << "  v" << gidx << " [label=\"" << label(mp) << "\"];\n";
      ++gidx;
    }
  }
  for (const CrystalEdge& e : graph.edges) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.residue << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mulx
