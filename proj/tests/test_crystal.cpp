#include <doctest.h>

#include <algorithm>
#include <set>

#include "mulx/crystal.hpp"
#include "mulx/json_io.hpp"
#include "support/gen.hpp"
#include "support/shorthand.hpp"

using namespace mulx;
using test::MP;
using test::P;

namespace {

const Multicharge kS001_4{{0, 0, 1}, Modulus::finite(4)};
const Multicharge kS001_2{{0, 0, 1}, Modulus::finite(2)};

SignatureWord make_word(std::initializer_list<char> letters) {
  SignatureWord out;
  int row = 1;
  for (char ch : letters) out.push_back({Node{row++, 1, 0}, ch == 'A'});
  return out;
}

std::string letters_of(const SignatureWord& word) {
  std::string out;
  for (const SigLetter& l : word) out += l.addable ? 'A' : 'R';
  return out;
}

// Reference signature listing: brute scan over cells plus a plain sort on the
// documented comparison keys, independent of NodeOrder::less.
std::vector<Node> brute_sorted_nodes(const Multipartition& mp, const Multicharge& s, int i,
                                     OrderKind kind) {
  std::vector<Node> nodes;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& p = mp.component(c);
    for (int a : p.addable_rows()) {
      Node n{a, p.part(a) + 1, c};
      if (residue(n, s) == i) nodes.push_back(n);
    }
    for (int a : p.removable_rows()) {
      Node n{a, p.part(a), c};
      if (residue(n, s) == i) nodes.push_back(n);
    }
  }
  std::stable_sort(nodes.begin(), nodes.end(), [&](const Node& x, const Node& y) {
    if (kind == OrderKind::uglov)
      return std::pair(content(x, s), -x.comp) < std::pair(content(y, s), -y.comp);
    return std::pair(x.comp, content(x, s)) < std::pair(y.comp, content(y, s));
  });
  return nodes;
}

}  // namespace

TEST_CASE("signature word of the empty 3-partition pins the uglov order") {
  const NodeOrder ord = NodeOrder::uglov(kS001_4);
  const SignatureWord word = signature_word(Multipartition::empty(3), 0, ord);
  REQUIRE(word.size() == 2);
  CHECK(letters_of(word) == "AA");
  CHECK(word[0].node == Node{1, 1, 1});
  CHECK(word[1].node == Node{1, 1, 0});
}

TEST_CASE("signature word sequences match the brute listing") {
  const Multipartition mp = MP({{1}, {1}, {}});
  // at e=4 only the column-2 cells and (1,1,2) carry residue 1
  {
    const NodeOrder ord = NodeOrder::uglov(kS001_4);
    const SignatureWord word = signature_word(mp, 1, ord);
    REQUIRE(word.size() == 3);
    CHECK(word[0].node == Node{1, 1, 2});
    CHECK(word[1].node == Node{1, 2, 1});
    CHECK(word[2].node == Node{1, 2, 0});
    CHECK(letters_of(word) == "AAA");
  }
  // at e=2 the new-row cells (2,1,*) join them (content -1)
  {
    const NodeOrder ord = NodeOrder::uglov(kS001_2);
    const SignatureWord word = signature_word(mp, 1, ord);
    REQUIRE(word.size() == 5);
    CHECK(word[0].node == Node{2, 1, 1});
    CHECK(word[1].node == Node{2, 1, 0});
    CHECK(word[2].node == Node{1, 1, 2});
    CHECK(word[3].node == Node{1, 2, 1});
    CHECK(word[4].node == Node{1, 2, 0});
  }
  // sweep both orders against the independent sort
  for (OrderKind kind : {OrderKind::uglov, OrderKind::kleshchev}) {
    for (const Multicharge& s : {kS001_2, kS001_4, Multicharge{{2, 0, 1}, Modulus::finite(3)}}) {
      const NodeOrder ord =
          kind == OrderKind::uglov ? NodeOrder::uglov(s) : NodeOrder::kleshchev(s);
      for (const Multipartition& m : test::multipartitions_up_to(3, 4)) {
        for (int i = 0; i < s.e.value(); ++i) {
          const SignatureWord word = signature_word(m, i, ord);
          std::vector<Node> got;
          for (const SigLetter& l : word) got.push_back(l.node);
          CHECK(got == brute_sorted_nodes(m, ord.charge(), i, kind));
        }
      }
    }
  }
}

TEST_CASE("single component words") {
  const NodeOrder ord = NodeOrder::uglov({{0}, Modulus::finite(3)});
  CHECK(signature_word(Multipartition::empty(1), 0, ord).size() == 1);
  CHECK(signature_word(Multipartition::empty(1), 1, ord).empty());
}

TEST_CASE("reduction deletes RA factors") {
  CHECK(reduce(make_word({'R', 'A'})).empty());
  CHECK(letters_of(reduce(make_word({'A', 'R', 'R', 'A'}))) == "AR");
  CHECK(letters_of(reduce(make_word({'A', 'A', 'R'}))) == "AAR");
  CHECK(letters_of(reduce(make_word({'R', 'A', 'R', 'A', 'A'}))) == "A");
  CHECK(reduce({}).empty());
}

TEST_CASE("good nodes of the empty 3-partition") {
  CHECK(good_addable(Multipartition::empty(3), 0, NodeOrder::uglov(kS001_4)) == Node{1, 1, 0});
  CHECK(good_addable(Multipartition::empty(3), 0, NodeOrder::kleshchev(kS001_4)) == Node{1, 1, 1});
  CHECK(!good_addable(Multipartition::empty(3), 2, NodeOrder::uglov(kS001_4)).has_value());
  CHECK(f_op(Multipartition::empty(3), 0, NodeOrder::uglov(kS001_4)) == MP({{1}, {}, {}}));
  CHECK(f_op(Multipartition::empty(3), 0, NodeOrder::kleshchev(kS001_4)) == MP({{}, {1}, {}}));
}

TEST_CASE("f and e are mutually inverse edge followers") {
  for (int level = 1; level <= 3; ++level) {
    const auto mps = test::multipartitions_up_to(level, 6 - level);
    for (int e : {2, 3, 4}) {
      std::vector<int> charges(level);
      for (int c = 0; c < level; ++c) charges[c] = (c * 2 + 1) % e;
      const Multicharge s{charges, Modulus::finite(e)};
      for (const NodeOrder& ord : {NodeOrder::uglov(s), NodeOrder::kleshchev(s)}) {
        for (const Multipartition& mp : mps) {
          for (int i = 0; i < e; ++i) {
            const SignatureWord w = reduce(signature_word(mp, i, ord));
            const bool has_a =
                std::any_of(w.begin(), w.end(), [](const SigLetter& l) { return l.addable; });
            const bool has_r =
                std::any_of(w.begin(), w.end(), [](const SigLetter& l) { return !l.addable; });
            const auto up = f_op(mp, i, ord);
            const auto down = e_op(mp, i, ord);
            CHECK(up.has_value() == has_a);
            CHECK(down.has_value() == has_r);
            if (up) CHECK(e_op(*up, i, ord) == mp);
            if (down) CHECK(f_op(*down, i, ord) == mp);
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration fixtures at e=2") {
  const CrystalGraph uglov = enumerate_crystal(NodeOrder::uglov(kS001_2), 4);
  std::vector<std::size_t> sizes;
  for (const auto& layer : uglov.layers) sizes.push_back(layer.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3, 5, 8});
  CHECK(uglov.layers[1] == std::vector<Multipartition>{MP({{}, {}, {1}}), MP({{1}, {}, {}})});

  const CrystalGraph klesh = enumerate_crystal(NodeOrder::kleshchev(kS001_2), 4);
  CHECK(klesh.layers[1] == std::vector<Multipartition>{MP({{}, {}, {1}}), MP({{}, {1}, {}})});
  CHECK(klesh.layers[4].size() == 8);
}

TEST_CASE("layer-1 vertices at e=4 match the order conventions") {
  const CrystalGraph uglov = enumerate_crystal(NodeOrder::uglov(kS001_4), 1);
  CHECK(uglov.layers[1] == std::vector<Multipartition>{MP({{}, {}, {1}}), MP({{1}, {}, {}})});
  const CrystalGraph klesh = enumerate_crystal(NodeOrder::kleshchev(kS001_4), 1);
  CHECK(klesh.layers[1] == std::vector<Multipartition>{MP({{}, {}, {1}}), MP({{}, {1}, {}})});
}

TEST_CASE("level 1 vertices are the e-regular partitions") {
  for (int e : {2, 3, 4}) {
    const NodeOrder ord = NodeOrder::uglov({{0}, Modulus::finite(e)});
    const CrystalGraph graph = enumerate_crystal(ord, 10, {.with_edges = false});
    for (int n = 0; n <= 10; ++n) {
      std::set<Multipartition> expected;
      for (const Partition& p : test::partitions_of(n)) {
        if (is_e_regular(p, e)) expected.insert(Multipartition({p}));
      }
      CHECK(std::set<Multipartition>(graph.layers[n].begin(), graph.layers[n].end()) == expected);
    }
  }
}

TEST_CASE("layer sizes agree across integer lifts of one class") {
  for (int e : {2, 3}) {
    const std::vector<std::vector<int>> lifts = {{0, 1}, {e, 1}, {0, 1 + e}, {2 * e, 1 + e}};
    std::vector<std::vector<std::size_t>> sizes;
    for (const auto& lift : lifts) {
      const CrystalGraph g =
          enumerate_crystal(NodeOrder::uglov({lift, Modulus::finite(e)}), 6, {.with_edges = false});
      std::vector<std::size_t> row;
      for (const auto& layer : g.layers) row.push_back(layer.size());
      sizes.push_back(row);
    }
    for (const auto& row : sizes) CHECK(row == sizes.front());
  }
}

TEST_CASE("asymptotic multicharges make uglov and kleshchev layers coincide") {
  const int n = 5;
  for (int e : {2, 3}) {
    for (std::vector<int> cls : {std::vector<int>{0, 1}, {1, 0}, {1, 1}}) {
      std::vector<int> lift = cls;
      lift[1] += ((n + lift[0] - lift[1]) / e + 1) * e;  // force the gap above n-1
      const CrystalGraph u =
          enumerate_crystal(NodeOrder::uglov({lift, Modulus::finite(e)}), n, {.with_edges = false});
      const CrystalGraph k = enumerate_crystal(NodeOrder::kleshchev({cls, Modulus::finite(e)}), n,
                                               {.with_edges = false});
      CHECK(u.layers[n] == k.layers[n]);
    }
  }
}

TEST_CASE("highest weight paths") {
  CHECK(highest_weight_path(Multipartition::empty(3), NodeOrder::uglov(kS001_4)).empty());
  CHECK(highest_weight_path(MP({{1}, {}, {}}), NodeOrder::uglov(kS001_4)) == std::vector<int>{0});
  CHECK(follow_path(std::vector<int>{}, NodeOrder::uglov(kS001_4)) == Multipartition::empty(3));
  CHECK(follow_path(std::vector<int>{0, 1}, NodeOrder::uglov(kS001_4)) == MP({{2}, {}, {}}));

  const NodeOrder ord = NodeOrder::kleshchev({{0, 1}, Modulus::finite(3)});
  const CrystalGraph graph = enumerate_crystal(ord, 6, {.with_edges = false});
  for (const auto& layer : graph.layers) {
    for (const Multipartition& mp : layer) {
      CHECK(follow_path(highest_weight_path(mp, ord), ord) == mp);
    }
  }
}

TEST_CASE("descent detects non-members") {
  const NodeOrder ord = NodeOrder::kleshchev({{0, 0}, Modulus::finite(2)});
  CHECK(in_crystal(MP({{1}, {1}}), ord));
  CHECK(!in_crystal(MP({{1, 1}, {}}), ord));
  CHECK_THROWS_AS(highest_weight_path(MP({{1, 1}, {}}), ord), Error);
}

TEST_CASE("follow_path dead end carries the step") {
  const NodeOrder ord = NodeOrder::uglov({{0}, Modulus::finite(2)});
  const std::vector<int> path{0, 0};
  try {
    follow_path(path, ord);
    FAIL("expected dead_end");
  } catch (const Error& e) {
    CHECK(e.code() == errc::dead_end);
    CHECK(e.detail() == 2);
  }
}

TEST_CASE("vertex lookup") {
  const CrystalGraph graph = enumerate_crystal(NodeOrder::kleshchev(kS001_2), 4);
  for (int g = 0; g < graph.vertex_count(); ++g) CHECK(graph.find(graph.vertex(g)) == g);
  CHECK(!graph.find(MP({{4, 4}, {}, {}})).has_value());
  CHECK(!graph.find(MP({{5}, {5}, {}})).has_value());  // beyond the last layer
  CHECK(graph.layer_offset(2) == 3);
}

TEST_CASE("edge bookkeeping invariants") {
  const CrystalGraph graph = enumerate_crystal(NodeOrder::kleshchev(kS001_4), 5);
  CHECK(std::is_sorted(graph.edges.begin(), graph.edges.end()));
  std::set<std::pair<int, int>> out_slots, in_slots;
  std::set<int> targets;
  for (const CrystalEdge& e : graph.edges) {
    CHECK(out_slots.insert({e.source, e.residue}).second);  // out-degree <= 1 per residue
    CHECK(in_slots.insert({e.target, e.residue}).second);   // in-degree <= 1 per residue
    targets.insert(e.target);
  }
  CHECK(static_cast<int>(targets.size()) == graph.vertex_count() - 1);  // all reachable
}

TEST_CASE("infinite modulus crystals") {
  const NodeOrder ord = NodeOrder::uglov({{0, 1}, Modulus::infinity()});
  const CrystalGraph graph = enumerate_crystal(ord, 3, {.with_edges = false});
  CHECK(graph.layers[1].size() == 2);
  for (const auto& layer : graph.layers) {
    for (const Multipartition& mp : layer) {
      CHECK(follow_path(highest_weight_path(mp, ord), ord) == mp);
    }
  }
}

TEST_CASE("layer cap") {
  CHECK_THROWS_AS(
      enumerate_crystal(NodeOrder::uglov(kS001_4), 4, {.with_edges = false, .layer_cap = 3}),
      Error);
}

TEST_CASE("dot and json exports") {
  const CrystalGraph graph = enumerate_crystal(NodeOrder::uglov(kS001_2), 2);
  const std::string dot = to_dot(graph, [](const Multipartition& mp) { return compact(mp); });
  CHECK(dot.find("digraph crystal") != std::string::npos);
  CHECK(dot.find("label=\"0\"") != std::string::npos);

  const nlohmann::json j = to_json(graph);
  CHECK(j["layers"].size() == 3);
  CHECK(j["edges"].size() == graph.edges.size());
  // deterministic output
  CHECK(to_json(enumerate_crystal(NodeOrder::uglov(kS001_2), 2)).dump() == j.dump());

  const CrystalGraph bare = enumerate_crystal(NodeOrder::uglov(kS001_2), 2, {.with_edges = false});
  CHECK(!to_json(bare).contains("edges"));

  CHECK(to_dot(graph).find("label=\"[[1],[],[]]\"") != std::string::npos);
}
