#include "support/gen.hpp"

namespace mulx::test {

namespace {

void rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    rec(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  rec(n, n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n_max) {
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n) {
    auto batch = partitions_of(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<Multipartition> multipartitions_up_to(int level, int n_max) {
  std::vector<Multipartition> out;
  std::vector<std::vector<Partition>> by_rank;
  for (int n = 0; n <= n_max; ++n) by_rank.push_back(partitions_of(n));

  std::vector<Partition> acc;
  auto rec_mp = [&](auto&& self, int c, int left) -> void {
    if (c == level) {
      out.emplace_back(acc);
      return;
    }
    for (int n = 0; n <= left; ++n) {
      for (const Partition& p : by_rank[n]) {
        acc.push_back(p);
        self(self, c + 1, left - n);
        acc.pop_back();
      }
    }
  };
  rec_mp(rec_mp, 0, n_max);
  return out;
}

Partition random_partition(std::mt19937& rng, int max_rank) {
  std::uniform_int_distribution<int> rank_dist(0, max_rank);
  int left = rank_dist(rng);
  std::vector<int> parts;
  int cap = left;
  while (left > 0 && cap > 0) {
    std::uniform_int_distribution<int> part_dist(1, cap);
    int p = std::min(part_dist(rng), left);
    parts.push_back(p);
    cap = p;
    left -= p;
  }
  return Partition(std::move(parts));
}

std::vector<int> random_charges(std::mt19937& rng, int level, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<int> out(level);
  for (int& c : out) c = dist(rng);
  return out;
}

}  // namespace mulx::test
