#include "mulx/symbols.hpp"

#include <algorithm>

namespace mulx {

BetaRow::BetaRow(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) fail(errc::malformed_input, "beta-numbers must be non-negative");
    if (i > 0 && entries_[i - 1] >= entries_[i])
      fail(errc::malformed_input, "beta-numbers must be strictly increasing");
  }
}

BetaRow BetaRow::of(const Partition& p, int charge, int m) {
  const int len = m + charge;
  internal_check(len >= 1, "beta row needs positive length");
  std::vector<int> out;
  out.reserve(len);
  for (int i = len; i >= 1; --i) out.push_back(p.part(i) - i + charge + m);
  return BetaRow(std::move(out));
}

Partition partition_of_row(const BetaRow& row, int charge, int m) {
  if (row.size() != m + charge)
    fail(errc::not_a_symbol, "row length " + std::to_string(row.size()) +
                                 " does not match m + charge = " + std::to_string(m + charge));
  std::vector<int> parts;
  parts.reserve(row.size());
  const auto& entries = row.entries();
  for (int idx = row.size() - 1; idx >= 0; --idx) {
    const int i = row.size() - idx;  // 1-based from the largest beta down
    const int part = entries[idx] + i - charge - m;
    if (part < 0)
      fail(errc::not_a_symbol, "row does not invert to a partition for charge " +
                                   std::to_string(charge) + ", m = " + std::to_string(m));
    parts.push_back(part);
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    internal_check(parts[i] >= parts[i + 1], "inverted parts not weakly decreasing");
  return Partition(std::move(parts));
}

int minimal_m(const Partition& first, const Partition& second, std::pair<int, int> charges) {
  // enlarged over max(d-s)+1 so both rows keep positive length for negative charges
  return std::max({first.rows() - charges.first, second.rows() - charges.second, -charges.first,
                   -charges.second, 0}) +
         1;
}

Symbol symbol_of(const Partition& first, const Partition& second, std::pair<int, int> charges,
                 std::optional<int> m_override) {
  const int m_min = minimal_m(first, second, charges);
  const int m = m_override.value_or(m_min);
  if (m < m_min)
    fail(errc::invalid_m, "m = " + std::to_string(m) + " below the minimal valid value " +
                              std::to_string(m_min));
  return Symbol{BetaRow::of(second, charges.second, m), BetaRow::of(first, charges.first, m),
                charges, m};
}

std::pair<Partition, Partition> bipartition_of(const Symbol& sym) {
  return {partition_of_row(sym.bottom, sym.charges.first, sym.m),
          partition_of_row(sym.top, sym.charges.second, sym.m)};
}

namespace {

void require_increasing(const std::vector<int>& v, const char* which,
                        errc code = errc::malformed_input) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] >= v[i + 1])
      fail(code, std::string(which) + " sequence is not strictly increasing");
  }
}

// Grabs, for each element of driver in ascending order, a partner from the
// multiset `pool`: the largest x <= y (largest overall if none) when
// take_below, mirrored otherwise. Returns (matched ascending, rest ascending).
std::pair<std::vector<int>, std::vector<int>> match_all(const std::vector<int>& driver,
                                                        std::vector<int> pool, bool take_below) {
  std::vector<int> matched;
  matched.reserve(driver.size());
  for (int y : driver) {
    if (pool.empty()) fail(errc::match_exhausted, "matching ran out of partners");
    // pool stays sorted ascending
    std::vector<int>::iterator pick;
    if (take_below) {
      auto it = std::upper_bound(pool.begin(), pool.end(), y);
      pick = it == pool.begin() ? std::prev(pool.end()) : std::prev(it);
    } else {
      auto it = std::lower_bound(pool.begin(), pool.end(), y);
      pick = it == pool.end() ? pool.begin() : it;
    }
    matched.push_back(*pick);
    pool.erase(pick);
  }
  std::sort(matched.begin(), matched.end());
  return {std::move(matched), std::move(pool)};
}

std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> pair_sequences(const std::vector<int>& U,
                                                             const std::vector<int>& D) {
  require_increasing(U, "U");
  require_increasing(D, "D");
  std::vector<int> u_out, d_out;
  if (U.size() >= D.size()) {
    auto [matched, rest] = match_all(D, U, /*take_below=*/true);
    d_out = std::move(matched);
    u_out = merged(std::move(rest), D);
  } else {
    auto [matched, rest] = match_all(U, D, /*take_below=*/false);
    u_out = std::move(matched);
    d_out = merged(std::move(rest), U);
  }
  // a repeat in either output means the matching consumed inconsistently
  require_increasing(u_out, "output U", errc::match_exhausted);
  require_increasing(d_out, "output D", errc::match_exhausted);
  return {std::move(u_out), std::move(d_out)};
}

Multipartition psi_sigma(const Multipartition& mp, const Multicharge& s, int c,
                         std::optional<int> m_override) {
  const int l = mp.level();
  if (c < 1 || c > l - 1)
    fail(errc::index_out_of_range,
         "component index " + std::to_string(c) + " outside 1.." + std::to_string(l - 1));
  if (s.level() != l) fail(errc::malformed_input, "multicharge level mismatch");

  const std::pair<int, int> charges{s.charges[c - 1], s.charges[c]};
  const Symbol sym = symbol_of(mp.component(c - 1), mp.component(c), charges, m_override);
  auto [u_out, d_out] = pair_sequences(sym.top.entries(), sym.bottom.entries());
  const Symbol paired{BetaRow(std::move(u_out)), BetaRow(std::move(d_out)), charges, sym.m};
  auto [lower, upper] = bipartition_of(paired);

  // splice back with the two components exchanged
  std::vector<Partition> next = mp.components();
  next[c - 1] = std::move(upper);
  next[c] = std::move(lower);
  return Multipartition(std::move(next));
}

Multipartition psi_tau(const Multipartition& mp) {
  std::vector<Partition> next = mp.components();
  std::rotate(next.begin(), next.begin() + 1, next.end());
  return Multipartition(std::move(next));
}

Multipartition psi_tau_inv(const Multipartition& mp) {
  std::vector<Partition> next = mp.components();
  std::rotate(next.begin(), next.end() - 1, next.end());
  return Multipartition(std::move(next));
}

PsiResult psi_word(const Multipartition& mp, const Multicharge& s, const WeylWord& w) {
  PsiResult cur{mp, s};
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const WeylWord step{std::vector<WeylLetter>{*it}};
    switch (it->kind) {
      case WeylLetter::Kind::sigma:
        cur.image = psi_sigma(cur.image, cur.charge, it->index);
        break;
      case WeylLetter::Kind::tau:
        cur.image = psi_tau(cur.image);
        break;
      case WeylLetter::Kind::tau_inv:
        cur.image = psi_tau_inv(cur.image);
        break;
    }
    cur.charge = act(step, cur.charge);
  }
  return cur;
}

StabilizedPsi psi_tau_stabilized(const Multipartition& mp, const Multicharge& s, int n) {
  if (mp.level() != 2 || s.level() != 2) fail(errc::malformed_input, "level 2 required");
  if (!s.e.is_finite()) fail(errc::malformed_input, "finite modulus required");
  if (n < mp.rank()) fail(errc::malformed_input, "n below the rank of the input");
  const int e = s.e.value();

  // smallest m with s_1 - s_0 + m e > n - 1; the image is guaranteed fixed there
  const int diff = s.charges[1] - s.charges[0];
  const int t = n - 1 - diff;
  const int bound = t < 0 ? 0 : t / e + 1;

  const WeylWord kappa = WeylWord({WeylLetter::tau()}) * WeylWord({WeylLetter::sigma(1)});
  std::vector<Multipartition> tower{mp};
  PsiResult cur{mp, s};
  for (int k = 0; k <= bound; ++k) {
    cur = psi_word(cur.image, cur.charge, kappa);
    tower.push_back(cur.image);
  }
  if (tower[bound] != tower[bound + 1])
    fail(errc::no_stabilization,
         "translation tower not stable at the bound m = " + std::to_string(bound));
  // earliest onset of the constant tail; a repeat before it can be transient
  int k = bound;
  while (k > 0 && tower[k - 1] == tower[bound]) --k;
  return {tower[bound], k};
}

}  // namespace mulx
