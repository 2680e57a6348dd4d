#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mulx/affine_weyl.hpp"
#include "mulx/partition.hpp"

namespace mulx {

/// Strictly increasing non-negative beta-numbers, stored ascending.
class BetaRow {
 public:
  explicit BetaRow(std::vector<int> entries);
  /// beta_i = lambda_i - i + charge + m for i = 1..m+charge.
  static BetaRow of(const Partition& p, int charge, int m);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }

  bool operator==(const BetaRow&) const = default;

 private:
  std::vector<int> entries_;
};

/// Inverts the beta formula; throws not_a_symbol when the row does not
/// correspond to a partition for these parameters.
Partition partition_of_row(const BetaRow& row, int charge, int m);

/// Two-row symbol of a charged bipartition (lambda^{(c-1)}, lambda^{(c)}):
/// top row U for lambda^{(c)} with charges.second, bottom row D for
/// lambda^{(c-1)} with charges.first.
struct Symbol {
  BetaRow top;
  BetaRow bottom;
  std::pair<int, int> charges;
  int m = 1;
};

/// Smallest m giving both rows positive length and a 0 entry.
int minimal_m(const Partition& first, const Partition& second, std::pair<int, int> charges);

Symbol symbol_of(const Partition& first, const Partition& second, std::pair<int, int> charges,
                 std::optional<int> m_override = std::nullopt);

/// (lambda^{(c-1)}, lambda^{(c)}) back from a symbol.
std::pair<Partition, Partition> bipartition_of(const Symbol& sym);

/// The matching procedure on a pair of strictly increasing sequences.
/// When |U| >= |D|, each y of D in turn grabs the largest remaining x <= y
/// (the largest remaining x at all if none); the grabbed set becomes D' and
/// U' = (U minus grabbed) + D. Mirrored when |U| < |D|. Preserves the
/// multiset union and both lengths.
std::pair<std::vector<int>, std::vector<int>> pair_sequences(const std::vector<int>& U,
                                                             const std::vector<int>& D);

/// Crystal isomorphism toward sigma_c(s): pairs the symbol of
/// (lambda^{(c-1)}, lambda^{(c)}) and splices the recovered bipartition back
/// with the two components exchanged. c in 1..l-1.
Multipartition psi_sigma(const Multipartition& mp, const Multicharge& s, int c,
                         std::optional<int> m_override = std::nullopt);

/// Crystal isomorphism toward tau(s): left rotation of the components.
Multipartition psi_tau(const Multipartition& mp);
Multipartition psi_tau_inv(const Multipartition& mp);

struct PsiResult {
  Multipartition image;
  Multicharge charge;
};

/// Composes the elementary isomorphisms along the word, letters right to
/// left, threading the integer multicharge through act.
PsiResult psi_word(const Multipartition& mp, const Multicharge& s, const WeylWord& w);

struct StabilizedPsi {
  Multipartition image;
  int iterations = 0;  // earliest k from which the translation images are constant
};

/// Level-2 translation tower: repeatedly applies psi_tau(psi_sigma(.,1)),
/// moving the charge (s_0, s_1) to (s_0, s_1 + ke), up to the smallest m with
/// s_1 - s_0 + me > n - 1, where the image is guaranteed fixed. Returns that
/// image and the earliest k from which the sequence is constant. An early
/// repeat can be transient, so the iteration never stops before the bound.
StabilizedPsi psi_tau_stabilized(const Multipartition& mp, const Multicharge& s, int n);

}  // namespace mulx
