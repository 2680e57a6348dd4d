#include "mulx/mullineux.hpp"

#include <algorithm>
#include <chrono>

#include "mulx/rank1.hpp"

namespace mulx {

namespace {

std::vector<int> reduced_class(const std::vector<int>& charge_class, const Modulus& mod) {
  std::vector<int> out;
  out.reserve(charge_class.size());
  for (int c : charge_class) out.push_back(mod.reduce(c));
  return out;
}

std::vector<int> tilde_class(const std::vector<int>& cls, const Modulus& mod) {
  std::vector<int> out;
  out.reserve(cls.size());
  for (auto it = cls.rbegin(); it != cls.rend(); ++it) out.push_back(mod.reduce(-*it));
  return out;
}

}  // namespace

MullineuxResult mullineux(const Multipartition& mp, const std::vector<int>& charge_class, int e,
                          std::optional<int> n_opt) {
  const Modulus mod = Modulus::finite(e);
  const int l = mp.level();
  if (static_cast<int>(charge_class.size()) != l)
    fail(errc::malformed_input, "charge class level mismatch");
  const int n = n_opt.value_or(mp.rank());
  if (n < mp.rank()) fail(errc::malformed_input, "n below the rank of the input");

  for (int c = 0; c < l; ++c) {
    if (!is_e_regular(mp.component(c), e))
      fail(errc::not_regular_component, "component " + std::to_string(c) + " = " +
                                            compact(mp.component(c)) + " is not " +
                                            std::to_string(e) + "-regular");
  }

  MullineuxResult result;
  result.source_class = reduced_class(charge_class, mod);
  result.target_class = tilde_class(result.source_class, mod);

  const Multicharge source_lift{result.source_class, mod};
  if (!in_crystal(mp, NodeOrder::kleshchev(source_lift)))
    fail(errc::not_kleshchev, compact(mp) + " is not a Kleshchev vertex for its class");
  result.trace.push_back({"input", source_lift, mp});

  // componentwise level-1 involution; lands in the class of -𝔰
  std::vector<Partition> nu_parts;
  nu_parts.reserve(l);
  for (int c = 0; c < l; ++c) nu_parts.push_back(m1(mp.component(c), e));
  const Multipartition nu(std::move(nu_parts));
  std::vector<int> negated_class;
  negated_class.reserve(l);
  for (int c : result.source_class) negated_class.push_back(mod.reduce(-c));
  result.trace.push_back({"componentwise-m1", Multicharge{negated_class, mod}, nu});

  // asymptotic realization of -𝔰
  AsymptoticLift lift = asymptotic_lift(result.source_class, n, e, /*negate=*/true);
  internal_check(is_asymptotic(lift.charge, n), "lift not asymptotic");
  result.exponents = lift.exponents;
  result.trace.push_back({"asymptotic-lift", lift.charge, nu});

  // straightening word to the reversed negated class
  result.eta = eta_word(result.exponents, l);
  const Multicharge target = act(result.eta, lift.charge);
  internal_check(is_asymptotic(target, n), "eta image not asymptotic");
  internal_check(target.residue_class() == result.target_class,
                 "eta image in the wrong residue class");

  PsiResult image = psi_word(nu, lift.charge, result.eta);
  internal_check(image.charge.charges == target.charges, "psi charge drift");
  internal_check(image.image.rank() == mp.rank(), "rank not preserved");
  result.image = image.image;
  result.trace.push_back({"eta-image", target, result.image});
  return result;
}

Multipartition mullineux_oracle(const Multipartition& mp, const std::vector<int>& charge_class,
                                int e) {
  const Modulus mod = Modulus::finite(e);
  if (static_cast<int>(charge_class.size()) != mp.level())
    fail(errc::malformed_input, "charge class level mismatch");
  const std::vector<int> cls = reduced_class(charge_class, mod);

  const NodeOrder source = NodeOrder::kleshchev(Multicharge{cls, mod});
  Multipartition cur = mp;
  std::vector<int> path;
  while (!cur.is_empty()) {
    bool moved = false;
    for (int i : removable_residues(cur, source.charge())) {
      if (auto down = e_op(cur, i, source)) {
        path.push_back(i);
        cur = std::move(*down);
        moved = true;
        break;
      }
    }
    if (!moved)
      fail(errc::not_kleshchev, compact(mp) + " is not a Kleshchev vertex for its class");
  }
  std::reverse(path.begin(), path.end());
  for (int& i : path) i = mod.reduce(-i);

  const NodeOrder target = NodeOrder::kleshchev(Multicharge{tilde_class(cls, mod), mod});
  return follow_path(path, target);
}

Multipartition mullineux_infinity(const Multipartition& mp, const Multicharge& s) {
  if (s.e.is_finite()) fail(errc::malformed_input, "infinite modulus required");
  if (s.level() != mp.level()) fail(errc::malformed_input, "multicharge level mismatch");
  if (!in_crystal(mp, NodeOrder::uglov(s)))
    fail(errc::not_in_crystal, compact(mp) + " is not a crystal vertex for this multicharge");

  std::vector<Partition> conj;
  conj.reserve(mp.level());
  for (const Partition& p : mp.components()) conj.push_back(conjugate(p));

  Multicharge negated = s;
  for (int& c : negated.charges) c = -c;
  return psi_word(Multipartition(std::move(conj)), negated, w0_word(mp.level())).image;
}

SweepReport verify_sweep(int level, int e, int n_max) {
  if (level < 1) fail(errc::malformed_input, "level must be >= 1");
  const Modulus mod = Modulus::finite(e);
  const auto start = std::chrono::steady_clock::now();

  SweepReport report;
  report.level = level;
  report.e = e;
  report.n_max = n_max;

  std::vector<int> cls(level, 0);
  while (true) {
    ++report.classes;
    const std::vector<int> tilde = tilde_class(cls, mod);
    std::vector<int> neg_cls;
    for (int c : cls) neg_cls.push_back(mod.reduce(-c));
    const NodeOrder source = NodeOrder::kleshchev(Multicharge{cls, mod});
    const NodeOrder neg_order = NodeOrder::kleshchev(Multicharge{neg_cls, mod});
    const NodeOrder target = NodeOrder::kleshchev(Multicharge{tilde, mod});

    const CrystalGraph graph = enumerate_crystal(source, n_max, {.with_edges = false});
    for (const auto& layer : graph.layers) {
      for (const Multipartition& mp : layer) {
        ++report.vertices;
        const MullineuxResult piped = mullineux(mp, cls, e);
        const Multipartition from_oracle = mullineux_oracle(mp, cls, e);
        if (piped.image != from_oracle)
          report.mismatches.push_back({cls, mp, piped.image, from_oracle});
        if (!in_crystal(piped.image, target)) ++report.membership_failures;
        if (!in_crystal(piped.trace[1].mp, neg_order)) ++report.component_stage_failures;
        if (mullineux(piped.image, tilde, e).image != mp) ++report.involution_failures;
      }
    }

    int c = level - 1;
    while (c >= 0 && cls[c] == e - 1) cls[c--] = 0;
    if (c < 0) break;
    ++cls[c];
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mulx
