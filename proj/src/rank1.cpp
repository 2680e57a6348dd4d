#include "mulx/rank1.hpp"

#include "mulx/crystal.hpp"

namespace mulx {

Partition m1(const Partition& p, int e) {
  if (!is_e_regular(p, e))
    fail(errc::not_regular, compact(p) + " is not " + std::to_string(e) + "-regular");
  const NodeOrder ord = NodeOrder::uglov(Multicharge{{0}, Modulus::finite(e)});
  const Multipartition mp({p});
  std::vector<int> path = highest_weight_path(mp, ord);
  for (int& i : path) i = ord.charge().e.reduce(-i);
  return follow_path(path, ord).component(0);
}

Partition m1_infinity(const Partition& p) { return conjugate(p); }

}  // namespace mulx
