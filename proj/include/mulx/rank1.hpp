#pragma once

#include "mulx/partition.hpp"

namespace mulx {

/// Level-1 Mullineux involution on e-regular partitions: negate the residues
/// of a highest-weight path and replay it. Charge-independent, so computed at
/// charge 0. Throws not_regular when p is not e-regular.
Partition m1(const Partition& p, int e);

/// The e = infinity degeneration: ordinary conjugation.
Partition m1_infinity(const Partition& p);

}  // namespace mulx
