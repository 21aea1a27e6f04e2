#pragma once

#include <optional>
#include <vector>

#include "quandles/augment.hpp"
#include "quandles/perm_group.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

// Orbit partition of the carrier of q under a subgroup n <= inn(q), blocks
// ordered by least element.
std::vector<std::vector<int>> orbits_under(const Quandle& q, const PermGroup& n);

// Does [x |> y] depend only on the blocks of x and y? On failure the witness
// holds two pairs with blockwise-equal inputs but different output blocks.
struct CongruenceCheck {
  bool congruent = false;
  int x1 = -1, y1 = -1, x2 = -1, y2 = -1;
};
CongruenceCheck is_congruence(const Quandle& q, const std::vector<std::vector<int>>& partition);

// The quotient of q by the orbits of a normal subgroup of inn(q), with the
// operation [x] |> [y] = [x |> y].
struct OrbitQuotient {
  Quandle source;
  PermGroup kernel_subgroup;  // the subgroup the orbits were taken under
  Quandle quotient;
  QuandleHom projection;
  std::vector<int> block_of;            // element -> block index
  std::vector<std::vector<int>> blocks;  // block index -> sorted elements
};

// Requires n normal in inn(q) (orbits carry an induced operation exactly for
// normal subgroups; non-normal input is rejected with std::domain_error).
// Also asserts that the right action of inn(q) descends to the blocks and
// that pulled-back block orbits match the orbits of q under inn(q).
OrbitQuotient orbit_quotient(const Quandle& q, const PermGroup& n);

// The smallest realizable kernel containing n: computed both as the kernel
// of the induced map on inner automorphism groups of the projection, and as
// the intersection over all elements of the setwise stabilizers of their
// orbit blocks. The two computations must agree.
PermGroup realizable_closure(const Quandle& q, const PermGroup& n);

// n equals its own closure?
bool is_realizable_kernel(const Quandle& q, const PermGroup& n);

// Does the surjection h induce an isomorphism of inner automorphism groups?
bool is_rigid(const QuandleHom& h);

// Canonical factorization of a surjection h: the orbit quotient by
// ker(Inn(h)) followed by a rigid surjection, with rigid(projection) = h.
struct SurjectionFactorization {
  OrbitQuotient orbit_part;
  QuandleHom rigid_part;
};
SurjectionFactorization factor_surjection(const QuandleHom& h);

// The descent q.N1 -> q.N2 between orbit quotients by realizable kernels.
// Exists iff n1 <= n2; otherwise `witness` lies in n1 but not in n2.
struct OmegaResult {
  std::optional<QuandleHom> hom;
  std::optional<Permutation> witness;
};
OmegaResult omega(const Quandle& q, const PermGroup& n1, const PermGroup& n2);

}  // namespace quandles
