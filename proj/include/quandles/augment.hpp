#pragma once

#include <vector>

#include "quandles/perm_group.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

// A quandle bundled with its inner automorphism group and the augmentation
// map q -> S_q. augmentation[q] equals generator q of the group.
struct AugmentedQuandle {
  Quandle quandle;
  PermGroup group;
  std::vector<Permutation> augmentation;
};

AugmentedQuandle augmented(const Quandle& q);

// The group homomorphism Inn(Q) -> Inn(R) induced by a surjective quandle
// homomorphism h, determined on generators by S_q -> S_{h(q)} and extended by
// generator words. Well-definedness is guaranteed for surjective h; it is
// re-verified and any failure raises InternalCheckError. Non-surjective h is
// rejected with std::domain_error, since only surjections induce the map.
GroupHom induced_inn_hom(const QuandleHom& h);

}  // namespace quandles
