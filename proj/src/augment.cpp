#include "quandles/augment.hpp"

#include <stdexcept>

#include "quandles/error.hpp"

namespace quandles {

AugmentedQuandle augmented(const Quandle& q) {
  PermGroup group = inn(q);
  std::vector<Permutation> augmentation;
  augmentation.reserve(q.size());
  for (int x = 0; x < q.size(); ++x) augmentation.push_back(symmetry(q, x));
  return AugmentedQuandle{q, std::move(group), std::move(augmentation)};
}

GroupHom induced_inn_hom(const QuandleHom& h) {
  if (!h.is_surjective())
    throw std::domain_error("inner automorphism groups are functorial only on surjections");

  PermGroup source_group = inn(h.source());
  std::vector<Permutation> images;
  images.reserve(h.source().size());
  for (int x = 0; x < h.source().size(); ++x) images.push_back(symmetry(h.target(), h(x)));

  GroupHomResult result =
      hom_from_generator_images(source_group, images, h.target().size());
  internal_check(result.well_defined(),
                 "the induced map on inner automorphism groups must be well-defined "
                 "for a surjective homomorphism");
  internal_check(result.hom->image == inn(h.target()),
                 "the induced map must cover the target's inner automorphism group");
  return std::move(*result.hom);
}

}  // namespace quandles
