#include "quandles/coset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quandles/augment.hpp"
#include "quandles/error.hpp"

namespace quandles {

namespace {

// Unique conjugates g^-1 eta g over all of G.
std::vector<Permutation> eta_conjugates(const PermGroup& g, const Permutation& eta) {
  std::set<Permutation> conjugates;
  for (const auto& e : g.elements()) conjugates.insert(e.inverse() * eta * e);
  return {conjugates.begin(), conjugates.end()};
}

void validate_presentation(const CosetPresentation& p) {
  if (p.stabilizer.degree() != p.group.degree() || p.eta.degree() != p.group.degree())
    throw std::invalid_argument("presentation degree mismatch");
  if (!p.group.contains_subgroup(p.stabilizer))
    throw std::invalid_argument("stabilizer must be a subgroup of the group");

  if (!p.stabilizer.contains(p.eta))
    throw PresentationError("eta is not central in the stabilizer: it is not even a member (" +
                            p.eta.cycle_string() + ")");
  for (const auto& h : p.stabilizer.elements())
    if (!(h * p.eta == p.eta * h))
      throw PresentationError("eta is not central in the stabilizer: witness " +
                              h.cycle_string());

  PermGroup generated = PermGroup::generate(p.group.degree(), eta_conjugates(p.group, p.eta));
  if (!(generated == p.group)) {
    for (const auto& e : p.group.elements())
      if (!generated.contains(e))
        throw PresentationError("conjugates of eta fail to generate the group: " +
                                e.cycle_string() + " is not reached");
  }

  if (p.cosets != right_cosets(p.stabilizer, p.group))
    throw std::invalid_argument("coset list does not match the presentation");
}

}  // namespace

CosetPresentation make_presentation(PermGroup group, PermGroup stabilizer, Permutation eta) {
  std::vector<Coset> cosets = right_cosets(stabilizer, group);
  CosetPresentation p{std::move(group), std::move(stabilizer), std::move(eta), std::move(cosets),
                      -1};
  validate_presentation(p);
  return p;
}

int coset_index(const CosetPresentation& p, const Permutation& g) {
  for (std::size_t i = 0; i < p.cosets.size(); ++i) {
    const auto& members = p.cosets[i].members;
    if (std::binary_search(members.begin(), members.end(), g)) return static_cast<int>(i);
  }
  throw std::domain_error("element lies outside the presented group");
}

Permutation coset_action(const CosetPresentation& p, const Permutation& g) {
  std::vector<int> images(p.cosets.size());
  for (std::size_t i = 0; i < p.cosets.size(); ++i)
    images[i] = coset_index(p, p.cosets[i].representative * g);
  return Permutation(std::move(images));
}

PermGroup coset_action_group(const CosetPresentation& p) {
  std::vector<Permutation> images;
  images.reserve(p.group.generators().size());
  for (const auto& gen : p.group.generators()) images.push_back(coset_action(p, gen));
  return PermGroup::generate(static_cast<int>(p.cosets.size()), std::move(images));
}

Presented to_presentation(const Quandle& q, int base_point) {
  if (base_point < 0 || base_point >= q.size())
    throw std::invalid_argument("base point out of range");
  if (!is_connected(q)) throw std::domain_error("only connected quandles have a coset presentation");

  AugmentedQuandle aug = augmented(q);
  PermGroup stabilizer = point_stabilizer(base_point, aug.group);
  Permutation eta = aug.augmentation[base_point];

  CosetPresentation p = [&] {
    try {
      CosetPresentation built{aug.group, std::move(stabilizer), std::move(eta),
                              right_cosets(point_stabilizer(base_point, aug.group), aug.group),
                              base_point};
      validate_presentation(built);
      return built;
    } catch (const PresentationError& e) {
      throw InternalCheckError(std::string("presentation of a connected quandle must satisfy "
                                           "the invariants: ") +
                               e.what());
    }
  }();

  std::vector<int> identification(p.cosets.size());
  std::vector<char> hit(q.size(), 0);
  for (std::size_t i = 0; i < p.cosets.size(); ++i) {
    identification[i] = p.cosets[i].representative(base_point);
    internal_check(!hit[identification[i]], "coset identification must be injective");
    hit[identification[i]] = 1;
  }
  internal_check(p.cosets.size() == static_cast<std::size_t>(q.size()),
                 "coset identification must be a bijection");

  // Equivariance: the coset of (rep * g) matches base . rep . g.
  for (std::size_t i = 0; i < p.cosets.size(); ++i)
    for (const auto& gen : p.group.generators())
      internal_check(identification[coset_index(p, p.cosets[i].representative * gen)] ==
                         gen(identification[i]),
                     "coset identification must be equivariant");

  // The coset operation formula reproduces the quandle's table.
  for (std::size_t i = 0; i < p.cosets.size(); ++i) {
    const Permutation& gi = p.cosets[i].representative;
    for (std::size_t j = 0; j < p.cosets.size(); ++j) {
      const Permutation& gj = p.cosets[j].representative;
      int product = coset_index(p, gi * gj.inverse() * p.eta * gj);
      internal_check(q.op(identification[i], identification[j]) == identification[product],
                     "coset operation formula must reproduce the quandle operation");
    }
  }

  // The action on the cosets is faithful for a presentation derived from a
  // quandle: only the identity fixes every coset.
  for (const auto& e : p.group.elements())
    if (!e.is_identity())
      internal_check(!coset_action(p, e).is_identity(),
                     "the action of the inner automorphism group on the cosets must be faithful");

  return Presented{std::move(p), std::move(identification)};
}

BuiltQuandle from_presentation(const CosetPresentation& p) {
  validate_presentation(p);

  const int n = static_cast<int>(p.cosets.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    const Permutation& gi = p.cosets[i].representative;
    for (int j = 0; j < n; ++j) {
      const Permutation& gj = p.cosets[j].representative;
      table[i][j] = coset_index(p, gi * gj.inverse() * p.eta * gj);
    }
  }
  internal_check(!Quandle::check_table(table).has_value(),
                 "a valid presentation must yield a quandle");
  Quandle quandle = Quandle::from_table(std::move(table));
  internal_check(is_connected(quandle), "a valid presentation must yield a connected quandle");

  std::vector<Permutation> kernel_members;
  for (const auto& e : p.group.elements())
    if (coset_action(p, e).is_identity()) kernel_members.push_back(e);
  PermGroup action_kernel = PermGroup::generate(p.group.degree(), std::move(kernel_members));
  const bool faithful = action_kernel.is_trivial();

  // The inner automorphism group of the result is exactly the image of G in
  // the symmetric group on the cosets.
  PermGroup action_image = coset_action_group(p);
  internal_check(inn(quandle) == action_image,
                 "the inner automorphism group of a coset quandle must equal the induced action");
  if (faithful) {
    internal_check(are_isomorphic_groups(action_image, p.group),
                   "a faithful coset action must realize the group itself");
  } else {
    internal_check(are_isomorphic_groups(action_image, quotient_group(p.group, action_kernel).group()),
                   "an unfaithful coset action must realize the group modulo the action kernel");
  }

  return BuiltQuandle{std::move(quandle), faithful, std::move(action_kernel)};
}

QuotientPresentationResult quotient_presentation(const CosetPresentation& p, const PermGroup& n) {
  validate_presentation(p);
  BuiltQuandle built = from_presentation(p);
  if (!built.faithful)
    throw std::domain_error("quotient presentations require a faithful presentation");
  if (!p.group.contains_subgroup(n)) throw std::domain_error("kernel must lie in the group");

  const int num_cosets = static_cast<int>(p.cosets.size());
  std::vector<Permutation> transported;
  transported.reserve(n.order());
  for (const auto& e : n.elements()) transported.push_back(coset_action(p, e));
  PermGroup n_on_cosets = PermGroup::generate(num_cosets, std::move(transported));
  if (!is_realizable_kernel(built.quandle, n_on_cosets))
    throw std::domain_error("subgroup is not a realizable kernel for the coset quandle");

  OrbitQuotient oq = orbit_quotient(built.quandle, n_on_cosets);
  const Quandle& quotient = oq.quotient;
  const int base_block = oq.block_of[0];

  QuotientGroup qg = quotient_group(p.group, n);
  const PermGroup& reduced = qg.group();

  auto block_perm = [&](const Permutation& e) {
    Permutation action = coset_action(p, e);
    std::vector<int> images(oq.blocks.size());
    for (std::size_t b = 0; b < oq.blocks.size(); ++b) {
      images[b] = oq.block_of[action(oq.blocks[b].front())];
      for (int x : oq.blocks[b])
        internal_check(oq.block_of[action(x)] == images[b],
                       "group action must descend to the orbit blocks");
    }
    return Permutation(std::move(images));
  };

  // One preimage in G per element of G/N.
  std::vector<std::optional<Permutation>> preimage(reduced.order());
  for (const auto& e : p.group.elements()) {
    int idx = reduced.index_of(qg.project(e));
    internal_check(idx >= 0, "projection must land in the quotient group");
    if (!preimage[static_cast<std::size_t>(idx)]) preimage[static_cast<std::size_t>(idx)] = e;
  }

  std::vector<Permutation> h_images;
  h_images.reserve(p.stabilizer.order());
  for (const auto& h : p.stabilizer.elements()) h_images.push_back(qg.project(h));
  PermGroup quotient_stabilizer = PermGroup::generate(reduced.degree(), std::move(h_images));
  Permutation eta_image = qg.project(p.eta);

  std::vector<QuotientPresentationCheck> report;
  auto record = [&](const std::string& name, bool passed, const std::string& detail) {
    report.push_back(QuotientPresentationCheck{name, passed, detail});
  };

  {  // 1. The stabilizer of the base block is the image of H.
    std::vector<Permutation> stabilizing;
    for (std::size_t idx = 0; idx < reduced.order(); ++idx) {
      if (block_perm(*preimage[idx])(base_block) == base_block)
        stabilizing.push_back(reduced.elements()[idx]);
    }
    PermGroup observed = PermGroup::generate(reduced.degree(), std::move(stabilizing));
    record("quotient stabilizer is HN/N", observed == quotient_stabilizer,
           "observed order " + std::to_string(observed.order()) + ", image order " +
               std::to_string(quotient_stabilizer.order()));
  }
  {  // 2. The augmentation of the base block is the image of eta.
    bool ok = symmetry(quotient, base_block) == block_perm(p.eta);
    record("augmentation of the quotient base is eta N", ok,
           "symmetry " + symmetry(quotient, base_block).cycle_string());
  }
  {  // 3. eta N is central in the quotient stabilizer.
    bool ok = center(quotient_stabilizer).contains(eta_image);
    record("eta N is central in the quotient stabilizer", ok, eta_image.cycle_string());
  }
  {  // 4. The augmentation of a general coset is g^-1 eta g N.
    bool ok = true;
    std::string detail;
    for (const auto& e : p.group.elements()) {
      int block = oq.block_of[coset_index(p, e)];
      if (!(symmetry(quotient, block) == block_perm(e.inverse() * p.eta * e))) {
        ok = false;
        detail = "fails at " + e.cycle_string();
        break;
      }
    }
    record("augmentation of a general coset is its conjugated eta", ok, detail);
  }
  {  // 5. Those augmentation values generate G/N.
    std::vector<Permutation> gens;
    gens.reserve(p.group.order());
    for (const auto& e : p.group.elements()) gens.push_back(qg.project(e.inverse() * p.eta * e));
    PermGroup generated = PermGroup::generate(reduced.degree(), std::move(gens));
    record("conjugated eta values generate the quotient group", generated == reduced,
           "generated order " + std::to_string(generated.order()));
  }

  for (const auto& check : report)
    internal_check(check.passed, "quotient presentation check failed: " + check.name +
                                     (check.detail.empty() ? "" : " (" + check.detail + ")"));

  CosetPresentation reduced_presentation =
      make_presentation(reduced, quotient_stabilizer, eta_image);
  internal_check(reduced_presentation.cosets.size() == oq.blocks.size(),
                 "quotient presentation must have one coset per orbit block");
  internal_check(
      is_isomorphic(from_presentation(reduced_presentation).quandle, quotient).has_value(),
      "quotient presentation must present the orbit quotient");

  return QuotientPresentationResult{std::move(reduced_presentation), std::move(report)};
}

RigidQuotientResult rigid_quotient_of_presentation(const CosetPresentation& p, const PermGroup& k) {
  validate_presentation(p);
  if (k.degree() != p.group.degree() || !p.group.contains_subgroup(k))
    throw std::domain_error("K must be a subgroup of the presentation's group");
  BuiltQuandle source = from_presentation(p);
  if (!source.faithful)
    throw std::domain_error("rigid quotients require a faithful source presentation");

  RigidQuotientResult result;
  for (const auto& h : p.stabilizer.elements()) {
    if (!k.contains(h)) {
      result.failure = "the stabilizer is not contained in K";
      result.witness = h;
      return result;
    }
  }
  if (!k.contains(p.eta)) {
    result.failure = "eta does not lie in K";
    result.witness = p.eta;
    return result;
  }
  for (const auto& e : k.elements()) {
    if (!(e * p.eta == p.eta * e)) {
      result.failure = "eta is not central in K";
      result.witness = e;
      return result;
    }
  }

  CosetPresentation pk = make_presentation(p.group, k, p.eta);
  BuiltQuandle target = from_presentation(pk);
  if (!target.faithful) {
    result.failure = "the action on the cosets of K is not faithful";
    result.witness = target.action_kernel.elements()[1];
    return result;
  }

  std::vector<int> map(p.cosets.size());
  for (std::size_t i = 0; i < p.cosets.size(); ++i)
    map[i] = coset_index(pk, p.cosets[i].representative);
  HomCheck check = check_hom(map, source.quandle, target.quandle);
  internal_check(check.hom.has_value(), "the coset collapse must be a homomorphism");
  internal_check(check.hom->is_surjective(), "the coset collapse must be surjective");
  internal_check(is_rigid(*check.hom),
                 "the collapse onto the cosets of K must be rigid when both actions are faithful");
  result.hom = std::move(check.hom);
  return result;
}

bool rigid_iff_closure(const CosetPresentation& p, const PermGroup& k, const PermGroup& n) {
  validate_presentation(p);
  if (!p.group.contains_subgroup(n)) throw std::domain_error("N must be a subgroup of the group");
  if (!is_normal(n, p.group)) throw std::domain_error("N must be normal in the group");

  RigidQuotientResult collapse = rigid_quotient_of_presentation(p, k);
  if (!collapse.hom)
    throw std::domain_error("diagram requires a rigid collapse onto the cosets of K: " +
                            collapse.failure);

  BuiltQuandle source = from_presentation(p);
  const int source_cosets = static_cast<int>(p.cosets.size());
  std::vector<Permutation> on_source;
  on_source.reserve(n.order());
  for (const auto& e : n.elements()) on_source.push_back(coset_action(p, e));
  PermGroup n_source = PermGroup::generate(source_cosets, std::move(on_source));
  if (!is_realizable_kernel(source.quandle, n_source))
    throw std::domain_error("N must be a realizable kernel for the source quandle");

  CosetPresentation pk = make_presentation(p.group, k, p.eta);
  BuiltQuandle target = from_presentation(pk);
  std::vector<Permutation> on_target;
  on_target.reserve(n.order());
  for (const auto& e : n.elements()) on_target.push_back(coset_action(pk, e));
  PermGroup n_target = PermGroup::generate(static_cast<int>(pk.cosets.size()), std::move(on_target));

  const bool closure_matches = realizable_closure(target.quandle, n_target) == n_target;

  // Independent verification: build the induced map between the orbit
  // quotients and test its rigidity directly.
  OrbitQuotient source_quotient = orbit_quotient(source.quandle, n_source);
  OrbitQuotient target_quotient = orbit_quotient(target.quandle, n_target);
  const QuandleHom& c = *collapse.hom;
  std::vector<int> induced(source_quotient.blocks.size());
  for (std::size_t b = 0; b < source_quotient.blocks.size(); ++b) {
    induced[b] = target_quotient.block_of[c(source_quotient.blocks[b].front())];
    for (int x : source_quotient.blocks[b])
      internal_check(target_quotient.block_of[c(x)] == induced[b],
                     "the collapse must map orbit blocks into orbit blocks");
  }
  HomCheck check = check_hom(induced, source_quotient.quotient, target_quotient.quotient);
  internal_check(check.hom.has_value(), "the induced map between orbit quotients must exist");
  const bool directly_rigid = is_rigid(*check.hom);

  internal_check(closure_matches == directly_rigid,
                 "closure criterion and direct rigidity check must agree");
  return closure_matches;
}

PhiResult phi(const PermGroup& g, const PermGroup& k, const PermGroup& l, const Permutation& eta) {
  if (!g.contains_subgroup(k)) throw std::domain_error("K must be a subgroup of G");
  if (!g.contains_subgroup(l)) throw std::domain_error("L must be a subgroup of G");

  PhiResult result;
  auto central_in = [&](const PermGroup& sub, const char* name) {
    if (!sub.contains(eta)) {
      result.failure = std::string("eta does not lie in ") + name;
      result.witness = eta;
      return false;
    }
    for (const auto& e : sub.elements()) {
      if (!(e * eta == eta * e)) {
        result.failure = std::string("eta is not central in ") + name;
        result.witness = e;
        return false;
      }
    }
    return true;
  };
  if (!central_in(k, "K") || !central_in(l, "L")) return result;

  std::optional<CosetPresentation> pk, pl;
  try {
    pk = make_presentation(g, k, eta);
    pl = make_presentation(g, l, eta);
  } catch (const PresentationError& e) {
    result.failure = e.what();
    return result;
  }
  BuiltQuandle qk = from_presentation(*pk);
  BuiltQuandle ql = from_presentation(*pl);
  if (!qk.faithful) {
    result.failure = "the action on the cosets of K is not faithful";
    result.witness = qk.action_kernel.elements()[1];
    return result;
  }
  if (!ql.faithful) {
    result.failure = "the action on the cosets of L is not faithful";
    result.witness = ql.action_kernel.elements()[1];
    return result;
  }

  for (const auto& e : k.elements()) {
    if (!l.contains(e)) {
      result.failure = "K is not contained in L";
      result.witness = e;
      return result;
    }
  }

  std::vector<int> map(pk->cosets.size());
  for (std::size_t i = 0; i < pk->cosets.size(); ++i)
    map[i] = coset_index(*pl, pk->cosets[i].representative);
  HomCheck check = check_hom(map, qk.quandle, ql.quandle);
  internal_check(check.hom.has_value(), "the coset collapse must be a homomorphism when K <= L");
  internal_check(check.hom->is_surjective(), "the coset collapse must be surjective");
  internal_check(is_rigid(*check.hom), "the coset collapse must be rigid");
  // Commutes with the collapses from upstream: Kg and Lg match for every g.
  for (const auto& e : g.elements())
    internal_check(map[static_cast<std::size_t>(coset_index(*pk, e))] == coset_index(*pl, e),
                   "the collapse must send the coset of g to the coset of g");
  result.hom = std::move(check.hom);
  return result;
}

}  // namespace quandles
