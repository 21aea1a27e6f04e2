#include "quandles/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "quandles/error.hpp"

namespace quandles {

namespace {

void require_inside_inn(const Quandle& q, const PermGroup& n, const PermGroup& g) {
  if (n.degree() != q.size())
    throw std::domain_error("subgroup degree does not match the quandle");
  if (!g.contains_subgroup(n))
    throw std::domain_error("subgroup does not lie in the inner automorphism group");
}

std::vector<std::vector<int>> orbit_partition(int degree, const PermGroup& n) {
  std::vector<std::vector<int>> blocks;
  std::vector<char> seen(degree, 0);
  for (int start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<int> block = orbit(start, n);
    for (int p : block) seen[p] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<int> block_index_of(int degree, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(degree, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int p : blocks[b]) block_of[p] = static_cast<int>(b);
  return block_of;
}

}  // namespace

std::vector<std::vector<int>> orbits_under(const Quandle& q, const PermGroup& n) {
  require_inside_inn(q, n, inn(q));
  return orbit_partition(q.size(), n);
}

CongruenceCheck is_congruence(const Quandle& q, const std::vector<std::vector<int>>& partition) {
  std::vector<int> block_of(q.size(), -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (int p : partition[b]) {
      if (p < 0 || p >= q.size() || block_of[p] != -1)
        throw std::invalid_argument("not a partition of the carrier");
      block_of[p] = static_cast<int>(b);
    }
  }
  for (int p = 0; p < q.size(); ++p)
    if (block_of[p] == -1) throw std::invalid_argument("partition misses an element");

  for (const auto& left : partition) {
    for (const auto& right : partition) {
      const int expected = block_of[q.op(left.front(), right.front())];
      for (int x : left)
        for (int y : right)
          if (block_of[q.op(x, y)] != expected)
            return CongruenceCheck{false, left.front(), right.front(), x, y};
    }
  }
  return CongruenceCheck{true, -1, -1, -1, -1};
}

OrbitQuotient orbit_quotient(const Quandle& q, const PermGroup& n) {
  const PermGroup g = inn(q);
  require_inside_inn(q, n, g);
  if (!is_normal(n, g))
    throw std::domain_error(
        "orbits carry an induced quandle operation if and only if the subgroup is "
        "normal in the inner automorphism group");

  auto blocks = orbit_partition(q.size(), n);
  auto block_of = block_index_of(q.size(), blocks);

  CongruenceCheck congruence = is_congruence(q, blocks);
  internal_check(congruence.congruent, "orbits of a normal subgroup must form a congruence");

  const int m = static_cast<int>(blocks.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = block_of[q.op(blocks[a].front(), blocks[b].front())];

  Quandle quotient = Quandle::from_table(std::move(table));
  QuandleHom projection(q, quotient, block_of);

  // The right action of inn(q) descends to blocks: the image block of
  // [x] . g must not depend on the representative x.
  for (const auto& gen : g.generators())
    for (int x = 0; x < q.size(); ++x)
      internal_check(block_of[gen(x)] == block_of[gen(blocks[block_of[x]].front())],
                     "block map must be equivariant for the inner automorphism action");

  // Pulled back along the projection, block orbits under the induced action
  // match the orbits of q under inn(q).
  std::vector<Permutation> induced;
  induced.reserve(g.generators().size());
  for (const auto& gen : g.generators()) {
    std::vector<int> images(m);
    for (int b = 0; b < m; ++b) images[b] = block_of[gen(blocks[b].front())];
    induced.emplace_back(std::move(images));
  }
  const PermGroup induced_group = PermGroup::generate(m, std::move(induced));
  const auto source_orbits = orbit_partition(q.size(), g);
  const auto block_orbits = orbit_partition(m, induced_group);
  const auto source_orbit_of = block_index_of(q.size(), source_orbits);
  const auto block_orbit_of = block_index_of(m, block_orbits);
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      internal_check((source_orbit_of[x] == source_orbit_of[y]) ==
                         (block_orbit_of[block_of[x]] == block_orbit_of[block_of[y]]),
                     "block orbits must pull back to the orbits of the source");

  return OrbitQuotient{q,        n,        std::move(quotient),
                       std::move(projection), std::move(block_of), std::move(blocks)};
}

PermGroup realizable_closure(const Quandle& q, const PermGroup& n) {
  OrbitQuotient oq = orbit_quotient(q, n);
  GroupHom induced = induced_inn_hom(oq.projection);
  PermGroup via_kernel = induced.kernel;

  const PermGroup g = induced.source;
  PermGroup via_stabilizers = g;
  for (const auto& block : oq.blocks)
    via_stabilizers = intersect(via_stabilizers, setwise_stabilizer(block, g));

  internal_check(via_kernel == via_stabilizers,
                 "the two formulas for the realizable-kernel closure must agree");
  return via_kernel;
}

bool is_realizable_kernel(const Quandle& q, const PermGroup& n) {
  return realizable_closure(q, n) == n;
}

bool is_rigid(const QuandleHom& h) {
  GroupHom induced = induced_inn_hom(h);
  return induced.kernel.is_trivial() && induced.image.order() == inn(h.target()).order();
}

SurjectionFactorization factor_surjection(const QuandleHom& h) {
  if (!h.is_surjective()) throw std::domain_error("factorization requires a surjection");

  GroupHom induced = induced_inn_hom(h);
  OrbitQuotient oq = orbit_quotient(h.source(), induced.kernel);

  std::vector<int> rigid_map(oq.blocks.size());
  for (std::size_t b = 0; b < oq.blocks.size(); ++b) {
    rigid_map[b] = h(oq.blocks[b].front());
    for (int x : oq.blocks[b])
      internal_check(h(x) == rigid_map[b],
                     "fibers of a surjection must refine the orbits of its kernel");
  }

  HomCheck check = check_hom(rigid_map, oq.quotient, h.target());
  internal_check(check.hom.has_value(), "the descended map must be a homomorphism");
  QuandleHom rigid_part = std::move(*check.hom);

  internal_check(oq.projection.then(rigid_part) == h,
                 "the factorization must compose back to the original map");
  internal_check(is_rigid(rigid_part), "the descended map must be rigid");
  return SurjectionFactorization{std::move(oq), std::move(rigid_part)};
}

OmegaResult omega(const Quandle& q, const PermGroup& n1, const PermGroup& n2) {
  if (!is_realizable_kernel(q, n1) || !is_realizable_kernel(q, n2))
    throw std::domain_error("both subgroups must be realizable kernels");

  OmegaResult result;
  for (const auto& e : n1.elements()) {
    if (!n2.contains(e)) {
      result.witness = e;
      return result;
    }
  }

  OrbitQuotient fine = orbit_quotient(q, n1);
  OrbitQuotient coarse = orbit_quotient(q, n2);
  std::vector<int> map(fine.blocks.size());
  for (std::size_t b = 0; b < fine.blocks.size(); ++b) {
    map[b] = coarse.block_of[fine.blocks[b].front()];
    for (int x : fine.blocks[b])
      internal_check(coarse.block_of[x] == map[b],
                     "finer orbits must sit inside coarser orbits");
  }

  HomCheck check = check_hom(map, fine.quotient, coarse.quotient);
  internal_check(check.hom.has_value(), "the descent between orbit quotients must be a homomorphism");
  internal_check(fine.projection.then(*check.hom) == coarse.projection,
                 "the descent must commute with the projections");
  result.hom = std::move(check.hom);
  return result;
}

}  // namespace quandles
