#include "quandles/quandle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quandles/error.hpp"

namespace quandles {

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  switch (axiom) {
    case QuandleAxiom::Idempotence:
      out << "axiom i (idempotence): " << x << " |> " << x << " != " << x;
      break;
    case QuandleAxiom::RightInvertibility:
      out << "axiom ii (right-invertibility): column " << y << " is not a bijection (rows " << x
          << " and " << z << " collide)";
      break;
    case QuandleAxiom::RightDistributivity:
      out << "axiom iii (right-distributivity) fails at x=" << x << ", y=" << y << ", z=" << z;
      break;
  }
  return out.str();
}

AxiomError::AxiomError(AxiomViolation violation)
    : std::runtime_error(violation.describe()), violation_(violation) {}

std::optional<AxiomViolation> Quandle::check_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("quandle table must be nonempty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("quandle table must be square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("quandle table entry out of range");
  }

  for (int x = 0; x < n; ++x)
    if (table[x][x] != x) return AxiomViolation{QuandleAxiom::Idempotence, x, -1, -1};

  for (int y = 0; y < n; ++y) {
    std::vector<int> hit(n, -1);
    for (int x = 0; x < n; ++x) {
      int v = table[x][y];
      if (hit[v] >= 0)
        return AxiomViolation{QuandleAxiom::RightInvertibility, hit[v], y, x};
      hit[v] = x;
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[table[x][z]][table[y][z]])
          return AxiomViolation{QuandleAxiom::RightDistributivity, x, y, z};

  return std::nullopt;
}

Quandle Quandle::from_table(std::vector<std::vector<int>> table) {
  if (auto violation = check_table(table)) throw AxiomError(*violation);
  const int n = static_cast<int>(table.size());
  std::vector<std::vector<int>> inv_table(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) inv_table[table[x][y]][y] = x;
  return Quandle(std::move(table), std::move(inv_table));
}

Permutation symmetry(const Quandle& q, int x) {
  if (x < 0 || x >= q.size()) throw std::invalid_argument("quandle element out of range");
  std::vector<int> images(q.size());
  for (int y = 0; y < q.size(); ++y) images[y] = q.op(y, x);
  return Permutation(std::move(images));
}

PermGroup inn(const Quandle& q) {
  std::vector<Permutation> symmetries;
  symmetries.reserve(q.size());
  for (int x = 0; x < q.size(); ++x) symmetries.push_back(symmetry(q, x));
  return PermGroup::generate(q.size(), std::move(symmetries));
}

bool is_connected(const Quandle& q) {
  return static_cast<int>(orbit(0, inn(q)).size()) == q.size();
}

ConjQuandle conj_quandle(const PermGroup& g, const std::vector<Permutation>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("at least one seed element is required");
  for (const auto& seed : seeds)
    if (!g.contains(seed)) throw std::domain_error("seed lies outside the group");

  std::set<Permutation> carrier(seeds.begin(), seeds.end());
  std::vector<Permutation> frontier(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& gen : g.generators()) {
      for (const auto& conjugator : {gen, gen.inverse()}) {
        Permutation conjugate = conjugator.inverse() * current * conjugator;
        if (carrier.insert(conjugate).second) frontier.push_back(std::move(conjugate));
      }
    }
  }

  std::vector<Permutation> labeling(carrier.begin(), carrier.end());
  const int n = static_cast<int>(labeling.size());
  auto index_of = [&](const Permutation& p) {
    return static_cast<int>(std::lower_bound(labeling.begin(), labeling.end(), p) -
                            labeling.begin());
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = index_of(labeling[j].inverse() * labeling[i] * labeling[j]);

  internal_check(!Quandle::check_table(table).has_value(),
                 "conjugation table must satisfy the quandle axioms");
  return ConjQuandle{Quandle::from_table(std::move(table)), std::move(labeling)};
}

HomError::HomError(int x, int y)
    : std::runtime_error("homomorphism law fails at (" + std::to_string(x) + ", " +
                         std::to_string(y) + ")"),
      x_(x),
      y_(y) {}

std::optional<HomViolation> hom_violation(const Quandle& source, const Quandle& target,
                                          const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.size())
    throw std::invalid_argument("map must be total on the source");
  for (int v : map)
    if (v < 0 || v >= target.size()) throw std::invalid_argument("map value out of range");
  for (int x = 0; x < source.size(); ++x)
    for (int y = 0; y < source.size(); ++y)
      if (map[source.op(x, y)] != target.op(map[x], map[y])) return HomViolation{x, y};
  return std::nullopt;
}

QuandleHom::QuandleHom(Quandle source, Quandle target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto violation = hom_violation(source_, target_, map_))
    throw HomError(violation->x, violation->y);
  // Preservation of the inverse operation is a consequence; keep it checked.
  for (int x = 0; x < source_.size(); ++x)
    for (int y = 0; y < source_.size(); ++y)
      internal_check(map_[source_.inv_op(x, y)] == target_.inv_op(map_[x], map_[y]),
                     "homomorphism must preserve the inverse operation");
}

QuandleHom QuandleHom::identity(const Quandle& q) {
  std::vector<int> map(q.size());
  for (int x = 0; x < q.size(); ++x) map[x] = x;
  return QuandleHom(q, q, std::move(map));
}

bool QuandleHom::is_surjective() const {
  std::vector<char> hit(target_.size(), 0);
  for (int v : map_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool QuandleHom::is_bijective() const {
  return source_.size() == target_.size() && is_surjective();
}

QuandleHom QuandleHom::then(const QuandleHom& next) const {
  if (!(target_ == next.source()))
    throw std::invalid_argument("composition requires matching middle quandle");
  std::vector<int> composed(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) composed[x] = next.map()[map_[x]];
  return QuandleHom(source_, next.target(), std::move(composed));
}

HomCheck check_hom(const std::vector<int>& map, const Quandle& source, const Quandle& target) {
  HomCheck result;
  if (auto violation = hom_violation(source, target, map)) {
    result.violation = violation;
    return result;
  }
  result.hom = QuandleHom(source, target, map);
  return result;
}

ImageSubquandle image_subquandle(const QuandleHom& h) {
  std::set<int> image_set(h.map().begin(), h.map().end());
  std::vector<int> labeling(image_set.begin(), image_set.end());
  std::vector<int> position(h.target().size(), -1);
  for (std::size_t i = 0; i < labeling.size(); ++i) position[labeling[i]] = static_cast<int>(i);

  const int n = static_cast<int>(labeling.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int value = h.target().op(labeling[i], labeling[j]);
      internal_check(position[value] >= 0, "image of a homomorphism must be closed");
      table[i][j] = position[value];
    }
  return ImageSubquandle{Quandle::from_table(std::move(table)), std::move(labeling)};
}

namespace {

std::vector<std::vector<int>> symmetry_profiles(const Quandle& q) {
  std::vector<std::vector<int>> profiles(q.size());
  for (int x = 0; x < q.size(); ++x) profiles[x] = symmetry(q, x).cycle_type();
  return profiles;
}

bool iso_search(const Quandle& a, const Quandle& b, const std::vector<std::vector<int>>& pa,
                const std::vector<std::vector<int>>& pb, std::vector<int>& map,
                std::vector<char>& used, int x) {
  const int n = a.size();
  if (x == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[y] || pa[x] != pb[y]) continue;
    map[x] = y;
    used[y] = 1;
    bool consistent = true;
    for (int i = 0; i <= x && consistent; ++i)
      for (int j = 0; j <= x && consistent; ++j) {
        int t = a.op(i, j);
        if (map[t] >= 0 && b.op(map[i], map[j]) != map[t]) consistent = false;
      }
    if (consistent && iso_search(a, b, pa, pb, map, used, x + 1)) return true;
    map[x] = -1;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<QuandleHom> is_isomorphic(const Quandle& a, const Quandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto pa = symmetry_profiles(a);
  auto pb = symmetry_profiles(b);
  auto sorted_a = pa;
  auto sorted_b = pb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  std::vector<int> map(a.size(), -1);
  std::vector<char> used(a.size(), 0);
  if (!iso_search(a, b, pa, pb, map, used, 0)) return std::nullopt;
  return QuandleHom(a, b, std::move(map));
}

}  // namespace quandles
