#include "quandles/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <stdexcept>

#include "quandles/error.hpp"

namespace quandles {

namespace {

std::size_t g_element_cap = 100000;

}  // namespace

std::size_t default_element_cap() { return g_element_cap; }

void set_default_element_cap(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("element cap must be positive");
  g_element_cap = cap;
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators,
                              std::size_t element_cap) {
  if (degree < 1) throw std::invalid_argument("group degree must be at least 1");
  if (element_cap == 0) element_cap = default_element_cap();
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

  std::vector<Permutation> inverses;
  inverses.reserve(generators.size());
  for (const auto& g : generators) inverses.push_back(g.inverse());

  std::map<Permutation, Word> words;
  words.emplace(Permutation::identity(degree), Word{});
  std::deque<Permutation> frontier;
  frontier.push_back(Permutation::identity(degree));

  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    const Word base = words.at(current);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (bool inverted : {false, true}) {
        Permutation next = current * (inverted ? inverses[i] : generators[i]);
        if (words.count(next)) continue;
        Word word = base;
        word.push_back(WordLetter{static_cast<int>(i), inverted});
        words.emplace(next, std::move(word));
        if (words.size() > element_cap)
          throw ResourceLimitError("group closure exceeded the element cap");
        frontier.push_back(std::move(next));
      }
    }
  }

  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_.reserve(words.size());
  group.words_.reserve(words.size());
  for (auto& [element, word] : words) {
    group.elements_.push_back(element);
    group.words_.push_back(std::move(word));
  }
  return group;
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

bool PermGroup::contains(const Permutation& p) const { return index_of(p) >= 0; }

int PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return -1;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermGroup::contains_subgroup(const PermGroup& sub) const {
  if (sub.degree_ != degree_) return false;
  return std::includes(elements_.begin(), elements_.end(), sub.elements_.begin(),
                       sub.elements_.end());
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i])) return false;
  return true;
}

Permutation evaluate_word(const Word& word, const std::vector<Permutation>& generator_images,
                          int degree) {
  Permutation result = Permutation::identity(degree);
  for (const auto& letter : word) {
    const Permutation& image = generator_images.at(static_cast<std::size_t>(letter.generator));
    result = result * (letter.inverted ? image.inverse() : image);
  }
  return result;
}

std::vector<int> orbit(int point, const PermGroup& g) {
  if (point < 0 || point >= g.degree()) throw std::invalid_argument("point out of range");
  std::vector<char> seen(g.degree(), 0);
  seen[point] = 1;
  std::deque<int> frontier{point};
  while (!frontier.empty()) {
    int current = frontier.front();
    frontier.pop_front();
    for (const auto& gen : g.generators()) {
      for (int next : {gen(current), gen.inverse()(current)}) {
        if (!seen[next]) {
          seen[next] = 1;
          frontier.push_back(next);
        }
      }
    }
  }
  std::vector<int> result;
  for (int x = 0; x < g.degree(); ++x)
    if (seen[x]) result.push_back(x);
  return result;
}

PermGroup point_stabilizer(int point, const PermGroup& g) {
  if (point < 0 || point >= g.degree()) throw std::invalid_argument("point out of range");
  std::vector<Permutation> fixed;
  for (const auto& e : g.elements())
    if (e(point) == point) fixed.push_back(e);
  return PermGroup::generate(g.degree(), std::move(fixed));
}

PermGroup setwise_stabilizer(const std::vector<int>& block, const PermGroup& g) {
  if (block.empty()) throw std::domain_error("setwise stabilizer of an empty block");
  std::vector<char> in_block(g.degree(), 0);
  for (int p : block) {
    if (p < 0 || p >= g.degree()) throw std::invalid_argument("block point out of range");
    in_block[p] = 1;
  }
  std::vector<Permutation> stabilizing;
  for (const auto& e : g.elements()) {
    bool ok = true;
    for (int p : block)
      if (!in_block[e(p)]) {
        ok = false;
        break;
      }
    if (ok) stabilizing.push_back(e);
  }
  return PermGroup::generate(g.degree(), std::move(stabilizing));
}

bool is_normal(const PermGroup& n, const PermGroup& g) {
  if (!g.contains_subgroup(n)) throw std::domain_error("subgroup is not contained in the group");
  for (const auto& gen : g.generators()) {
    const Permutation gen_inv = gen.inverse();
    for (const auto& h : n.generators())
      if (!n.contains(gen_inv * h * gen)) return false;
  }
  return true;
}

PermGroup center(const PermGroup& h) {
  std::vector<Permutation> central;
  for (const auto& z : h.elements()) {
    bool commutes = true;
    for (const auto& gen : h.generators())
      if (!(z * gen == gen * z)) {
        commutes = false;
        break;
      }
    if (commutes) central.push_back(z);
  }
  return PermGroup::generate(h.degree(), std::move(central));
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g) {
  std::vector<std::vector<Permutation>> classes;
  std::set<Permutation> assigned;
  for (const auto& e : g.elements()) {
    if (assigned.count(e)) continue;
    std::set<Permutation> cls{e};
    std::deque<Permutation> frontier{e};
    while (!frontier.empty()) {
      Permutation current = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& gen : g.generators()) {
        Permutation conjugate = gen.inverse() * current * gen;
        if (cls.insert(conjugate).second) frontier.push_back(std::move(conjugate));
      }
    }
    classes.emplace_back(cls.begin(), cls.end());
    assigned.insert(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t cap) {
  if (cap == 0) cap = 5000;
  std::map<std::vector<Permutation>, PermGroup> found;
  auto insert = [&](PermGroup subgroup) -> bool {
    auto key = subgroup.elements();
    if (found.count(key)) return false;
    if (found.size() >= cap) throw ResourceLimitError("subgroup enumeration exceeded its cap");
    found.emplace(std::move(key), std::move(subgroup));
    return true;
  };

  insert(PermGroup::trivial(g.degree()));
  for (const auto& e : g.elements()) insert(PermGroup::generate(g.degree(), {e}));

  // Join closure: meet every pair until nothing new appears.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const PermGroup*> current;
    current.reserve(found.size());
    for (const auto& [key, sub] : found) current.push_back(&sub);
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i]->contains_subgroup(*current[j]) ||
            current[j]->contains_subgroup(*current[i]))
          continue;
        std::vector<Permutation> gens = current[i]->generators();
        gens.insert(gens.end(), current[j]->generators().begin(),
                    current[j]->generators().end());
        PermGroup join = PermGroup::generate(g.degree(), std::move(gens));
        if (insert(std::move(join))) grew = true;
      }
    }
  }

  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (auto& [key, sub] : found) result.push_back(std::move(sub));
  std::sort(result.begin(), result.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return result;
}

std::vector<PermGroup> all_normal_subgroups(const PermGroup& g, std::size_t cap) {
  if (cap == 0) cap = default_element_cap();
  if (g.order() > cap)
    throw ResourceLimitError("normal subgroup enumeration requires the group under the cap");

  const auto classes = conjugacy_classes(g);
  std::map<std::vector<Permutation>, PermGroup> found;
  std::deque<const PermGroup*> queue;
  auto insert = [&](PermGroup subgroup) {
    auto key = subgroup.elements();
    auto [it, fresh] = found.emplace(std::move(key), std::move(subgroup));
    if (fresh) queue.push_back(&it->second);
  };

  insert(PermGroup::trivial(g.degree()));
  while (!queue.empty()) {
    const PermGroup* current = queue.front();
    queue.pop_front();
    for (const auto& cls : classes) {
      if (current->contains(cls.front())) continue;
      // A subgroup generated by whole conjugacy classes is normal.
      std::vector<Permutation> gens = current->generators();
      gens.insert(gens.end(), cls.begin(), cls.end());
      insert(PermGroup::generate(g.degree(), std::move(gens)));
    }
  }

  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (auto& [key, sub] : found) result.push_back(std::move(sub));
  std::sort(result.begin(), result.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return result;
}

std::vector<Coset> right_cosets(const PermGroup& h, const PermGroup& g) {
  if (!g.contains_subgroup(h)) throw std::domain_error("cosets require a subgroup");
  std::vector<char> assigned(g.order(), 0);
  std::vector<Coset> cosets;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    std::vector<Permutation> members;
    members.reserve(h.order());
    for (const auto& e : h.elements()) members.push_back(e * g.elements()[i]);
    std::sort(members.begin(), members.end());
    for (const auto& m : members) assigned[static_cast<std::size_t>(g.index_of(m))] = 1;
    Coset coset{members.front(), std::move(members)};
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

PermGroup intersect(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("group degree mismatch");
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return PermGroup::generate(a.degree(), std::move(common));
}

QuotientGroup::QuotientGroup(PermGroup group, std::vector<Coset> cosets,
                             std::map<Permutation, int> member_index)
    : group_(std::move(group)), cosets_(std::move(cosets)), member_index_(std::move(member_index)) {}

int QuotientGroup::coset_index(const Permutation& g) const {
  auto it = member_index_.find(g);
  if (it == member_index_.end()) throw std::domain_error("element lies outside the group");
  return it->second;
}

Permutation QuotientGroup::project(const Permutation& g) const {
  std::vector<int> images(cosets_.size());
  for (std::size_t i = 0; i < cosets_.size(); ++i)
    images[i] = coset_index(cosets_[i].representative * g);
  return Permutation(std::move(images));
}

QuotientGroup quotient_group(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(n, g)) throw std::domain_error("quotient requires a normal subgroup");
  std::vector<Coset> cosets = right_cosets(n, g);
  std::map<Permutation, int> member_index;
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (const auto& m : cosets[i].members) member_index.emplace(m, static_cast<int>(i));

  QuotientGroup quotient(PermGroup::trivial(1), std::move(cosets), std::move(member_index));
  std::vector<Permutation> induced;
  induced.reserve(g.generators().size());
  for (const auto& gen : g.generators()) {
    std::vector<int> images(quotient.cosets_.size());
    for (std::size_t i = 0; i < quotient.cosets_.size(); ++i)
      images[i] = quotient.coset_index(quotient.cosets_[i].representative * gen);
    induced.emplace_back(std::move(images));
  }
  quotient.group_ =
      PermGroup::generate(static_cast<int>(quotient.cosets_.size()), std::move(induced));
  return quotient;
}

const Permutation& GroupHom::apply(const Permutation& g) const {
  int index = source.index_of(g);
  if (index < 0) throw std::domain_error("element lies outside the homomorphism's source");
  return image_of[static_cast<std::size_t>(index)];
}

PermGroup GroupHom::map_subgroup(const PermGroup& sub) const {
  std::vector<Permutation> images;
  images.reserve(sub.order());
  for (const auto& e : sub.elements()) images.push_back(apply(e));
  return PermGroup::generate(target_degree, std::move(images));
}

GroupHomResult hom_from_generator_images(const PermGroup& g,
                                         const std::vector<Permutation>& generator_images,
                                         int target_degree) {
  if (generator_images.size() != g.generators().size())
    throw std::invalid_argument("one image per generator required");
  for (const auto& image : generator_images)
    if (image.degree() != target_degree) throw std::invalid_argument("image degree mismatch");

  std::vector<Permutation> image_of;
  image_of.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    image_of.push_back(evaluate_word(g.word_at(i), generator_images, target_degree));

  // Verify every defining product image(e * gen) = image(e) * image(gen);
  // multiplicativity on all pairs follows by induction on words.
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      Permutation product = g.elements()[a] * g.generators()[i];
      int index = g.index_of(product);
      if (index < 0) throw InternalCheckError("group is not closed under its generators");
      if (!(image_of[static_cast<std::size_t>(index)] == image_of[a] * generator_images[i])) {
        GroupHomResult result;
        result.bad_element = static_cast<int>(a);
        result.bad_generator = static_cast<int>(i);
        return result;
      }
    }
  }

  std::vector<Permutation> kernel_elements;
  for (std::size_t a = 0; a < g.order(); ++a)
    if (image_of[a].is_identity()) kernel_elements.push_back(g.elements()[a]);

  GroupHomResult result;
  result.hom = GroupHom{g, target_degree, std::move(image_of),
                        PermGroup::generate(g.degree(), std::move(kernel_elements)),
                        PermGroup::generate(target_degree, generator_images)};
  return result;
}

namespace {

// Greedy small generating set, scanning elements in sorted order.
std::vector<Permutation> small_generating_set(const PermGroup& g) {
  std::vector<Permutation> gens;
  PermGroup span = PermGroup::trivial(g.degree());
  for (const auto& e : g.elements()) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = PermGroup::generate(g.degree(), gens);
    if (span.order() == g.order()) break;
  }
  return gens;
}

bool isomorphism_search(const PermGroup& regenerated, const PermGroup& b,
                        const std::vector<Permutation>& gens,
                        const std::vector<std::size_t>& partial_orders,
                        std::vector<Permutation>& chosen, std::size_t depth) {
  if (depth == gens.size()) {
    GroupHomResult result = hom_from_generator_images(regenerated, chosen, b.degree());
    return result.well_defined() && result.hom->kernel.is_trivial() &&
           result.hom->image.order() == b.order();
  }
  int wanted_order = gens[depth].order();
  for (const auto& candidate : b.elements()) {
    if (candidate.order() != wanted_order) continue;
    chosen.push_back(candidate);
    if (PermGroup::generate(b.degree(), chosen).order() == partial_orders[depth] &&
        isomorphism_search(regenerated, b, gens, partial_orders, chosen, depth + 1))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool are_isomorphic_groups(const PermGroup& a, const PermGroup& b, std::size_t order_cap) {
  if (a.order() != b.order()) return false;
  if (a.order() > order_cap)
    throw ResourceLimitError("isomorphism test is capped to small groups");

  std::multiset<int> orders_a, orders_b;
  for (const auto& e : a.elements()) orders_a.insert(e.order());
  for (const auto& e : b.elements()) orders_b.insert(e.order());
  if (orders_a != orders_b) return false;

  std::vector<Permutation> gens = small_generating_set(a);
  if (gens.empty()) return true;  // both trivial
  PermGroup regenerated = PermGroup::generate(a.degree(), gens);

  std::vector<std::size_t> partial_orders(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    partial_orders[i] =
        PermGroup::generate(a.degree(),
                            std::vector<Permutation>(gens.begin(), gens.begin() + i + 1))
            .order();

  std::vector<Permutation> chosen;
  return isomorphism_search(regenerated, b, gens, partial_orders, chosen, 0);
}

}  // namespace quandles
