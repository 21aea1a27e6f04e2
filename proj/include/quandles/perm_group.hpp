#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "quandles/permutation.hpp"

namespace quandles {

// One letter of a generator word; `inverted` selects the generator's inverse.
struct WordLetter {
  int generator = 0;
  bool inverted = false;
};
using Word = std::vector<WordLetter>;

// Cap on materialized elements for closure computations. May be overridden
// once at startup (the CLI honors QUANDLES_ELEMENT_CAP); not synchronized.
std::size_t default_element_cap();
void set_default_element_cap(std::size_t cap);

// A finite permutation group with every element materialized.
//
// Elements are kept sorted by image array, so all derived data is
// reproducible. Each element records a word in the generators evaluating to
// it; homomorphisms defined on generators are extended to the whole group by
// replaying these words.
class PermGroup {
 public:
  // Breadth-first closure of the generators under composition and inversion.
  // Throws ResourceLimitError once more than `element_cap` elements appear
  // (0 means default_element_cap()).
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::size_t element_cap = 0);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Word& word_at(std::size_t element_index) const { return words_[element_index]; }

  bool contains(const Permutation& p) const;
  int index_of(const Permutation& p) const;  // -1 when absent
  bool contains_subgroup(const PermGroup& sub) const;
  bool is_abelian() const;

  // Groups compare as subgroups of the same symmetric group: equal element
  // sets, regardless of how they were generated.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup() = default;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Word> words_;
};

// Replays a word against substituted generator images.
Permutation evaluate_word(const Word& word,
                          const std::vector<Permutation>& generator_images,
                          int degree);

// Right coset Hg: sorted members, represented by the lexicographically least.
struct Coset {
  Permutation representative;
  std::vector<Permutation> members;

  friend bool operator==(const Coset&, const Coset&) = default;
};

// { point . g : g in G }, sorted; computed by generator BFS.
std::vector<int> orbit(int point, const PermGroup& g);

// Subgroup fixing `point`; the filtered elements serve as its generators.
PermGroup point_stabilizer(int point, const PermGroup& g);

// Subgroup mapping `block` onto itself as a set. The block must be nonempty.
PermGroup setwise_stabilizer(const std::vector<int>& block, const PermGroup& g);

// True iff conjugation by every generator of g maps the generators of n back
// into n. Requires n <= g.
bool is_normal(const PermGroup& n, const PermGroup& g);

PermGroup center(const PermGroup& h);

// Classes ordered by least member, members sorted.
std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g);

// Every subgroup, via join closure of the cyclic subgroups. Sorted by order
// then element list. `cap` bounds the subgroup count (0 = default cap).
std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t cap = 0);

// Every normal subgroup, via closures of unions of conjugacy classes.
// Sorted by order then element list.
std::vector<PermGroup> all_normal_subgroups(const PermGroup& g, std::size_t cap = 0);

// Partition of g into right cosets of h. The coset of the identity comes
// first; the rest follow in order of their representatives.
std::vector<Coset> right_cosets(const PermGroup& h, const PermGroup& g);

PermGroup intersect(const PermGroup& a, const PermGroup& b);

// G/N realized as the right-multiplication action of G on the cosets of N.
class QuotientGroup {
 public:
  const PermGroup& group() const { return group_; }
  const std::vector<Coset>& cosets() const { return cosets_; }
  int coset_index(const Permutation& g) const;
  Permutation project(const Permutation& g) const;  // induced coset permutation

 private:
  friend QuotientGroup quotient_group(const PermGroup&, const PermGroup&);
  QuotientGroup(PermGroup group, std::vector<Coset> cosets, std::map<Permutation, int> member_index);

  PermGroup group_;
  std::vector<Coset> cosets_;
  std::map<Permutation, int> member_index_;
};

// Requires n normal in g.
QuotientGroup quotient_group(const PermGroup& g, const PermGroup& n);

// A group homomorphism out of `source`, stored element by element.
struct GroupHom {
  PermGroup source;
  int target_degree = 0;
  std::vector<Permutation> image_of;  // parallel to source.elements()
  PermGroup kernel;
  PermGroup image;

  const Permutation& apply(const Permutation& g) const;
  PermGroup map_subgroup(const PermGroup& sub) const;
};

struct GroupHomResult {
  std::optional<GroupHom> hom;
  // Witness when the assignment is not well-defined: the element index and
  // generator index at which image(e * g) != image(e) * image(g).
  int bad_element = -1;
  int bad_generator = -1;
  bool well_defined() const { return hom.has_value(); }
};

// Extends a generator assignment to the whole group by word evaluation and
// verifies every defining product. An inconsistent assignment is reported,
// not thrown.
GroupHomResult hom_from_generator_images(const PermGroup& g,
                                         const std::vector<Permutation>& generator_images,
                                         int target_degree);

// Abstract isomorphism test by generator-image backtracking, pruned by
// element-order profiles. Only intended for small groups; throws
// ResourceLimitError above `order_cap`.
bool are_isomorphic_groups(const PermGroup& a, const PermGroup& b,
                           std::size_t order_cap = 200);

}  // namespace quandles
