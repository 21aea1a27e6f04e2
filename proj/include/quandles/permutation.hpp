#pragma once

#include <compare>
#include <string>
#include <vector>

namespace quandles {

// A bijection of {0..degree-1}.
//
// Composition is fixed as "left acts first": (p * q)(x) = q(p(x)). Groups
// act on points from the right, x . g = g(x), so that x . (p * q) equals
// (x . p) . q throughout the library.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  // Transposition (a b) on `degree` points.
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;  // apply *this, then rhs
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  // Cycle lengths >= 2, sorted; the conjugacy invariant used for pruning.
  std::vector<int> cycle_type() const;

  // Disjoint cycle notation with 0-based points, e.g. "(0 1 2)(3 4)";
  // the identity prints as "id".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
  return p * q;
}

// Parses disjoint-cycle notation ("(0 1 2)(3 4)", "()" or "id") into a
// permutation of the given degree. Points may be separated by spaces or
// commas. Throws std::invalid_argument on malformed input.
Permutation parse_permutation(const std::string& text, int degree);

}  // namespace quandles
