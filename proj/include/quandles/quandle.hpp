#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/perm_group.hpp"
#include "quandles/permutation.hpp"

namespace quandles {

enum class QuandleAxiom { Idempotence, RightInvertibility, RightDistributivity };

// Names the violated axiom together with a witness. Unused witness slots
// stay at -1. For right-invertibility the witness is a column y whose map
// x -> x |> y collides at rows x and z.
struct AxiomViolation {
  QuandleAxiom axiom = QuandleAxiom::Idempotence;
  int x = -1;
  int y = -1;
  int z = -1;
  std::string describe() const;
};

class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(AxiomViolation violation);
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

// A finite quandle as an n-by-n operation table, table[x][y] = x |> y.
//
// Elements are labeled 0..n-1. The inverse operation x |>^-1 y is stored as
// well: its column y is the inverse of the column y of the main table. Both
// tables are validated at construction and immutable afterwards.
class Quandle {
 public:
  // Returns the violated axiom with a witness, or nullopt for a valid table.
  // Shape problems (non-square rows, out-of-range entries) throw
  // std::invalid_argument instead, since no axiom witness exists for them.
  static std::optional<AxiomViolation> check_table(const std::vector<std::vector<int>>& table);

  // Validates and wraps a table; throws AxiomError on an axiom violation.
  static Quandle from_table(std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(table_.size()); }
  int op(int x, int y) const { return table_[x][y]; }      // x |> y
  int inv_op(int x, int y) const { return inv_table_[x][y]; }  // x |>^-1 y
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::vector<int>>& inverse_table() const { return inv_table_; }

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.table_ == b.table_; }
  friend auto operator<=>(const Quandle& a, const Quandle& b) { return a.table_ <=> b.table_; }

 private:
  explicit Quandle(std::vector<std::vector<int>> table, std::vector<std::vector<int>> inv_table)
      : table_(std::move(table)), inv_table_(std::move(inv_table)) {}

  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> inv_table_;
};

// The symmetry at x: the permutation y -> y |> x. Always an automorphism.
Permutation symmetry(const Quandle& q, int x);

// Inner automorphism group, generated by the symmetries; generator i is the
// symmetry at element i.
PermGroup inn(const Quandle& q);

// Single orbit under inn(q)?
bool is_connected(const Quandle& q);

// The union of the conjugacy classes of `seeds` in g, as a quandle under
// x |> y = y^-1 x y (so the symmetry at y is conjugation by y, matching the
// right-action convention). labeling[i] is the group element carried by
// quandle element i, in sorted order.
struct ConjQuandle {
  Quandle quandle;
  std::vector<Permutation> labeling;
};
ConjQuandle conj_quandle(const PermGroup& g, const std::vector<Permutation>& seeds);

class HomError : public std::runtime_error {
 public:
  HomError(int x, int y);
  int x() const { return x_; }
  int y() const { return y_; }

 private:
  int x_, y_;
};

// A quandle homomorphism kept with copies of both quandles. The defining law
// map[x |> y] = map[x] |>' map[y] is checked at construction (preservation of
// the inverse operation follows and is asserted too).
class QuandleHom {
 public:
  QuandleHom(Quandle source, Quandle target, std::vector<int> map);
  static QuandleHom identity(const Quandle& q);

  const Quandle& source() const { return source_; }
  const Quandle& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int x) const { return map_[x]; }

  bool is_surjective() const;
  bool is_bijective() const;
  QuandleHom then(const QuandleHom& next) const;

  friend bool operator==(const QuandleHom& a, const QuandleHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

 private:
  Quandle source_;
  Quandle target_;
  std::vector<int> map_;
};

// (x, y) at which the homomorphism law fails, or nullopt.
struct HomViolation {
  int x = -1;
  int y = -1;
};
std::optional<HomViolation> hom_violation(const Quandle& source, const Quandle& target,
                                          const std::vector<int>& map);

struct HomCheck {
  std::optional<QuandleHom> hom;
  std::optional<HomViolation> violation;
};
HomCheck check_hom(const std::vector<int>& map, const Quandle& source, const Quandle& target);

// The induced quandle on the image of h; labeling[i] is the target element
// carried by image element i.
struct ImageSubquandle {
  Quandle quandle;
  std::vector<int> labeling;
};
ImageSubquandle image_subquandle(const QuandleHom& h);

// Backtracking isomorphism search, pruned by symmetry cycle types.
// Deterministic: returns the first isomorphism in lexicographic image order.
std::optional<QuandleHom> is_isomorphic(const Quandle& a, const Quandle& b);

}  // namespace quandles
