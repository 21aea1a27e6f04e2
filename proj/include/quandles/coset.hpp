#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/perm_group.hpp"
#include "quandles/quandle.hpp"
#include "quandles/quotient.hpp"

namespace quandles {

// A presentation invariant does not hold; the message carries the witness.
class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data presenting a connected quandle on the right cosets of a stabilizer:
// a group G, a subgroup H, and an element eta that is central in H and whose
// conjugates generate G. The operation on cosets is
//
//   Hg |> Hc = H g c^-1 eta c.
//
// The trivial coset H is always index 0. base_point records the quandle
// element the presentation was derived from, or -1 when not applicable.
struct CosetPresentation {
  PermGroup group;
  PermGroup stabilizer;
  Permutation eta;
  std::vector<Coset> cosets;
  int base_point = -1;
};

// Builds the coset list and checks the invariants, reporting the failed one
// with a witness via PresentationError.
CosetPresentation make_presentation(PermGroup group, PermGroup stabilizer, Permutation eta);

// Index of the coset containing g. Throws std::domain_error for g outside G.
int coset_index(const CosetPresentation& p, const Permutation& g);

// The permutation of coset indices induced by right multiplication with g.
Permutation coset_action(const CosetPresentation& p, const Permutation& g);

// Image of G in the symmetric group on the cosets.
PermGroup coset_action_group(const CosetPresentation& p);

// Presentation of a connected quandle from a base point: G = inn(q),
// H = the stabilizer of the base point, eta = the symmetry at it.
// identification[i] is the quandle element matched with coset i (coset Hg
// corresponds to base . g); it is an equivariant bijection, and the coset
// operation formula is checked against the quandle's table.
struct Presented {
  CosetPresentation presentation;
  std::vector<int> identification;
};
Presented to_presentation(const Quandle& q, int base_point);

// The quandle built from a presentation, on coset indices. action_kernel is
// { g in G : every coset is fixed by g }; the presentation is faithful when
// it is trivial, and then the inner automorphism group of the result is the
// isomorphic image of G. Otherwise it realizes G modulo the kernel, which is
// verified against the quotient group.
struct BuiltQuandle {
  Quandle quandle;
  bool faithful = false;
  PermGroup action_kernel;
};
BuiltQuandle from_presentation(const CosetPresentation& p);

// Presentation of the orbit quotient of a presented quandle by a realizable
// kernel N: the group becomes G/N, the stabilizer HN/N, and eta its coset.
// The report records the five verified facts: the quotient stabilizer is
// HN/N; its augmentation value is eta N; eta N is central in it; the
// augmentation of a general coset is g^-1 eta g N; and these augmentation
// values generate G/N.
struct QuotientPresentationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
struct QuotientPresentationResult {
  CosetPresentation presentation;
  std::vector<QuotientPresentationCheck> report;
};
QuotientPresentationResult quotient_presentation(const CosetPresentation& p, const PermGroup& n);

// The collapse Hg -> Kg onto the cosets of a larger subgroup K. Succeeds when
// H <= K, eta is central in K, and G still acts faithfully on the cosets of
// K; the result is then a rigid surjection. A failed condition is reported
// with a witness instead of thrown.
struct RigidQuotientResult {
  std::optional<QuandleHom> hom;
  std::string failure;
  std::optional<Permutation> witness;
};
RigidQuotientResult rigid_quotient_of_presentation(const CosetPresentation& p, const PermGroup& k);

// Decides whether the induced map between the orbit quotients by N of the
// quandles on H\G and K\G is rigid. Computed as the closure criterion
// (N equals its realizable closure taken in the K-side quandle) and verified
// against a direct rigidity check of the induced map; both must agree.
// N must be a realizable kernel for the H-side quandle.
bool rigid_iff_closure(const CosetPresentation& p, const PermGroup& k, const PermGroup& n);

// The collapse Kg -> Lg between two coset quandles over the same group and
// the same eta. Well-defined exactly when K <= L; the witness otherwise lies
// in K but not in L. When defined it is a rigid surjection and commutes with
// the collapses from upstream cosets (checked elementwise over G).
struct PhiResult {
  std::optional<QuandleHom> hom;
  std::string failure;
  std::optional<Permutation> witness;
};
PhiResult phi(const PermGroup& g, const PermGroup& k, const PermGroup& l, const Permutation& eta);

}  // namespace quandles
