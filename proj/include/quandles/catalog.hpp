#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quandles/perm_group.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

// A named small group given by permutation generators.
struct GroupSpec {
  std::string name;
  int degree = 1;
  std::vector<Permutation> generators;
  std::size_t advertised_order = 1;
};

// The built-in group catalog: cyclic(n) for n >= 1, dihedral(n) and
// symmetric(n) and alternating(n) for n >= 3, the sharply 2-transitive
// frobenius(p, k) = Z_p x| Z_k for primes p and k | p-1, k >= 3, and
// special_linear(2, 3) acting on the eight nonzero vectors over F_3.
// Capped at order 48.
std::vector<GroupSpec> builtin_groups(std::size_t max_order);

enum class Provenance { FromTriple, ExhaustiveSearch, UserFile };

struct QuandleRecord {
  Quandle quandle;
  Provenance provenance = Provenance::UserFile;
  std::string provenance_detail;
  // Lexicographically least relabeled table, flattened row-major. Filled for
  // sizes <= 8; equal canonical forms characterize isomorphic quandles.
  std::vector<int> canonical_form;
};

// Minimal relabeling of the table; only for size <= 8 (factorial cost).
std::vector<int> canonical_form(const Quandle& q);

// All connected quandles of size n arising from a stabilizer-coset triple
// (G, H, eta) over the built-in groups, deduplicated up to isomorphism and
// sorted by canonical form.
std::vector<QuandleRecord> enumerate_connected_by_triples(int n, std::size_t max_group_order);

// Independent enumeration: backtracking over all operation tables whose
// columns are permutations fixing their own index, filtered for
// connectedness and deduplicated. Guarded to n <= 6.
std::vector<QuandleRecord> enumerate_connected_exhaustive(int n);

// The deduplicated union of both enumerations for every size up to
// max_size, in increasing size and canonical order. The test-data backbone.
std::vector<Quandle> connected_catalog(int max_size, std::size_t max_group_order = 48);

// Every surjection from a connected quandle onto a connected quandle, up to
// codomain relabeling: orbit quotients by realizable kernels composed with
// the rigid collapses available in the quotient's coset presentation.
std::vector<QuandleHom> enumerate_surjections(const Quandle& q);

}  // namespace quandles
