#pragma once

#include <optional>
#include <string>

#include "quandles/coset.hpp"
#include "quandles/quandle.hpp"
#include "quandles/quotient.hpp"

namespace quandles {

// Brute-force decision: g factors through h iff the fibers of h refine the
// fibers of g, in which case phi(h(q)) = g(q) is the unique solution. The
// witness is a pair merged by h but separated by g.
struct FactorWitnessPair {
  int first = -1;
  int second = -1;
};
struct OracleResult {
  std::optional<QuandleHom> hom;
  std::optional<FactorWitnessPair> witness;
};
OracleResult factor_oracle(const QuandleHom& g, const QuandleHom& h);

enum class FactorFailure { KernelNotContained, ClosureMismatch, StabilizerNotContained };
std::string to_string(FactorFailure failure);

// Everything the structural decision computes on the way: the kernels of the
// two induced group homomorphisms, the corresponding orbit quotients, the
// descent between them, the kernel transported into Inn(R1) with its
// closure, the rigid descent onto R1's quotient, and the matched-base-point
// stabilizers whose containment decides the final step.
struct FactorizationCertificate {
  bool exists = false;
  std::optional<QuandleHom> phi;
  std::optional<FactorFailure> failure_reason;
  std::string failure_detail;
  std::optional<Permutation> witness_element;

  PermGroup kernel_h;  // N1 = ker Inn(h)
  PermGroup kernel_g;  // N2 = ker Inn(g)
  Quandle quotient_h;  // Q / N1
  Quandle quotient_g;  // Q / N2
  std::optional<QuandleHom> omega_map;          // Q/N1 -> Q/N2
  std::optional<PermGroup> transported_kernel;  // N2 carried into Inn(R1)
  std::optional<PermGroup> kernel_closure;      // its realizable closure in R1
  std::optional<Quandle> r1_quotient;           // R1 / transported kernel
  std::optional<QuandleHom> rigid_descent;      // Q/N2 -> R1 quotient (rigid)
  std::optional<PermGroup> stabilizer_via_h;    // K <= Inn(Q/N2), matched base point
  std::optional<PermGroup> stabilizer_via_g;    // L <= Inn(Q/N2), same base point
  std::optional<QuandleHom> rigid_phi;          // R1 quotient -> R2 (rigid)
};

// Structural decision for "g factors through h" between connected quandles:
// (1) split both maps into orbit quotient and rigid part, (2) require
// ker Inn(h) <= ker Inn(g), (3) require the transported kernel to be closed
// in R1 and the matched-base-point stabilizer containment, then assemble phi
// from the constructed pieces. Fails fast with a tagged reason and witness.
FactorizationCertificate factor_structural(const QuandleHom& g, const QuandleHom& h);

// Runs both deciders and compares verdicts and maps.
struct AgreementReport {
  bool agree = false;
  bool oracle_exists = false;
  bool structural_exists = false;
  bool maps_match = false;  // meaningful when both exist
  std::string divergence;   // empty when agree
};
AgreementReport check_agreement(const QuandleHom& g, const QuandleHom& h);

}  // namespace quandles
