#include "quandles/factorize.hpp"

#include <sstream>
#include <stdexcept>

#include "quandles/augment.hpp"
#include "quandles/error.hpp"

namespace quandles {

namespace {

void require_factorization_inputs(const QuandleHom& g, const QuandleHom& h) {
  if (!(g.source() == h.source()))
    throw std::domain_error("the two homomorphisms must share a source");
  if (!g.is_surjective() || !h.is_surjective())
    throw std::domain_error("factorization is decided for surjective homomorphisms only");
}

PermGroup stabilizer_pullback(const GroupHom& induced, int fixed_point) {
  std::vector<Permutation> members;
  for (std::size_t i = 0; i < induced.source.order(); ++i)
    if (induced.image_of[i](fixed_point) == fixed_point)
      members.push_back(induced.source.elements()[i]);
  return PermGroup::generate(induced.source.degree(), std::move(members));
}

}  // namespace

OracleResult factor_oracle(const QuandleHom& g, const QuandleHom& h) {
  require_factorization_inputs(g, h);

  OracleResult result;
  const int n = g.source().size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (h(a) == h(b) && g(a) != g(b)) {
        result.witness = FactorWitnessPair{a, b};
        return result;
      }

  std::vector<int> map(h.target().size(), -1);
  for (int q = 0; q < n; ++q) map[h(q)] = g(q);
  result.hom = QuandleHom(h.target(), g.target(), std::move(map));
  internal_check(result.hom->is_surjective(), "a factor of a surjection must be surjective");
  return result;
}

std::string to_string(FactorFailure failure) {
  switch (failure) {
    case FactorFailure::KernelNotContained:
      return "KernelNotContained";
    case FactorFailure::ClosureMismatch:
      return "ClosureMismatch";
    case FactorFailure::StabilizerNotContained:
      return "StabilizerNotContained";
  }
  return "?";
}

FactorizationCertificate factor_structural(const QuandleHom& g, const QuandleHom& h) {
  require_factorization_inputs(g, h);
  if (!is_connected(g.source()) || !is_connected(g.target()) || !is_connected(h.target()))
    throw std::domain_error("the structural decision requires connected quandles");

  // (1) canonical splits of h and g.
  SurjectionFactorization via_h = factor_surjection(h);
  SurjectionFactorization via_g = factor_surjection(g);

  FactorizationCertificate cert{
      false,
      std::nullopt,
      std::nullopt,
      "",
      std::nullopt,
      via_h.orbit_part.kernel_subgroup,
      via_g.orbit_part.kernel_subgroup,
      via_h.orbit_part.quotient,
      via_g.orbit_part.quotient,
      std::nullopt,
      std::nullopt,
      std::nullopt,
      std::nullopt,
      std::nullopt,
      std::nullopt,
      std::nullopt,
      std::nullopt,
  };

  // (2) the descent between the orbit quotients exists iff N1 <= N2.
  OmegaResult descent = omega(g.source(), cert.kernel_h, cert.kernel_g);
  if (!descent.hom) {
    cert.failure_reason = FactorFailure::KernelNotContained;
    cert.witness_element = descent.witness;
    cert.failure_detail = "ker Inn(h) is not contained in ker Inn(g); witness " +
                          descent.witness->cycle_string();
    return cert;
  }
  cert.omega_map = descent.hom;

  // (3a) transport ker Inn(omega) into Inn(R1) along the rigid part of h and
  // require it to be a realizable kernel there.
  GroupHom inn_of_rigid_h = induced_inn_hom(via_h.rigid_part);
  GroupHom inn_of_omega = induced_inn_hom(*descent.hom);
  PermGroup transported = inn_of_rigid_h.map_subgroup(inn_of_omega.kernel);
  PermGroup closure = realizable_closure(h.target(), transported);
  cert.transported_kernel = transported;
  cert.kernel_closure = closure;
  if (!(closure == transported)) {
    for (const auto& e : closure.elements())
      if (!transported.contains(e)) {
        cert.witness_element = e;
        break;
      }
    cert.failure_reason = FactorFailure::ClosureMismatch;
    cert.failure_detail =
        "the kernel transported into Inn(R1) is not realizable: closure has order " +
        std::to_string(closure.order()) + ", kernel has order " + std::to_string(transported.order());
    return cert;
  }

  // (3b) quotient R1 by the transported kernel; the descent from Q/N2 onto it
  // is rigid by the closure condition just checked.
  OrbitQuotient r1_quotient = orbit_quotient(h.target(), transported);
  cert.r1_quotient = r1_quotient.quotient;

  const Quandle& middle = via_g.orbit_part.quotient;  // Q / N2
  std::vector<int> descent_map(middle.size(), -1);
  for (int q = 0; q < g.source().size(); ++q) {
    int x = via_g.orbit_part.block_of[q];
    int value = r1_quotient.block_of[h(q)];
    if (descent_map[x] == -1) descent_map[x] = value;
    internal_check(descent_map[x] == value,
                   "the rigid descent must be constant on the fibers of the orbit quotient");
  }
  HomCheck descent_check = check_hom(descent_map, middle, r1_quotient.quotient);
  internal_check(descent_check.hom.has_value(), "the rigid descent must be a homomorphism");
  QuandleHom rigid_descent = std::move(*descent_check.hom);
  internal_check(rigid_descent.is_surjective(), "the rigid descent must be surjective");
  internal_check(is_rigid(rigid_descent),
                 "the descent must be rigid once the transported kernel is closed");
  cert.rigid_descent = rigid_descent;

  // (3c) matched-base-point stabilizers inside Inn(Q/N2): the base point of Q
  // is pushed through both legs, and the collapse exists iff the stabilizer
  // reached through h is contained in the one reached through g.
  GroupHom inn_descent = induced_inn_hom(rigid_descent);
  GroupHom inn_rigid_g = induced_inn_hom(via_g.rigid_part);
  const int base_mid = via_g.orbit_part.block_of[0];
  PermGroup stab_h = stabilizer_pullback(inn_descent, rigid_descent(base_mid));
  PermGroup stab_g = stabilizer_pullback(inn_rigid_g, via_g.rigid_part(base_mid));
  cert.stabilizer_via_h = stab_h;
  cert.stabilizer_via_g = stab_g;
  for (const auto& e : stab_h.elements()) {
    if (!stab_g.contains(e)) {
      cert.failure_reason = FactorFailure::StabilizerNotContained;
      cert.witness_element = e;
      cert.failure_detail =
          "the stabilizer reached through h is not contained in the one reached through g; "
          "witness " +
          e.cycle_string();
      return cert;
    }
  }

  // Assemble phi: R1 -> R1/kernel -> R2.
  std::vector<int> collapse_map(r1_quotient.quotient.size(), -1);
  for (int x = 0; x < middle.size(); ++x) {
    int from = rigid_descent(x);
    int to = via_g.rigid_part(x);
    if (collapse_map[from] == -1) collapse_map[from] = to;
    internal_check(collapse_map[from] == to,
                   "the final collapse must be constant on the fibers of the rigid descent");
  }
  HomCheck collapse_check = check_hom(collapse_map, r1_quotient.quotient, g.target());
  internal_check(collapse_check.hom.has_value(), "the final collapse must be a homomorphism");
  internal_check(is_rigid(*collapse_check.hom), "the final collapse must be rigid");
  cert.rigid_phi = collapse_check.hom;

  QuandleHom phi = r1_quotient.projection.then(*collapse_check.hom);
  internal_check(h.then(phi) == g, "the assembled map must factor g through h");
  internal_check(phi.is_surjective(), "the assembled map must be surjective");
  cert.phi = std::move(phi);
  cert.exists = true;
  return cert;
}

AgreementReport check_agreement(const QuandleHom& g, const QuandleHom& h) {
  OracleResult oracle = factor_oracle(g, h);
  FactorizationCertificate structural = factor_structural(g, h);

  AgreementReport report;
  report.oracle_exists = oracle.hom.has_value();
  report.structural_exists = structural.exists;
  report.maps_match = true;
  if (report.oracle_exists != report.structural_exists) {
    std::ostringstream out;
    out << "deciders disagree on existence: oracle says " << (report.oracle_exists ? "yes" : "no")
        << ", structural says " << (report.structural_exists ? "yes" : "no");
    if (structural.failure_reason)
      out << " (structural failure: " << to_string(*structural.failure_reason) << ", "
          << structural.failure_detail << ")";
    report.divergence = out.str();
    report.agree = false;
    return report;
  }
  if (report.oracle_exists) {
    report.maps_match = oracle.hom->map() == structural.phi->map();
    if (!report.maps_match) {
      report.divergence = "deciders produced different factor maps";
      report.agree = false;
      return report;
    }
  }
  report.agree = true;
  return report;
}

}  // namespace quandles
