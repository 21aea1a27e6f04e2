#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quandles/catalog.hpp"
#include "quandles/coset.hpp"
#include "support.hpp"

using namespace quandles;
using testsupport::cyc;
using testsupport::make_r3;
using testsupport::make_r4;
using testsupport::point_quandle;
using testsupport::sym3;
using testsupport::sym4;

namespace {

// The quandle of transpositions of S4 under conjugation, size 6.
Quandle transposition_quandle() {
  return conj_quandle(sym4(), {cyc(4, "(0 1)")}).quandle;
}

// Presentation of a 12-element connected quandle whose stabilizer is
// properly contained in the centralizer of eta, so proper rigid collapses
// exist.
CosetPresentation twelve_element_presentation() {
  return make_presentation(sym4(), PermGroup::generate(4, {cyc(4, "(0 1)")}), cyc(4, "(0 1)"));
}

PermGroup special_linear_2_3() {
  for (const auto& spec : builtin_groups(24))
    if (spec.name == "special_linear(2,3)")
      return PermGroup::generate(spec.degree, spec.generators);
  throw std::logic_error("missing group spec");
}

}  // namespace

TEST_CASE("presentations from a base point") {
  {
    Presented presented = to_presentation(point_quandle(), 0);
    CHECK(presented.presentation.group.is_trivial());
    CHECK(presented.presentation.stabilizer.is_trivial());
    CHECK(presented.presentation.eta.is_identity());
  }
  {
    Presented presented = to_presentation(make_r3(), 0);
    const CosetPresentation& p = presented.presentation;
    CHECK(p.group.order() == 6);
    CHECK(p.stabilizer.order() == 2);
    CHECK(p.stabilizer.contains(cyc(3, "(1 2)")));
    CHECK(p.eta == cyc(3, "(1 2)"));
    CHECK(p.cosets.size() == 3);
    CHECK(presented.identification[0] == 0);
  }
  {
    Presented presented = to_presentation(make_r3(), 1);
    CHECK(presented.presentation.stabilizer.contains(cyc(3, "(0 2)")));
    CHECK(presented.presentation.eta == cyc(3, "(0 2)"));
  }
  CHECK_THROWS_AS(to_presentation(make_r4(), 0), std::domain_error);
  CHECK_THROWS_AS(to_presentation(make_r3(), 5), std::invalid_argument);
}

TEST_CASE("building quandles from presentations") {
  {
    CosetPresentation p =
        make_presentation(sym3(), PermGroup::generate(3, {cyc(3, "(1 2)")}), cyc(3, "(1 2)"));
    BuiltQuandle built = from_presentation(p);
    CHECK(built.quandle.size() == 3);
    CHECK(built.faithful);
    CHECK(is_isomorphic(built.quandle, make_r3()).has_value());
  }
  {
    CosetPresentation p = make_presentation(PermGroup::trivial(1), PermGroup::trivial(1),
                                            Permutation::identity(1));
    CHECK(from_presentation(p).quandle.size() == 1);
  }
  // Conjugates of the identity generate nothing.
  CHECK_THROWS_AS(make_presentation(sym3(), sym3(), Permutation::identity(3)),
                  PresentationError);
  // eta outside the stabilizer.
  CHECK_THROWS_AS(
      make_presentation(sym3(), PermGroup::generate(3, {cyc(3, "(1 2)")}), cyc(3, "(0 1)")),
      PresentationError);
  // eta inside but not central.
  CHECK_THROWS_AS(make_presentation(sym3(), sym3(), cyc(3, "(1 2)")), PresentationError);
}

TEST_CASE("unfaithful presentations realize the group modulo the action kernel") {
  PermGroup sl23 = special_linear_2_3();
  REQUIRE(sl23.order() == 24);
  Permutation order_six = Permutation::identity(8);
  for (const auto& e : sl23.elements())
    if (e.order() == 6) {
      order_six = e;
      break;
    }
  REQUIRE(order_six.order() == 6);

  PermGroup h = PermGroup::generate(8, {order_six});
  CosetPresentation p = make_presentation(sl23, h, order_six * order_six);
  BuiltQuandle built = from_presentation(p);
  CHECK(built.quandle.size() == 4);
  CHECK_FALSE(built.faithful);
  CHECK(built.action_kernel.order() == 2);
  CHECK(inn(built.quandle).order() == 12);
  // It is the unique connected quandle of size 4.
  auto catalog4 = enumerate_connected_exhaustive(4);
  REQUIRE(catalog4.size() == 1);
  CHECK(is_isomorphic(built.quandle, catalog4[0].quandle).has_value());
}

TEST_CASE("round trip through a presentation recovers the quandle") {
  for (const Quandle& q : connected_catalog(5))
    for (int base = 0; base < q.size(); ++base) {
      Presented presented = to_presentation(q, base);
      BuiltQuandle rebuilt = from_presentation(presented.presentation);
      CHECK(rebuilt.faithful);
      CHECK(is_isomorphic(rebuilt.quandle, q).has_value());
    }
}

TEST_CASE("base point independence up to isomorphism") {
  Quandle q = transposition_quandle();
  BuiltQuandle at0 = from_presentation(to_presentation(q, 0).presentation);
  for (int base = 1; base < q.size(); ++base) {
    BuiltQuandle other = from_presentation(to_presentation(q, base).presentation);
    CHECK(is_isomorphic(at0.quandle, other.quandle).has_value());
  }
}

TEST_CASE("quotient presentations satisfy the five reduction facts") {
  {
    Presented presented = to_presentation(make_r3(), 0);
    QuotientPresentationResult trivial_quotient =
        quotient_presentation(presented.presentation, PermGroup::trivial(3));
    CHECK(trivial_quotient.report.size() == 5);
    for (const auto& check : trivial_quotient.report) CHECK(check.passed);
    CHECK(trivial_quotient.presentation.cosets.size() == 3);
    CHECK(are_isomorphic_groups(trivial_quotient.presentation.group, sym3()));

    QuotientPresentationResult full =
        quotient_presentation(presented.presentation, presented.presentation.group);
    CHECK(full.presentation.group.is_trivial());
    CHECK(full.presentation.cosets.size() == 1);

    CHECK_THROWS_AS(
        quotient_presentation(presented.presentation,
                              PermGroup::generate(3, {cyc(3, "(0 1 2)")})),
        std::domain_error);
  }
  {
    Quandle q = transposition_quandle();
    Presented presented = to_presentation(q, 0);
    const PermGroup& g = presented.presentation.group;
    for (const auto& n : all_normal_subgroups(g)) {
      PermGroup closure = realizable_closure(q, n);
      if (!(closure == n)) continue;
      QuotientPresentationResult result = quotient_presentation(presented.presentation, n);
      for (const auto& check : result.report) CHECK(check.passed);
      CHECK(result.presentation.group.order() * n.order() == g.order());
    }
  }
}

TEST_CASE("rigid collapses of presentations") {
  CosetPresentation p12 = twelve_element_presentation();
  {
    // K = H is the identity relabeling.
    RigidQuotientResult same = rigid_quotient_of_presentation(p12, p12.stabilizer);
    REQUIRE(same.hom.has_value());
    CHECK(same.hom->is_bijective());
  }
  {
    // Proper rigid collapse onto the cosets of the centralizer of eta.
    PermGroup k = PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)")});
    RigidQuotientResult proper = rigid_quotient_of_presentation(p12, k);
    REQUIRE(proper.hom.has_value());
    CHECK(proper.hom->source().size() == 12);
    CHECK(proper.hom->target().size() == 6);
    CHECK(proper.hom->is_surjective());
    CHECK_FALSE(proper.hom->is_bijective());
    CHECK(is_rigid(*proper.hom));
  }
  {
    // The center of S4 is trivial, so eta cannot be central in all of it.
    Presented presented = to_presentation(make_r3(), 0);
    RigidQuotientResult rejected =
        rigid_quotient_of_presentation(presented.presentation, sym3());
    CHECK_FALSE(rejected.hom.has_value());
    CHECK(rejected.failure == "eta is not central in K");
    REQUIRE(rejected.witness.has_value());
    CHECK_FALSE(*rejected.witness * presented.presentation.eta ==
                presented.presentation.eta * *rejected.witness);
  }
  {
    // H must sit inside K.
    CosetPresentation p12b = twelve_element_presentation();
    PermGroup k = PermGroup::generate(4, {cyc(4, "(2 3)")});
    RigidQuotientResult rejected = rigid_quotient_of_presentation(p12b, k);
    CHECK_FALSE(rejected.hom.has_value());
    CHECK(rejected.failure == "the stabilizer is not contained in K");
  }
  CHECK_THROWS_AS(
      rigid_quotient_of_presentation(twelve_element_presentation(),
                                     PermGroup::generate(3, {cyc(3, "(0 1)")})),
      std::domain_error);
}

TEST_CASE("closure criterion decides rigidity of the induced quotient map") {
  CosetPresentation p12 = twelve_element_presentation();
  PermGroup k = PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)")});
  PermGroup v4 = PermGroup::generate(4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")});

  CHECK(rigid_iff_closure(p12, p12.stabilizer, PermGroup::trivial(4)));
  CHECK(rigid_iff_closure(p12, k, PermGroup::trivial(4)));
  CHECK(rigid_iff_closure(p12, k, v4));
  CHECK(rigid_iff_closure(p12, k, sym4()));

  // A non-realizable N is rejected.
  PermGroup a4 = testsupport::alt4();
  CHECK_THROWS_AS(rigid_iff_closure(p12, k, a4), std::domain_error);
}

TEST_CASE("collapse between two coset quandles over the same group") {
  PermGroup h = PermGroup::generate(4, {cyc(4, "(0 1)")});
  PermGroup k = PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(2 3)")});
  Permutation eta = cyc(4, "(0 1)");
  {
    PhiResult same = phi(sym4(), h, h, eta);
    REQUIRE(same.hom.has_value());
    CHECK(same.hom->is_bijective());
  }
  {
    PhiResult proper = phi(sym4(), h, k, eta);
    REQUIRE(proper.hom.has_value());
    CHECK(proper.hom->source().size() == 12);
    CHECK(proper.hom->target().size() == 6);
  }
  {
    PhiResult blocked = phi(sym4(), k, h, eta);
    REQUIRE_FALSE(blocked.hom.has_value());
    CHECK(blocked.failure == "K is not contained in L");
    REQUIRE(blocked.witness.has_value());
    CHECK(k.contains(*blocked.witness));
    CHECK_FALSE(h.contains(*blocked.witness));
  }
  {
    // eta must lie in the center of both sides; the trivial subgroup cannot
    // contain a nontrivial eta.
    PhiResult rejected =
        phi(sym3(), PermGroup::trivial(3), PermGroup::generate(3, {cyc(3, "(1 2)")}),
            cyc(3, "(1 2)"));
    CHECK_FALSE(rejected.hom.has_value());
    CHECK(rejected.failure == "eta does not lie in K");
  }
  CHECK_THROWS_AS(phi(sym3(), PermGroup::generate(4, {cyc(4, "(0 1)")}),
                      PermGroup::trivial(3), cyc(3, "(1 2)")),
                  std::domain_error);
}
