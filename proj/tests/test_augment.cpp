#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quandles/augment.hpp"
#include "quandles/catalog.hpp"
#include "support.hpp"

using namespace quandles;
using testsupport::collapse_to_point;
using testsupport::cyc;
using testsupport::make_r3;
using testsupport::point_quandle;
using testsupport::trivial_quandle;

TEST_CASE("augmented quandles bundle the symmetries") {
  {
    AugmentedQuandle aug = augmented(point_quandle());
    CHECK(aug.group.is_trivial());
    CHECK(aug.augmentation == std::vector<Permutation>{Permutation::identity(1)});
  }
  {
    AugmentedQuandle aug = augmented(make_r3());
    CHECK(aug.group.order() == 6);
    CHECK(aug.augmentation ==
          std::vector<Permutation>{cyc(3, "(1 2)"), cyc(3, "(0 2)"), cyc(3, "(0 1)")});
    for (int q = 0; q < 3; ++q) {
      CHECK(aug.augmentation[q] == symmetry(aug.quandle, q));
      CHECK(aug.group.contains(aug.augmentation[q]));
    }
  }
  {
    AugmentedQuandle aug = augmented(trivial_quandle(3));
    CHECK(aug.group.is_trivial());
    for (const auto& s : aug.augmentation) CHECK(s.is_identity());
  }
}

TEST_CASE("induced homomorphism on inner automorphism groups") {
  Quandle r3 = make_r3();
  {
    GroupHom h = induced_inn_hom(QuandleHom::identity(r3));
    CHECK(h.kernel.is_trivial());
    CHECK(h.image.order() == 6);
  }
  {
    GroupHom h = induced_inn_hom(collapse_to_point(r3));
    CHECK(h.kernel.order() == 6);
    CHECK(h.image.is_trivial());
  }
}

TEST_CASE("only surjections induce the homomorphism") {
  Quandle r3 = make_r3();
  Quandle bigger =
      Quandle::from_table({{0, 2, 1, 0}, {2, 1, 0, 1}, {1, 0, 2, 2}, {3, 3, 3, 3}});
  QuandleHom inclusion(r3, bigger, {0, 1, 2});
  CHECK_THROWS_AS(induced_inn_hom(inclusion), std::domain_error);
}

TEST_CASE("naturality: generators map to the symmetries of the images") {
  Quandle r3 = make_r3();
  for (const QuandleHom& h : {QuandleHom::identity(r3), collapse_to_point(r3)}) {
    GroupHom induced = induced_inn_hom(h);
    for (int q = 0; q < r3.size(); ++q)
      CHECK(induced.apply(symmetry(r3, q)) == symmetry(h.target(), h(q)));
  }
}

TEST_CASE("equivariance: h(q . g) = h(q) . Inn(h)(g)") {
  Quandle r3 = make_r3();
  for (const QuandleHom& h : {QuandleHom::identity(r3), collapse_to_point(r3)}) {
    GroupHom induced = induced_inn_hom(h);
    for (const auto& g : induced.source.elements())
      for (int q = 0; q < r3.size(); ++q) CHECK(h(g(q)) == induced.apply(g)(h(q)));
  }
}

TEST_CASE("functoriality and equivariance across the catalog") {
  for (const Quandle& q : connected_catalog(5)) {
    for (const auto& h1 : enumerate_surjections(q)) {
      GroupHom first = induced_inn_hom(h1);
      for (const auto& h2 : enumerate_surjections(h1.target())) {
        QuandleHom composite = h1.then(h2);
        GroupHom second = induced_inn_hom(h2);
        GroupHom through = induced_inn_hom(composite);
        for (const auto& g : first.source.elements()) {
          CHECK(through.apply(g) == second.apply(first.apply(g)));
          for (int x = 0; x < q.size(); ++x)
            CHECK(composite(g(x)) == through.apply(g)(composite(x)));
        }
      }
    }
  }
}

TEST_CASE("functoriality along composable surjections") {
  Quandle r3 = make_r3();
  QuandleHom identity = QuandleHom::identity(r3);
  GroupHom induced_identity = induced_inn_hom(identity);
  for (const auto& g : induced_identity.source.elements())
    CHECK(induced_inn_hom(identity).apply(g) == g);

  QuandleHom collapse = collapse_to_point(r3);
  QuandleHom composite = identity.then(collapse);
  GroupHom first = induced_inn_hom(identity);
  GroupHom second = induced_inn_hom(collapse);
  GroupHom through = induced_inn_hom(composite);
  for (const auto& g : first.source.elements())
    CHECK(through.apply(g) == second.apply(first.apply(g)));
}
