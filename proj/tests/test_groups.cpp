#include <doctest.h>

#include <random>

#include "azbench/error.hpp"
#include "azbench/groups.hpp"
#include "oracles.hpp"

using namespace azbench;

namespace {
  std::set<Elem> as_set(std::vector<Elem> const& v) {
    return {v.begin(), v.end()};
  }

  std::vector<Elem> names_to(GroupTable const& g, std::vector<std::string> const& names) {
    std::vector<Elem> out;
    for (auto const& n : names) {
      out.push_back(*g.find(n));
    }
    return out;
  }
}  // namespace

TEST_CASE("Q8 analysis") {
  GroupTable const q = quaternion_group();
  GroupAnalysis    a = analyze(q);
  CHECK(a.exponent == 4);
  CHECK(as_set(a.center) == as_set(names_to(q, {"1", "-1"})));
  CHECK(as_set(a.commutator_subgroup) == as_set(names_to(q, {"1", "-1"})));
  CHECK(as_set(a.involutions) == as_set(names_to(q, {"-1"})));
}

TEST_CASE("C2 analysis") {
  GroupTable const c = cyclic_group(2);
  GroupAnalysis    a = analyze(c);
  CHECK(a.exponent == 2);
  CHECK(a.center.size() == 2);
  CHECK(as_set(a.involutions) == std::set<Elem>{1});
}

TEST_CASE("broken associativity is a structural error") {
  GroupTable const c = cyclic_group(4);
  auto             t = c.table();
  t[1][1]            = 3;  // g*g = g^3 keeps the identity row and column
  bool thrown        = false;
  try {
    (void)GroupTable::from_table("bad", c.names(), t);
  } catch (StructuralError const&) {
    thrown = true;
  }
  CHECK(thrown);
}

TEST_CASE("missing identity and non-square tables are rejected") {
  std::vector<std::vector<int>> t{{1, 0}, {1, 0}};
  CHECK_THROWS_AS(GroupTable::from_table("x", {"a", "b"}, t), StructuralError);
  CHECK_THROWS_AS(GroupTable::from_table("x", {"a", "b"}, {{0, 1}}), StructuralError);
}

TEST_CASE("class membership") {
  CHECK(is_class_csw(quaternion_group()));
  CHECK_FALSE(is_class_csw(dihedral_group(4)));
  CHECK(is_class_csw(cyclic_group(2)));
  CHECK(is_class_csw(cyclic_group(4)));
  CHECK_FALSE(is_class_csw(cyclic_group(8)));
}

TEST_CASE("K validation") {
  std::vector<int> const q8k{0, 1};
  CHECK(validate_k(quaternion_group(), q8k));
  std::vector<int> const trivial{0};
  CHECK_FALSE(validate_k(dihedral_group(4), trivial));
  CHECK(validate_k(cyclic_group(4), trivial));
  std::vector<int> const bad{0, 9};
  CHECK_THROWS_AS(validate_k(cyclic_group(4), bad), InputError);
  // {1, i} is not a subgroup
  std::vector<int> const not_sub{0, 2};
  CHECK_FALSE(validate_k(quaternion_group(), not_sub));
}

TEST_CASE("ranks") {
  CHECK(rank(cyclic_group(4)) == 1);
  CHECK(rank(quaternion_group()) == 2);
  CHECK(rank(direct_product(cyclic_group(2), cyclic_group(2))) == 2);
  CHECK(rank(cyclic_group(1)) == 0);
}

TEST_CASE("make_kgroup examples") {
  std::vector<int> const c4k{0, 2};
  KGroupSpec const       a = make_kgroup(cyclic_group(4), c4k);
  CHECK(a.transversal() == std::vector<Elem>{0, 1});
  CHECK(a.element_order() == std::vector<Elem>{0, 1, 2, 3});
  std::vector<int> const c2k{0, 1};
  KGroupSpec const       b = make_kgroup(cyclic_group(2), c2k);
  CHECK(b.transversal() == std::vector<Elem>{0});
  CHECK(b.element_order() == std::vector<Elem>{0, 1});
  std::vector<int> const q8k{0, 1};
  CHECK(make_kgroup(quaternion_group(), q8k).transversal().size() == 4);
  std::vector<int> const none{0};
  CHECK_THROWS_AS(make_kgroup(dihedral_group(4), none), InputError);
  CHECK_THROWS_AS(make_kgroup(cyclic_group(4), c4k, std::vector<int>{0, 1, 1, 3}),
                  InputError);
  KGroupSpec const h = make_kgroup(cyclic_group(4), c4k, std::vector<int>{0, 2, 1, 3});
  CHECK(h.element_order() == std::vector<Elem>{0, 2, 1, 3});
  CHECK(is_coset_compatible(h));
  CHECK_FALSE(is_coset_compatible(a));
  CHECK(is_coset_compatible(make_kgroup(quaternion_group(), q8k)));
}

TEST_CASE("catalog agrees with the oracles") {
  for (auto const& e : bundled_groups()) {
    GroupTable const& g = e.group;
    CAPTURE(g.name());
    GroupAnalysis const a = analyze(g);
    CHECK(a.exponent == oracle::exponent(g));
    CHECK(as_set(a.center) == oracle::center(g));
    CHECK(as_set(a.commutator_subgroup) == oracle::commutator_subgroup(g));
    CHECK(as_set(a.involutions) == oracle::involutions(g));
    if (g.order() <= 16) {
      CHECK(rank(g) == oracle::rank(g));
    }
    if (is_class_csw(g)) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        CHECK(g.pow(Elem(x), 4) == g.identity());
      }
    }
    if (!e.k.empty()) {
      CHECK(validate_k(g, e.k));
    }
  }
}

TEST_CASE("group axioms hold on every catalog table") {
  for (auto const& e : bundled_groups()) {
    GroupTable const& g = e.group;
    std::size_t const n = g.order();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(g.mul(Elem(a), g.inv(Elem(a))) == g.identity());
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          REQUIRE(g.mul(g.mul(Elem(a), Elem(b)), Elem(c))
                  == g.mul(Elem(a), g.mul(Elem(b), Elem(c))));
        }
      }
    }
  }
}

TEST_CASE("transversal meets every coset once") {
  for (auto const& e : bundled_groups()) {
    if (e.k.empty() || !validate_k(e.group, e.k)) {
      continue;
    }
    KGroupSpec const kg = make_kgroup(e.group, e.k);
    GroupTable const& g = kg.group();
    CHECK(kg.transversal()[0] == g.identity());
    CHECK(kg.transversal().size() * kg.k().size() == g.order());
    for (std::size_t a = 0; a < g.order(); ++a) {
      Elem const t = kg.transversal()[kg.coset_of(Elem(a))];
      CHECK(g.mul(t, kg.k_part(Elem(a))) == Elem(a));
      CHECK(kg.in_k(kg.k_part(Elem(a))));
      // smallest index in the coset
      for (Elem k : kg.k()) {
        CHECK(t <= g.mul(Elem(a), k));
      }
    }
  }
}

TEST_CASE("isomorphism search matches brute force on small groups") {
  std::vector<GroupTable> const small{cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)),
                                      quaternion_group(), dihedral_group(4), cyclic_group(8)};
  for (auto const& a : small) {
    for (auto const& b : small) {
      CHECK(find_isomorphism(a, b).has_value() == oracle::isomorphic(a, b));
    }
  }
}
