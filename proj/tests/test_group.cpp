#include <numeric>

#include <doctest.h>

#include "cpt/cpt_groups.hpp"
#include "cpt/group.hpp"
#include "oracles.hpp"

using namespace cpt;

namespace {

const AlgebraSignature kCl14{1, 4};

BladeGroup blade_closure(const std::vector<std::string>& labels, std::size_t limit = 128) {
  std::vector<SignedBlade> seed;
  for (const auto& l : labels) seed.push_back(parse_blade(l));
  return generate_closure(
      seed, SignedBlade::one(), [](const SignedBlade& a, const SignedBlade& b) { return blade_mul(kCl14, a, b); },
      limit, BladeOrder{}, [](const SignedBlade& x) { return blade_label(x); });
}

std::vector<int> indices_of(const FiniteGroup& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(g.index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("group_engine") {
  TEST_CASE("closure examples") {
    const BladeGroup g14 = clifford_group(kCl14);
    CHECK(g14.group.order() == 64);
    CHECK(g14.group.label(g14.group.identity()) == "1");

    const BladeGroup trivial = blade_closure({"1"});
    CHECK(trivial.group.order() == 1);

    const BladeGroup cpt = blade_closure({"g04", "g0", "g2"});
    CHECK(cpt.group.order() == 16);
    for (const char* l : {"1", "g04", "g0", "g4", "g2", "g024", "g02", "g24"}) {
      CHECK(cpt.group.index_of(l) >= 0);
      CHECK(cpt.group.index_of(std::string("-") + l) >= 0);
    }
  }

  TEST_CASE("closure elements are canonically sorted") {
    const BladeGroup g14 = clifford_group(kCl14);
    CHECK(std::is_sorted(g14.elements.begin(), g14.elements.end(), BladeOrder{}));
    CHECK(g14.group.label(0) == "1");
    CHECK(g14.group.label(1) == "-1");
    CHECK(g14.group.label(2) == "g0");
    CHECK(g14.group.label(63) == "-g01234");
  }

  TEST_CASE("closure growth past the limit is an error") {
    CHECK_THROWS_AS(blade_closure({"g0", "g1", "g2", "g3", "g4"}, 40), GrowthError);
    // integers under addition never close
    CHECK_THROWS_AS(generate_closure(
                        std::vector<int>{1}, 0, [](int a, int b) { return a + b; }, 100, std::less<int>{},
                        [](int x) { return std::to_string(x); }),
                    GrowthError);
  }

  TEST_CASE("order structure") {
    const BladeGroup g14 = clifford_group(kCl14);
    const OrderStructure os = order_structure(g14.group);
    CHECK(order_pair(os) == std::pair{23, 40});
    CHECK(order_pair(os) == oracle::order_counts(kCl14, oracle::all_signed_blades(kCl14)));
    int total = 0;
    for (const auto& [o, c] : os) {
      total += c;
      CHECK(64 % o == 0);
    }
    CHECK(total == 63);

    const FiniteGroup v4 = make_standard_group(StandardGroup::viergroup);
    CHECK(order_structure(v4) == OrderStructure{{2, 3}});

    const BladeGroup cpt = blade_closure({"g04", "g0", "g2"});
    CHECK(order_pair(order_structure(cpt.group)) == std::pair{7, 8});
    CHECK(order_pair(order_structure(cpt.group)) == oracle::order_counts(kCl14, cpt.elements));
  }

  TEST_CASE("center") {
    const FiniteGroup c6 = make_standard_group(StandardGroup::cyclic, 6);
    CHECK(center(c6).size() == 6);

    const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
    CHECK(center(q8) == indices_of(q8, {"1", "-1"}));

    const BladeGroup g14 = clifford_group(kCl14);
    // brute force with the oracle product
    std::vector<int> brute;
    for (int a = 0; a < 64; ++a) {
      bool central = true;
      for (int x = 0; x < 64 && central; ++x)
        central = oracle::blade_product(kCl14, g14.elements[a], g14.elements[x]) ==
                  oracle::blade_product(kCl14, g14.elements[x], g14.elements[a]);
      if (central) brute.push_back(a);
    }
    CHECK(center(g14.group) == brute);
    CHECK(center(g14.group) == indices_of(g14.group, {"1", "-1", "g01234", "-g01234"}));
  }

  TEST_CASE("quotients by central subgroups") {
    const BladeGroup cpt = blade_closure({"g04", "g0", "g2"});
    const std::vector<int> pm1 = indices_of(cpt.group, {"1", "-1"});
    const QuotientGroup q = quotient_by_central_subgroup(cpt.group, pm1);
    CHECK(q.group.order() == 8);
    CHECK(is_abelian(q.group));
    CHECK(exponent(q.group) == 2);

    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    const QuotientGroup same = quotient_by_central_subgroup(d8, {d8.identity()});
    CHECK(same.group.order() == 8);
    CHECK(same.group.table() == d8.table());
    CHECK(same.group.labels() == d8.labels());

    const BladeGroup g14 = clifford_group(kCl14);
    const QuotientGroup e32 = quotient_by_central_subgroup(g14.group, indices_of(g14.group, {"1", "-1"}));
    CHECK(e32.group.order() == 32);
    CHECK(is_abelian(e32.group));
    CHECK(exponent(e32.group) == 2);
    CHECK(e32.group.order() * 2 == g14.group.order());
  }

  TEST_CASE("quotient preconditions") {
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    // {1, s} is a subgroup but not central
    CHECK_THROWS_AS(quotient_by_central_subgroup(d8, indices_of(d8, {"1", "s"})), UsageError);
    // {1, r} is not closed
    CHECK_THROWS_AS(quotient_by_central_subgroup(d8, indices_of(d8, {"1", "r"})), UsageError);
  }

  TEST_CASE("direct products") {
    const FiniteGroup c2 = make_standard_group(StandardGroup::cyclic, 2);
    const FiniteGroup c4 = make_standard_group(StandardGroup::cyclic, 4);
    const FiniteGroup one = make_standard_group(StandardGroup::cyclic, 1);

    const FiniteGroup v = direct_product(c2, c2);
    CHECK(order_structure(v) == OrderStructure{{2, 3}});
    CHECK(find_isomorphism(v, make_standard_group(StandardGroup::viergroup)).has_value());

    const FiniteGroup c4c2 = direct_product(c4, c2);
    CHECK(c4c2.order() == 8);
    CHECK(order_pair(order_structure(c4c2)) == std::pair{3, 4});

    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    const FiniteGroup td8 = direct_product(one, d8);
    CHECK(td8.order() == 8);
    CHECK(find_isomorphism(td8, d8).has_value());
  }

  TEST_CASE("central products") {
    const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    const FiniteGroup v4 = make_standard_group(StandardGroup::viergroup);
    const FiniteGroup c2 = make_standard_group(StandardGroup::cyclic, 2);

    const FiniteGroup n4 = central_product(q8, *q8.marked_involution(), d8, *d8.marked_involution());
    CHECK(n4.order() == 32);
    CHECK(order_pair(order_structure(n4)) == std::pair{11, 20});
    CHECK(center(n4).size() == 2);
    REQUIRE(n4.marked_involution().has_value());

    const FiniteGroup z2 = central_product(c2, 1, c2, 1);
    CHECK(z2.order() == 2);

    const FiniteGroup full = central_product(n4, *n4.marked_involution(), v4, *v4.marked_involution());
    CHECK(full.order() == 64);
    CHECK(order_pair(order_structure(full)) == std::pair{23, 40});
    CHECK(full.order() * 2 == n4.order() * v4.order());
  }

  TEST_CASE("central product preconditions") {
    const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    CHECK_THROWS_AS(central_product(q8, q8.index_of("i"), d8, 2), UsageError);  // order 4
    CHECK_THROWS_AS(central_product(q8, 1, d8, d8.index_of("s")), UsageError);  // not central
    CHECK_THROWS_AS(central_product(q8, 1, d8, 99), UsageError);
  }

  TEST_CASE("standard groups") {
    const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    const FiniteGroup c2 = make_standard_group(StandardGroup::cyclic, 2);
    CHECK(order_pair(order_structure(q8)) == std::pair{1, 6});
    CHECK(order_pair(order_structure(d8)) == std::pair{5, 2});
    CHECK(order_pair(order_structure(c2)) == std::pair{1, 0});
    CHECK(q8.label(*q8.marked_involution()) == "-1");
    CHECK(d8.label(*d8.marked_involution()) == "r2");
    CHECK(make_standard_group(StandardGroup::viergroup).marked_involution() == 1);
    CHECK_THROWS_AS(make_standard_group(StandardGroup::dihedral8, 10), UsageError);
    CHECK_THROWS_AS(make_standard_group(StandardGroup::quaternion8, 16), UsageError);
    CHECK_THROWS_AS(make_standard_group(StandardGroup::cyclic, 0), UsageError);
  }

  TEST_CASE("from_table rejects non-groups") {
    // Latin square with identity but not associative (a loop of order 5)
    const std::vector<int> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a", "b", "c", "d"}, loop, 0), StructureError);
    CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a"}, {0, 1, 1, 1}, 0), StructureError);
    CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a"}, {0, 1, 1}, 0), StructureError);
    CHECK_NOTHROW(FiniteGroup::from_table({"e", "a"}, {0, 1, 1, 0}, 0));
  }

  TEST_CASE("inverses are two-sided") {
    const BladeGroup g14 = clifford_group(kCl14);
    for (int a = 0; a < 64; ++a) {
      CHECK(g14.group.mul(a, g14.group.inverse(a)) == g14.group.identity());
      CHECK(g14.group.mul(g14.group.inverse(a), a) == g14.group.identity());
    }
  }

  TEST_CASE("isomorphism search") {
    const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);

    const auto self = find_isomorphism(d8, d8);
    REQUIRE(self.has_value());
    std::vector<int> identity(8);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(self->mapping == identity);

    CHECK_FALSE(find_isomorphism(q8, d8).has_value());
    CHECK(invariants(q8) != invariants(d8));

    const BladeGroup g14 = clifford_group(kCl14);
    const auto g14_self = find_isomorphism(g14.group, g14.group);
    REQUIRE(g14_self.has_value());
    std::vector<int> id64(64);
    std::iota(id64.begin(), id64.end(), 0);
    CHECK(g14_self->mapping == id64);
  }

  TEST_CASE("isomorphism of the Salingaros construct with G(1,4)") {
    const SalingarosReport r = salingaros_check();
    REQUIRE(r.isomorphism.has_value());
    CHECK(r.isomorphism->isomorphism);
    CHECK(is_homomorphism(r.construct, r.g14, r.isomorphism->mapping));
    CHECK(r.construct_invariants == r.g14_invariants);
  }

  TEST_CASE("non-isomorphic groups of equal order differ in an invariant") {
    const FiniteGroup c4c2 = direct_product(make_standard_group(StandardGroup::cyclic, 4),
                                            make_standard_group(StandardGroup::cyclic, 2));
    const FiniteGroup c8 = make_standard_group(StandardGroup::cyclic, 8);
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
    const FiniteGroup e8 = direct_product(make_standard_group(StandardGroup::viergroup),
                                          make_standard_group(StandardGroup::cyclic, 2));
    const std::vector<const FiniteGroup*> all{&c4c2, &c8, &d8, &q8, &e8};
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        const bool iso = find_isomorphism(*all[i], *all[j]).has_value();
        CHECK(iso == (i == j));
        if (!iso) CHECK(invariants(*all[i]) != invariants(*all[j]));
      }
  }

  TEST_CASE("greedy generators stay small") {
    const BladeGroup g14 = clifford_group(kCl14);
    const auto gens = greedy_generators(g14.group);
    CHECK(gens.size() <= 6);
    CHECK(generated_subgroup(g14.group, gens).size() == 64);
    CHECK(greedy_generators(make_standard_group(StandardGroup::cyclic, 1)).empty());
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("parallel kernels match their serial twins") {
    const BladeGroup g14 = clifford_group(kCl14);
    const int n = g14.group.order();
    const auto product = [&](int r, int c) { return g14.group.mul(r, c); };
    CHECK(kernels::fill_table(n, product) == kernels::fill_table_serial(n, product));
    CHECK(kernels::fill_table(n, product) == g14.group.table());
    CHECK(kernels::is_latin_square(n, g14.group.table()));
    CHECK(kernels::is_latin_square_serial(n, g14.group.table()));
    CHECK_FALSE(kernels::associativity_violation(n, g14.group.table()).has_value());
    CHECK_FALSE(kernels::associativity_violation_serial(n, g14.group.table()).has_value());
    CHECK(kernels::max_threads() >= 1);
  }

  TEST_CASE("kernels agree on broken tables") {
    const std::vector<int> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK(kernels::is_latin_square(5, loop));
    const auto par = kernels::associativity_violation(5, loop);
    const auto ser = kernels::associativity_violation_serial(5, loop);
    REQUIRE(par.has_value());
    CHECK(par == ser);
    const auto [x, y, z] = *par;
    CHECK(loop[loop[x * 5 + y] * 5 + z] != loop[x * 5 + loop[y * 5 + z]]);

    std::vector<int> twisted = make_standard_group(StandardGroup::quaternion8).table();
    std::swap(twisted[9], twisted[10]);
    CHECK_FALSE(kernels::is_latin_square(8, twisted));
    CHECK(kernels::is_latin_square(8, twisted) == kernels::is_latin_square_serial(8, twisted));
  }

  TEST_CASE("fill_table reports product failures") {
    CHECK_THROWS_AS(kernels::fill_table(4, [](int r, int) -> int {
                      if (r == 2) throw UsageError("boom");
                      return 0;
                    }),
                    StructureError);
  }

  TEST_CASE("parallel isomorphism search returns the serial answer") {
    const SalingarosReport r = salingaros_check();
    const auto par = find_isomorphism(r.construct, r.g14);
    const auto ser = find_isomorphism_serial(r.construct, r.g14);
    REQUIRE(par.has_value());
    REQUIRE(ser.has_value());
    CHECK(par->mapping == ser->mapping);
    const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    CHECK_FALSE(find_isomorphism_serial(q8, d8).has_value());
  }
}
