#include <doctest.h>

#include "cpt/cpt_groups.hpp"
#include "oracles.hpp"

using namespace cpt;

namespace {

const AlgebraSignature kCl14{1, 4};

CptElementSet ext_set() { return build_ext_set(derive_automorphism_set(build_gamma_basis())); }

std::vector<std::string> rep_labels(const CptElementSet& set) {
  std::vector<std::string> out;
  for (const auto& r : set.representatives()) out.push_back(blade_label(r));
  return out;
}

SignedBlade cell(const SignedCayleyTable& t, const char* row, const char* col) {
  const auto find = [&](const char* l) {
    const SignedBlade b = parse_blade(l);
    return static_cast<std::size_t>(std::find(t.reps.begin(), t.reps.end(), b) - t.reps.begin());
  };
  return t.cells.at(find(row)).at(find(col));
}

}  // namespace

TEST_SUITE("cpt_groups") {
  TEST_CASE("discrete transformation set") {
    const CptElementSet dt = build_dt_set();
    CHECK(rep_labels(dt) == std::vector<std::string>{"1", "g04", "g0", "g4", "g2", "g024", "g02", "g24"});
    CHECK(dt.names[1] == "P");
    CHECK(blade_label(dt.elements[1].representative()) == "g04");
    CHECK(blade_label(dt.elements[6].representative()) == "g02");
    CHECK(blade_label(dt.elements[7].representative()) == "g24");
  }

  TEST_CASE("automorphism set placed into the CPT slots") {
    const CptElementSet ext = ext_set();
    CHECK(rep_labels(ext) == std::vector<std::string>{"1", "g01234", "g24", "g013", "g13", "g024", "g1234", "g0"});
    CHECK(ext.names[1] == "W");
    CHECK(ext.names[4] == "Pi");
    CHECK(ext.names[7] == "F");
    // literal compositions carry a sign
    CHECK(ext.elements[6].to_signed() == parse_blade("-g1234"));
    CHECK(ext.elements[7].to_signed() == parse_blade("-g0"));
  }

  TEST_CASE("incomplete automorphism set is rejected") {
    AutomorphismSet broken = derive_automorphism_set(build_gamma_basis());
    broken.representative[AutomorphismSet::K] = parse_blade("g2");
    CHECK_THROWS_AS(build_ext_set(broken), UsageError);

    AutomorphismSet swapped = derive_automorphism_set(build_gamma_basis());
    swapped.representative[AutomorphismSet::I] = parse_blade("g0");
    CHECK_THROWS_AS(build_ext_set(swapped), UsageError);
  }

  TEST_CASE("Cayley table examples") {
    const SignedCayleyTable dt = cayley_table_signed(build_dt_set());
    CHECK(cell(dt, "g2", "g0") == parse_blade("-g02"));
    CHECK(cell(dt, "g04", "g04") == parse_blade("1"));
    CHECK(cell(dt, "g24", "g24") == parse_blade("-1"));

    const SignedCayleyTable ext = cayley_table_signed(ext_set());
    CHECK(cell(ext, "g24", "g013") == parse_blade("-g01234"));
    CHECK(cell(ext, "g24", "g01234") == parse_blade("g013"));
    CHECK(cell(ext, "g024", "g1234") == parse_blade("g013"));

    for (const auto* t : {&dt, &ext})
      for (std::size_t c = 0; c < 8; ++c) {
        CHECK(t->cells[0][c] == t->reps[c]);
        CHECK(t->cells[c][0] == t->reps[c]);
      }
  }

  TEST_CASE("table cells agree with the word oracle") {
    for (const CptElementSet& set : {build_dt_set(), ext_set()}) {
      const SignedCayleyTable t = cayley_table_signed(set);
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) CHECK(t.cells[r][c] == oracle::blade_product(kCl14, t.reps[r], t.reps[c]));
    }
  }

  TEST_CASE("matrix-level table equals the blade-level table") {
    const GammaBasis basis = build_gamma_basis();
    for (const CptElementSet& set : {build_dt_set(), ext_set()})
      CHECK(cayley_table_matrix(set, basis) == cayley_table_signed(set));
  }

  TEST_CASE("a set that leaves its span is a structural error") {
    std::array<std::string, 8> names;
    for (std::size_t k = 0; k < 8; ++k) names[k] = CptElementSet::kSlots[k];
    CptElementSet set = make_cpt_set(names, parse_blade("g0"), parse_blade("g1"), parse_blade("g2"));
    set.elements[7] = PhasedBlade{Phase::one, parse_blade("g34").mask};
    CHECK_THROWS_AS(cayley_table_signed(set), StructureError);
  }

  TEST_CASE("signatures") {
    CHECK(compute_signature(build_dt_set()).to_string() == "+ + - - - + -");
    const CptSignature ext = compute_signature(ext_set());
    CHECK(ext.to_string() == "+ - - - - + +");
    CHECK(ext.plus_count() == 3);
    CHECK(ext.minus_count() == 4);

    std::array<std::string, 8> names;
    for (std::size_t k = 0; k < 8; ++k) names[k] = CptElementSet::kSlots[k];
    const CptElementSet trivial = make_cpt_set(names, SignedBlade::one(), SignedBlade::one(), SignedBlade::one());
    CHECK(compute_signature(trivial).to_string() == "+ + + + + + +");
  }

  TEST_CASE("signature equals the table diagonal") {
    for (const CptElementSet& set : {build_dt_set(), ext_set()}) {
      const SignedCayleyTable t = cayley_table_signed(set);
      const CptSignature sig = compute_signature(set);
      for (std::size_t k = 1; k < 8; ++k) {
        CHECK(t.cells[k][k].mask == 0);
        CHECK(t.cells[k][k].sign == sig.signs[k - 1]);
      }
    }
  }

  TEST_CASE("imaginary phases flip squares") {
    const CptElementSet plain = build_dt_set();
    const CptElementSet phased = build_dt_set({Phase::i, Phase::one, Phase::one});
    CHECK(compute_signature(phased).to_string() == "- + + - + + +");
    CHECK(cayley_table_signed(phased) == cayley_table_signed(plain));
    CHECK_FALSE(phased.elements[1].is_real());
    CHECK_THROWS_AS(phased.elements[1].to_signed(), UsageError);
    // a -1 phase only moves the sign
    const CptElementSet neg = build_dt_set({Phase::minus_one, Phase::one, Phase::one});
    CHECK(compute_signature(neg) == compute_signature(plain));
    CHECK(neg.elements[1].to_signed() == parse_blade("-g04"));
  }

  TEST_CASE("signed closures") {
    for (const CptElementSet& set : {build_dt_set(), ext_set()}) {
      const BladeGroup g = signed_closure(set);
      CHECK(g.group.order() == 16);
      CHECK(g.group.index_of("-1") >= 0);
      CHECK(order_pair(order_structure(g.group)) == std::pair{7, 8});

      const std::vector<int> z = center(g.group);
      CHECK(std::find(z.begin(), z.end(), g.group.index_of("-1")) != z.end());
      std::vector<int> pm1{g.group.index_of("1"), g.group.index_of("-1")};
      std::sort(pm1.begin(), pm1.end());
      const QuotientGroup q = quotient_by_central_subgroup(g.group, pm1);
      CHECK(q.group.order() == 8);
      CHECK(is_abelian(q.group));
      CHECK(exponent(q.group) == 2);
    }
  }

  TEST_CASE("commutativity of the closures") {
    const BladeGroup dt = signed_closure(build_dt_set());
    CHECK_FALSE(is_abelian(dt.group));
    CHECK(noncommuting_pair(dt.group).has_value());
    CHECK(center(dt.group).size() == 4);

    // W is central and E, Pi are disjoint even blades, so everything commutes
    const BladeGroup ext = signed_closure(ext_set());
    CHECK(is_abelian(ext.group));
    CHECK_FALSE(noncommuting_pair(ext.group).has_value());
    CHECK(exponent(ext.group) == 4);
  }

  TEST_CASE("T and C anticommute in the discrete transformation closure") {
    const CptElementSet dt = build_dt_set();
    const SignedBlade t = dt.elements[2].to_signed();
    const SignedBlade c = dt.elements[4].to_signed();
    CHECK(blade_mul(kCl14, t, c) == blade_mul(kCl14, c, t).negated());
  }

  TEST_CASE("closure of the identity alone is rejected") {
    std::array<std::string, 8> names;
    for (std::size_t k = 0; k < 8; ++k) names[k] = CptElementSet::kSlots[k];
    const CptElementSet trivial = make_cpt_set(names, SignedBlade::one(), SignedBlade::one(), SignedBlade::one());
    CHECK_THROWS_AS(signed_closure(trivial), StructureError);
  }

  TEST_CASE("closures are subgroups of G(1,4)") {
    const BladeGroup g14 = clifford_group(kCl14);
    for (const CptElementSet& set : {build_dt_set(), ext_set()}) {
      const BladeGroup g = signed_closure(set);
      const SubgroupEmbedding e = subgroup_check(g.group, g14.group, kCl14);
      CHECK(e.contained);
      CHECK(e.embedding.size() == 16);
    }
    CHECK_THROWS_AS(subgroup_check(make_standard_group(StandardGroup::quaternion8), g14.group, kCl14), UsageError);

    // a blade group that is not inside the ambient one
    const BladeGroup g13 = clifford_group({1, 3});
    const BladeGroup g = signed_closure(build_dt_set());
    CHECK_FALSE(subgroup_check(g.group, g13.group, kCl14).contained);
  }

  TEST_CASE("the two closures share an order structure but are not isomorphic") {
    const BladeGroup dt = signed_closure(build_dt_set());
    const BladeGroup ext = signed_closure(ext_set());
    CHECK(order_structure(dt.group) == order_structure(ext.group));
    CHECK_FALSE(find_isomorphism(dt.group, ext.group).has_value());
    CHECK_FALSE(find_isomorphism_serial(dt.group, ext.group).has_value());

    // dt is the central product Z4 o D8; ext is Z4 x Z2 x Z2
    const FiniteGroup c4 = make_standard_group(StandardGroup::cyclic, 4);
    const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
    const FiniteGroup c4d8 = central_product(c4, *c4.marked_involution(), d8, *d8.marked_involution());
    const auto to_dt = find_isomorphism(c4d8, dt.group);
    REQUIRE(to_dt.has_value());
    CHECK(is_homomorphism(c4d8, dt.group, to_dt->mapping));
    const FiniteGroup c4v4 = direct_product(c4, make_standard_group(StandardGroup::viergroup));
    CHECK(find_isomorphism(c4v4, ext.group).has_value());
  }

  TEST_CASE("each closure is isomorphic to itself with -1 fixed") {
    for (const CptElementSet& set : {build_dt_set(), ext_set()}) {
      const BladeGroup g = signed_closure(set);
      const auto hom = find_isomorphism(g.group, g.group);
      REQUIRE(hom.has_value());
      CHECK(g.group.label(hom->mapping[g.group.index_of("-1")]) == "-1");
    }
  }

  TEST_CASE("Salingaros construct") {
    const SalingarosReport r = salingaros_check();
    CHECK(r.passed());
    CHECK(r.construct.order() == 64);
    CHECK(order_pair(r.construct_invariants.orders) == std::pair{23, 40});
    CHECK(r.construct_invariants.center_size == 4);
    CHECK(r.g14_invariants.center_size == 4);
  }

  TEST_CASE("type mod 8") { CHECK(type_mod8(kCl14) == 5); }
}
