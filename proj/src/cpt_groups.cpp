#include "cpt/cpt_groups.hpp"

#include <algorithm>

namespace cpt {

BladeGroup clifford_group(const AlgebraSignature& sig) {
  std::vector<SignedBlade> seed;
  for (int i = 0; i < sig.dim(); ++i) {
    seed.push_back(SignedBlade::generator(i));
    seed.push_back(SignedBlade::generator(i).negated());
  }
  const std::size_t limit = std::size_t{2} << sig.dim();
  return generate_closure(
      seed, SignedBlade::one(), [&sig](const SignedBlade& a, const SignedBlade& b) { return blade_mul(sig, a, b); },
      limit, BladeOrder{}, [](const SignedBlade& b) { return blade_label(b); });
}

SignedBlade PhasedBlade::to_signed() const {
  if (!is_real()) throw UsageError("element carries an imaginary phase");
  return {mask, phase == Phase::one ? 1 : -1};
}

PhasedBlade phased_mul(const AlgebraSignature& sig, const PhasedBlade& a, const PhasedBlade& b) {
  const SignedBlade prod = blade_mul(sig, {a.mask, 1}, {b.mask, 1});
  Phase phase = phase_mul(a.phase, b.phase);
  if (prod.sign < 0) phase = phase_mul(phase, Phase::minus_one);
  return {phase, prod.mask};
}

std::array<SignedBlade, 8> CptElementSet::representatives() const {
  std::array<SignedBlade, 8> reps;
  for (std::size_t k = 0; k < 8; ++k) reps[k] = elements[k].representative();
  return reps;
}

namespace {

const AlgebraSignature kCl14{1, 4};

PhasedBlade with_phase(const SignedBlade& b, Phase eta) {
  Phase phase = b.sign < 0 ? phase_mul(eta, Phase::minus_one) : eta;
  return {phase, b.mask};
}

}  // namespace

CptElementSet make_cpt_set(const std::array<std::string, 8>& names, const SignedBlade& p, const SignedBlade& t,
                           const SignedBlade& c, const CptPhases& phases) {
  CptElementSet set;
  set.names = names;
  set.phases = phases;
  const PhasedBlade P = with_phase(p, phases.p);
  const PhasedBlade T = with_phase(t, phases.t);
  const PhasedBlade C = with_phase(c, phases.c);
  const PhasedBlade PT = phased_mul(kCl14, P, T);
  const PhasedBlade CP = phased_mul(kCl14, C, P);
  const PhasedBlade CT = phased_mul(kCl14, C, T);
  const PhasedBlade CPT = phased_mul(kCl14, CP, T);
  set.elements = {PhasedBlade{}, P, T, PT, C, CP, CT, CPT};
  return set;
}

CptElementSet build_dt_set(const CptPhases& phases) {
  std::array<std::string, 8> names;
  for (std::size_t k = 0; k < 8; ++k) names[k] = CptElementSet::kSlots[k];
  return make_cpt_set(names, parse_blade("g04"), parse_blade("g0"), parse_blade("g2"), phases);
}

CptElementSet build_ext_set(const AutomorphismSet& derived) {
  using A = AutomorphismSet;
  const auto& rep = derived.representative;
  for (const SignedBlade& b : rep)
    if ((b.mask & ~kCl14.full_mask()) != 0) throw UsageError("automorphism set holds an out-of-range blade");
  if (rep[A::I].mask != 0) throw UsageError("automorphism set: I must be the identity");

  auto same = [](const SignedBlade& a, const SignedBlade& b) { return a.mask == b.mask; };
  const bool complete = same(blade_mul(kCl14, rep[A::E], rep[A::W]), rep[A::C]) &&
                        same(blade_mul(kCl14, rep[A::Pi], rep[A::W]), rep[A::K]) &&
                        same(blade_mul(kCl14, rep[A::Pi], rep[A::E]), rep[A::S]) &&
                        same(blade_mul(kCl14, rep[A::Pi], rep[A::C]), rep[A::F]);
  if (!complete) throw UsageError("automorphism set is incomplete: C, K, S, F do not follow from W, E, Pi");

  std::array<std::string, 8> names;
  for (std::size_t k = 0; k < 8; ++k) names[k] = A::kNames[k];
  CptElementSet set = make_cpt_set(names, rep[A::W], rep[A::E], rep[A::Pi]);
  for (std::size_t k = 0; k < 8; ++k) {
    if (set.elements[k].mask != rep[k].mask)
      throw UsageError(std::string("automorphism set: slot ") + A::kNames[k] + " does not match the composed product");
  }
  return set;
}

namespace {

SignedCayleyTable table_over(const std::array<SignedBlade, 8>& reps,
                             const std::function<SignedBlade(const SignedBlade&, const SignedBlade&)>& mul) {
  SignedCayleyTable t;
  t.reps.assign(reps.begin(), reps.end());
  for (const SignedBlade& r : reps) {
    std::vector<SignedBlade> row;
    for (const SignedBlade& c : reps) {
      const SignedBlade prod = mul(r, c);
      const bool in_span = std::any_of(reps.begin(), reps.end(), [&](const SignedBlade& x) { return x.mask == prod.mask; });
      if (!in_span)
        throw StructureError("product " + blade_label(r) + " * " + blade_label(c) + " = " + blade_label(prod) +
                             " leaves the signed span of the representatives");
      row.push_back(prod);
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

}  // namespace

SignedCayleyTable cayley_table_signed(const CptElementSet& set) {
  return table_over(set.representatives(),
                    [](const SignedBlade& a, const SignedBlade& b) { return blade_mul(kCl14, a, b); });
}

SignedCayleyTable cayley_table_matrix(const CptElementSet& set, const GammaBasis& basis) {
  const auto reps = set.representatives();
  std::vector<ExactMatrix> mats;
  for (const SignedBlade& r : reps) mats.push_back(blade_to_faithful_matrix(basis, r));
  auto index = [&](const SignedBlade& b) {
    return static_cast<std::size_t>(std::find(reps.begin(), reps.end(), b) - reps.begin());
  };
  return table_over(reps, [&](const SignedBlade& a, const SignedBlade& b) {
    const ExactMatrix prod = mats[index(a)] * mats[index(b)];
    for (std::size_t k = 0; k < 8; ++k) {
      if (auto phase = mat_phase_decompose(prod, mats[k])) {
        if (*phase == Phase::one) return SignedBlade{reps[k].mask, 1};
        if (*phase == Phase::minus_one) return SignedBlade{reps[k].mask, -1};
        throw StructureError("matrix product carries an imaginary phase");
      }
    }
    throw StructureError("matrix product " + blade_label(a) + " * " + blade_label(b) +
                         " is not proportional to any representative");
  });
}

std::string CptSignature::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (k) s += ' ';
    s += signs[k] > 0 ? '+' : '-';
  }
  return s;
}

int CptSignature::plus_count() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), 1));
}

int CptSignature::minus_count() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

CptSignature compute_signature(const CptElementSet& set) {
  CptSignature sig;
  for (std::size_t k = 1; k < 8; ++k) {
    const PhasedBlade sq = phased_mul(kCl14, set.elements[k], set.elements[k]);
    sig.signs[k - 1] = sq.phase == Phase::one ? 1 : -1;
  }
  return sig;
}

BladeGroup signed_closure(const CptElementSet& set) {
  std::vector<SignedBlade> seed;
  for (const PhasedBlade& e : set.elements) seed.push_back(e.to_signed());
  BladeGroup closure = generate_closure(
      seed, SignedBlade::one(), [](const SignedBlade& a, const SignedBlade& b) { return blade_mul(kCl14, a, b); },
      std::size_t{64}, BladeOrder{}, [](const SignedBlade& b) { return blade_label(b); });
  if (closure.group.order() != 16)
    throw StructureError("signed closure has order " + std::to_string(closure.group.order()) + ", expected 16");
  return closure;
}

SubgroupEmbedding subgroup_check(const FiniteGroup& sub, const FiniteGroup& amb, const AlgebraSignature& sig) {
  auto parse_all = [&](const FiniteGroup& g, const char* which) {
    std::vector<SignedBlade> out;
    for (const std::string& l : g.labels()) {
      try {
        out.push_back(parse_blade(l, sig));
      } catch (const UsageError&) {
        throw UsageError(std::string("subgroup_check: ") + which + " group element '" + l + "' is not a blade");
      }
    }
    return out;
  };
  const std::vector<SignedBlade> sub_elems = parse_all(sub, "candidate");
  const std::vector<SignedBlade> amb_elems = parse_all(amb, "ambient");

  SubgroupEmbedding result;
  for (const SignedBlade& b : sub_elems) {
    auto it = std::find(amb_elems.begin(), amb_elems.end(), b);
    if (it == amb_elems.end()) return {false, {}};
    result.embedding.push_back(static_cast<int>(it - amb_elems.begin()));
  }
  for (int x = 0; x < sub.order(); ++x)
    for (int y = 0; y < sub.order(); ++y)
      if (result.embedding[sub.mul(x, y)] != amb.mul(result.embedding[x], result.embedding[y])) return {false, {}};
  result.contained = true;
  return result;
}

bool SalingarosReport::passed() const {
  return isomorphism.has_value() && construct_invariants == g14_invariants;
}

SalingarosReport salingaros_check() {
  const FiniteGroup q8 = make_standard_group(StandardGroup::quaternion8);
  const FiniteGroup d8 = make_standard_group(StandardGroup::dihedral8);
  const FiniteGroup v4 = make_standard_group(StandardGroup::viergroup);
  const FiniteGroup n4 = central_product(q8, *q8.marked_involution(), d8, *d8.marked_involution());
  FiniteGroup construct = central_product(n4, *n4.marked_involution(), v4, *v4.marked_involution());
  FiniteGroup g14 = clifford_group(kCl14).group;

  auto iso = find_isomorphism(construct, g14);
  GroupInvariants ci = invariants(construct);
  GroupInvariants gi = invariants(g14);
  return {std::move(construct), std::move(g14), std::move(ci), std::move(gi), std::move(iso)};
}

}  // namespace cpt
