#include "autz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "autz/congruence.hpp"
#include "autz/gf2.hpp"
#include "autz/involution.hpp"
#include "autz/lattice.hpp"
#include "autz/random.hpp"
#include "autz/transvection.hpp"

namespace autz {

namespace {

struct Trial {
  json inputs = json::object();
  json failure;  // null while the trial holds
  std::map<std::string, long> tally;

  void count(const std::string& key, long v = 1) { tally[key] += v; }
  void note(const std::string& name, const IntMatrix& m) { inputs[name] = matrix_to_json(m); }
  void fail(const std::string& reason) {
    if (failure.is_null()) failure = {{"reason", reason}, {"inputs", inputs}};
  }
  // Returns the condition so checks read as `if (!t.expect(...)) return;`.
  bool expect(bool condition, const std::string& reason) {
    if (!condition) fail(reason);
    return condition;
  }
};

// Checks that do not depend on the trial index, run once per suite.
struct Fixed {
  std::vector<std::string> failures;
  std::map<std::string, long> tally;

  void expect(bool condition, const std::string& reason) {
    if (!condition) failures.push_back(reason);
  }
};

UnimodularSample conjugator(std::size_t n, Rng& rng) { return random_unimodular_sample(n, n + 4, 2, rng); }

UnimodularSample short_conjugator(std::size_t n, Rng& rng) {
  return random_unimodular_sample(n, 1 + rng.below(3), 2, rng);
}

// Profile of rank n; with_swaps forces p >= 1, otherwise p = 0.
InvolutionProfile random_profile(std::size_t n, bool with_swaps, Rng& rng) {
  InvolutionProfile pr;
  pr.swaps = with_swaps ? 1 + rng.below(n / 2) : 0;
  const std::size_t rest = n - 2 * pr.swaps;
  pr.fixed = rng.below(rest + 1);
  pr.negated = rest - pr.fixed;
  return pr;
}

// Places the entries of v (length n - 1) at the coordinates other than k.
Vector spread_except(const Vector& v, std::size_t k) {
  Vector out(v.size() + 1);
  for (std::size_t i = 0, src = 0; i < out.size(); ++i)
    if (i != k) out[i] = v[src++];
  return out;
}

IntMatrix coordinate_hyperplane(std::size_t n, std::size_t k) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) cols.push_back(unit_vector(n, i));
  return IntMatrix::from_columns(n, cols);
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

std::string order_key(std::optional<unsigned> order) {
  return order ? "product_order_" + std::to_string(*order) : "product_order_neither";
}

// ---------------------------------------------------------------------------

void trial_l1_3(Trial& t, Rng& rng, std::size_t n) {
  // Constructive: a non-diagonalizable involution has an order-3 witness.
  const InvolutionProfile pr = random_profile(n, true, rng);
  const UnimodularSample u = conjugator(n, rng);
  const IntMatrix p = u.conjugate(canonical_block(pr));
  t.note("P", p);
  if (!t.expect(involution_profile(p) == pr, "conjugation changed the profile")) return;
  const IntMatrix w = order3_witness(p);
  t.note("witness", w);
  if (!t.expect(is_involution(w) && involutions_conjugate(p, w), "witness is not a conjugate involution")) return;
  if (!t.expect(element_order(p * w, 3) == 3u, "witness product does not have order 3")) return;
  t.count("witnesses");

  // Sampled: products of two conjugates of a diagonalizable involution.
  InvolutionProfile diag = random_profile(n, false, rng);
  if (diag.negated == 0) diag = {n - 1, 1, 0};
  if (diag.fixed == 0) diag = {1, n - 1, 0};
  const IntMatrix d = canonical_block(diag);
  const UnimodularSample u1 = conjugator(n, rng);
  const UnimodularSample v = rng.coin() ? short_conjugator(n, rng) : conjugator(n, rng);
  const IntMatrix p1 = u1.conjugate(d);
  const IntMatrix p2 = u1.conjugate(v.conjugate(d));
  t.note("P1", p1);
  t.note("P2", p2);
  const auto order = element_order(p1 * p2, 3);
  t.count(order_key(order));
  t.expect(order != 3u, "product of diagonalizable conjugates has order 3");
}

void trial_l1_4(Trial& t, Rng& rng, std::size_t n) {
  const std::vector<IntMatrix> family = standard_commuting_family(n);
  const IntMatrix& phi = family[0];
  const UnimodularSample u = conjugator(n, rng);
  IntMatrix q;
  switch (rng.below(3)) {
    case 0: q = family[1 + rng.below(n - 1)]; break;
    case 1: q = short_conjugator(n, rng).conjugate(phi); break;
    default: q = conjugator(n, rng).conjugate(phi); break;
  }
  const IntMatrix p1 = u.conjugate(phi);
  const IntMatrix p2 = u.conjugate(q);
  t.note("P1", p1);
  t.note("P2", p2);
  const IntMatrix prod = p1 * p2;
  if (prod.is_identity()) {
    t.count("identity_products");
  } else if (is_involution(prod)) {
    t.count("involution_products");
    t.expect(classify(prod).is_gamma(2), "involution product is not a 2-involution");
    t.expect(involution_profile(prod) == InvolutionProfile{n - 2, 2, 0},
             "involution products are not pairwise conjugate");
  } else {
    t.count("non_involution_products");
  }

  // diag(1, -I_{n-1}) is the square of 1 (+) quarter turns when n - 1 is even.
  if (n % 2 == 1) {
    IntMatrix r = IntMatrix::identity(1);
    for (std::size_t k = 0; k < (n - 1) / 2; ++k) r = direct_sum(r, IntMatrix{{0, -1}, {1, 0}});
    IntMatrix psi = -IntMatrix::identity(n);
    psi(0, 0) = 1;
    const IntMatrix rc = u.conjugate(r);
    t.expect(rc * rc == u.conjugate(psi), "rotation square fragment failed");
    t.count("square_fragment");
  } else {
    t.count("square_fragment_skipped_even_n");
  }
}

void trial_l1_5(Trial& t, Rng& rng, std::size_t n) {
  // Sampled: pairs of conjugates of a 1-permutation.
  const InvolutionProfile one = rng.coin() ? InvolutionProfile{0, n - 2, 1} : InvolutionProfile{n - 2, 0, 1};
  const IntMatrix pi = canonical_block(one);
  const UnimodularSample u = conjugator(n, rng);
  const UnimodularSample v = rng.coin() ? short_conjugator(n, rng) : conjugator(n, rng);
  const IntMatrix p1 = u.conjugate(pi);
  const IntMatrix p2 = u.conjugate(v.conjugate(pi));
  t.note("pi1", p1);
  t.note("pi2", p2);
  if (!t.expect(classify(p1).tag == InvolutionKindTag::one_permutation, "sample is not a 1-permutation")) return;
  const IntMatrix prod = p1 * p2;
  t.expect(rational_rank(IntMatrix::identity(n) - prod) <= 2, "rank(I - pi1 pi2) exceeds 2");
  if (is_involution(prod)) {
    t.count("involution_products");
    t.expect(!classify(prod).is_gamma(4), "1-permutation product is a 4-involution");
  }
  t.count("one_permutation_pairs");

  // Constructive: eligible involutions have a 4-involution witness.
  InvolutionProfile pr;
  pr.swaps = 1 + rng.below(n / 2);
  const std::size_t rest = n - 2 * pr.swaps;
  if (pr.swaps == 1) {
    pr.fixed = 1 + rng.below(rest - 1);
  } else {
    pr.fixed = rng.below(rest + 1);
  }
  pr.negated = rest - pr.fixed;
  const IntMatrix p = conjugator(n, rng).conjugate(canonical_block(pr));
  t.note("P", p);
  const IntMatrix w = four_involution_witness(p);
  t.note("witness", w);
  t.expect(involutions_conjugate(p, w), "witness is not conjugate");
  t.expect(classify(p * w).is_gamma(4), "witness product is not a 4-involution");
  t.count("witnesses");
}

void trial_l1_6(Trial& t, Rng& rng, std::size_t n) {
  IntMatrix theta = IntMatrix::identity(n);
  theta(0, 0) = theta(1, 1) = -1;
  IntMatrix phi_star = IntMatrix::identity(n);
  phi_star(1, 1) = -1;
  const IntMatrix tau_star = elementary(n, 0, 1, 2);

  IntMatrix r;
  if (rng.coin()) {
    const long e = rng.coin() ? 1 : -1;
    r = IntMatrix{{e, rng.uniform(-4, 4)}, {0, -e}};
    t.count("constructed");
  } else {
    const IntMatrix seed = rng.coin() ? IntMatrix{{1, 0}, {0, -1}} : IntMatrix{{0, 1}, {1, 0}};
    r = short_conjugator(2, rng).conjugate(seed);
    t.count("sampled");
  }
  const IntMatrix s = phi_star * embed(r, n);
  t.note("s", s);
  if (!t.expect(commute(s, theta), "element of S does not commute with theta")) return;
  if (!commute(s, tau_star)) {
    t.count("non_commuting");
    return;
  }
  t.count("commuting");
  const IntMatrix blk = s.block(0, 0, 2, 2);
  const Integer& e = blk(0, 0);
  const Integer& b = blk(0, 1);
  if (!t.expect(blk(1, 0) == 0 && blk(1, 1) == e && abs(e) == 1, "commutant block is not [[e,b],[0,e]]"))
    return;
  const IntMatrix sq = s * s;
  const IntMatrix sq_blk = sq.block(0, 0, 2, 2);
  IntMatrix expected_sq = IntMatrix::identity(2);
  expected_sq(0, 1) = 2 * e * b;
  t.expect(sq_blk == expected_sq, "square block is not [[1,2b],[0,1]]");
  if (b == 0) {
    t.expect(sq.is_identity(), "square of a diagonal commutant is not I");
    return;
  }
  const auto tv = recognize_transvection(sq);
  if (!t.expect(tv && tv->m == 2 * abs(b), "square is not a 2|b|-transvection")) return;
  const UnimodularSample u = conjugator(n, rng);
  const auto tc = recognize_transvection(u.conjugate(sq));
  t.expect(tc && tc->m == tv->m, "transvection invariant not conjugation invariant");
  t.count("even_transvections");
}

void trial_l1_7(Trial& t, Rng& rng, std::size_t n, std::size_t index) {
  const std::vector<IntMatrix> family = standard_commuting_family(n);
  const IntMatrix& p = family[0];
  IntMatrix q;
  std::optional<EigenSide> expected_side;
  std::optional<Lattice> expected_shared;
  Integer expected_m = 0;
  const Vector e0 = unit_vector(n, 0);
  const IntMatrix h = coordinate_hyperplane(n, 0);

  switch (index % 4) {
    case 0: {
      // Same fixed hyperplane, negated lines e0 and e e0 + m c.
      const Vector c = spread_except(random_primitive_vector(n - 1, 3, rng), 0);
      const long m = rng.nonzero(3);
      const long e = rng.coin() ? 1 : -1;
      Vector x1(n);
      for (std::size_t i = 0; i < n; ++i) x1[i] = e * e0[i] + m * c[i];
      q = reflection(x1, h);
      expected_side = EigenSide::plus;
      expected_shared = Lattice::span(h);
      expected_m = 2 * std::abs(m);
      t.count("mode_hyperplane");
      break;
    }
    case 1: {
      // Same negated line e0, fixed hyperplanes <e1..> and <m e0 + b2, K>.
      const Vector b2 = random_primitive_vector(n - 1, 3, rng);
      const IntMatrix g = complete_to_basis(IntMatrix::from_columns(n - 1, {b2}));
      const long m = rng.nonzero(3);
      IntMatrix hyper(n, n - 1);
      for (std::size_t j = 0; j + 1 < n; ++j) hyper.set_column(j, spread_except(g.column(j), 0));
      hyper(0, 0) = m;
      q = reflection(e0, hyper);
      expected_side = EigenSide::minus;
      expected_shared = Lattice::span(IntMatrix::from_columns(n, {e0}));
      expected_m = 2 * std::abs(m);
      t.count("mode_line");
      break;
    }
    case 2:
      q = family[1 + rng.below(n - 1)];
      t.count("mode_commuting");
      break;
    default:
      q = conjugator(n, rng).conjugate(p);
      t.count("mode_independent");
      break;
  }
  if (q == p) {
    t.count("coincident_skipped");
    return;
  }

  const UnimodularSample u = conjugator(n, rng);
  const IntMatrix pc = u.conjugate(p);
  const IntMatrix qc = u.conjugate(q);
  t.note("P", pc);
  t.note("Q", qc);
  const auto ms = mutual_subgroup(pc, qc);
  const bool even = is_even_transvection(qc * pc);
  if (!t.expect(ms.has_value() == even, "mutual subgroup does not match an even-transvection product")) return;
  t.count(ms ? "mutual" : "not_mutual");
  if (expected_side) {
    if (!t.expect(ms.has_value() && ms->side == *expected_side, "constructed pair lost its mutual subgroup")) return;
    t.expect(ms->shared == image(u.forward, *expected_shared), "shared lattice differs from construction");
    t.expect(ms->product_m == expected_m, "product invariant differs from 2|m|");
  } else if (index % 4 == 2) {
    t.expect(!ms, "commuting distinct pair reported a mutual subgroup");
  }
}

ExtremalPair coordinate_pair(std::size_t n, std::size_t k, EigenSide side, Rng& rng) {
  IntMatrix first = IntMatrix::identity(n);
  first(k, k) = -1;
  const IntMatrix h = coordinate_hyperplane(n, k);
  if (side == EigenSide::plus) {
    const Vector c = spread_except(random_primitive_vector(n - 1, 2, rng), k);
    const long m = rng.nonzero(3);
    Vector x = unit_vector(n, k);
    for (std::size_t i = 0; i < n; ++i) x[i] += m * c[i];
    return {first, reflection(x, h)};
  }
  IntMatrix sheared = h;
  bool moved = false;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const long s = rng.uniform(-2, 2);
    sheared(k, j) = s;
    moved = moved || s != 0;
  }
  if (!moved) sheared(k, 0) = 1;
  return {first, reflection(unit_vector(n, k), sheared)};
}

void trial_p1_8(Trial& t, Rng& rng, std::size_t n) {
  const EigenSide side = rng.coin() ? EigenSide::plus : EigenSide::minus;
  const std::size_t k1 = rng.below(n);
  const std::size_t k2 = rng.coin() ? k1 : rng.below(n);
  const ExtremalPair a = coordinate_pair(n, k1, side, rng);
  const ExtremalPair b = (k1 == k2 && rng.below(4) == 0) ? a : coordinate_pair(n, k2, side, rng);
  const UnimodularSample u = conjugator(n, rng);
  const ExtremalPair ac{u.conjugate(a.first), u.conjugate(a.second)};
  const ExtremalPair bc{u.conjugate(b.first), u.conjugate(b.second)};
  t.note("P1", ac.first);
  t.note("P2", ac.second);
  t.note("Q1", bc.first);
  t.note("Q2", bc.second);
  const SummandComparison cmp = shared_summand_predicate(ac, bc);
  const bool expected = k1 == k2;
  t.count(side == EigenSide::plus ? "hyperplanes" : "lines");
  t.count(expected ? "same_summand" : "different_summand");
  t.expect(cmp.agrees(), "predicate disagrees with lattice equality");
  t.expect(cmp.lattices_equal == expected, "lattice equality disagrees with construction");
}

void trial_p1_9(Trial& t, Rng& rng, std::size_t n) {
  const std::vector<IntMatrix> family = standard_commuting_family(n);
  const InvolutionProfile pr = random_profile(n, rng.coin(), rng);
  const IntMatrix p = conjugator(n, rng).conjugate(canonical_block(pr));
  t.note("P", p);
  const bool commutes_all =
      std::all_of(family.begin(), family.end(), [&](const IntMatrix& f) { return commute(p, f); });
  if (is_diagonal(p)) {
    t.count("diagonal_samples");
  } else {
    t.expect(!commutes_all, "non-diagonal involution commutes with the whole family");
    t.count("rejected_by_commutation");
  }
  if (commutes_all && classify(p).is_extremal())
    t.expect(std::find(family.begin(), family.end(), p) != family.end(),
             "extremal involution commuting with the family is not a member");
}

void trial_claim1(Trial& t, Rng& rng, std::size_t n) {
  std::size_t i = rng.below(n), j, k;
  do j = rng.below(n); while (j == i);
  do k = rng.below(n); while (k == i || k == j);
  const long a = rng.nonzero(5), b = rng.nonzero(5);
  t.inputs["steinberg"] = {i, j, k, a, b};
  t.expect(commutator(elementary(n, i, j, a), elementary(n, j, k, b)) == elementary(n, i, k, a * b),
           "Steinberg relation failed");

  const long kk = rng.nonzero(5);
  const IntMatrix target = elementary(2, 0, 1, 2 * kk);
  const auto roots = unipotent_sqrt_sl2(target);
  const IntMatrix root = elementary(2, 0, 1, kk);
  t.expect(roots.size() == 2 && std::find(roots.begin(), roots.end(), root) != roots.end() &&
               std::find(roots.begin(), roots.end(), -root) != roots.end(),
           "square roots of I + 2k E_12 are not +-(I + k E_12)");

  const long c = rng.nonzero(6);
  const IntMatrix tv = elementary(n, i, j, c);
  const UnimodularSample u = conjugator(n, rng);
  const auto rec = recognize_transvection(u.conjugate(tv));
  t.expect(rec && rec->m == std::abs(c), "elementary transvection invariant differs from |c|");
  t.count("trials");
}

IntMatrix random_gamma2(std::size_t n, Rng& rng) {
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t step = 0; step < n + 3; ++step) {
    if (rng.below(4) == 0) {
      IntMatrix d = IntMatrix::identity(n);
      const std::size_t i = rng.below(n);
      d(i, i) = -1;
      s = s * d;
      continue;
    }
    const std::size_t i = rng.below(n);
    std::size_t j;
    do j = rng.below(n); while (j == i);
    s = s * elementary(n, i, j, 2 * rng.nonzero(2));
  }
  return conjugator(n, rng).conjugate(s);
}

void trial_claim3(Trial& t, Rng& rng, std::size_t n) {
  const IntMatrix sigma = random_gamma2(n, rng);
  t.note("sigma", sigma);
  if (!t.expect(in_gamma(sigma, 2), "sample is not in Gamma_2")) return;
  for (std::size_t k = 0; k < n; ++k) {
    const Vector e = unit_vector(n, k);
    const IntMatrix rho_line = gamma2_line_witness(sigma, e);
    if (!t.expect(in_gamma(rho_line, 2) && rho_line * e == sigma * e, "line witness failed")) return;
    const IntMatrix rho = gamma2_hyperplane_witness(sigma, e);
    const Lattice c = Lattice::span(coordinate_hyperplane(n, k));
    if (!t.expect(in_gamma(rho, 2) && image(rho, c) == image(sigma, c), "hyperplane witness failed")) return;
  }
  t.count("hyperplane_witnesses", static_cast<long>(n));

  const std::size_t i = rng.below(n);
  std::size_t j;
  do j = rng.below(n); while (j == i);
  const IntMatrix outside = sigma * elementary(n, i, j, 2 * rng.uniform(-2, 2) + 1);
  t.note("outside", outside);
  t.expect(!in_gamma(outside, 2), "odd elementary factor stayed in Gamma_2");
  t.expect(!congruence_pattern_holds(outside), "non-member satisfies the congruence pattern");
  t.count("non_members_rejected");
}

void trial_mu(Trial& t, Rng& rng, std::size_t n) {
  Gf2Matrix mbar(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mbar.set(i, j, rng.coin());
  } while (!gf2_invertible(mbar));
  IntMatrix as_int(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) as_int(i, j) = mbar.get(i, j) ? 1 : 0;
  t.note("Mbar", as_int);
  const IntMatrix m = lift_mod2(mbar);
  t.note("M", m);
  t.expect(determinant(m) == 1, "lift does not have determinant 1");
  t.expect(reduce_mod2(m) == mbar, "lift does not reduce to its input");
  t.count("lifts");
}

// ---------------------------------------------------------------------------

void fixed_p1_9(Fixed& f, std::size_t n, Execution ex) {
  const std::vector<IntMatrix> family = standard_commuting_family(n);
  f.expect(family.size() == n, "family size differs from n");
  for (std::size_t i = 0; i < n; ++i) {
    f.expect(classify(family[i]).is_extremal(), "family member is not extremal");
    for (std::size_t j = i + 1; j < n; ++j) {
      f.expect(commute(family[i], family[j]), "family members do not commute");
      // Needs rank A- = 2 < rank A+ = n - 2.
      if (n >= 5) f.expect(classify(family[i] * family[j]).is_gamma(2), "phi_i phi_j is not a 2-involution");
    }
  }
  if (n < 5) f.tally["pair_products_unchecked_below_rank_5"] = 1;
  const auto masks = commuting_extremal_sign_masks(n, ex);
  std::vector<std::uint32_t> expected;
  for (std::size_t i = 0; i < n; ++i) expected.push_back(1u << i);
  f.expect(masks == expected, "sign-matrix census differs from the family");
  f.tally["sign_matrices_checked"] = 1L << n;
  f.tally["commuting_extremal_sign_matrices"] = static_cast<long>(masks.size());
}

void fixed_claim1(Fixed& f, Execution ex) {
  try {
    claim1_commutator_identities();
  } catch (const std::logic_error& e) {
    f.expect(false, e.what());
  }
  const auto solutions = braid_involution_solutions();
  f.expect(solutions.size() == 4, "braid relation does not have four solutions");
  f.expect(solutions == search_braid_solutions(50, ex), "braid search disagrees with case analysis");
  const IntMatrix flip{{1, 0}, {0, -1}};
  for (const auto& r : solutions) {
    const auto t = recognize_transvection((flip * r) * (flip * r));
    f.expect(t && t->m == 2, "braid solution square is not a 2-transvection");
  }
  const IntMatrix t{{1, 2}, {0, 1}};
  f.expect(unipotent_sqrt_sl2(t) == search_sl2_square_roots(t, 100, ex), "square root search disagrees");
}

void fixed_mu(Fixed& f, std::size_t n, Execution ex) {
  if (n > 3) return;
  std::size_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= (1u << n) - (1u << i);
  const LiftCensus census = exhaustive_lift_census(n, ex);
  f.expect(census.group_order == order, "GL(n, 2) census has the wrong size");
  f.expect(census.failures == 0, "exhaustive lift census found failures");
  f.tally["exhaustive_group_order"] = static_cast<long>(census.group_order);
}

struct SuiteInfo {
  SuiteId id;
  const char* name;
  RankWindow window;
  const char* validity;
};

const SuiteInfo kSuites[] = {
    {SuiteId::L1_3, "L1_3", {2, 16},
     "order-3 witness exact; diagonalizable conjugate pairs sampled"},
    {SuiteId::L1_4_partial, "L1_4_partial", {5, 16},
     "extremal conjugate pairs sampled; square fragment exact for odd n only; converse untested"},
    {SuiteId::L1_5, "L1_5", {9, 16},
     "1-permutation pairs sampled; 4-involution witness exact, needs n >= 9"},
    {SuiteId::L1_6, "L1_6", {5, 16},
     "commutant of tau* within phi* rho sampled and constructed; block shape asserted literally"},
    {SuiteId::L1_7, "L1_7", {3, 16},
     "mutual subgroup iff even transvection, both directions; constructed and sampled pairs"},
    {SuiteId::P1_8, "P1_8", {3, 16},
     "coordinate rank/corank-1 summands encoded by conjugated extremal pairs"},
    {SuiteId::P1_9, "P1_9", {3, 10},
     "diagonal sign matrices exhaustive; non-diagonal involutions sampled"},
    {SuiteId::C2_1_claim1, "C2_1_claim1", {3, 16},
     "commutator identities and braid solutions exact; Steinberg relations sampled"},
    {SuiteId::C2_1_claim3, "C2_1_claim3", {3, 16},
     "Gamma_2 witnesses on all coordinate lines and hyperplanes; non-members sampled"},
    {SuiteId::MU_SURJ, "MU_SURJ", {1, 16},
     "GL(n,2) exhaustive for n <= 3; random invertible matrices otherwise"},
};

const SuiteInfo& info_of(SuiteId id) {
  for (const auto& s : kSuites)
    if (s.id == id) return s;
  throw std::logic_error("unknown suite");
}

}  // namespace

std::string suite_name(SuiteId id) { return info_of(id).name; }

std::optional<SuiteId> parse_suite_id(std::string_view name) {
  for (const auto& s : kSuites)
    if (name == s.name) return s.id;
  return std::nullopt;
}

const std::vector<SuiteId>& all_suites() {
  static const std::vector<SuiteId> ids = [] {
    std::vector<SuiteId> v;
    for (const auto& s : kSuites) v.push_back(s.id);
    return v;
  }();
  return ids;
}

RankWindow suite_window(SuiteId id) { return info_of(id).window; }

SuiteReport run_suite(SuiteId id, std::size_t n, std::size_t trials, std::uint64_t seed, Execution ex) {
  const SuiteInfo& info = info_of(id);
  if (n < info.window.min_n || n > info.window.max_n)
    throw precondition_error("n out of range for " + std::string(info.name) + ": valid ranks are [" +
                             std::to_string(info.window.min_n) + ", " +
                             std::to_string(info.window.max_n) + "]");
  const auto start = std::chrono::steady_clock::now();

  Fixed fixed;
  std::function<void(Trial&, Rng&, std::size_t)> body;
  switch (id) {
    case SuiteId::L1_3: body = [n](Trial& t, Rng& r, std::size_t) { trial_l1_3(t, r, n); }; break;
    case SuiteId::L1_4_partial: body = [n](Trial& t, Rng& r, std::size_t) { trial_l1_4(t, r, n); }; break;
    case SuiteId::L1_5: body = [n](Trial& t, Rng& r, std::size_t) { trial_l1_5(t, r, n); }; break;
    case SuiteId::L1_6: body = [n](Trial& t, Rng& r, std::size_t) { trial_l1_6(t, r, n); }; break;
    case SuiteId::L1_7: body = [n](Trial& t, Rng& r, std::size_t i) { trial_l1_7(t, r, n, i); }; break;
    case SuiteId::P1_8: body = [n](Trial& t, Rng& r, std::size_t) { trial_p1_8(t, r, n); }; break;
    case SuiteId::P1_9:
      fixed_p1_9(fixed, n, ex);
      body = [n](Trial& t, Rng& r, std::size_t) { trial_p1_9(t, r, n); };
      break;
    case SuiteId::C2_1_claim1:
      fixed_claim1(fixed, ex);
      body = [n](Trial& t, Rng& r, std::size_t) { trial_claim1(t, r, n); };
      break;
    case SuiteId::C2_1_claim3: body = [n](Trial& t, Rng& r, std::size_t) { trial_claim3(t, r, n); }; break;
    case SuiteId::MU_SURJ:
      fixed_mu(fixed, n, ex);
      body = [n](Trial& t, Rng& r, std::size_t) { trial_mu(t, r, n); };
      break;
  }

  const auto results = map_trials<Trial>(trials, seed, ex, [&](Rng& rng, std::size_t i) {
    Trial t;
    try {
      body(t, rng, i);
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    return t;
  });

  SuiteReport rep;
  rep.suite = id;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.validity = "n in [" + std::to_string(info.window.min_n) + ", " + std::to_string(info.window.max_n) +
                 "]; " + info.validity;
  for (const auto& reason : fixed.failures)
    rep.failures.push_back({{"trial", nullptr}, {"reason", reason}, {"inputs", json::object()}});
  std::map<std::string, long> tally = fixed.tally;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const auto& [k, v] : results[i].tally) tally[k] += v;
    if (!results[i].failure.is_null()) {
      json f = results[i].failure;
      f["trial"] = i;
      rep.failures.push_back(std::move(f));
    }
  }
  for (const auto& [k, v] : tally) rep.stats[k] = v;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json to_json(const SuiteReport& report, bool include_timing) {
  json j = {
      {"suite", suite_name(report.suite)},
      {"n", report.n},
      {"trials", report.trials},
      {"seed", report.seed},
      {"passed", report.passed()},
      {"validity", report.validity},
      {"stats", report.stats},
      {"failures", report.failures},
  };
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace autz
