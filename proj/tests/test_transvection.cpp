#include <doctest.h>

#include "autz/involution.hpp"
#include "autz/transvection.hpp"
#include "support.hpp"

using namespace autz;
using autz::testing::vec;

TEST_CASE("make_transvection examples") {
  CHECK(make_transvection(vec({0, 2, 0}), vec({1, 0, 0})) == IntMatrix{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}});
  const IntMatrix m = make_transvection(vec({1, 0, 0}), vec({0, 2, 3}));
  CHECK(m == IntMatrix{{1, 0, 0}, {2, 1, 0}, {3, 0, 1}});
  // Oracle: apply to each basis vector, a -> a + delta(a) x.
  for (std::size_t j = 0; j < 3; ++j) {
    const Vector e = unit_vector(3, j);
    Vector expected = e;
    const Integer d = dot(vec({1, 0, 0}), e);
    const Vector x = vec({0, 2, 3});
    for (std::size_t i = 0; i < 3; ++i) expected[i] += d * x[i];
    CHECK(m * e == expected);
  }
  CHECK(make_transvection(vec({0, 1}), vec({1, 0})) == IntMatrix{{1, 1}, {0, 1}});

  CHECK_THROWS_AS(make_transvection(vec({0, 2}), vec({2, 0})), precondition_error);
  CHECK_THROWS_AS(make_transvection(vec({1, 1}), vec({1, 0})), precondition_error);
  CHECK_THROWS_AS(make_transvection(vec({0, 0}), vec({1, 0})), precondition_error);
}

TEST_CASE("recognize_transvection examples") {
  const auto t = recognize_transvection(IntMatrix{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}});
  REQUIRE(t);
  CHECK(t->m == 2);

  CHECK_FALSE(recognize_transvection(IntMatrix::identity(3)));

  const auto u = recognize_transvection(IntMatrix{{1, 0, 0}, {2, 1, 0}, {3, 0, 1}});
  REQUIRE(u);
  CHECK(u->direction == vec({0, 2, 3}));
  CHECK(u->covector == vec({1, 0, 0}));
  CHECK(u->m == 1);

  CHECK_FALSE(recognize_transvection(diagonal({-1, 1, 1})));
  CHECK_FALSE(recognize_transvection(IntMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  // M - I = 2 e1 e2^T has a non-primitive column; x is still e1, delta = 2 e2^*.
  const auto w = recognize_transvection(IntMatrix{{1, 4}, {0, 1}});
  REQUIRE(w);
  CHECK(w->m == 4);
}

TEST_CASE("transvections_conjugate examples") {
  CHECK(transvections_conjugate(elementary(3, 0, 1, 2), elementary(3, 1, 0, 2)));
  CHECK_FALSE(transvections_conjugate(elementary(3, 0, 1, 1), elementary(3, 0, 1, 2)));
  const IntMatrix u = random_unimodular(3, 12, 2, 5);
  const IntMatrix m = elementary(3, 0, 2, -3);
  CHECK(transvections_conjugate(m, u * m * inverse_unimodular(u)));
  CHECK_THROWS_AS(transvections_conjugate(m, IntMatrix::identity(3)), precondition_error);
}

TEST_CASE("mutual_subgroup examples") {
  const IntMatrix p = diagonal({-1, 1, 1});
  // Negates x2 = (1, 2, 0) and fixes <e2, e3>.
  const IntMatrix q = reflection(vec({1, 2, 0}), IntMatrix{{0, 0}, {1, 0}, {0, 1}});
  const auto ms = mutual_subgroup(p, q);
  REQUIRE(ms);
  CHECK(ms->side == EigenSide::plus);
  CHECK(ms->shared == hnf(IntMatrix{{0, 0}, {1, 0}, {0, 1}}));
  CHECK(ms->product_m == 4);
  // Oracle: multiply and recognize directly.
  const auto t = recognize_transvection(q * p);
  REQUIRE(t);
  CHECK(t->m == 4);

  // Same negated line e1, fixed hyperplane <(m, 1, 0), e3> with m = 3.
  const IntMatrix q2 = reflection(vec({1, 0, 0}), IntMatrix{{3, 0}, {1, 0}, {0, 1}});
  const auto ms2 = mutual_subgroup(p, q2);
  REQUIRE(ms2);
  CHECK(ms2->side == EigenSide::minus);
  CHECK(ms2->shared == hnf(IntMatrix{{1}, {0}, {0}}));
  CHECK(ms2->product_m == 6);

  const IntMatrix q3 = diagonal({1, -1, 1});
  CHECK_FALSE(mutual_subgroup(p, q3));
  CHECK_FALSE(recognize_transvection(q3 * p));

  CHECK_THROWS_AS(mutual_subgroup(p, p), precondition_error);
  CHECK_THROWS_AS(mutual_subgroup(p, diagonal({-1, -1, 1})), precondition_error);
}

TEST_CASE("shared_summand_predicate examples") {
  const IntMatrix h{{0, 0}, {1, 0}, {0, 1}};
  const ExtremalPair a{diagonal({-1, 1, 1}), reflection(vec({1, 2, 0}), h)};
  const ExtremalPair b{reflection(vec({1, 0, 1}), h), reflection(vec({-1, 3, -2}), h)};
  SummandComparison same = shared_summand_predicate(a, a);
  CHECK(same.predicate);
  CHECK(same.lattices_equal);

  SummandComparison other_lines = shared_summand_predicate(a, b);
  CHECK(other_lines.predicate);
  CHECK(other_lines.lattices_equal);

  const IntMatrix h2{{1, 0}, {0, 0}, {0, 1}};
  const ExtremalPair c{diagonal({1, -1, 1}), reflection(vec({2, 1, 0}), h2)};
  SummandComparison different = shared_summand_predicate(a, c);
  CHECK_FALSE(different.predicate);
  CHECK_FALSE(different.lattices_equal);
  CHECK(different.agrees());

  const ExtremalPair no_mutual{diagonal({-1, 1, 1}), diagonal({1, -1, 1})};
  CHECK_THROWS_AS(shared_summand_predicate(a, no_mutual), precondition_error);
}

TEST_CASE("reflection") {
  const IntMatrix r = reflection(vec({1, 1}), IntMatrix{{0}, {1}});
  CHECK(is_involution(r));
  CHECK(r * vec({1, 1}) == vec({-1, -1}));
  CHECK(r * vec({0, 1}) == vec({0, 1}));
  CHECK(classify(embed(r, 3)).is_extremal());
  CHECK_THROWS_AS(reflection(vec({2, 0}), IntMatrix{{0}, {1}}), precondition_error);
}
