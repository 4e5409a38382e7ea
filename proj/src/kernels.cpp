#include "autz/kernels.hpp"

#include <algorithm>
#include <array>

#include "autz/congruence.hpp"
#include "autz/gf2.hpp"
#include "autz/involution.hpp"

namespace autz {

namespace {

using Small2 = std::array<long, 4>;  // a, b, c, d of [[a, b], [c, d]]

Small2 mul(const Small2& x, const Small2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

IntMatrix to_matrix(const Small2& x) { return IntMatrix{{x[0], x[1]}, {x[2], x[3]}}; }

// Runs body(i) for i in [0, count) and concatenates the per-index buckets in
// index order, so the output does not depend on the schedule.
template <class T, class F>
std::vector<T> collect(long count, Execution ex, F body) {
  std::vector<std::vector<T>> buckets(count);
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) buckets[i] = body(i);
  } else {
    for (long i = 0; i < count; ++i) buckets[i] = body(i);
  }
  std::vector<T> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<IntMatrix> search_braid_solutions(long bound, Execution ex) {
  const Small2 s{0, 1, 1, 0};
  auto found = collect<Small2>(2 * bound + 1, ex, [&](long i) {
    std::vector<Small2> hits;
    const long a = i - bound;
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c) {
        const Small2 r{a, b, c, -a};
        if (-a * a - b * c != -1 || r == s) continue;
        if (mul(mul(s, r), s) == mul(mul(r, s), r)) hits.push_back(r);
      }
    return hits;
  });
  std::vector<IntMatrix> out;
  for (const auto& r : found) out.push_back(to_matrix(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntMatrix> search_sl2_square_roots(const IntMatrix& t, long bound, Execution ex) {
  if (t.rows() != 2 || t.cols() != 2) throw precondition_error("expected a 2x2 matrix");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!t(i, j).fits_slong_p()) throw precondition_error("search target too large");
  const Small2 target{t(0, 0).get_si(), t(0, 1).get_si(), t(1, 0).get_si(), t(1, 1).get_si()};

  auto found = collect<Small2>(2 * bound + 1, ex, [&](long i) {
    std::vector<Small2> hits;
    const long p = i - bound;
    auto check = [&](const Small2& x) {
      if (mul(x, x) == target) hits.push_back(x);
    };
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r) {
        // p s - q r = 1 determines s unless p = 0.
        if (p == 0) {
          if (q * r != -1) continue;
          for (long s = -bound; s <= bound; ++s) check({p, q, r, s});
        } else {
          const long num = 1 + q * r;
          if (num % p != 0) continue;
          const long s = num / p;
          if (s < -bound || s > bound) continue;
          check({p, q, r, s});
        }
      }
    return hits;
  });
  std::vector<IntMatrix> out;
  for (const auto& x : found) out.push_back(to_matrix(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> commuting_extremal_sign_masks(std::size_t n, Execution ex) {
  if (n > 20) throw precondition_error("sign-matrix census limited to n <= 20");
  const std::vector<IntMatrix> family = standard_commuting_family(n);
  return collect<std::uint32_t>(1L << n, ex, [&](long mask) {
    IntMatrix d = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1L << i)) d(i, i) = -1;
    std::vector<std::uint32_t> hit;
    const bool commutes =
        std::all_of(family.begin(), family.end(), [&](const IntMatrix& f) { return commute(d, f); });
    if (commutes && classify(d).is_extremal()) hit.push_back(static_cast<std::uint32_t>(mask));
    return hit;
  });
}

LiftCensus exhaustive_lift_census(std::size_t n, Execution ex) {
  if (n == 0 || n > 4) throw precondition_error("exhaustive census limited to 1 <= n <= 4");
  const long total = 1L << (n * n);
  // One entry per invertible matrix: 0 = lifted correctly, 1 = failed.
  auto outcomes = collect<char>(total, ex, [&](long mask) {
    const Gf2Matrix mbar = Gf2Matrix::from_mask(n, static_cast<std::uint64_t>(mask));
    if (!gf2_invertible(mbar)) return std::vector<char>{};
    const IntMatrix m = lift_mod2(mbar);
    const bool ok = determinant(m) == 1 && reduce_mod2(m) == mbar;
    return std::vector<char>{static_cast<char>(ok ? 0 : 1)};
  });
  LiftCensus census;
  census.group_order = outcomes.size();
  census.failures = static_cast<std::size_t>(std::count(outcomes.begin(), outcomes.end(), 1));
  return census;
}

}  // namespace autz
