#include "autz/transvection.hpp"

#include "autz/involution.hpp"

namespace autz {

namespace {

IntMatrix outer_plus_identity(const Vector& x, const Vector& delta) {
  const std::size_t n = x.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += x[i] * delta[j];
  return m;
}

}  // namespace

IntMatrix TransvectionData::matrix() const { return outer_plus_identity(direction, covector); }

IntMatrix make_transvection(const Vector& delta, const Vector& x) {
  if (delta.size() != x.size() || x.empty()) throw precondition_error("dimension mismatch");
  if (content(delta) == 0) throw precondition_error("delta is zero");
  if (!is_primitive(x)) throw precondition_error("x is not primitive");
  if (dot(delta, x) != 0) throw precondition_error("delta(x) != 0");
  return outer_plus_identity(x, delta);
}

std::optional<TransvectionData> recognize_transvection(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) return std::nullopt;
  const std::size_t n = m.rows();
  const IntMatrix d = m - IntMatrix::identity(n);
  if (d.is_zero() || !(d * d).is_zero()) return std::nullopt;

  std::size_t col = 0;
  while (d.column(col) == Vector(n)) ++col;
  auto [c, x] = content_and_primitive(d.column(col));
  std::size_t lead = 0;
  while (x[lead] == 0) ++lead;
  if (x[lead] < 0)
    for (auto& v : x) v = -v;

  // Every column of D must be an integer multiple of x.
  Vector delta(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!mpz_divisible_p(d(lead, j).get_mpz_t(), x[lead].get_mpz_t())) return std::nullopt;
    delta[j] = d(lead, j) / x[lead];
  }
  TransvectionData t{x, delta, content(delta)};
  if (t.matrix() != m || dot(delta, x) != 0) return std::nullopt;
  return t;
}

bool is_even_transvection(const IntMatrix& m) {
  const auto t = recognize_transvection(m);
  return t && mpz_even_p(t->m.get_mpz_t());
}

bool transvections_conjugate(const IntMatrix& a, const IntMatrix& b) {
  const auto ta = recognize_transvection(a);
  const auto tb = recognize_transvection(b);
  if (!ta || !tb) throw precondition_error("not a transvection");
  if (a.rows() != b.rows()) return false;
  return ta->m == tb->m;
}

IntMatrix reflection(const Vector& line, const IntMatrix& hyperplane_basis) {
  const std::size_t n = line.size();
  if (hyperplane_basis.rows() != n || hyperplane_basis.cols() + 1 != n)
    throw precondition_error("reflection needs a line and a complementary hyperplane");
  IntMatrix w(n, n);
  w.set_column(0, line);
  for (std::size_t j = 0; j + 1 < n; ++j) w.set_column(j + 1, hyperplane_basis.column(j));
  if (!is_automorphism(w)) throw precondition_error("line and hyperplane are not complementary summands");
  IntMatrix d = IntMatrix::identity(n);
  d(0, 0) = -1;
  return w * d * inverse_unimodular(w);
}

namespace {

void require_distinct_extremal(const IntMatrix& p, const IntMatrix& q) {
  if (p.rows() != q.rows()) throw precondition_error("involutions of different rank");
  if (!classify(p).is_extremal() || !classify(q).is_extremal())
    throw precondition_error("inputs must be extremal involutions");
  if (p == q) throw precondition_error("inputs must be distinct");
}

}  // namespace

std::optional<MutualSubgroup> mutual_subgroup(const IntMatrix& p, const IntMatrix& q) {
  require_distinct_extremal(p, q);
  const EigenLattices ep = eigen_lattices(p);
  const EigenLattices eq = eigen_lattices(q);
  std::optional<MutualSubgroup> out;
  if (ep.plus == eq.plus)
    out = MutualSubgroup{ep.plus, EigenSide::plus, 0};
  else if (ep.minus == eq.minus)
    out = MutualSubgroup{ep.minus, EigenSide::minus, 0};
  if (!out) return out;
  const auto t = recognize_transvection(q * p);
  out->product_m = t ? t->m : Integer(0);
  return out;
}

SummandComparison shared_summand_predicate(const ExtremalPair& first, const ExtremalPair& second) {
  const auto a = mutual_subgroup(first.first, first.second);
  const auto b = mutual_subgroup(second.first, second.second);
  if (!a || !b) throw precondition_error("each pair must share an eigen-lattice");
  if (a->side != b->side) throw precondition_error("pairs share eigen-lattices on different sides");

  bool predicate = true;
  for (const IntMatrix* pi : {&first.first, &first.second})
    for (const IntMatrix* qj : {&second.first, &second.second})
      if (!(*pi == *qj || is_even_transvection(*pi * *qj))) predicate = false;
  return {predicate, a->shared == b->shared};
}

}  // namespace autz
