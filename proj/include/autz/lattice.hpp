#pragma once

#include <cstddef>

#include "autz/int_matrix.hpp"

namespace autz {

/// Result of unimodular column reduction: input * transform = form, where
/// `form` is in column Hermite normal form with its `rank` nonzero columns
/// first. `transform_inverse` is kept in step with `transform`.
struct ColumnEchelon {
  IntMatrix form;
  IntMatrix transform;
  IntMatrix transform_inverse;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a, bool track_transform = true);

/// A sublattice of Z^n stored by its column Hermite normal form basis.
///
/// Pivots are positive, and entries left of each pivot in the pivot's row
/// are reduced into [0, pivot). The stored basis is unique per sublattice,
/// so equality of lattices is equality of the stored matrices.
class Lattice {
 public:
  /// The zero sublattice of Z^n.
  explicit Lattice(std::size_t ambient_rank);

  /// Lattice spanned by the columns of `generators` (zero columns allowed).
  static Lattice span(const IntMatrix& generators);
  static Lattice full(std::size_t n);

  std::size_t ambient_rank() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  /// Z^n / L torsion-free, i.e. L is a direct summand.
  bool is_saturated() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  explicit Lattice(IntMatrix canonical) : basis_(std::move(canonical)) {}
  IntMatrix basis_;
};

/// Canonical basis of the column span of `cols`.
Lattice hnf(const IntMatrix& cols);

/// {v : M v = 0}; always saturated.
Lattice kernel_lattice(const IntMatrix& m);

/// Smallest summand containing L.
Lattice saturation(const Lattice& l);

/// Index [Z^n : L1 + L2] for complementary-rank lattices with trivial
/// intersection; equals 1 exactly when Z^n = L1 (+) L2.
Integer summand_index(const Lattice& l1, const Lattice& l2);

/// Image M L.
Lattice image(const IntMatrix& m, const Lattice& l);

/// Extends the columns of `f` (a basis of a summand) to a unimodular matrix
/// [f | g]. Throws if the span of `f` is not saturated or `f` is dependent.
IntMatrix complete_to_basis(const IntMatrix& f);

}  // namespace autz
