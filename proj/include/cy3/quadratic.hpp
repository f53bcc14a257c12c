#ifndef CY3_QUADRATIC_HPP
#define CY3_QUADRATIC_HPP

// Symmetric bilinear forms over Q with exact signature computation.
// The quadratic form is q(x) = x^T A x; the monomial coefficient of
// a_i a_j (i < j) in the polynomial is therefore 2 A_ij.

#include <optional>

#include "cy3/matrix.hpp"

namespace cy3 {

struct Signature {
  int plus = 0, zero = 0, minus = 0;
  bool operator==(const Signature& o) const {
    return plus == o.plus && zero == o.zero && minus == o.minus;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }
  std::string str() const;
};

class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(int rank) : a_(rank, rank) {}
  explicit QuadraticForm(Matrix gram);

  int rank() const { return a_.rows(); }
  const Matrix& gram() const { return a_; }

  const Rational& at(int i, int j) const { return a_.at(i, j); }
  void set(int i, int j, const Rational& v);  // symmetric assignment

  bool operator==(const QuadraticForm& o) const { return a_ == o.a_; }
  bool operator!=(const QuadraticForm& o) const { return !(*this == o); }

  bool is_zero() const;

  Rational operator()(const Vec& x) const;            // q(x)
  Rational bilinear(const Vec& x, const Vec& y) const;  // x^T A y

  // Polynomial coefficient of a_i a_j, i <= j.
  Rational poly_coeff(int i, int j) const;

  std::string str() const;

 private:
  Matrix a_;
};

// Result of an exact symmetric congruence diagonalization P^T A P = diag(d).
struct Diagonalization {
  Matrix basis;               // columns are the diagonalizing basis
  std::vector<Rational> diag;
};

// Gaussian congruence pivoting over Q: pivot on the first nonzero diagonal
// entry in index order; if the active diagonal is all zero but some A_ij != 0,
// the substitution x_i -> x_i + x_j creates the pivot 2 A_ij.
Diagonalization diagonalize(const QuadraticForm& q);

// Counts of positive / zero / negative diagonal entries after congruence
// diagonalization; well defined by Sylvester's law of inertia.
Signature signature(const QuadraticForm& q);

// dim ker(A), computed by row reduction (independently of signature()).
int kernel_dimension(const QuadraticForm& q);

// A basis of ker(A) over Q (integral vectors).
std::vector<Vec> kernel_basis(const QuadraticForm& q);

// q restricted to the span of the given vectors: B^T A B.
QuadraticForm restrict_to_span(const QuadraticForm& q, const std::vector<Vec>& basis);

// A nonzero rational vector v with q(v) = 0 when one is exactly constructible
// from the diagonalizing basis: a kernel direction, a zero diagonal entry, or
// a +/- diagonal pair whose ratio is a square in Q. A rational isotropic
// vector need not exist for an indefinite form (x^2 - 3 y^2 has none), so an
// absent result does not certify definiteness; the signature does that.
std::optional<Vec> isotropic_witness(const QuadraticForm& q);

}  // namespace cy3

#endif
