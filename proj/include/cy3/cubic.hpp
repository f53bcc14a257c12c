#ifndef CY3_CUBIC_HPP
#define CY3_CUBIC_HPP

// Sparse homogeneous cubic polynomials over Q in rank variables, keyed by
// sorted monomial triple. Coefficients here are monomial coefficients (the
// multiplicities are already folded in), unlike TrilinearForm entries.

#include <map>

#include "cy3/trilinear.hpp"

namespace cy3 {

class LinearFunctional;
class QuadraticForm;

class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(int rank) : rank_(rank) {}

  int rank() const { return rank_; }

  void set(int i, int j, int k, Rational v);
  void add(int i, int j, int k, const Rational& v);
  Rational get(int i, int j, int k) const;

  const std::map<Triple, Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  bool operator==(const CubicForm& o) const { return rank_ == o.rank_ && c_ == o.c_; }
  bool operator!=(const CubicForm& o) const { return !(*this == o); }

  Rational operator()(const Vec& a) const;

  // True when the variable occurs in some monomial.
  bool depends_on(int var) const;

  // Largest absolute value among the integer coefficients of the primitive
  // integral rescaling; any primitive integral linear factor is bounded by it
  // coefficient-wise (see factor.cpp).
  Integer primitive_height() const;
  CubicForm primitive_part() const;

  // Restriction to the coordinate plane span(e_i, e_j) as a binary cubic
  // s^3, s^2 t, s t^2, t^3 coefficient array (s along e_i, t along e_j).
  std::array<Rational, 4> restrict_to_pair(int i, int j) const;

  // Restriction to the plane span(e_i, w).
  std::array<Rational, 4> restrict_to_plane(const Vec& u, const Vec& w) const;

  std::string str() const;

 private:
  int rank_ = 0;
  std::map<Triple, Rational> c_;
};

// nu(a) * xi(a) expanded as a cubic.
CubicForm multiply(const LinearFunctional& nu, const QuadraticForm& xi);

}  // namespace cy3

#endif
