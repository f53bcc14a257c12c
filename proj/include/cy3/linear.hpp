#ifndef CY3_LINEAR_HPP
#define CY3_LINEAR_HPP

// Linear functionals on the rank-b2 lattice, e.g. c2(X) cup - or a linear
// factor nu of the cubic form.

#include "cy3/vec.hpp"

namespace cy3 {

class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(int rank) : c_(rank) {}
  explicit LinearFunctional(Vec coeffs) : c_(std::move(coeffs)) {}
  LinearFunctional(std::initializer_list<Rational> coeffs) : c_(coeffs) {}

  int rank() const { return c_.rank(); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const Vec& coeffs() const { return c_; }

  bool operator==(const LinearFunctional& o) const { return c_ == o.c_; }
  bool operator!=(const LinearFunctional& o) const { return !(*this == o); }

  bool is_zero() const { return c_.is_zero(); }
  bool is_integral() const { return c_.is_integral(); }

  Rational operator()(const Vec& x) const;

  // Index of the last nonzero coefficient; -1 for the zero functional.
  int pivot() const;

  std::string str() const;

 private:
  Vec c_;
};

}  // namespace cy3

#endif
