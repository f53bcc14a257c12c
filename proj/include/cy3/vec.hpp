#ifndef CY3_VEC_HPP
#define CY3_VEC_HPP

// Column vectors over Q. Lattice classes are the integral ones.

#include <initializer_list>
#include <vector>

#include "cy3/rational.hpp"

namespace cy3 {

class Vec {
 public:
  Vec() = default;
  explicit Vec(int rank) : e_(static_cast<size_t>(rank)) {}
  Vec(std::initializer_list<Rational> vals) : e_(vals) {}
  explicit Vec(std::vector<Rational> vals) : e_(std::move(vals)) {}

  int rank() const { return static_cast<int>(e_.size()); }
  const Rational& operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& entries() const { return e_; }

  bool operator==(const Vec& o) const { return e_ == o.e_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_integral() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator*(const Rational& s) const;

  static Vec unit(int rank, int i);
  static Vec zero(int rank) { return Vec(rank); }

  // Divides out the gcd of the (integral) entries and makes the first
  // nonzero entry positive. Requires a nonzero integral vector.
  Vec primitive() const;

  // Lexicographic order on entries, used for deterministic output.
  bool lex_less(const Vec& o) const;

  std::string str() const;

 private:
  std::vector<Rational> e_;
};

// Scales a nonzero rational vector to its primitive integral representative
// (same line through the origin, gcd 1, first nonzero entry positive).
Vec primitive_scaling(const Vec& v);

}  // namespace cy3

#endif
