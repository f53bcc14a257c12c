#include "cy3/vec.hpp"

#include <sstream>
#include <stdexcept>

namespace cy3 {

namespace {
void check_same_rank(const Vec& a, const Vec& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("vector rank mismatch");
}
}  // namespace

bool Vec::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool Vec::is_integral() const {
  for (const auto& x : e_)
    if (!cy3::is_integral(x)) return false;
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  check_same_rank(*this, o);
  Vec r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = e_[static_cast<size_t>(i)] + o[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  check_same_rank(*this, o);
  Vec r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = e_[static_cast<size_t>(i)] - o[i];
  return r;
}

Vec Vec::operator*(const Rational& s) const {
  Vec r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = e_[static_cast<size_t>(i)] * s;
  return r;
}

Vec Vec::unit(int rank, int i) {
  Vec r(rank);
  r[i] = 1;
  return r;
}

Vec Vec::primitive() const {
  if (!is_integral()) throw std::invalid_argument("primitive(): vector is not integral");
  Integer g = 0;
  for (const auto& x : e_) g = gcd(g, numer(x));
  if (g == 0) throw std::invalid_argument("primitive(): zero vector");
  Vec r = *this;
  for (int i = 0; i < rank(); ++i) r[i] /= Rational(g);
  for (int i = 0; i < rank(); ++i) {
    if (r[i] != 0) {
      if (r[i] < 0) r = r * Rational(-1);
      break;
    }
  }
  return r;
}

Vec primitive_scaling(const Vec& v) {
  if (v.is_zero()) throw std::invalid_argument("primitive_scaling(): zero vector");
  Integer l = 1;
  for (const auto& x : v.entries()) l = lcm(l, denom(x));
  return (v * Rational(l)).primitive();
}

bool Vec::lex_less(const Vec& o) const {
  check_same_rank(*this, o);
  for (int i = 0; i < rank(); ++i) {
    if (e_[static_cast<size_t>(i)] != o[i]) return e_[static_cast<size_t>(i)] < o[i];
  }
  return false;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ", ";
    os << to_string(e_[static_cast<size_t>(i)]);
  }
  os << ")";
  return os.str();
}

}  // namespace cy3
