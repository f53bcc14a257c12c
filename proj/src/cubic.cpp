#include "cy3/cubic.hpp"

#include <sstream>
#include <stdexcept>

#include "cy3/linear.hpp"
#include "cy3/quadratic.hpp"

namespace cy3 {

namespace {
void check_index(int i, int rank) {
  if (i < 0 || i >= rank) throw std::out_of_range("cubic monomial index out of range");
}
}  // namespace

void CubicForm::set(int i, int j, int k, Rational v) {
  check_index(i, rank_);
  check_index(j, rank_);
  check_index(k, rank_);
  Triple t = sorted_triple(i, j, k);
  if (v == 0)
    c_.erase(t);
  else
    c_[t] = std::move(v);
}

void CubicForm::add(int i, int j, int k, const Rational& v) { set(i, j, k, get(i, j, k) + v); }

Rational CubicForm::get(int i, int j, int k) const {
  check_index(i, rank_);
  check_index(j, rank_);
  check_index(k, rank_);
  auto it = c_.find(sorted_triple(i, j, k));
  return it == c_.end() ? Rational(0) : it->second;
}

Rational CubicForm::operator()(const Vec& a) const {
  if (a.rank() != rank_) throw std::invalid_argument("cubic evaluation: rank mismatch");
  Rational s = 0;
  for (const auto& [t, v] : c_) s += v * a[t[0]] * a[t[1]] * a[t[2]];
  return s;
}

bool CubicForm::depends_on(int var) const {
  for (const auto& [t, v] : c_)
    if (t[0] == var || t[1] == var || t[2] == var) return true;
  return false;
}

CubicForm CubicForm::primitive_part() const {
  if (c_.empty()) throw std::invalid_argument("primitive_part of the zero cubic");
  Integer l = 1;
  for (const auto& [t, v] : c_) l = lcm(l, denom(v));
  Integer g = 0;
  for (const auto& [t, v] : c_) g = gcd(g, numer(v * Rational(l)));
  CubicForm out(rank_);
  for (const auto& [t, v] : c_) out.c_[t] = v * Rational(l) / Rational(g);
  return out;
}

Integer CubicForm::primitive_height() const {
  CubicForm p = primitive_part();
  Integer h = 0;
  for (const auto& [t, v] : p.c_) {
    Integer a = numer(v);
    if (a < 0) a = -a;
    if (a > h) h = a;
  }
  return h;
}

std::array<Rational, 4> CubicForm::restrict_to_pair(int i, int j) const {
  return restrict_to_plane(Vec::unit(rank_, i), Vec::unit(rank_, j));
}

std::array<Rational, 4> CubicForm::restrict_to_plane(const Vec& u, const Vec& w) const {
  // C(s u + t w) expanded in s, t; exact in one pass per monomial.
  std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (const auto& [t, v] : c_) {
    // Product over the three monomial variables of (s u_x + t w_x).
    std::array<Rational, 4> acc{Rational(1), Rational(0), Rational(0), Rational(0)};
    for (int pos = 0; pos < 3; ++pos) {
      int var = t[static_cast<size_t>(pos)];
      std::array<Rational, 4> next{Rational(0), Rational(0), Rational(0), Rational(0)};
      for (int d = 0; d <= pos; ++d) {
        if (acc[static_cast<size_t>(d)] == 0) continue;
        next[static_cast<size_t>(d) + 1] += acc[static_cast<size_t>(d)] * u[var];
        next[static_cast<size_t>(d)] += acc[static_cast<size_t>(d)] * w[var];
      }
      acc = next;
    }
    for (int d = 0; d <= 3; ++d) out[static_cast<size_t>(d)] += v * acc[static_cast<size_t>(d)];
  }
  // out[d] is the coefficient of s^d t^(3-d); reorder to s^3, s^2 t, s t^2, t^3.
  return {out[3], out[2], out[1], out[0]};
}

std::string CubicForm::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, v] : c_) {
    Rational av = v > 0 ? v : Rational(-v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v > 0 ? " + " : " - ");
    }
    if (av != 1) os << to_string(av) << "*";
    os << "a" << t[0] + 1;
    if (t[1] == t[0] && t[2] == t[0])
      os << "^3";
    else if (t[1] == t[0])
      os << "^2*a" << t[2] + 1;
    else if (t[2] == t[1])
      os << "*a" << t[1] + 1 << "^2";
    else
      os << "*a" << t[1] + 1 << "*a" << t[2] + 1;
    first = false;
  }
  return os.str();
}

CubicForm multiply(const LinearFunctional& nu, const QuadraticForm& xi) {
  if (nu.rank() != xi.rank()) throw std::invalid_argument("multiply: rank mismatch");
  const int n = nu.rank();
  CubicForm out(n);
  for (int l = 0; l < n; ++l) {
    if (nu[l] == 0) continue;
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) {
        Rational c = xi.poly_coeff(p, q);
        if (c == 0) continue;
        out.add(l, p, q, nu[l] * c);
      }
  }
  return out;
}

}  // namespace cy3
