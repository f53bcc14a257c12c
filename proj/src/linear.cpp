#include "cy3/linear.hpp"

#include <sstream>
#include <stdexcept>

namespace cy3 {

Rational LinearFunctional::operator()(const Vec& x) const {
  if (x.rank() != rank()) throw std::invalid_argument("linear functional: rank mismatch");
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) s += c_[i] * x[i];
  return s;
}

int LinearFunctional::pivot() const {
  for (int i = rank() - 1; i >= 0; --i)
    if (c_[i] != 0) return i;
  return -1;
}

std::string LinearFunctional::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v == -1)
        os << "-";
      else if (v != 1)
        os << to_string(v) << "*";
    } else {
      os << (v > 0 ? " + " : " - ");
      Rational av = v > 0 ? v : Rational(-v);
      if (av != 1) os << to_string(av) << "*";
    }
    os << "a" << i + 1;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cy3
