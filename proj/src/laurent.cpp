#include "grkoszul/laurent.hpp"

#include <sstream>

#include "grkoszul/errors.hpp"

namespace grk {

Laurent Laurent::monomial(long long coef, int exp) {
  Laurent p;
  p.add_term(coef, exp);
  return p;
}

Laurent Laurent::in_q(const std::vector<long long>& c) {
  Laurent p;
  for (std::size_t k = 0; k < c.size(); ++k) p.add_term(c[k], 2 * static_cast<int>(k));
  return p;
}

long long Laurent::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

void Laurent::add_term(long long coef, int exp) {
  if (coef == 0) return;
  long long& v = c_[exp];
  v += coef;
  if (v == 0) c_.erase(exp);
}

int Laurent::degree() const {
  check_invariant(!c_.empty(), "degree of the zero polynomial");
  return c_.rbegin()->first;
}

int Laurent::low_degree() const {
  check_invariant(!c_.empty(), "degree of the zero polynomial");
  return c_.begin()->first;
}

bool Laurent::even() const {
  for (const auto& kv : c_)
    if (kv.first % 2 != 0) return false;
  return true;
}

long long Laurent::eval(long long t) const {
  long long s = 0;
  for (const auto& [e, c] : c_) {
    if (t == 1) {
      s += c;
    } else if (t == -1) {
      s += (e % 2 == 0) ? c : -c;
    } else {
      check_invariant(e >= 0, "evaluating a negative power");
      long long p = 1;
      for (int i = 0; i < e; ++i) p *= t;
      s += c * p;
    }
  }
  return s;
}

std::vector<long long> Laurent::q_coeffs() const {
  std::vector<long long> out;
  for (const auto& [e, c] : c_) {
    check_invariant(e >= 0 && e % 2 == 0, "not a polynomial in t^2");
    if (out.size() <= static_cast<std::size_t>(e / 2)) out.resize(e / 2 + 1, 0);
    out[e / 2] = c;
  }
  return out;
}

Laurent Laurent::shifted(int k) const {
  Laurent p;
  for (const auto& [e, c] : c_) p.c_[e + k] = c;
  return p;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent p = *this;
  p += o;
  return p;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent p = *this;
  p -= o;
  return p;
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (const auto& [e, c] : c_) p.c_[e] = -c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.c_) add_term(c, e);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.c_) add_term(-c, e);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent p;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) p.add_term(c1 * c2, e1 + e2);
  return p;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    long long a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace grk
