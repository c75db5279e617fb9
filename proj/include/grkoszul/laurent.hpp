#pragma once
#include <map>
#include <string>
#include <vector>

namespace grk {

// Integer Laurent polynomial in t; zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(long long coef, int exp);
  static Laurent one() { return monomial(1, 0); }
  // sum c[k] q^k with q = t^2
  static Laurent in_q(const std::vector<long long>& c);

  long long coeff(int exp) const;
  void add_term(long long coef, int exp);
  const std::map<int, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;      // highest exponent; requires non-zero
  int low_degree() const;  // lowest exponent; requires non-zero
  bool even() const;       // all exponents even
  long long eval(long long t) const;  // requires non-negative exponents when |t| != 1
  // coefficients of q^0, q^1, ... for a polynomial in q = t^2
  std::vector<long long> q_coeffs() const;
  Laurent shifted(int k) const;  // t^k * this

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return c_ != o.c_; }

  std::string str() const;

 private:
  std::map<int, long long> c_;
};

}  // namespace grk
