#include "grkoszul/field.hpp"

#include "grkoszul/errors.hpp"

namespace grk {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Field::reduce(const Scalar& x) const {
  if (p_ == 0) return x;
  mpz_class p(p_);
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  if (x.get_den() == 1) return Scalar(num);
  mpz_class den = x.get_den() % p;
  if (den == 0) throw InputError("fraction with denominator divisible by " + std::to_string(p_));
  mpz_class di;
  mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * di) % p;
  return Scalar(r);
}

Scalar Field::parse(const std::string& text) const {
  Scalar v;
  if (text.empty() || v.set_str(text, 10) != 0) throw InputError("not a scalar: '" + text + "'");
  if (v.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  v.canonicalize();
  return reduce(v);
}

std::string Field::format(const Scalar& x) const { return x.get_str(); }

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (p_ != 0 && r >= p_) r -= p_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (p_ != 0 && r < 0) r += p_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  r %= p_;
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0 || a == 0) return -a;
  return Scalar(p_) - a;
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw InvariantError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r, p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

void Field::axpy(Vec& y, const Scalar& a, const Vec& x) const {
  if (a == 0) return;
  if (p_ == 0) {
    for (std::size_t i = 0; i < y.size(); ++i)
      if (x[i] != 0) y[i] += a * x[i];
    return;
  }
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] = add(y[i], mul(a, x[i]));
}

void Field::scale(Vec& y, const Scalar& a) const {
  for (auto& v : y)
    if (v != 0) v = mul(v, a);
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v[i] = 1;
  return v;
}

}  // namespace grk
