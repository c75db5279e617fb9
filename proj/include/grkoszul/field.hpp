#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace grk {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Either the rationals or a prime field. Prime field elements are stored as
// integers in [0, p) inside an mpq so that both cases share one scalar type.
class Field {
 public:
  static Field rational() { return Field(0); }
  static Field prime(unsigned long p);

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }
  std::string name() const;

  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long v) const { return reduce(Scalar(v)); }
  // Parses an integer or a fraction "a/b".
  Scalar parse(const std::string& text) const;
  std::string format(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // y += a * x
  void axpy(Vec& y, const Scalar& a, const Vec& x) const;
  void scale(Vec& y, const Scalar& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace grk
