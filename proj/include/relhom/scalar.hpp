#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace relhom {

/// Ground field descriptor: exact rationals (p == 0) or the prime field F_p.
struct Field {
  unsigned long p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{}; }
  static Field prime(unsigned long p);

  /// "Q" or "Fp:<p>", matching the file-format field tag.
  std::string name() const;
  static Field parse(const std::string& tag);
};

/// Immutable exact field element. Rationals are kept in lowest terms with a
/// positive denominator; prime-field residues are integers in [0, p).
class Scalar {
 public:
  Scalar() : v_(0), p_(0) {}
  Scalar(long n, Field f = Field::rationals());
  Scalar(const mpq_class& v, Field f = Field::rationals());

  static Scalar zero(Field f) { return Scalar(0L, f); }
  static Scalar one(Field f) { return Scalar(1L, f); }
  static Scalar fraction(long num, long den);
  /// Parses "n", "-n", or "n/d"; residues are reduced mod p.
  static Scalar parse(const std::string& s, Field f);

  Field field() const { return Field{p_}; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "num/den" for rationals with den != 1, plain integer string otherwise.
  std::string str() const;
  const mpq_class& value() const { return v_; }

 private:
  void reduce_mod_p();
  void check_same_field(const Scalar& o) const;

  mpq_class v_;
  unsigned long p_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace relhom
