#include "relhom/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace relhom {

Field Field::prime(unsigned long p) {
  mpz_class m(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p);
}

Field Field::parse(const std::string& tag) {
  if (tag == "Q" || tag == "q") return rationals();
  if (tag.rfind("Fp:", 0) == 0 || tag.rfind("fp:", 0) == 0)
    return prime(std::stoul(tag.substr(3)));
  throw std::invalid_argument("unknown field tag '" + tag + "' (expected Q or Fp:<p>)");
}

Scalar::Scalar(long n, Field f) : v_(n), p_(f.p) { reduce_mod_p(); }

Scalar::Scalar(const mpq_class& v, Field f) : v_(v), p_(f.p) {
  v_.canonicalize();
  reduce_mod_p();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(const std::string& s, Field f) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("cannot parse scalar '" + s + "'");
  q.canonicalize();
  if (f.is_rational()) return Scalar(q);
  // Residue: numerator times inverse of denominator mod p.
  Scalar num(mpq_class(q.get_num()), f);
  Scalar den(mpq_class(q.get_den()), f);
  return num / den;
}

void Scalar::reduce_mod_p() {
  if (p_ == 0) return;
  mpz_class p(p_);
  if (v_.get_den() != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible mod " + std::to_string(p_));
    v_ = mpq_class(v_.get_num() * inv);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
  v_ = mpq_class(r);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.p_ = p_;
  r.v_ = -v_;
  r.reduce_mod_p();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.p_ = p_;
  r.v_ = v_ + o.v_;
  r.reduce_mod_p();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.p_ = p_;
  r.v_ = v_ - o.v_;
  r.reduce_mod_p();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.p_ = p_;
  r.v_ = v_ * o.v_;
  r.reduce_mod_p();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.p_ = p_;
  if (p_ == 0) {
    r.v_ = 1 / v_;
  } else {
    mpz_class p(p_), inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    r.v_ = mpq_class(inv);
    r.reduce_mod_p();
  }
  return r;
}

std::string Scalar::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace relhom
