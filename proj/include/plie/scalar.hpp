#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace plie {

/// Exact rational scalar. Always held in canonical form: numerator and
/// denominator coprime, denominator positive.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long value) : q_(static_cast<signed long>(value)) {}  // NOLINT: implicit by design
  Scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
  }
  explicit Scalar(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::invalid_argument("zero denominator");
    q_.canonicalize();
  }

  /// Parses "p" or "p/q" (decimal, optional leading minus on either part).
  static Scalar parse(const std::string& text);

  /// Canonical text form, round-trips through parse().
  std::string str() const { return q_.get_str(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class q_;
};

inline Scalar Scalar::parse(const std::string& text) {
  const auto digits = [](const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::size_t slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "" : text.substr(slash + 1);
  const auto check_int = [&](const std::string& s) {
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (!digits(s, start, s.size()))
      throw std::invalid_argument("bad scalar literal: \"" + text + "\"");
  };
  check_int(num_part);
  if (slash != std::string::npos) check_int(den_part);
  mpz_class num(num_part);
  mpz_class den = den_part.empty() ? mpz_class(1) : mpz_class(den_part);
  if (den == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

}  // namespace plie
