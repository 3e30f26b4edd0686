#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace chaincert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ring elements are stored as rationals holding the canonical representative:
/// integers for Z, residues in [0, m) for Z/m, reduced fractions for Q.
using Scalar = Rational;

enum class RingKind { integers, integers_mod, rationals };

/// The coefficient ring G: Z, Z/m (m >= 2) or Q. All arithmetic is exact.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring integers_mod(const Integer& modulus);

  /// Accepts "Z", "Q" and "Zmod:<m>".
  static Ring parse(std::string_view descriptor);

  RingKind kind() const { return kind_; }
  /// Zero unless kind() == integers_mod.
  const Integer& modulus() const { return modulus_; }
  bool is_field() const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return normalize(Scalar(1)); }

  /// Canonical representative; throws InputError for a non-integral value
  /// outside Q.
  Scalar normalize(const Scalar& value) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  bool is_zero(const Scalar& a) const { return normalize(a) == 0; }
  bool is_one(const Scalar& a) const { return normalize(a) == one(); }

  /// Descriptor in the same syntax parse() accepts.
  std::string to_string() const;
  /// Short human-readable symbol: "Z", "Q", "Z/6".
  std::string symbol() const;

  /// Decimal string, "p/q" for non-integral rationals.
  static std::string format(const Scalar& value);
  Scalar parse_element(std::string_view text) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(RingKind kind, Integer modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  RingKind kind_;
  Integer modulus_;
};

Integer floor_mod(const Integer& a, const Integer& m);
Integer abs_value(const Integer& a);
bool is_probable_prime(const Integer& n);

}  // namespace chaincert
