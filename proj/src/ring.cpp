#include "chaincert/ring.hpp"

#include "chaincert/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <cctype>

namespace chaincert {

Ring Ring::integers() { return Ring(RingKind::integers, 0); }

Ring Ring::rationals() { return Ring(RingKind::rationals, 0); }

Ring Ring::integers_mod(const Integer& modulus) {
  if (modulus < 2) {
    throw InputError("ring modulus must be at least 2");
  }
  return Ring(RingKind::integers_mod, modulus);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Ring Ring::parse(std::string_view descriptor) {
  if (descriptor == "Z") return integers();
  if (descriptor == "Q") return rationals();
  constexpr std::string_view prefix = "Zmod:";
  if (descriptor.substr(0, prefix.size()) == prefix) {
    auto digits = descriptor.substr(prefix.size());
    if (!all_digits(digits)) {
      throw InputError("bad ring modulus in '" + std::string(descriptor) + "'");
    }
    return integers_mod(Integer(std::string(digits)));
  }
  throw InputError("unsupported ring '" + std::string(descriptor) +
                   "' (expected Z, Q or Zmod:<m>)");
}

bool Ring::is_field() const {
  switch (kind_) {
    case RingKind::rationals:
      return true;
    case RingKind::integers:
      return false;
    case RingKind::integers_mod:
      return is_probable_prime(modulus_);
  }
  return false;
}

Scalar Ring::normalize(const Scalar& value) const {
  if (kind_ == RingKind::rationals) return value;
  if (denominator(value) != 1) {
    throw InputError("non-integral coefficient " + format(value) + " over " + symbol());
  }
  if (kind_ == RingKind::integers) return value;
  return Scalar(floor_mod(numerator(value), modulus_));
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::integers:
      return "Z";
    case RingKind::rationals:
      return "Q";
    case RingKind::integers_mod:
      return "Zmod:" + modulus_.str();
  }
  return "?";
}

std::string Ring::symbol() const {
  if (kind_ == RingKind::integers_mod) return "Z/" + modulus_.str();
  return to_string();
}

std::string Ring::format(const Scalar& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Scalar Ring::parse_element(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](std::string part) -> Integer {
    std::string_view body = part;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) {
      throw InputError("bad coefficient '" + s + "'");
    }
    if (!part.empty() && part.front() == '+') part.erase(0, 1);
    return Integer(part);
  };
  if (slash == std::string::npos) {
    return normalize(Scalar(parse_int(s)));
  }
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  return normalize(Scalar(num, den));
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  // Moduli are user supplied and small in practice; trial division suffices
  // below 10^12, Miller-Rabin above.
  if (n < Integer(1000000000000LL)) {
    for (Integer d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 32);
}

}  // namespace chaincert
