#include "hopfkit/scalar.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

__extension__ typedef __int128 i128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min() + 1) {
    throw std::overflow_error("rational scalar exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::parse_error, "malformed integer '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::invalid_field, "characteristic " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("GF:")) {
    auto p = parse_int(text.substr(3));
    if (p <= 0 || p > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::invalid_field, "bad characteristic in '" + std::string(text) + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorKind::parse_error, "unknown field '" + std::string(text) + "' (expected Q or GF:p)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "GF:" + std::to_string(p_);
}

Scalar::Scalar(FieldSpec field, std::int64_t value) : p_(field.characteristic()) {
  if (p_ == 0) {
    num_ = value;
  } else {
    auto r = value % static_cast<std::int64_t>(p_);
    num_ = r < 0 ? r + p_ : r;
  }
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  i128 g = gcd128(num, den);
  i128 n = num, d = den;
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Scalar s;
  s.num_ = narrow(n);
  s.den_ = narrow(d);
  return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(field, parse_int(text));
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
  if (field.is_rational()) return rational(num, den);
  Scalar d(field, den);
  if (d.is_zero()) throw Error(ErrorKind::parse_error, "denominator vanishes mod p in '" + std::string(text) + "'");
  return Scalar(field, num) / d;
}

FieldSpec Scalar::field() const {
  return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (p_ != rhs.p_) throw std::invalid_argument("scalar arithmetic across different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (p_ == 0) return rational(den_, num_);
  // Fermat: a^(p-2).
  std::uint64_t base = static_cast<std::uint64_t>(num_), result = 1, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  Scalar s;
  s.p_ = p_;
  s.num_ = static_cast<std::int64_t>(result);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.num_ = -num_;
  } else if (num_ != 0) {
    s.num_ = p_ - num_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (p_ != 0) {
    num_ = (num_ + rhs.num_) % p_;
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = narrow(static_cast<i128>(num_) + rhs.num_);
    return *this;
  }
  i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
  i128 d = static_cast<i128>(den_) * rhs.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (p_ != 0) {
    num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * rhs.num_ % p_);
    return *this;
  }
  if (num_ == 0 || rhs.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  i128 g1 = gcd128(num_, rhs.den_);
  i128 g2 = gcd128(rhs.num_, den_);
  i128 n = (static_cast<i128>(num_) / g1) * (rhs.num_ / g2);
  i128 d = (static_cast<i128>(den_) / g2) * (rhs.den_ / g1);
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

std::string Scalar::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfkit
