#include "rrkit/rational.hpp"

#include <ostream>
#include <utility>

#include "rrkit/error.hpp"

namespace rrkit {

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no portable int64 constructor.
  return mpz_class(std::to_string(v));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t value) : v_(to_mpz(value)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(to_mpz(num), to_mpz(den));
  v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) {
  if (v_.get_den() == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& value) : v_(value) {}

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0, {"integer", "integer/integer"});
  }
  mpz_class d{std::string(den)};
  if (d == 0) throw DomainError("rational with zero denominator");
  mpz_class n{std::string(num)};
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(mpq_class(n, d));
}

bool Rat::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(v_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(v_.get_den_mpz_t()) != 0;
}

Rat Rat::sqrt() const {
  if (!is_square()) throw DomainError("not the square of a rational: " + to_string());
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
  return Rat(mpq_class(n, d));
}

std::string Rat::to_string() const { return v_.get_str(); }

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace rrkit
