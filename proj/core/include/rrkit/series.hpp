#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rrkit/upoly.hpp"

namespace rrkit {

/// Order of vanishing of a truncated series: either known exactly, or only
/// bounded below by the precision when every known coefficient is zero.
struct Valuation {
  std::optional<int> exact;
  int lower_bound = 0;

  bool known() const noexcept { return exact.has_value(); }
  static Valuation of(int v) { return {v, v}; }
  static Valuation at_least(int v) { return {std::nullopt, v}; }
};

/// min(a, b) when it can be decided from the known coefficients.
Valuation min_valuation(const Valuation& a, const Valuation& b);

/// Power series in t over the rationals, known modulo t^precision.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::vector<Rat> coefficients, std::size_t precision);

  static PowerSeries constant(const Rat& c, std::size_t precision);
  static PowerSeries variable(std::size_t precision);
  static PowerSeries from_poly(const UPoly& f, std::size_t precision);
  /// f(inner(t)); inner must have zero constant term or f must be a polynomial
  /// (always true here), so the result is exact to inner's precision.
  static PowerSeries compose(const UPoly& f, const PowerSeries& inner);

  std::size_t precision() const noexcept { return c_.size(); }
  const Rat& coeff(std::size_t k) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries scaled(const Rat& s) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;
  PowerSeries derivative() const;
  /// Square root with positive constant term; requires the constant term to
  /// be a nonzero rational square.
  PowerSeries sqrt() const;
  /// Divides by t^k; the first k coefficients must vanish.
  PowerSeries shift_down(std::size_t k) const;
  /// Multiplies by t^k (precision grows by k).
  PowerSeries shift_up(std::size_t k) const;
  PowerSeries truncated(std::size_t precision) const;

  Valuation valuation() const;
  std::string to_string() const;

 private:
  std::vector<Rat> c_;
};

}  // namespace rrkit
