#ifndef NILFLUX_SCALAR_HPP
#define NILFLUX_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilflux {

/// Exact rational coefficient. Arbitrary precision, always normalized.
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& r);

/// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Global registry of polynomial parameters (t, tp, b, lambda, mu, ...).
/// Ids are assigned once and never change, so term ordering and printed
/// output are deterministic for a fixed sequence of registrations.
namespace params {
int id(std::string_view name);
const std::string& name(int id);
}  // namespace params

/// A Laurent monomial in the declared parameters: sorted (param id, exponent)
/// pairs, exponents nonzero.  The empty vector is the constant monomial.
using Monomial = std::vector<std::pair<int, int>>;

std::string monomial_str(const Monomial& m);

/// Element of Q[p1^{-1},p1,...]: a Laurent polynomial with exact rational
/// coefficients.  Canonical form: no zero coefficients stored.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value);  // NOLINT(google-explicit-constructor)
  Scalar(Rational value);  // NOLINT(google-explicit-constructor)

  /// The parameter `name` raised to `exponent` (may be negative).
  static Scalar param(std::string_view name, int exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value when the scalar is a constant; nullopt otherwise.
  std::optional<Rational> as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.terms_ == rhs.terms_; }
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  Scalar pow(unsigned exponent) const;

  /// Substitutes rational values for the listed parameters.  A parameter
  /// appearing with a negative exponent must not be bound to zero.
  Scalar substitute(const std::map<int, Rational>& bindings) const;

  /// Reduces modulo p^2 = value: p^(2k+r) -> value^k * p^r.  Used for
  /// checks that hold on the locus p^2 = value with p kept symbolic.
  Scalar reduce_square(int param_id, const Rational& value) const;

  /// True when every monomial has even exponents in every parameter and all
  /// coefficients share one sign; then the sign is definite for any nonzero
  /// real parameter values.  Returns +1/-1, or 0 when indefinite/unknown.
  int definite_sign() const;

  /// gcd of the coefficients' numerators over lcm of denominators, signed by
  /// the leading term; zero scalar has content 0.
  Rational content() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

inline Scalar operator*(const Scalar& lhs, const Rational& rhs) { return lhs * Scalar(rhs); }
inline Scalar operator*(const Rational& lhs, const Scalar& rhs) { return Scalar(lhs) * rhs; }

}  // namespace nilflux

#endif  // NILFLUX_SCALAR_HPP
