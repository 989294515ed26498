#include "nilflux/scalar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nilflux {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

Rational parse_rational(std::string_view text) {
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](boost::multiprecision::cpp_int& out) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected digits in rational: '" + std::string(text) + "'");
    out = boost::multiprecision::cpp_int(std::string(text.substr(start, pos - start)));
  };
  boost::multiprecision::cpp_int num, den = 1;
  read_digits(num);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    read_digits(den);
    if (den == 0) throw std::invalid_argument("zero denominator in rational");
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in rational: '" + std::string(text) + "'");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

namespace params {
namespace {
// Pre-registering the parameters used by the preset geometries pins their
// ids (and hence all printed monomial orderings) independently of call order.
// A deque keeps name references stable across later registrations.
std::deque<std::string>& table() {
  static std::deque<std::string> names{"t", "tp", "b", "lambda", "mu"};
  return names;
}
std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

int id(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty parameter name");
  std::lock_guard<std::mutex> lock(table_mutex());
  auto& names = table();
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  names.emplace_back(name);
  return static_cast<int>(names.size() - 1);
}

const std::string& name(int id) {
  std::lock_guard<std::mutex> lock(table_mutex());
  return table().at(static_cast<size_t>(id));
}
}  // namespace params

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (const auto& [pid, exp] : m) {
    if (!out.empty()) out += '*';
    out += params::name(pid);
    if (exp != 1) out += '^' + std::to_string(exp);
  }
  return out;
}

Scalar::Scalar(int value) : Scalar(Rational(value)) {}

Scalar::Scalar(Rational value) {
  if (value != 0) terms_.emplace(Monomial{}, std::move(value));
}

Scalar Scalar::param(std::string_view name, int exponent) {
  Scalar s;
  if (exponent == 0) return Scalar(1);
  s.terms_.emplace(Monomial{{params::id(name), exponent}}, Rational(1));
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> Scalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

namespace {
Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      out.push_back(b[j++]);
    } else {
      int exp = a[i].second + b[j].second;
      if (exp != 0) out.emplace_back(a[i].first, exp);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}
}  // namespace

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  Scalar out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Rational c = ca * cb;
      Monomial m = merge_monomials(ma, mb);
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar out(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

namespace {
Rational rational_pow(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero substituted into a negative exponent");
    return Rational(1) / rational_pow(base, -exp);
  }
  Rational out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}
}  // namespace

Scalar Scalar::substitute(const std::map<int, Rational>& bindings) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [pid, exp] : m) {
      auto it = bindings.find(pid);
      if (it == bindings.end()) {
        rest.emplace_back(pid, exp);
      } else {
        coeff *= rational_pow(it->second, exp);
      }
    }
    Scalar term;
    if (coeff != 0) term.terms_.emplace(std::move(rest), std::move(coeff));
    out += term;
  }
  return out;
}

Scalar Scalar::reduce_square(int param_id, const Rational& value) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [pid, exp] : m) {
      if (pid != param_id || (exp != 1 && exp < 2)) {
        // Negative exponents are left untouched; the reduction is only used
        // with plain polynomial dependence on the reduced parameter.
        rest.emplace_back(pid, exp);
        continue;
      }
      int pairs = exp / 2;
      int remainder = exp % 2;
      coeff *= rational_pow(value, pairs);
      if (remainder != 0) rest.emplace_back(pid, remainder);
    }
    Scalar term;
    if (coeff != 0) term.terms_.emplace(std::move(rest), std::move(coeff));
    out += term;
  }
  return out;
}

int Scalar::definite_sign() const {
  if (terms_.empty()) return 0;
  int sign = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& [pid, exp] : m) {
      (void)pid;
      if (exp % 2 != 0) return 0;
    }
    int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return 0;
  }
  return sign;
}

Rational Scalar::content() const {
  using boost::multiprecision::cpp_int;
  if (terms_.empty()) return Rational(0);
  cpp_int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    (void)m;
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c) < 0
                                                      ? cpp_int(-boost::multiprecision::numerator(c))
                                                      : boost::multiprecision::numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  }
  Rational content(num_gcd, den_lcm);
  if (terms_.begin()->second < 0) content = -content;
  return content;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = monomial_str(m);
    if (mono.empty()) {
      out += rational_str(abs_c);
    } else if (abs_c == 1) {
      out += mono;
    } else {
      out += rational_str(abs_c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace nilflux
