#include "nilflux/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace nilflux {

MultiIndex::MultiIndex(std::initializer_list<int> indices) {
  int last = 0;
  for (int i : indices) {
    if (i < 1 || i > kDim) throw std::out_of_range("frame index out of 1..6");
    if (i <= last) throw std::invalid_argument("multi-index must be strictly increasing");
    last = i;
    mask_ |= bit(i);
  }
}

MultiIndex MultiIndex::from_mask(uint8_t mask) {
  MultiIndex idx;
  idx.mask_ = static_cast<uint8_t>(mask & 0x3F);
  return idx;
}

int MultiIndex::degree() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kDim; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool operator<(MultiIndex a, MultiIndex b) {
  // Lexicographic on the increasing index sequences.
  uint8_t ma = a.mask_, mb = b.mask_;
  for (int i = 1; i <= kDim; ++i) {
    bool ia = (ma & MultiIndex::bit(i)) != 0;
    bool ib = (mb & MultiIndex::bit(i)) != 0;
    if (ia != ib) return ia;  // the one containing the smaller index comes first
    if (ia) {
      ma = static_cast<uint8_t>(ma & ~MultiIndex::bit(i));
      mb = static_cast<uint8_t>(mb & ~MultiIndex::bit(i));
      if (ma == 0 && mb != 0) return true;  // prefix
      if (mb == 0 && ma != 0) return false;
    }
  }
  return false;
}

std::string MultiIndex::str() const {
  std::string out;
  for (int i : indices()) out += static_cast<char>('0' + i);
  return out;
}

int merge_sign(uint8_t mask_a, uint8_t mask_b) {
  if ((mask_a & mask_b) != 0) return 0;
  int inversions = 0;
  for (int i = 1; i <= kDim; ++i) {
    if ((mask_a & MultiIndex::bit(i)) == 0) continue;
    // count elements of b smaller than i
    uint8_t below = static_cast<uint8_t>(MultiIndex::bit(i) - 1);
    inversions += std::popcount(static_cast<uint8_t>(mask_b & below));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

KForm KForm::zero(int degree) {
  KForm f;
  f.degree_ = degree;
  return f;
}

KForm KForm::scalar(Scalar value) { return monomial(std::move(value), MultiIndex{}); }

KForm KForm::basis(MultiIndex idx) { return monomial(Scalar(1), idx); }

KForm KForm::monomial(Scalar coefficient, MultiIndex idx) {
  KForm f;
  f.degree_ = idx.degree();
  if (!coefficient.is_zero()) f.terms_.emplace(idx, std::move(coefficient));
  return f;
}

KForm KForm::volume() { return basis(MultiIndex{1, 2, 3, 4, 5, 6}); }

Scalar KForm::coefficient(MultiIndex idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar KForm::component(std::span<const int> indices) const {
  uint8_t mask = 0;
  int sign = 1;
  // insertion sort, tracking the permutation parity
  std::vector<int> sorted(indices.begin(), indices.end());
  for (size_t i = 1; i < sorted.size(); ++i) {
    for (size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  }
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > kDim) throw std::out_of_range("frame index out of 1..6");
    if (i + 1 < sorted.size() && sorted[i] == sorted[i + 1]) return Scalar();
    mask |= MultiIndex::bit(sorted[i]);
  }
  Scalar c = coefficient(MultiIndex::from_mask(mask));
  return sign == 1 ? c : -c;
}

void KForm::add_term(MultiIndex idx, Scalar coefficient) {
  if (coefficient.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, std::move(coefficient));
  } else {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm KForm::operator-() const {
  KForm out = zero(degree_);
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

KForm& KForm::operator+=(const KForm& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    degree_ = rhs.degree_;
  } else if (degree_ != rhs.degree_) {
    throw std::invalid_argument("adding forms of different degree");
  }
  for (const auto& [idx, c] : rhs.terms_) add_term(idx, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& rhs) { return *this += -rhs; }

KForm operator*(const KForm& form, const Scalar& s) {
  KForm out = KForm::zero(form.degree_);
  if (s.is_zero()) return out;
  for (const auto& [idx, c] : form.terms_) out.add_term(idx, c * s);
  return out;
}

bool operator==(const KForm& lhs, const KForm& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) return true;
  return lhs.degree_ == rhs.degree_ && lhs.terms_ == rhs.terms_;
}

KForm KForm::substitute(const std::map<int, Rational>& bindings) const {
  KForm out = zero(degree_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, c.substitute(bindings));
  return out;
}

KForm KForm::reduce_square(int param_id, const Rational& value) const {
  KForm out = zero(degree_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, c.reduce_square(param_id, value));
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  int degree = a.degree() + b.degree();
  if (degree > kDim) return KForm::zero(kDim);
  KForm out = KForm::zero(degree);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      int sign = merge_sign(ia.mask(), ib.mask());
      if (sign == 0) continue;
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out += KForm::monomial(std::move(c), MultiIndex::from_mask(static_cast<uint8_t>(ia.mask() | ib.mask())));
    }
  }
  return out;
}

KForm hodge_star(const KForm& a) {
  KForm out = KForm::zero(kDim - a.degree());
  for (const auto& [idx, c] : a.terms()) {
    MultiIndex comp = idx.complement();
    int sign = merge_sign(idx.mask(), comp.mask());
    out += KForm::monomial(sign < 0 ? -c : c, comp);
  }
  return out;
}

KForm interior(const FrameVector& v, const KForm& a) {
  if (a.degree() == 0) return KForm::zero(0);
  KForm out = KForm::zero(a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    int position = 0;
    for (int i : idx.indices()) {
      const Scalar& vi = v[i];
      if (!vi.is_zero()) {
        Scalar coeff = c * vi;
        if (position % 2 != 0) coeff = -coeff;
        out += KForm::monomial(std::move(coeff),
                               MultiIndex::from_mask(static_cast<uint8_t>(idx.mask() & ~MultiIndex::bit(i))));
      }
      ++position;
    }
  }
  return out;
}

Scalar KForm::evaluate(std::span<const FrameVector> vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw std::invalid_argument("evaluate: arity does not match form degree");
  if (vectors.empty()) {
    return coefficient(MultiIndex{});
  }
  Scalar out;
  const FrameVector& first = vectors.front();
  for (int i = 1; i <= kDim; ++i) {
    if (first[i].is_zero()) continue;
    KForm contracted = interior(FrameVector::basis(i), *this);
    out += first[i] * contracted.evaluate(vectors.subspan(1));
  }
  return out;
}

FrameVector FrameVector::basis(int index) {
  FrameVector v;
  v[index] = Scalar(1);
  return v;
}

FrameVector FrameVector::operator-() const {
  FrameVector out;
  for (int i = 1; i <= kDim; ++i) out[i] = -(*this)[i];
  return out;
}

FrameVector& FrameVector::operator+=(const FrameVector& rhs) {
  for (int i = 1; i <= kDim; ++i) (*this)[i] += rhs[i];
  return *this;
}

FrameVector operator*(const FrameVector& v, const Scalar& s) {
  FrameVector out;
  for (int i = 1; i <= kDim; ++i) out[i] = v[i] * s;
  return out;
}

bool FrameVector::is_zero() const {
  for (int i = 1; i <= kDim; ++i)
    if (!(*this)[i].is_zero()) return false;
  return true;
}

std::string KForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    for (const auto& [mono, coeff] : c.terms()) {
      Rational abs_c = coeff < 0 ? Rational(-coeff) : coeff;
      if (out.empty()) {
        if (coeff < 0) out += '-';
      } else {
        out += coeff < 0 ? " - " : " + ";
      }
      std::string factors;
      if (abs_c != 1 || (mono.empty() && idx.degree() == 0)) factors = rational_str(abs_c);
      if (!mono.empty()) {
        if (!factors.empty()) factors += '*';
        factors += monomial_str(mono);
      }
      if (idx.degree() > 0) {
        if (!factors.empty()) factors += '*';
        factors += 'e' + idx.str();
      }
      out += factors;
    }
  }
  return out;
}

namespace {

struct FormParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  Rational read_rational() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    boost::multiprecision::cpp_int num(std::string(text.substr(start, pos - start)));
    boost::multiprecision::cpp_int den = 1;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) throw FormParseError(pos, "expected denominator digits");
      den = boost::multiprecision::cpp_int(std::string(text.substr(dstart, pos - dstart)));
      if (den == 0) throw FormParseError(dstart, "zero denominator");
    }
    return Rational(num, den);
  }

  int read_exponent() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw FormParseError(pos, "expected exponent digits");
    int exp = std::stoi(std::string(text.substr(start, pos - start)));
    return neg ? -exp : exp;
  }

  // One signed term: product of rational/parameter factors and at most one
  // basis factor.
  KForm read_term(int sign) {
    Scalar coeff(sign);
    bool have_basis = false;
    MultiIndex basis;
    bool expect_factor = true;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = peek();
      if (c == '+' || c == '-') break;
      if (c == '*' || text.compare(pos, 2, "\xc2\xb7") == 0) {  // '*' or U+00B7
        pos += (c == '*') ? 1 : 2;
        expect_factor = true;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = coeff * Scalar(read_rational());
        expect_factor = false;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
          ++pos;
        std::string_view ident = text.substr(start, pos - start);
        if (ident.size() >= 2 && ident[0] == 'e' &&
            std::all_of(ident.begin() + 1, ident.end(),
                        [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
          if (have_basis) throw FormParseError(start, "second basis factor in one term");
          uint8_t mask = 0;
          int last = 0;
          for (size_t k = 1; k < ident.size(); ++k) {
            int i = ident[k] - '0';
            if (i < 1 || i > kDim) throw FormParseError(start + k, "basis index out of 1..6");
            if (i <= last) throw FormParseError(start + k, "basis indices must be strictly increasing");
            last = i;
            mask |= MultiIndex::bit(i);
          }
          basis = MultiIndex::from_mask(mask);
          have_basis = true;
        } else {
          int exp = 1;
          if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = read_exponent();
          }
          coeff = coeff * Scalar::param(ident, exp);
        }
        expect_factor = false;
        continue;
      }
      break;
    }
    if (expect_factor) throw FormParseError(pos, "expected a factor");
    return KForm::monomial(std::move(coeff), basis);
  }

  KForm parse() {
    KForm out;
    bool first = true;
    bool any = false;
    while (!done()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw FormParseError(pos, "expected '+' or '-' between terms");
      }
      skip_ws();
      if (pos >= text.size()) throw FormParseError(pos, "dangling sign");
      KForm term = read_term(sign);
      if (any && !term.is_zero() && !out.is_zero() && term.degree() != out.degree())
        throw FormParseError(pos, "mixed degrees in one form");
      out += term;
      any = true;
      first = false;
    }
    if (!any) throw FormParseError(pos, "empty form expression");
    return out;
  }
};

}  // namespace

KForm KForm::parse(std::string_view text) {
  // "0" is the zero form.
  FormParser p{text};
  p.skip_ws();
  if (text.substr(p.pos) == "0") return KForm::zero(0);
  return p.parse();
}

}  // namespace nilflux
