#include "nilflux/frames.hpp"

#include <cctype>
#include <stdexcept>

namespace nilflux {

StructureEquations::StructureEquations() {
  for (int k = 1; k <= kDim; ++k) de_[static_cast<size_t>(k - 1)] = KForm::zero(2);
}

void StructureEquations::set(int k, int i, int j, Scalar value) {
  if (k < 1 || k > kDim) throw std::out_of_range("structure index k out of 1..6");
  if (!(i >= 1 && i < j && j <= kDim)) throw std::invalid_argument("structure pair must satisfy 1 <= i < j <= 6");
  KForm& de = de_[static_cast<size_t>(k - 1)];
  de -= KForm::monomial(de.coefficient(MultiIndex{i, j}), MultiIndex{i, j});
  de += KForm::monomial(std::move(value), MultiIndex{i, j});
}

void StructureEquations::set_de(int k, KForm de2form) {
  if (k < 1 || k > kDim) throw std::out_of_range("structure index k out of 1..6");
  if (!de2form.is_zero() && de2form.degree() != 2) throw std::invalid_argument("de^k must be a 2-form");
  if (de2form.is_zero()) de2form = KForm::zero(2);
  de_[static_cast<size_t>(k - 1)] = std::move(de2form);
}

Scalar StructureEquations::a(int k, int i, int j) const {
  const int idx[2] = {i, j};
  return de(k).component(idx);
}

KForm StructureEquations::d(const KForm& form) const {
  if (form.degree() >= kDim) return KForm::zero(kDim);
  KForm out = KForm::zero(form.degree() + 1);
  for (const auto& [idx, c] : form.terms()) {
    int position = 0;
    for (int i : idx.indices()) {
      // e^{i1..ik} with slot `position` replaced by de^i, sign (-1)^position
      KForm rest = KForm::basis(MultiIndex::from_mask(static_cast<uint8_t>(idx.mask() & ~MultiIndex::bit(i))));
      KForm piece = wedge(de(i), rest);
      Scalar coeff = (position % 2 == 0) ? c : -c;
      out += piece * coeff;
      ++position;
    }
  }
  return out;
}

bool StructureEquations::jacobi_ok() const {
  for (int k = 1; k <= kDim; ++k)
    if (!d(de(k)).is_zero()) return false;
  return true;
}

FrameVector StructureEquations::bracket(const FrameVector& x, const FrameVector& y) const {
  FrameVector out;
  for (int i = 1; i <= kDim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 1; j <= kDim; ++j) {
      if (i == j || y[j].is_zero()) continue;
      Scalar weight = x[i] * y[j];
      for (int k = 1; k <= kDim; ++k) {
        Scalar akij = a(k, i, j);
        if (!akij.is_zero()) out[k] -= weight * akij;
      }
    }
  }
  return out;
}

StructureEquations StructureEquations::substitute(const std::map<int, Rational>& bindings) const {
  StructureEquations out;
  for (int k = 1; k <= kDim; ++k) out.set_de(k, de(k).substitute(bindings));
  return out;
}

std::string StructureEquations::render() const {
  std::string out = "(";
  for (int k = 1; k <= kDim; ++k) {
    if (k > 1) out += ',';
    const KForm& de_k = de(k);
    if (de_k.is_zero()) {
      out += '0';
      continue;
    }
    std::string entry;
    for (const auto& [idx, c] : de_k.terms()) {
      for (const auto& [mono, coeff] : c.terms()) {
        Rational abs_c = coeff < 0 ? Rational(-coeff) : coeff;
        if (entry.empty()) {
          if (coeff < 0) entry += '-';
        } else {
          entry += coeff < 0 ? '-' : '+';
        }
        std::string factors;
        if (abs_c != 1) factors = rational_str(abs_c);
        if (!mono.empty()) {
          if (!factors.empty()) factors += '*';
          factors += monomial_str(mono);
        }
        if (!factors.empty()) factors += '*';
        entry += factors + idx.str();
      }
    }
    out += entry;
  }
  out += ')';
  return out;
}

namespace {

struct StructureParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw StructureParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }

  // Reads one ± term of an entry: coefficient factors followed by the final
  // two-digit index pair.  Tokens may be juxtaposed or separated by '*'/'·'.
  void read_term(KForm& de, int sign) {
    Scalar coeff(sign);
    bool saw_pair = false;
    while (!saw_pair) {
      skip_ws();
      if (pos >= text.size()) throw StructureParseError(pos, "unterminated term");
      char c = text[pos];
      if (c == '*') {
        ++pos;
        continue;
      }
      if (text.compare(pos, 2, "\xc2\xb7") == 0) {
        pos += 2;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        size_t len = pos - start;
        bool is_pair = len == 2;
        if (is_pair) {
          // A two-digit run is the index pair unless followed by '/'
          // (rational) — peek to disambiguate.
          if (pos < text.size() && text[pos] == '/') is_pair = false;
        }
        if (is_pair) {
          int i = text[start] - '0';
          int j = text[start + 1] - '0';
          if (i < 1 || i > kDim || j < 1 || j > kDim)
            throw StructureParseError(start, "index out of 1..6");
          if (i >= j) throw StructureParseError(start, "index pair must be increasing (i < j)");
          de += KForm::monomial(coeff, MultiIndex{i, j});
          saw_pair = true;
          continue;
        }
        // rational coefficient
        boost::multiprecision::cpp_int num(std::string(text.substr(start, len)));
        boost::multiprecision::cpp_int den = 1;
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          size_t dstart = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (pos == dstart) throw StructureParseError(pos, "expected denominator digits");
          den = boost::multiprecision::cpp_int(std::string(text.substr(dstart, pos - dstart)));
          if (den == 0) throw StructureParseError(dstart, "zero denominator");
        }
        coeff = coeff * Scalar(Rational(num, den));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                     text[pos] == '\''))
          ++pos;
        std::string_view ident = text.substr(start, pos - start);
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          bool neg = pos < text.size() && text[pos] == '-';
          if (neg) ++pos;
          size_t estart = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (pos == estart) throw StructureParseError(pos, "expected exponent digits");
          exp = std::stoi(std::string(text.substr(estart, pos - estart)));
          if (neg) exp = -exp;
        }
        coeff = coeff * Scalar::param(ident, exp);
        continue;
      }
      throw StructureParseError(pos, "malformed entry");
    }
  }

  KForm read_entry() {
    skip_ws();
    KForm de = KForm::zero(2);
    // bare zero entry
    if (pos < text.size() && text[pos] == '0') {
      size_t save = pos;
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] == ',' || text[pos] == ')') return de;
      pos = save;  // "0" was the start of something else (not valid, will error below)
    }
    int sign = 1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    read_term(de, sign);
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ',' || text[pos] == ')') break;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        read_term(de, sign);
        continue;
      }
      throw StructureParseError(pos, "expected '+', '-', ',' or ')'");
    }
    return de;
  }

  StructureEquations parse() {
    StructureEquations eqs;
    expect('(');
    for (int k = 1; k <= kDim; ++k) {
      eqs.set_de(k, read_entry());
      if (k < kDim) expect(',');
    }
    expect(')');
    skip_ws();
    if (pos != text.size()) throw StructureParseError(pos, "trailing characters after ')'");
    return eqs;
  }
};

}  // namespace

StructureEquations StructureEquations::parse(std::string_view text) {
  StructureParser parser{text};
  return parser.parse();
}

}  // namespace nilflux
