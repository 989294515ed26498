#ifndef NILFLUX_EXTERIOR_HPP
#define NILFLUX_EXTERIOR_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilflux/scalar.hpp"

namespace nilflux {

inline constexpr int kDim = 6;

/// Strictly increasing tuple of frame indices in 1..6, stored as a bitmask.
/// Ordering is lexicographic on the index sequence, which is also the order
/// basis monomials are printed in.
class MultiIndex {
 public:
  MultiIndex() = default;  // the empty tuple (degree 0)
  MultiIndex(std::initializer_list<int> indices);
  static MultiIndex from_mask(uint8_t mask);

  int degree() const;
  uint8_t mask() const { return mask_; }
  bool contains(int index) const { return (mask_ & bit(index)) != 0; }
  std::vector<int> indices() const;
  MultiIndex complement() const { return from_mask(static_cast<uint8_t>(~mask_ & 0x3F)); }

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  friend bool operator!=(MultiIndex a, MultiIndex b) { return a.mask_ != b.mask_; }
  friend bool operator<(MultiIndex a, MultiIndex b);

  /// Digits only, e.g. "135"; empty tuple renders as "".
  std::string str() const;

  static uint8_t bit(int index) { return static_cast<uint8_t>(1u << (index - 1)); }

 private:
  uint8_t mask_ = 0;
};

/// Sign of the shuffle merging two disjoint increasing tuples: the parity of
/// the permutation sorting (a, b).  Returns 0 when the masks intersect.
int merge_sign(uint8_t mask_a, uint8_t mask_b);

class FrameVector;

/// Sparse invariant k-form on the 6-dimensional oriented orthonormal frame.
/// Zero forms may carry any degree tag; arithmetic treats them as degree-
/// compatible with everything.
class KForm {
 public:
  KForm() = default;
  static KForm zero(int degree);
  static KForm scalar(Scalar value);
  static KForm basis(MultiIndex idx);
  static KForm monomial(Scalar coefficient, MultiIndex idx);
  /// The volume form e^123456.
  static KForm volume();

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  /// Coefficient of the given increasing tuple (zero if absent).
  Scalar coefficient(MultiIndex idx) const;
  /// Fully antisymmetric component on an arbitrary index tuple: sorts the
  /// indices, applies the permutation sign, returns 0 on repeats.
  Scalar component(std::span<const int> indices) const;

  KForm operator-() const;
  KForm& operator+=(const KForm& rhs);
  KForm& operator-=(const KForm& rhs);
  friend KForm operator+(KForm lhs, const KForm& rhs) { return lhs += rhs; }
  friend KForm operator-(KForm lhs, const KForm& rhs) { return lhs -= rhs; }
  friend KForm operator*(const KForm& form, const Scalar& s);
  friend KForm operator*(const Scalar& s, const KForm& form) { return form * s; }
  friend bool operator==(const KForm& lhs, const KForm& rhs);
  friend bool operator!=(const KForm& lhs, const KForm& rhs) { return !(lhs == rhs); }

  KForm substitute(const std::map<int, Rational>& bindings) const;
  KForm reduce_square(int param_id, const Rational& value) const;

  /// Antisymmetric multilinear evaluation; vectors.size() must equal the
  /// degree (throws std::invalid_argument otherwise).
  Scalar evaluate(std::span<const FrameVector> vectors) const;

  std::string str() const;
  /// Parses the printed syntax: signed '*'-separated products of rationals,
  /// parameters (with optional ^exponent) and one basis factor eI, e.g.
  /// "-1/2*t^2*e12 + 3*e34".  Throws FormParseError.
  static KForm parse(std::string_view text);

 private:
  void add_term(MultiIndex idx, Scalar coefficient);

  int degree_ = 0;
  std::map<MultiIndex, Scalar> terms_;
};

/// Element of the frame E_1..E_6 span, with Scalar components.
class FrameVector {
 public:
  FrameVector() = default;
  static FrameVector basis(int index);

  Scalar& operator[](int index) { return components_[static_cast<size_t>(index - 1)]; }
  const Scalar& operator[](int index) const { return components_[static_cast<size_t>(index - 1)]; }

  FrameVector operator-() const;
  FrameVector& operator+=(const FrameVector& rhs);
  friend FrameVector operator+(FrameVector lhs, const FrameVector& rhs) { return lhs += rhs; }
  friend FrameVector operator*(const FrameVector& v, const Scalar& s);
  bool is_zero() const;
  friend bool operator==(const FrameVector& a, const FrameVector& b) { return a.components_ == b.components_; }

 private:
  std::array<Scalar, kDim> components_;
};

KForm wedge(const KForm& a, const KForm& b);

/// Hodge star for the orthonormal frame with orientation e^123456 = +volume:
/// *(e^I) = sign(I, I^c) e^{I^c}, extended linearly.
KForm hodge_star(const KForm& a);

/// Interior product v ⌟ a (contraction in the first slot).
KForm interior(const FrameVector& v, const KForm& a);

struct FormParseError : std::runtime_error {
  FormParseError(size_t pos, const std::string& message)
      : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

}  // namespace nilflux

#endif  // NILFLUX_EXTERIOR_HPP
