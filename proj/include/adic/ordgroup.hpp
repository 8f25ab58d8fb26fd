#pragma once

// Totally ordered abelian groups used as value groups of points on the disc:
//
//   PQ        p^Q                        (Types 1 and 2)
//   PQrZ(r)   p^Q * r^Z inside R_{>0}    (Type 3, r not in p^Q)
//   PQxHalfZ  p^Q x (1/2)^Z, lexicographic (Type 5)
//
// Each group is extended by an absorbing zero strictly below everything.

#include <compare>
#include <span>
#include <string>

#include "adic/arith.hpp"

namespace adic {

enum class GroupKind { PQ, PQrZ, PQxHalfZ };

class GroupDescriptor {
 public:
  static GroupDescriptor pq(Prime p) { return GroupDescriptor(GroupKind::PQ, p, Rational(0)); }
  /// Requires 0 < r < 1 and r != p^m.
  static GroupDescriptor pqrz(Prime p, const Rational& r);
  static GroupDescriptor pqxHalfZ(Prime p) {
    return GroupDescriptor(GroupKind::PQxHalfZ, p, Rational(0));
  }

  GroupKind kind() const noexcept { return kind_; }
  Prime prime() const noexcept { return prime_; }
  /// Auxiliary base of PQrZ; zero for the other kinds.
  const Rational& base() const noexcept { return base_; }

  std::string name() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.kind_ == b.kind_ && a.prime_ == b.prime_ && a.base_ == b.base_;
  }

 private:
  GroupDescriptor(GroupKind kind, Prime p, Rational base)
      : kind_(kind), prime_(p), base_(std::move(base)) {}

  GroupKind kind_;
  Prime prime_;
  Rational base_;
};

/// An element of Gamma u {0}. Non-zero values are encoded by exponents:
///   PQ:       p^e
///   PQrZ:     p^e * r^n
///   PQxHalfZ: (p^e, (1/2)^n)
class GroupValue {
 public:
  static GroupValue zero(const GroupDescriptor& ambient);
  static GroupValue one(const GroupDescriptor& ambient);
  static GroupValue pexp(Prime p, const Rational& e);
  static GroupValue mixed(const GroupDescriptor& ambient, const Rational& e, long n);
  static GroupValue lex2(Prime p, const Rational& e, long n);
  /// Generic constructor from exponents; n must be 0 for PQ.
  static GroupValue make(const GroupDescriptor& ambient, const Rational& e, long n);

  const GroupDescriptor& ambient() const noexcept { return ambient_; }
  bool isZero() const noexcept { return zero_; }
  bool isOne() const noexcept { return !zero_ && e_ == 0 && n_ == 0; }
  /// Exponent of p. Zero for the zero value.
  const Rational& pExponent() const noexcept { return e_; }
  /// Exponent of r (PQrZ) or of 1/2 (PQxHalfZ); 0 for PQ.
  long secondExponent() const noexcept { return n_; }

  /// "0", "p^{a/b}", "p^{a/b}*r^{n}" or "(p^{a/b}, (1/2)^{n})".
  std::string toString() const;

  /// Structural equality; values from different ambients are never equal.
  friend bool operator==(const GroupValue& a, const GroupValue& b);

 private:
  GroupValue(GroupDescriptor ambient, bool zero, Rational e, long n)
      : ambient_(std::move(ambient)), zero_(zero), e_(std::move(e)), n_(n) {}

  GroupDescriptor ambient_;
  bool zero_;
  Rational e_;
  long n_;
};

enum class ConvexSubgroup { Trivial, SecondFactor, Full };

std::string convexSubgroupName(ConvexSubgroup delta);

/// Total order on a shared ambient; throws AmbientMismatch otherwise.
std::strong_ordering cmp(const GroupValue& a, const GroupValue& b);
GroupValue mul(const GroupValue& a, const GroupValue& b);
/// Inverse of a non-zero value.
GroupValue inverse(const GroupValue& a);
GroupValue maxValue(const GroupValue& a, const GroupValue& b);

inline bool operator<(const GroupValue& a, const GroupValue& b) { return cmp(a, b) < 0; }
inline bool operator<=(const GroupValue& a, const GroupValue& b) { return cmp(a, b) <= 0; }
inline bool operator>(const GroupValue& a, const GroupValue& b) { return cmp(a, b) > 0; }
inline bool operator>=(const GroupValue& a, const GroupValue& b) { return cmp(a, b) >= 0; }
inline GroupValue operator*(const GroupValue& a, const GroupValue& b) { return mul(a, b); }

/// Whether the powers of a eventually drop below every element of G.
bool isCofinal(const GroupValue& a, const GroupDescriptor& group);

bool isConvexIn(ConvexSubgroup delta, const GroupDescriptor& group) noexcept;
/// Exact membership of a non-zero value in a convex subgroup. Zero is never a member.
bool contains(ConvexSubgroup delta, const GroupValue& a);

/// Smallest convex subgroup containing the subgroup generated by the values.
ConvexSubgroup convexClosure(std::span<const GroupValue> values, const GroupDescriptor& group);

/// Order-preserving projection Gamma -> Gamma/Delta.
GroupValue quotientProject(const GroupValue& a, ConvexSubgroup delta);

/// a if a lies in Delta, else 0.
GroupValue truncate(const GroupValue& a, ConvexSubgroup delta);

}  // namespace adic
