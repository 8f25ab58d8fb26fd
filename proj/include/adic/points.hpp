#pragma once

// Finitely presented points of Cont(C_p<w>) and their classification.
//
//   Classical(alpha)          x_alpha              Type 1
//   Disc(alpha, p^{-q})       x_{alpha,r}, r in p^Q Type 2
//   Disc(alpha, r)            x_{alpha,r}, r not in p^Q Type 3
//   Type5(alpha, q, lambda)   x_{alpha,r}^lambda    Type 5
//
// The Type-5 direction lambda is read in the coordinate t = (w - alpha)/beta
// with |beta| = p^{-q}, normalized so that beta reduces to 1.

#include <memory>
#include <string>

#include "adic/arith.hpp"
#include "adic/ffield.hpp"
#include "adic/ordgroup.hpp"
#include "adic/tate.hpp"

namespace adic {

class Radius {
 public:
  /// r = p^{-q}, q >= 0.
  static Radius pPower(const Rational& q);
  /// 0 < r < 1 with r not an integer power of p.
  static Radius plain(Prime p, const Rational& r);

  bool isPPower() const noexcept { return pPower_; }
  /// q for PPower radii.
  const Rational& exponent() const;
  /// r for Plain radii.
  const Rational& value() const;

  friend bool operator==(const Radius&, const Radius&) = default;

 private:
  Radius(bool pPower, Rational v) : pPower_(pPower), v_(std::move(v)) {}
  bool pPower_;
  Rational v_;
};

enum class PointKind { Classical, Disc, Type5 };

class PointDescriptor {
 public:
  static PointDescriptor classical(Prime p, const Rational& alpha);
  static PointDescriptor disc(Prime p, const Rational& alpha, const Radius& radius);
  static PointDescriptor type5(Prime p, const Rational& alpha, const Rational& q,
                               std::shared_ptr<const FqContext> residue, const P1Point& lambda);

  /// x_1 = x_{0,1}
  static PointDescriptor gauss(Prime p) { return disc(p, Rational(0), Radius::pPower(Rational(0))); }
  /// x_{1-} = x_{0,1}^0
  static PointDescriptor oneMinus(Prime p);
  /// x_{1+} = x_{0,1}^inf
  static PointDescriptor onePlus(Prime p);

  PointKind kind() const noexcept { return kind_; }
  Prime prime() const noexcept { return p_; }
  const Rational& center() const noexcept { return alpha_; }
  /// Disc radius; for Type5 the PPower radius p^{-q}.
  const Radius& radius() const;
  const std::shared_ptr<const FqContext>& residueContext() const;
  const P1Point& lambda() const;

  GroupDescriptor valueGroup() const;
  std::string describe() const;

  /// Structural equality of the presentation (not of the valuation; see samePoint).
  friend bool operator==(const PointDescriptor& a, const PointDescriptor& b);

 private:
  PointDescriptor(PointKind kind, Prime p, Rational alpha, Radius radius,
                  std::shared_ptr<const FqContext> ctx, P1Point lambda);

  PointKind kind_;
  Prime p_;
  Rational alpha_;
  Radius radius_;
  std::shared_ptr<const FqContext> ctx_;
  P1Point lambda_;
};

/// Whether two presentations define the same valuation (discs depend only on
/// the physical disc; Type-5 directions shift with the center).
bool samePoint(const PointDescriptor& x, const PointDescriptor& y);

enum class ResidueFieldKind { AlgClosedPrime, RationalFunction };
enum class SupportKind { MaximalIdeal, ZeroIdeal };

struct PointReport {
  int typeTag;
  GroupDescriptor valueGroup;
  ResidueFieldKind residueField;
  SupportKind support;
  bool closed;
  bool inD;
};

/// |f(x)|
GroupValue evaluate(const TateSeries& f, const PointDescriptor& x);
PointReport classify(const PointDescriptor& x);
/// |w(x)| <= 1
bool inD(const PointDescriptor& x);
bool supportContains(const PointDescriptor& x, const TateSeries& f);

}  // namespace adic
