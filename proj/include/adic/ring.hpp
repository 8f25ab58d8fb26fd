#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adic/arith.hpp"
#include "adic/tate.hpp"

namespace adic {

enum class RingKind { TateAlgebra, PolyRing, FormalPowerSeries, Localized };

/// A finitely presented Huber ring together with a symbolic pair of
/// definition (A_0, I). Localized descriptors are produced by huber::localize,
/// which checks the open-ideal condition first.
class RingDescriptor {
 public:
  /// C_p<w>, pair of definition (O<w>, p)
  static RingDescriptor tateAlgebra(Prime p);
  /// Q[w] inside C_p[w] with the Gauss-norm topology
  static RingDescriptor polyRing(Prime p);
  /// Z_p[[w]] with the (p, w)-adic topology
  static RingDescriptor formalPowerSeries(Prime p);

  RingKind kind() const noexcept { return kind_; }
  Prime prime() const noexcept { return p_; }
  bool isLocalized() const noexcept { return kind_ == RingKind::Localized; }
  /// Innermost non-localized ring.
  RingKind rootKind() const noexcept;

  const RingDescriptor& base() const;
  const std::vector<TateSeries>& numerators() const;
  const TateSeries& denominator() const;

  /// q when the topology is given by the exact norm |.|_{p^{-q}} (Tate, poly
  /// and monomial localizations of those).
  const std::optional<Rational>& normExponent() const noexcept { return normExponent_; }

  /// Generators of the ring of definition A_0, rendered symbolically.
  const std::vector<std::string>& ringOfDefinition() const noexcept { return ringOfDefinition_; }
  /// Generators of the ideal of definition I (inside A_0).
  const std::vector<std::string>& idealOfDefinition() const noexcept { return idealOfDefinition_; }

  std::string name() const;

 private:
  friend RingDescriptor makeLocalized(const RingDescriptor& base, std::vector<TateSeries> numerators,
                                      TateSeries denominator, std::optional<Rational> normExponent);

  RingDescriptor(RingKind kind, Prime p) : kind_(kind), p_(p) {}

  RingKind kind_;
  Prime p_;
  std::shared_ptr<const RingDescriptor> base_;
  std::vector<TateSeries> numerators_;
  std::shared_ptr<const TateSeries> denominator_;
  std::optional<Rational> normExponent_;
  std::vector<std::string> ringOfDefinition_;
  std::vector<std::string> idealOfDefinition_;
};

/// Builds a Localized descriptor without validation; used by huber::localize.
RingDescriptor makeLocalized(const RingDescriptor& base, std::vector<TateSeries> numerators,
                             TateSeries denominator, std::optional<Rational> normExponent);

/// Human-readable rendering such as "1/3*w^2 + w + O(p^5)".
std::string renderSeries(const TateSeries& f);

}  // namespace adic
