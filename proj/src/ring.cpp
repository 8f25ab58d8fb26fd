#include "adic/ring.hpp"

#include "adic/error.hpp"

namespace adic {

RingDescriptor RingDescriptor::tateAlgebra(Prime p) {
  RingDescriptor r(RingKind::TateAlgebra, p);
  r.normExponent_ = Rational(0);
  r.ringOfDefinition_ = {"O_Cp<w>"};
  r.idealOfDefinition_ = {"p"};
  return r;
}

RingDescriptor RingDescriptor::polyRing(Prime p) {
  RingDescriptor r(RingKind::PolyRing, p);
  r.normExponent_ = Rational(0);
  r.ringOfDefinition_ = {"O_Cp[w]"};
  r.idealOfDefinition_ = {"p"};
  return r;
}

RingDescriptor RingDescriptor::formalPowerSeries(Prime p) {
  RingDescriptor r(RingKind::FormalPowerSeries, p);
  r.ringOfDefinition_ = {"Z_p[[w]]"};
  r.idealOfDefinition_ = {"p", "w"};
  return r;
}

RingKind RingDescriptor::rootKind() const noexcept {
  const RingDescriptor* r = this;
  while (r->kind_ == RingKind::Localized) r = r->base_.get();
  return r->kind_;
}

const RingDescriptor& RingDescriptor::base() const {
  if (!base_) fail(ErrorCode::InvalidArgument, name() + " is not a localization");
  return *base_;
}

const std::vector<TateSeries>& RingDescriptor::numerators() const {
  if (!base_) fail(ErrorCode::InvalidArgument, name() + " is not a localization");
  return numerators_;
}

const TateSeries& RingDescriptor::denominator() const {
  if (!denominator_) fail(ErrorCode::InvalidArgument, name() + " is not a localization");
  return *denominator_;
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::TateAlgebra: return "C_p<w>";
    case RingKind::PolyRing: return "Q[w]";
    case RingKind::FormalPowerSeries: return "Z_p[[w]]";
    case RingKind::Localized: {
      std::string out = base_->name() + "(";
      for (std::size_t i = 0; i < numerators_.size(); ++i) {
        out += (i ? ", " : "") + renderSeries(numerators_[i]);
      }
      return out + " / " + renderSeries(*denominator_) + ")";
    }
  }
  return "?";
}

RingDescriptor makeLocalized(const RingDescriptor& base, std::vector<TateSeries> numerators,
                             TateSeries denominator, std::optional<Rational> normExponent) {
  RingDescriptor r(RingKind::Localized, base.prime());
  r.base_ = std::make_shared<const RingDescriptor>(base);
  r.normExponent_ = std::move(normExponent);
  // A_0' = A_0[g_1/s, ..., g_r/s], I' = I A_0'
  r.ringOfDefinition_ = base.ringOfDefinition();
  const std::string s = renderSeries(denominator);
  for (const auto& g : numerators) r.ringOfDefinition_.push_back("(" + renderSeries(g) + ")/(" + s + ")");
  r.idealOfDefinition_ = base.idealOfDefinition();
  r.numerators_ = std::move(numerators);
  r.denominator_ = std::make_shared<const TateSeries>(std::move(denominator));
  return r;
}

std::string renderSeries(const TateSeries& f) {
  std::string out;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Rational& c = f.coeffs()[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = renderRational(c);
    } else {
      if (c == 1) {
        term = "";
      } else if (c == -1) {
        term = "-";
      } else {
        term = renderRational(c) + "*";
      }
      term += i == 1 ? "w" : "w^" + std::to_string(i);
    }
    if (!out.empty()) {
      if (term.front() == '-') {
        out += " - " + term.substr(1);
        continue;
      }
      out += " + ";
    }
    out += term;
  }
  if (!f.isPolynomial()) {
    out += (out.empty() ? "" : " + ") + std::string("O(p^") + f.tailBound().toString() + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace adic
