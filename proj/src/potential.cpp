#include <cmath>
#include <limits>
#include <stdexcept>

#include "wavedecay/types.hpp"

namespace wavedecay {

namespace {

void derive_decay(PotentialSpec& v) {
  if (v.delta0 <= 0.0) throw std::domain_error("PotentialSpec: delta0 must be > 0");
  double c = std::ceil(v.delta0);
  v.k0 = static_cast<int>(c == v.delta0 ? v.delta0 - 1.0 : c - 1.0);
  if (v.k0 < 0) v.k0 = 0;
  v.delta0_prime = v.delta0 - v.k0;
}

}  // namespace

double PotentialSpec::radial_value(double r) const {
  switch (family) {
    case PotentialFamily::Zero:
      return 0.0;
    case PotentialFamily::InversePower:
      return amplitude * std::pow(1.0 + r * r, -0.5 * (2.0 + delta0));
    case PotentialFamily::Gaussian: {
      // scaled so |V| <= |amplitude| <x>^{-2-delta0} holds with a sharp constant
      double q = 1.0 + 0.5 * delta0;
      double peak = std::pow(q, q) * std::exp(1.0 - q);
      return amplitude / peak * std::exp(-r * r);
    }
    case PotentialFamily::CompactBump: {
      double q = r / bump_radius;
      if (q >= 1.0) return 0.0;
      return amplitude / bump_peak() * std::exp(1.0 - 1.0 / (1.0 - q * q));
    }
  }
  return 0.0;
}

// max over r of exp(1 - 1/(1-q^2)) <r>^{2+delta0}; scales the bump so the
// decay bound holds with constant |amplitude|
double PotentialSpec::bump_peak() const {
  double peak = 0.0;
  for (int i = 0; i <= 400; ++i) {
    double r = bump_radius * i / 401.0;
    double q = r / bump_radius;
    peak = std::max(peak, std::exp(1.0 - 1.0 / (1.0 - q * q)) *
                              std::pow(1.0 + r * r, 0.5 * (2.0 + delta0)));
  }
  return peak;
}

double PotentialSpec::support_radius() const {
  return family == PotentialFamily::CompactBump
             ? bump_radius
             : (family == PotentialFamily::Zero ? 0.0
                                                : std::numeric_limits<double>::infinity());
}

PotentialSpec PotentialSpec::zero() {
  PotentialSpec v;
  v.family = PotentialFamily::Zero;
  v.amplitude = 0.0;
  v.delta0 = 1.0;
  derive_decay(v);
  return v;
}

PotentialSpec PotentialSpec::inverse_power(double c, double delta0) {
  PotentialSpec v;
  v.family = PotentialFamily::InversePower;
  v.amplitude = c;
  v.delta0 = delta0;
  derive_decay(v);
  return v;
}

// delta0 is the decay label used for (k0, delta0'); the Gaussian satisfies the
// bound for any delta0, default 2.
PotentialSpec PotentialSpec::gaussian(double c, double delta0) {
  PotentialSpec v;
  v.family = PotentialFamily::Gaussian;
  v.amplitude = c;
  v.delta0 = delta0;
  derive_decay(v);
  return v;
}

PotentialSpec PotentialSpec::compact_bump(double c, double radius, double delta0) {
  PotentialSpec v;
  v.family = PotentialFamily::CompactBump;
  v.amplitude = c;
  v.bump_radius = radius;
  v.delta0 = delta0;
  derive_decay(v);
  return v;
}

}  // namespace wavedecay
