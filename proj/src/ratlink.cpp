#include "ratslice/ratlink.hpp"

#include "ratslice/error.hpp"

namespace ratslice {

void validate(const FramedKnotData& k) {
  if (k.order < 1) throw InputError("order must be at least 1");
  if (k.lk != lk_from_slope(k.order, k.slope)) {
    throw InputError("lk " + format_rational(k.lk) + " differs from -slope/order = " +
                     format_rational(lk_from_slope(k.order, k.slope)));
  }
  validate_spectrum(k.tau_spectrum);
  if (k.linking_form) {
    for (const auto& v : *k.linking_form) {
      if (v < 0 || v >= 1) {
        throw InputError("linking_form value " + format_rational(v) + " outside [0,1)");
      }
    }
  }
}

Rational lk_from_slope(long long order, long long slope) {
  if (order < 1) throw InputError("order must be at least 1");
  return Rational(BigInt(-slope), BigInt(order));
}

Rational lk_shift(const Rational& lk, long long n) { return lk + n; }

Rational self_link_mod_z(const Rational& lk) { return frac_part(lk); }

long long c_value(const SatelliteSpec& s) {
  if (s.order < 1) throw InputError("order must be at least 1");
  const long long p = s.pattern.index();
  if (p % s.order != 0) {
    throw InputError("braid index " + std::to_string(p) + " is not a multiple of the order " +
                     std::to_string(s.order) +
                     "; a braided satellite of a knot of order q needs index divisible by q");
  }
  if (!is_integer(s.framing_lk * s.order)) {
    throw InputError("framing lk " + format_rational(s.framing_lk) +
                     " is not in (1/order)Z for order " + std::to_string(s.order));
  }
  Rational c = Rational((p - 1) * p) * s.framing_lk + writhe(s.pattern);
  return to_int64(c, "c");
}

SatelliteSpec twist_normalize(const SatelliteSpec& s, int m) {
  SatelliteSpec out = s;
  out.framing_lk = lk_shift(s.framing_lk, m);
  out.pattern *= power(full_twist(s.pattern.index()), -m);
  return out;
}

}  // namespace ratslice
