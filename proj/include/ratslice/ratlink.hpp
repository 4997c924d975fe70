#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratslice/braid.hpp"
#include "ratslice/complex.hpp"
#include "ratslice/rational.hpp"

namespace ratslice {

// A knot K in a rational homology sphere with a rational Seifert surface
// bounding order*lambda + slope*mu.
struct FramedKnotData {
  long long order = 1;
  long long slope = 0;
  Rational lk;
  TauSpectrum tau_spectrum;
  std::optional<std::map<std::string, Rational>> d_invariants;
  std::optional<std::vector<Rational>> linking_form;
  std::optional<bool> floer_simple;
};

// Throws InputError naming the first inconsistent field.
void validate(const FramedKnotData& k);

struct SatelliteSpec {
  BraidWord pattern;
  Rational framing_lk;
  long long order = 1;  // order of the companion in first homology
};

Rational lk_from_slope(long long order, long long slope);
Rational lk_shift(const Rational& lk, long long n);
Rational self_link_mod_z(const Rational& lk);

// (p-1) p lk + writhe, with p the pattern index.
long long c_value(const SatelliteSpec& s);

// Same satellite described with framing shifted by m: m negative full twists
// are appended per unit of framing.
SatelliteSpec twist_normalize(const SatelliteSpec& s, int m);

}  // namespace ratslice
