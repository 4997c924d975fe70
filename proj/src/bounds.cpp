#include "ratslice/bounds.hpp"

#include <algorithm>
#include <set>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

void require_positive(long long v, const char* name) {
  if (v < 1) throw InputError(std::string(name) + " must be at least 1");
}

std::string fr(const Rational& r) { return format_rational(r); }
std::string fi(long long v) { return std::to_string(v); }

void spectrum_inputs(BoundReport& r, const TauSpectrum& s) {
  r.inputs.emplace_back("tau_max", fr(s.tau_max));
  r.inputs.emplace_back("tau_min", fr(s.tau_min));
}

// A connected surface with one boundary component has -chi >= -1.
void flag_vacuous(BoundReport& r) {
  if (r.bound_value <= -1) r.flags.push_back("vacuous");
}

Rational surface_lhs(const TauSpectrum& s, const Rational& c, long long p) {
  Rational cp = c / p;
  return std::max(Rational(2 * s.tau_max + cp), Rational(-2 * s.tau_min - cp));
}

}  // namespace

std::string to_string(Direction d) {
  switch (d) {
    case Direction::lower: return "lower";
    case Direction::upper: return "upper";
    case Direction::equality: return "equality";
  }
  return "lower";
}

bool BoundReport::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

Interval cable_tau_interval(long long p, const Rational& tau, const Rational& lk_n) {
  require_positive(p, "p");
  Rational lo = p * tau + Rational(p * (p - 1)) * lk_n / 2;
  return {lo, lo + (p - 1)};
}

Interval bp_tau_interval(long long p, const Rational& tau, const Rational& framing_lk, long long w,
                         long long comps) {
  require_positive(p, "p");
  if (comps < 1 || comps > p) throw InputError("comps must lie in [1, p]");
  Rational center = 2 * p * tau + Rational((p - 1) * p) * framing_lk + w;
  Rational radius = (p - 1) + comps - 1;
  return {(center - radius) / 2, (center + radius) / 2};
}

Interval crossing_change_propagate(const Interval& iv, long long plus_changes,
                                   long long minus_changes) {
  if (plus_changes < 0 || minus_changes < 0) throw InputError("change counts must be nonnegative");
  return {iv.lo - minus_changes, iv.hi + plus_changes};
}

BoundReport genus_lower_bound_breadth(const TauSpectrum& s) {
  BoundReport r;
  r.name = "tau breadth genus bound";
  r.bound_value = (s.breadth() - 1) / 2;
  r.clamped = std::max(r.bound_value, Rational(0));
  r.direction = Direction::lower;
  spectrum_inputs(r, s);
  r.derived.emplace_back("breadth", fr(s.breadth()));
  r.citation = "tau_max - tau_min <= 2 g(Y x [0,1]) + 1; the same bound holds for the rational PL slice genus";
  r.flags.push_back("pl-slice-bound");
  if (r.bound_value < 0) r.flags.push_back("clamped");
  return r;
}

BoundReport surface_bound_with_c(const TauSpectrum& s, long long c, long long p) {
  require_positive(p, "p");
  BoundReport r;
  r.name = "surface bound with boundary constant";
  r.bound_value = p * surface_lhs(s, Rational(c), p) - p;
  r.direction = Direction::lower;
  spectrum_inputs(r, s);
  r.inputs.emplace_back("c", fi(c));
  r.inputs.emplace_back("p", fi(p));
  r.citation = "max(2 tau_max + c/p, -2 tau_min - c/p) <= (-chi + p)/p";
  flag_vacuous(r);
  return r;
}

OptimalC optimal_c(const TauSpectrum& s, long long p) {
  require_positive(p, "p");
  OptimalC out;
  out.c_star = -p * (s.tau_max + s.tau_min);
  // The left side is convex piecewise linear in c with its minimum at c_star,
  // so the best integer is floor or ceil of c_star.
  std::set<long long> candidates = {floor_of(out.c_star).convert_to<long long>(),
                                    ceil_of(out.c_star).convert_to<long long>()};
  std::optional<Rational> best;
  for (long long c : candidates) {
    Rational v = surface_lhs(s, Rational(c), p);
    if (!best || v < *best) {
      best = v;
      out.best_integer_c = c;
    }
  }
  out.bound = surface_bound_with_c(s, out.best_integer_c, p);
  out.bound.name = "optimal boundary constant";
  out.bound.derived.emplace_back("c_star", fr(out.c_star));
  out.bound.derived.emplace_back("bound_at_c_star", fr(p * s.breadth() - p));
  return out;
}

BoundReport seifert_framed_bound(const TauSpectrum& s, long long p) {
  require_positive(p, "p");
  Rational m = std::max(abs_of(s.tau_max), abs_of(s.tau_min));
  BoundReport r;
  r.name = "rational longitude framed surface bound";
  r.bound_value = p * (2 * m - 1);
  r.direction = Direction::lower;
  spectrum_inputs(r, s);
  r.inputs.emplace_back("p", fi(p));
  r.derived.emplace_back("max_abs_two_tau", fr(2 * m));
  r.citation = "2 |tau_alpha| <= -chi/p + 1 when the boundary is a multiple of the rational longitude";
  flag_vacuous(r);
  return r;
}

BoundReport surface_genus_upper_bound(long long minus_chi, long long p) {
  require_positive(p, "p");
  BoundReport r;
  r.name = "explicit surface genus upper bound";
  r.bound_value = Rational(minus_chi + p, p);
  r.direction = Direction::upper;
  r.inputs.emplace_back("minus_chi", fi(minus_chi));
  r.inputs.emplace_back("p", fi(p));
  r.citation = "2 g(Y x [0,1]) + 1 <= (-chi + p)/p for a degree-p slice surface";
  return r;
}

Rational satellite_breadth_lower(long long p, const Rational& breadth) {
  require_positive(p, "p");
  return p * (breadth - 1) + 1;
}

BoundReport link_cobordism_bound(const Rational& c1_pairing, const Rational& self_square,
                                 const Rational& tau_out, const Rational& tau_in,
                                 long long comps_in, long long comps_out) {
  require_positive(comps_in, "comps_in");
  require_positive(comps_out, "comps_out");
  BoundReport r;
  r.name = "link cobordism bound";
  r.bound_value = c1_pairing + self_square + 2 * tau_out - 2 * tau_in - comps_in - comps_out + 2;
  r.direction = Direction::lower;
  r.inputs = {{"c1_pairing", fr(c1_pairing)}, {"self_square", fr(self_square)},
              {"tau_out", fr(tau_out)},       {"tau_in", fr(tau_in)},
              {"comps_in", fi(comps_in)},     {"comps_out", fi(comps_out)}};
  r.citation = "c1 + [S]^2 + 2 tau(L_out) - 2 tau(L_in) <= -chi + |L_in| + |L_out| - 2";
  return r;
}

BoundReport slice_bennequin_check(const Rational& tb, const Rational& rot, long long chi,
                                  long long p) {
  require_positive(p, "p");
  BoundReport r;
  r.name = "rational slice-Bennequin inequality";
  r.bound_value = Rational(-chi, p);
  r.direction = Direction::upper;
  r.inputs = {{"tb", fr(tb)}, {"rot", fr(rot)}, {"chi", fi(chi)}, {"p", fi(p)}};
  Rational slack = r.bound_value - tb - rot;
  r.derived.emplace_back("slack", fr(slack));
  r.satisfied = slack >= 0;
  r.citation = "tb + rot <= -chi/p";
  return r;
}

Rational linking_form_breadth_lower(const std::vector<Rational>& form_values) {
  Rational best = 0;
  for (const auto& v : form_values) {
    if (v < 0 || v >= 1) throw InputError("linking form value " + fr(v) + " outside [0,1)");
    best = std::max(best, v);
  }
  return best;
}

Rational d_invariant_bound(const std::map<std::string, Rational>& d,
                           const std::map<std::string, std::string>& k_action) {
  if (d.empty()) throw InputError("d-invariant table is empty");
  std::set<std::string> images;
  for (const auto& [s, t] : k_action) {
    if (!d.count(s)) throw InputError("k action names unknown label '" + s + "'");
    if (!d.count(t)) throw InputError("k action maps to unknown label '" + t + "'");
    if (!images.insert(t).second) throw InputError("k action is not injective at '" + t + "'");
  }
  for (const auto& [s, v] : d) {
    if (!k_action.count(s)) throw InputError("k action missing label '" + s + "'");
  }
  std::optional<Rational> best;
  for (const auto& [s, t] : k_action) {
    Rational diff = d.at(t) - d.at(s);
    if (!best || diff > *best) best = diff;
  }
  return *best;
}

BoundReport floer_simple_genus(const TauSpectrum& s) {
  BoundReport r;
  r.name = "Floer simple genus";
  r.bound_value = (s.breadth() - 1) / 2;
  r.direction = Direction::equality;
  spectrum_inputs(r, s);
  r.derived.emplace_back("breadth", fr(s.breadth()));
  r.citation = "Floer simple: g(Y) = g(Y x [0,1]) = (tau_max - tau_min - 1)/2";
  r.flags.push_back("equality");
  if (r.bound_value < 0) r.flags.push_back("disk-bounding-anomaly");
  return r;
}

TuraevEstimate turaev_estimates(const std::vector<TuraevEntry>& family) {
  if (family.empty()) throw InputError("family must be nonempty");
  TuraevEstimate out;
  std::optional<Rational> min_breadth;
  for (const auto& e : family) {
    if (!min_breadth || e.spectrum.breadth() < *min_breadth) min_breadth = e.spectrum.breadth();
    std::optional<Rational> g = e.genus_upper;
    if (e.floer_simple) {
      Rational exact = floer_simple_genus(e.spectrum).bound_value;
      if (!g || exact < *g) g = exact;
    }
    if (g && (!out.theta_upper || 2 * *g < *out.theta_upper)) out.theta_upper = 2 * *g;
  }
  out.theta_lower = *min_breadth - 1;
  out.theta4_lower = out.theta_lower;
  return out;
}

std::string GradingTableRow::generator_label() const { return "x" + std::to_string(generator); }

std::string GradingTableRow::column_label() const {
  return column == 0 ? "C(maxa)" : "C(maxa-" + std::to_string(column) + ")";
}

std::vector<std::vector<GradingTableRow>> exterior_grading_table(long long p, long long n,
                                                                 const Rational& lk_n,
                                                                 const Rational& maxa,
                                                                 std::size_t num_columns) {
  require_positive(p, "p");
  if (n < 0) throw InputError("n must be nonnegative");
  if (num_columns < 1) throw InputError("num_columns must be at least 1");
  const std::size_t rows = static_cast<std::size_t>(2 * n * (p - 1) + 1);
  std::vector<std::vector<GradingTableRow>> table(rows);
  Rational a = maxa;
  Rational a_prime = p * maxa + Rational(p * (p - 1)) * lk_n / 2;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i > 0 && i % 2 == 1) {
      a -= 1;
      a_prime -= 1;
    } else if (i > 0) {
      a_prime -= p - 1;
    }
    const bool extended = static_cast<long long>(i) > 2 * n;
    for (std::size_t k = 0; k < num_columns; ++k) {
      long long kk = static_cast<long long>(k);
      table[i].push_back({i, k, a - kk, a_prime - p * kk, extended});
    }
  }
  return table;
}

}  // namespace ratslice
