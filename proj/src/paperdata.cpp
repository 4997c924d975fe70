#include "ratslice/paperdata.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "ratslice/error.hpp"
#include "ratslice/grid.hpp"

namespace ratslice {

void validate(const PoincarePolynomial& p) {
  std::set<std::pair<Rational, Rational>> seen;
  for (const auto& t : p.terms) {
    if (t.rank == 0) throw InputError("Poincare term has zero rank");
    if (!seen.insert({t.maslov, t.alexander}).second) {
      throw InputError("Poincare polynomial repeats bigrading (" + format_rational(t.maslov) +
                       ", " + format_rational(t.alexander) + ")");
    }
  }
}

FilteredComplex rp1_model_complex() {
  std::vector<Generator> gens = {
      {"a0", make_rational(1, 4), make_rational(1, 4), "0"},
      {"a1", make_rational(-1, 4), make_rational(-1, 4), "1"},
  };
  return FilteredComplex(std::move(gens), {{}, {}});
}

namespace {

const std::map<std::string, Rational>& rp3_d_invariants() {
  static const std::map<std::string, Rational> d = {{"0", make_rational(1, 4)},
                                                    {"1", make_rational(-1, 4)}};
  return d;
}

FramedKnotData rp1_in_rp3() {
  FramedKnotData k;
  k.order = 2;
  k.slope = 1;
  k.lk = lk_from_slope(k.order, k.slope);
  k.tau_spectrum = tau_spectrum(rp1_model_complex());
  k.d_invariants = rp3_d_invariants();
  k.linking_form = std::vector<Rational>{make_rational(1, 2)};
  k.floer_simple = true;
  return k;
}

const Rational& t25_tau() {
  static std::once_flag once;
  static Rational value;
  std::call_once(once, [] { value = grid_tau(torus_knot_grid(2, -5)); });
  return value;
}

FramedKnotData t2_minus5() {
  FramedKnotData k;
  k.order = 1;
  k.slope = 0;
  k.lk = 0;
  k.tau_spectrum.taus = {{"h0", t25_tau()}};
  k.tau_spectrum.tau_max = t25_tau();
  k.tau_spectrum.tau_min = t25_tau();
  k.tau_spectrum.enumeration_complete = true;
  k.d_invariants = std::map<std::string, Rational>{{"0", Rational(0)}};
  k.linking_form = std::vector<Rational>{Rational(0)};
  k.floer_simple = false;
  return k;
}

FramedKnotData j_connected_sum() {
  FramedKnotData rp1 = rp1_in_rp3();
  FramedKnotData k = rp1;
  k.tau_spectrum = connected_sum_shift(rp1.tau_spectrum, t25_tau());
  k.floer_simple = false;
  return k;
}

PoincareFamily lift_8_20() {
  PoincareFamily out;
  const Rational shift = make_rational(7, 9);
  for (const char* s : {"+1", "-1"}) {
    PoincarePolynomial p;
    p.spinc = s;
    for (int k = -1; k <= 1; ++k) p.terms.push_back({shift + k, Rational(k), 1});
    out.push_back(std::move(p));
  }
  return out;
}

const std::vector<std::pair<std::string, std::function<Builtin()>>>& table() {
  static const std::vector<std::pair<std::string, std::function<Builtin()>>> t = {
      {"RP1_in_RP3", [] { return Builtin(rp1_in_rp3()); }},
      {"T(2,-5)", [] { return Builtin(t2_minus5()); }},
      {"J_example_6.2", [] { return Builtin(j_connected_sum()); }},
      {"lift_8_20", [] { return Builtin(lift_8_20()); }},
  };
  return t;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, f] : table()) names.push_back(name);
  return names;
}

Builtin builtin(const std::string& name) {
  for (const auto& [n, f] : table()) {
    if (n == name) return f();
  }
  std::string list;
  for (const auto& n : builtin_names()) list += (list.empty() ? "" : ", ") + n;
  throw InputError("unknown builtin '" + name + "'; available: " + list);
}

DeepSliceVerdict deep_slice_report(const PoincarePolynomial& p, std::size_t lspace_total_rank) {
  validate(p);
  if (lspace_total_rank < 1) throw InputError("L-space rank must be at least 1");
  std::vector<GradedRank> ranks;
  for (const auto& t : p.terms) ranks.push_back({t.alexander, t.maslov, t.rank});
  DeepSliceVerdict v;
  for (const auto& survivors : survivor_deduction(ranks, lspace_total_rank)) {
    v.possible_tau.insert(survivors.begin(), survivors.end());
  }
  v.deep_slice = v.possible_tau.count(Rational(0)) == 0;
  v.citation = "a slice knot has every tau invariant zero; tau lies among the surviving Alexander gradings";
  return v;
}

Rational dual_knot_breadth(long long g) {
  if (g < 2) {
    throw InputError("genus must be at least 2 (L-space knots other than the trefoil)");
  }
  const std::vector<Rational> gradings = {Rational(-g), Rational(-(g - 1)), Rational(0),
                                          Rational(g - 1), Rational(g)};
  const std::size_t total = static_cast<std::size_t>(4 * g + 1);
  // One cancellation removes one unit from each of two gradings, so a
  // grading of rank >= 2 always survives and only the pattern of rank-1
  // gradings matters. Each pattern is realized by putting the excess on
  // its first grading of rank >= 2.
  std::optional<Rational> best;
  for (unsigned mask = 0; mask < (1u << gradings.size()); ++mask) {
    std::vector<std::size_t> ranks(gradings.size());
    std::size_t used = 0;
    std::optional<std::size_t> spill;
    for (std::size_t i = 0; i < gradings.size(); ++i) {
      ranks[i] = (mask >> i & 1) ? 2 : 1;
      used += ranks[i];
      if (ranks[i] == 2 && !spill) spill = i;
    }
    if (used > total || (used < total && !spill)) continue;
    if (spill) ranks[*spill] += total - used;
    std::vector<GradedRank> input;
    for (std::size_t i = 0; i < gradings.size(); ++i) input.push_back({gradings[i], {}, ranks[i]});
    Rational b = min_breadth_lower_bound(input, total - 2);
    if (!best || b < *best) best = b;
  }
  return *best;
}

}  // namespace ratslice
