#include <sstream>

#include "ratslice/bounds.hpp"
#include "ratslice/braid.hpp"
#include "ratslice/grid.hpp"
#include "ratslice/paperdata.hpp"

namespace ratslice {

namespace {

std::string fr(const Rational& r) { return format_rational(r); }

std::string set_string(const std::set<Rational>& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? ", " : "") + fr(v);
  return out + "}";
}

}  // namespace

std::vector<PaperCheck> run_paper_checks() {
  std::vector<PaperCheck> checks;
  auto add = [&](std::string citation, std::string expected, std::string actual) {
    bool pass = expected == actual;
    checks.push_back({std::move(citation), std::move(expected), std::move(actual), pass});
  };

  add("tau of T(2,-5) from its 7x7 grid", "-2/1", fr(grid_tau(torus_knot_grid(2, -5))));

  const auto rp1 = std::get<FramedKnotData>(builtin("RP1_in_RP3"));
  add("RP1 in RP3: tau_max", "1/4", fr(rp1.tau_spectrum.tau_max));
  add("RP1 in RP3: tau_min", "-1/4", fr(rp1.tau_spectrum.tau_min));
  const auto& d = *rp1.d_invariants;
  add("RP1 in RP3: 2 tau_s = d(s) - d(s + PD[K]) for s = 0", fr(2 * rp1.tau_spectrum.taus.at("h0")),
      fr(d.at("0") - d.at("1")));
  add("RP1 in RP3: linking form lower bound on breadth", fr(rp1.tau_spectrum.breadth()),
      fr(linking_form_breadth_lower(*rp1.linking_form)));
  add("RP3: d-invariant difference under the order-2 action", "1/2",
      fr(d_invariant_bound(d, {{"0", "1"}, {"1", "0"}})));

  const auto j = std::get<FramedKnotData>(builtin("J_example_6.2"));
  add("connected sum with T(2,-5): tau_max", "-7/4", fr(j.tau_spectrum.tau_max));
  add("connected sum with T(2,-5): tau_min", "-9/4", fr(j.tau_spectrum.tau_min));
  add("connected sum with T(2,-5): raw breadth bound", "-1/4",
      fr(genus_lower_bound_breadth(j.tau_spectrum).bound_value));
  {
    auto r = seifert_framed_bound(j.tau_spectrum, 2);
    std::string v;
    for (const auto& [k, val] : r.derived) {
      if (k == "max_abs_two_tau") v = val;
    }
    add("connected sum with T(2,-5): max |2 tau|", "9/2", v);
  }
  add("explicit surface with -chi = 4, p = 2: (-chi + 2)/2", "3/1",
      fr(surface_genus_upper_bound(4, 2).bound_value));

  add("lk from slope (order 2, slope 1)", "-1/2", fr(lk_from_slope(2, 1)));
  add("lk shift of -1/2 by 3", "5/2", fr(lk_shift(make_rational(-1, 2), 3)));
  add("writhe of the (mr, ms) torus braid, m=2 r=2 s=1", "6", std::to_string(writhe(torus_braid(4, 2))));
  add("c for a rational-longitude framed torus braid pattern", "0",
      std::to_string(c_value({torus_braid(4, 2), make_rational(-1, 2), 2})));

  const auto lift = std::get<PoincareFamily>(builtin("lift_8_20"));
  for (const auto& p : lift) {
    auto v = deep_slice_report(p, 1);
    add("lift of 8_20, spinc " + p.spinc + ": possible tau", "{-1/1, 1/1}", set_string(v.possible_tau));
    add("lift of 8_20, spinc " + p.spinc + ": deep slice", "true", v.deep_slice ? "true" : "false");
  }
  add("dual knot breadth for genus 2", "2/1", fr(dual_knot_breadth(2)));

  {
    const long long p = 3;
    const Rational maxa = 5;
    const Rational lk = make_rational(1, 3);
    const Rational maxa_p = p * maxa + Rational(p * (p - 1)) * lk / 2;
    auto t = exterior_grading_table(p, 2, lk, maxa, 1);
    auto entry = [&](std::size_t i) { return "(" + fr(t[i][0].a) + ", " + fr(t[i][0].a_prime) + ")"; };
    add("cable exterior gradings: x3 in C(maxa)",
        "(" + fr(maxa - 2) + ", " + fr(maxa_p - p - 1) + ")", entry(3));
    add("cable exterior gradings: x4 in C(maxa)", "(" + fr(maxa - 2) + ", " + fr(maxa_p - 2 * p) + ")",
        entry(4));
  }
  return checks;
}

}  // namespace ratslice
