#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratslice/bounds.hpp"
#include "ratslice/error.hpp"
#include "ratslice/ratlink.hpp"

using namespace ratslice;

namespace {

Rational q(long long a, long long b = 1) { return make_rational(a, b); }

TauSpectrum spectrum(const Rational& lo, const Rational& hi) {
  TauSpectrum s;
  s.taus["h0"] = hi;
  if (lo != hi) s.taus["h1"] = lo;
  s.tau_max = hi;
  s.tau_min = lo;
  return s;
}

TauSpectrum random_spectrum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-24, 24);
  std::uniform_int_distribution<int> den(1, 8);
  Rational a = q(num(rng), den(rng));
  Rational b = q(num(rng), den(rng));
  return spectrum(std::min(a, b), std::max(a, b));
}

std::string derived(const BoundReport& r, const std::string& key) {
  for (const auto& [k, v] : r.derived) {
    if (k == key) return v;
  }
  FAIL("missing derived field " << key);
  return "";
}

}  // namespace

TEST_CASE("cable interval examples") {
  CHECK(cable_tau_interval(1, q(5, 4), q(3)) == Interval{q(5, 4), q(5, 4)});
  CHECK(cable_tau_interval(2, q(-2), q(2)) == Interval{q(-2), q(-1)});
  CHECK(cable_tau_interval(3, q(0), q(0)) == Interval{q(0), q(2)});
  CHECK_THROWS_AS(cable_tau_interval(0, q(0), q(0)), InputError);
}

TEST_CASE("braided satellite interval examples") {
  CHECK(bp_tau_interval(1, q(7, 4), q(3), 0, 1) == Interval{q(7, 4), q(7, 4)});
  CHECK(bp_tau_interval(2, q(1), q(0), 1, 1) == Interval{q(2), q(3)});
  CHECK_THROWS_AS(bp_tau_interval(2, q(1), q(0), 1, 3), InputError);
  CHECK_THROWS_AS(bp_tau_interval(2, q(1), q(0), 1, 0), InputError);
}

TEST_CASE("torus braid intervals equal cable intervals") {
  for (long long p = 1; p <= 8; ++p) {
    for (long long n = -8; n <= 8; ++n) {
      auto b = torus_braid(static_cast<int>(p), static_cast<int>(p * n + 1));
      REQUIRE(components(b) == 1);
      for (long long t = -3; t <= 3; ++t) {
        for (long long l = -8; l <= 8; ++l) {
          Rational lk = q(l, 4);
          CHECK(bp_tau_interval(p, q(t), lk, writhe(b), 1) == cable_tau_interval(p, q(t), lk + n));
        }
      }
    }
  }
}

TEST_CASE("braided satellite interval is invariant under twist normalization") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> index(1, 5);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> shift(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = index(rng);
    std::vector<int> letters;
    if (p > 1) {
      std::uniform_int_distribution<int> gen(1, p - 1);
      for (int k = 0; k < 8; ++k) letters.push_back(trial % 2 ? gen(rng) : -gen(rng));
    }
    SatelliteSpec s{BraidWord(p, letters), q(num(rng), 4), 1};
    auto t = twist_normalize(s, shift(rng));
    Rational tau = q(num(rng), 2);
    auto comps = static_cast<long long>(components(s.pattern));
    CHECK(bp_tau_interval(p, tau, s.framing_lk, writhe(s.pattern), comps) ==
          bp_tau_interval(p, tau, t.framing_lk, writhe(t.pattern), comps));
  }
}

TEST_CASE("crossing change propagation") {
  Interval iv{q(2), q(3)};
  CHECK(crossing_change_propagate(iv, 0, 0) == iv);
  CHECK(crossing_change_propagate(iv, 1, 0) == Interval{q(2), q(4)});
  CHECK(crossing_change_propagate(iv, 0, 1) == Interval{q(1), q(3)});
  CHECK_THROWS_AS(crossing_change_propagate(iv, -1, 0), InputError);
}

TEST_CASE("crossing changes connect adjacent cable intervals") {
  for (long long p = 1; p <= 6; ++p) {
    const long long changes = p * (p - 1) / 2;
    for (long long t = -2; t <= 2; ++t) {
      for (long long l = -4; l <= 4; ++l) {
        auto lower = cable_tau_interval(p, q(t), q(l, 2));
        auto upper = cable_tau_interval(p, q(t), q(l, 2) + 1);
        auto up = crossing_change_propagate(lower, changes, 0);
        auto down = crossing_change_propagate(upper, 0, changes);
        CHECK(up.contains(upper.lo));
        CHECK(up.contains(upper.hi));
        CHECK(down.contains(lower.lo));
        CHECK(down.contains(lower.hi));
      }
    }
  }
}

TEST_CASE("breadth genus bound") {
  CHECK(genus_lower_bound_breadth(spectrum(q(0), q(1))).bound_value == 0);
  CHECK(genus_lower_bound_breadth(spectrum(q(-1), q(2))).bound_value == 1);
  auto r = genus_lower_bound_breadth(spectrum(q(-9, 4), q(-7, 4)));
  CHECK(r.bound_value == q(-1, 4));
  CHECK(r.clamped == q(0));
  CHECK(r.has_flag("clamped"));
  CHECK(r.has_flag("pl-slice-bound"));
  CHECK_FALSE(r.citation.empty());
}

TEST_CASE("surface bound with boundary constant") {
  auto r = surface_bound_with_c(spectrum(q(-1, 4), q(1, 4)), 0, 2);
  CHECK(r.bound_value == -1);
  CHECK(r.has_flag("vacuous"));
  auto u = surface_genus_upper_bound(4, 2);
  CHECK(u.bound_value == 3);
  CHECK(u.direction == Direction::upper);
}

TEST_CASE("optimal boundary constant") {
  CHECK(optimal_c(spectrum(q(-3, 2), q(3, 2)), 3).c_star == 0);
  auto ex = optimal_c(spectrum(q(-9, 4), q(-7, 4)), 2);
  CHECK(ex.c_star == 8);
  CHECK(ex.best_integer_c == 8);
  CHECK(ex.bound.bound_value == 2 * q(1, 2) - 2);
  CHECK(derived(ex.bound, "c_star") == "8/1");
}

TEST_CASE("optimal c matches the sweep minimum on random spectra") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> deg(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_spectrum(rng);
    const long long p = deg(rng);
    auto o = optimal_c(s, p);
    const Rational at_star = p * s.breadth() - p;
    const long long base = floor_of(o.c_star).convert_to<long long>();
    std::optional<Rational> sweep_min;
    for (long long c = base - 5; c <= base + 6; ++c) {
      Rational v = surface_bound_with_c(s, c, p).bound_value;
      CHECK(v >= at_star);
      if (!sweep_min || v < *sweep_min) sweep_min = v;
    }
    CHECK(o.bound.bound_value == *sweep_min);
    if (is_integer(o.c_star)) {
      CHECK(*sweep_min == at_star);
    } else {
      CHECK(*sweep_min > at_star);
    }
  }
}

TEST_CASE("Seifert framed bound") {
  auto zero = seifert_framed_bound(spectrum(q(0), q(0)), 3);
  CHECK(zero.bound_value == -3);
  CHECK(zero.has_flag("vacuous"));
  auto ex = seifert_framed_bound(spectrum(q(-9, 4), q(-7, 4)), 2);
  CHECK(derived(ex, "max_abs_two_tau") == "9/2");
  CHECK(ex.bound_value == 2 * (q(9, 2) - 1));
  CHECK(seifert_framed_bound(spectrum(q(-1, 4), q(1, 4)), 2).bound_value == -1);
}

TEST_CASE("satellite breadth growth") {
  CHECK(satellite_breadth_lower(1, q(5, 2)) == q(5, 2));
  CHECK(satellite_breadth_lower(3, q(2)) == 4);
  CHECK(satellite_breadth_lower(10, q(3)) == 21);
}

TEST_CASE("link cobordism bound") {
  CHECK(link_cobordism_bound(0, 0, 0, 0, 1, 1).bound_value == 0);
  CHECK(link_cobordism_bound(0, 0, q(3, 2), q(3, 2), 1, 1).bound_value == 0);
  CHECK(link_cobordism_bound(q(1), q(-2), q(3), q(1), 2, 1).bound_value == 2);
  CHECK_THROWS_AS(link_cobordism_bound(0, 0, 0, 0, 0, 1), InputError);
}

TEST_CASE("slice-Bennequin check") {
  auto a = slice_bennequin_check(0, 0, 0, 1);
  CHECK(a.satisfied == true);
  CHECK(derived(a, "slack") == "0/1");
  auto b = slice_bennequin_check(-1, 0, -2, 1);
  CHECK(b.satisfied == true);
  CHECK(derived(b, "slack") == "3/1");
  auto c = slice_bennequin_check(5, 0, 0, 1);
  CHECK(c.satisfied == false);
  CHECK(derived(c, "slack") == "-5/1");
}

TEST_CASE("linking form breadth") {
  CHECK(linking_form_breadth_lower({}) == 0);
  CHECK(linking_form_breadth_lower({q(0), q(0)}) == 0);
  CHECK(linking_form_breadth_lower({q(1, 2)}) == q(1, 2));
  CHECK(linking_form_breadth_lower({q(1, 3), q(2, 3)}) == q(2, 3));
  CHECK_THROWS_AS(linking_form_breadth_lower({q(1)}), InputError);
  CHECK_THROWS_AS(linking_form_breadth_lower({q(-1, 3)}), InputError);
}

TEST_CASE("d-invariant bound") {
  std::map<std::string, Rational> d = {{"0", q(1, 4)}, {"1", q(-1, 4)}};
  CHECK(d_invariant_bound(d, {{"0", "0"}, {"1", "1"}}) == 0);
  CHECK(d_invariant_bound(d, {{"0", "1"}, {"1", "0"}}) == q(1, 2));
  CHECK_THROWS_AS(d_invariant_bound(d, {{"0", "1"}}), InputError);
  CHECK_THROWS_AS(d_invariant_bound(d, {{"0", "1"}, {"1", "1"}}), InputError);
  CHECK_THROWS_AS(d_invariant_bound(d, {{"0", "2"}, {"1", "0"}}), InputError);

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    std::map<std::string, Rational> table;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
      labels.push_back("s" + std::to_string(i));
      table[labels.back()] = q(num(rng), 4);
    }
    std::vector<std::string> image = labels;
    std::shuffle(image.begin(), image.end(), rng);
    std::map<std::string, std::string> k;
    for (int i = 0; i < n; ++i) k[labels[i]] = image[i];
    Rational expected = table[image[0]] - table[labels[0]];
    for (int i = 1; i < n; ++i) expected = std::max(expected, Rational(table[image[i]] - table[labels[i]]));
    CHECK(d_invariant_bound(table, k) == expected);
  }
}

TEST_CASE("Floer simple genus") {
  CHECK(floer_simple_genus(spectrum(q(0), q(1))).bound_value == 0);
  auto two = floer_simple_genus(spectrum(q(-1), q(1)));
  CHECK(two.bound_value == q(1, 2));
  CHECK(two.direction == Direction::equality);
  CHECK(two.has_flag("equality"));
  auto rp1 = floer_simple_genus(spectrum(q(-1, 4), q(1, 4)));
  CHECK(rp1.bound_value == q(-1, 4));
  CHECK(rp1.has_flag("disk-bounding-anomaly"));
}

TEST_CASE("Turaev estimates") {
  auto single = turaev_estimates({{"u", spectrum(q(0), q(1)), q(0), false}});
  CHECK(single.theta_lower == 0);
  CHECK(single.theta_upper == q(0));
  auto fam = turaev_estimates({{"a", spectrum(q(0), q(3)), std::nullopt, false},
                               {"b", spectrum(q(-1), q(1)), std::nullopt, false}});
  CHECK(fam.theta_lower == 1);
  CHECK(fam.theta4_lower == 1);
  CHECK_FALSE(fam.theta_upper.has_value());
  auto simple = turaev_estimates({{"a", spectrum(q(0), q(3)), q(5), false},
                                  {"s", spectrum(q(-1), q(2)), std::nullopt, true}});
  CHECK(simple.theta_lower == 2);
  CHECK(simple.theta_upper == q(2));
  CHECK_THROWS_AS(turaev_estimates({}), InputError);
}

TEST_CASE("grading table with a single strand") {
  auto t = exterior_grading_table(1, 4, q(3, 2), q(5), 3);
  REQUIRE(t.size() == 1);
  for (const auto& cell : t[0]) CHECK(cell.a == cell.a_prime);
}

TEST_CASE("grading table reproduces the displayed entries") {
  // Symbolic check: maxa and lk_n chosen generic enough that no two
  // expressions in the display coincide.
  const long long p = 3;
  const Rational maxa = q(101, 7);
  const Rational lk = q(5, 11);
  const Rational mp = p * maxa + Rational(p * (p - 1)) * lk / 2;
  auto t = exterior_grading_table(p, 4, lk, maxa, 3);
  auto cell = [&](std::size_t i, std::size_t k) { return std::pair{t[i][k].a, t[i][k].a_prime}; };
  using P = std::pair<Rational, Rational>;
  CHECK(cell(0, 0) == P{maxa, mp});
  CHECK(cell(0, 1) == P{maxa - 1, mp - p});
  CHECK(cell(0, 2) == P{maxa - 2, mp - 2 * p});
  CHECK(cell(1, 0) == P{maxa - 1, mp - 1});
  CHECK(cell(1, 1) == P{maxa - 2, mp - p - 1});
  CHECK(cell(1, 2) == P{maxa - 3, mp - 2 * p - 1});
  CHECK(cell(2, 0) == P{maxa - 1, mp - p});
  CHECK(cell(2, 1) == P{maxa - 2, mp - 2 * p});
  CHECK(cell(2, 2) == P{maxa - 3, mp - 3 * p});
  CHECK(cell(3, 0) == P{maxa - 2, mp - p - 1});
  CHECK(cell(3, 1) == P{maxa - 3, mp - 2 * p - 1});
  CHECK(cell(4, 0) == P{maxa - 2, mp - 2 * p});
  CHECK(cell(4, 1) == P{maxa - 3, mp - 3 * p});
  // The display prints maxa - 3 for A in these two cells; the column
  // relation from the entries above forces maxa - 4.
  CHECK(cell(3, 2) == P{maxa - 4, mp - 3 * p - 1});
  CHECK(cell(4, 2) == P{maxa - 4, mp - 4 * p});
  CHECK(t[3][2].generator_label() == "x3");
  CHECK(t[3][2].column_label() == "C(maxa-2)");
  CHECK(t[0][0].column_label() == "C(maxa)");
}

TEST_CASE("grading table satisfies the row and column relations") {
  for (long long p = 1; p <= 6; ++p) {
    for (long long n = 0; n <= 6; ++n) {
      const Rational lk = q(2 * n - 1, 2 * p);
      const Rational maxa = q(n + p, 3);
      auto t = exterior_grading_table(p, n, lk, maxa, 4);
      REQUIRE(t.size() == static_cast<std::size_t>(2 * n * (p - 1) + 1));
      CHECK(t[0][0].a_prime == p * maxa + Rational(p * (p - 1)) * lk / 2);
      for (std::size_t i = 1; i < t.size(); ++i) {
        CHECK(t[i][0].extended == (static_cast<long long>(i) > 2 * n));
        for (std::size_t k = 0; k < 4; ++k) {
          if (i % 2 == 1) {
            CHECK(t[i - 1][k].a - t[i][k].a == 1);
            CHECK(t[i - 1][k].a_prime - t[i][k].a_prime == 1);
          } else {
            CHECK(t[i - 1][k].a - t[i][k].a == 0);
            CHECK(t[i - 1][k].a_prime - t[i][k].a_prime == p - 1);
          }
        }
      }
      for (const auto& row : t) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          for (std::size_t k = 0; k < row.size(); ++k) {
            long long diff = static_cast<long long>(k) - static_cast<long long>(j);
            CHECK(row[j].a - row[k].a == diff);
            CHECK(row[j].a_prime - row[k].a_prime == p * diff);
          }
        }
      }
    }
  }
}
