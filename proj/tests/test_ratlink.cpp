#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ratslice/error.hpp"
#include "ratslice/ratlink.hpp"

using namespace ratslice;

namespace {

Rational q(long long a, long long b = 1) { return make_rational(a, b); }

TauSpectrum point_spectrum(const Rational& t) {
  TauSpectrum s;
  s.taus["h0"] = t;
  s.tau_max = t;
  s.tau_min = t;
  return s;
}

BraidWord random_word(std::mt19937_64& rng, int n) {
  std::vector<int> letters;
  if (n > 1) {
    std::uniform_int_distribution<int> len(0, 15);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int k = len(rng); k > 0; --k) letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
  }
  return BraidWord(n, letters);
}

}  // namespace

TEST_CASE("lk from slope") {
  CHECK(lk_from_slope(1, 0) == 0);
  CHECK(lk_from_slope(2, 1) == q(-1, 2));
  CHECK(lk_from_slope(3, -7) == q(7, 3));
  CHECK_THROWS_AS(lk_from_slope(0, 1), InputError);
}

TEST_CASE("lk shift and self-linking") {
  CHECK(lk_shift(0, 0) == 0);
  CHECK(lk_shift(q(-1, 2), 3) == q(5, 2));
  CHECK(lk_shift(lk_shift(q(7, 3), 5), -5) == q(7, 3));
  CHECK(self_link_mod_z(q(5, 2)) == q(1, 2));
  CHECK(self_link_mod_z(q(-1, 2)) == q(1, 2));
  CHECK(self_link_mod_z(q(-4)) == 0);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 30);
  std::uniform_int_distribution<int> shift(-20, 20);
  for (int trial = 0; trial < 300; ++trial) {
    Rational lk = q(num(rng), den(rng));
    Rational r = self_link_mod_z(lk);
    CHECK(r >= 0);
    CHECK(r < 1);
    CHECK(is_integer(lk - r));
    CHECK(self_link_mod_z(lk_shift(lk, shift(rng))) == r);
  }
}

TEST_CASE("framed knot validation") {
  FramedKnotData k{2, 1, q(-1, 2), point_spectrum(q(1, 4)), std::nullopt, std::vector<Rational>{q(1, 2)},
                   true};
  CHECK_NOTHROW(validate(k));
  auto bad_lk = k;
  bad_lk.lk = q(1, 2);
  CHECK_THROWS_AS(validate(bad_lk), InputError);
  auto bad_form = k;
  bad_form.linking_form = std::vector<Rational>{q(1)};
  CHECK_THROWS_AS(validate(bad_form), InputError);
  auto bad_order = k;
  bad_order.order = 0;
  CHECK_THROWS_AS(validate(bad_order), InputError);
  auto bad_spectrum = k;
  bad_spectrum.tau_spectrum.tau_max = q(-1);
  CHECK_THROWS_AS(validate(bad_spectrum), InputError);
}

TEST_CASE("c-value examples") {
  CHECK(c_value({torus_braid(2, 1), q(-1, 2), 2}) == 0);
  CHECK(c_value({BraidWord(1), q(17), 1}) == 0);
  CHECK(c_value({BraidWord(1), q(0), 1}) == 0);
  CHECK(c_value({BraidWord(3, {1, 2, -1}), q(0), 1}) == 1);
  CHECK(c_value({BraidWord(4, {1, 2, 3, 1, 2, 3}), q(-1, 2), 2}) == 0);
  CHECK_THROWS_WITH_AS(c_value({BraidWord(3), q(-1, 2), 2}), doctest::Contains("multiple"), InputError);
  CHECK_THROWS_AS(c_value({BraidWord(2), q(1, 3), 1}), InputError);
}

TEST_CASE("Seifert-framed specs have c = 0") {
  int tested = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int r = 1; r <= 6; ++r) {
      for (int s = -6; s <= 6; ++s) {
        if (std::gcd(r, std::abs(s)) != 1) continue;
        SatelliteSpec spec{torus_braid(m * r, m * s), q(-s, r), r};
        CHECK(c_value(spec) == 0);
        ++tested;
      }
    }
  }
  CHECK(tested > 100);
}

TEST_CASE("twist normalization") {
  SatelliteSpec s{BraidWord(3, {1, -2, 1}), q(2, 3), 3};
  auto same = twist_normalize(s, 0);
  CHECK(same.pattern == s.pattern);
  CHECK(same.framing_lk == s.framing_lk);
  auto back = twist_normalize(twist_normalize(s, 2), -2);
  CHECK(writhe(back.pattern) == writhe(s.pattern));
  CHECK(back.framing_lk == s.framing_lk);
  auto t = twist_normalize(s, 1);
  CHECK(t.framing_lk == q(5, 3));
  CHECK(writhe(t.pattern) == writhe(s.pattern) - 6);
  for (int m = -3; m <= 3; ++m) CHECK(c_value(twist_normalize(s, m)) == c_value(s));
}

TEST_CASE("c-value is invariant under twist normalization on random specs") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> order(1, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> shift(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const int o = order(rng);
    const int p = o * mult(rng);
    SatelliteSpec s{random_word(rng, p), q(num(rng), o), o};
    const int m = shift(rng);
    CHECK(c_value(twist_normalize(s, m)) == c_value(s));
  }
}
