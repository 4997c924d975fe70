#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratslice/complex.hpp"
#include "ratslice/rational.hpp"

namespace ratslice {

enum class Direction { lower, upper, equality };

std::string to_string(Direction d);

// Uniform evaluator output. bound_value is always the raw value.
struct BoundReport {
  std::string name;
  Rational bound_value;
  std::optional<Rational> clamped;
  Direction direction = Direction::lower;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> derived;
  std::string citation;
  std::optional<bool> satisfied;
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const;
};

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Bounds on tau of the (p, pn+1) cable, given lk_n = lk(K, lambda_n).
Interval cable_tau_interval(long long p, const Rational& tau, const Rational& lk_n);

// Bounds on tau of a braided satellite with pattern of index p, writhe w and
// comps closure components.
Interval bp_tau_interval(long long p, const Rational& tau, const Rational& framing_lk, long long w,
                         long long comps);

// A positive crossing change raises tau by at most 1; a negative one lowers it by at most 1.
Interval crossing_change_propagate(const Interval& iv, long long plus_changes,
                                   long long minus_changes);

// Lower bound (breadth - 1)/2 on the rational slice genus in Y x [0,1].
BoundReport genus_lower_bound_breadth(const TauSpectrum& s);

// Lower bound on -chi of a degree-p slice surface with boundary constant c.
BoundReport surface_bound_with_c(const TauSpectrum& s, long long c, long long p);

struct OptimalC {
  Rational c_star;
  long long best_integer_c = 0;
  BoundReport bound;
};
OptimalC optimal_c(const TauSpectrum& s, long long p);

// Lower bound on -chi for a surface whose boundary is a multiple of the rational longitude.
BoundReport seifert_framed_bound(const TauSpectrum& s, long long p);

// Upper bound (-chi + p)/p on 2 g + 1 supplied by an explicit degree-p surface.
BoundReport surface_genus_upper_bound(long long minus_chi, long long p);

Rational satellite_breadth_lower(long long p, const Rational& breadth);

BoundReport link_cobordism_bound(const Rational& c1_pairing, const Rational& self_square,
                                 const Rational& tau_out, const Rational& tau_in,
                                 long long comps_in, long long comps_out);

BoundReport slice_bennequin_check(const Rational& tb, const Rational& rot, long long chi,
                                  long long p);

Rational linking_form_breadth_lower(const std::vector<Rational>& form_values);

// max over s of d(k(s)) - d(s); k must permute the labels of d.
Rational d_invariant_bound(const std::map<std::string, Rational>& d,
                           const std::map<std::string, std::string>& k_action);

// Genus of a Floer simple knot: (breadth - 1)/2 as an equality.
BoundReport floer_simple_genus(const TauSpectrum& s);

struct TuraevEntry {
  std::string id;
  TauSpectrum spectrum;
  std::optional<Rational> genus_upper;
  bool floer_simple = false;
};

struct TuraevEstimate {
  Rational theta_lower;   // lower estimate for the slice-type function
  Rational theta4_lower;  // same quantity; the tau bound is the only input
  std::optional<Rational> theta_upper;
};

TuraevEstimate turaev_estimates(const std::vector<TuraevEntry>& family);

struct GradingTableRow {
  std::size_t generator = 0;  // x_i
  std::size_t column = 0;     // C(maxa - column)
  Rational a;
  Rational a_prime;
  bool extended = false;  // row index beyond the range the relations cover

  std::string generator_label() const;
  std::string column_label() const;
};

// Rows x_0 .. x_{2n(p-1)}, columns C(maxa) .. C(maxa - num_columns + 1).
std::vector<std::vector<GradingTableRow>> exterior_grading_table(long long p, long long n,
                                                                 const Rational& lk_n,
                                                                 const Rational& maxa,
                                                                 std::size_t num_columns);

}  // namespace ratslice
