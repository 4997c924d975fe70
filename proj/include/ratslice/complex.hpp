#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ratslice/gf2.hpp"
#include "ratslice/rational.hpp"

namespace ratslice {

struct Generator {
  std::string id;
  Rational maslov;
  Rational alexander;
  std::string spinc;
};

// Finite chain complex over F2 with a decreasing Alexander filtration.
// Construction checks ids and arrow indices; the grading and filtration
// conditions are reported by validate().
class FilteredComplex {
 public:
  FilteredComplex() = default;
  // differential[i] lists the targets of generator i, in any order, without repeats.
  FilteredComplex(std::vector<Generator> generators, std::vector<std::vector<Index>> differential);

  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(Index i) const { return generators_.at(i); }
  std::optional<Index> index_of(const std::string& id) const;
  // Square matrix; column i is the boundary of generator i.
  const SparseMatrixGF2& differential() const { return d_; }

 private:
  std::vector<Generator> generators_;
  SparseMatrixGF2 d_;
  std::unordered_map<std::string, Index> lookup_;
};

struct Violation {
  enum class Kind { boundary_squared, maslov_drop, alexander_increase, spinc_change };
  Kind kind;
  std::string source;
  std::string target;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

std::string to_string(Violation::Kind kind);

ValidationReport validate(const FilteredComplex& c);
// Throws CheckFailure carrying the report summary.
void require_valid(const FilteredComplex& c);

using HomologyKey = std::pair<std::string, Rational>;  // (spinc, maslov)
std::map<HomologyKey, std::size_t> homology_ranks(const FilteredComplex& c);

// Homology of the associated graded complex, keyed by (spinc, maslov, alexander).
using BigradedKey = std::tuple<std::string, Rational, Rational>;
std::map<BigradedKey, std::size_t> associated_graded_ranks(const FilteredComplex& c);

struct FloerClass {
  VectorGF2 representative;
  std::string spinc;  // empty when the representative mixes spinc labels
};

// Cycles whose classes form a basis of homology; each is homogeneous.
std::vector<FloerClass> homology_basis(const FilteredComplex& c);

// Minimal Alexander level j with the class represented in the subcomplex F_j.
// Computed by an ascending sweep of image-membership tests.
Rational tau(const FilteredComplex& c, const FloerClass& alpha);

// Same quantity by one filtered column reduction, reused across many classes.
class FiltrationReducer {
 public:
  explicit FiltrationReducer(const FilteredComplex& c);
  FiltrationReducer(const SparseMatrixGF2& differential, std::vector<Rational> alexander);

  // Throws InputError if the cycle is a boundary.
  Rational level(const VectorGF2& cycle) const;
  // nullopt when the cycle is a boundary.
  std::optional<Rational> try_level(const VectorGF2& cycle) const;
  // Levels of a basis adapted to the filtration, one per input class.
  std::vector<Rational> adapted_levels(const std::vector<VectorGF2>& basis) const;

 private:
  VectorGF2 to_positions(const VectorGF2& v) const;

  std::vector<Rational> alexander_;
  std::vector<Index> order_;     // position -> generator
  std::vector<Index> position_;  // generator -> position
  SparseMatrixGF2 permuted_;
  std::optional<EchelonForm> echelon_;
};

struct TauSpectrum {
  std::map<std::string, Rational> taus;  // class id -> tau
  Rational tau_max;
  Rational tau_min;
  bool enumeration_complete = true;

  Rational breadth() const { return tau_max - tau_min; }
};

// Throws InputError when the extremes are inconsistent with the listed classes.
void validate_spectrum(const TauSpectrum& s);

inline constexpr std::size_t kEnumerationLimit = 20;

// Class ids are "h0+h3" over homology_basis(c). Every nonzero class is listed
// when the rank is at most `limit`; otherwise only basis classes. Extremes are
// exact in both cases.
TauSpectrum tau_spectrum(const FilteredComplex& c, std::size_t limit = kEnumerationLimit);

TauSpectrum connected_sum_shift(const TauSpectrum& s, const Rational& tau_knot);

// Ranks of E2 in fixed Alexander gradings, optionally with Maslov gradings.
struct GradedRank {
  Rational alexander;
  std::optional<Rational> maslov;
  std::size_t rank = 0;
};

// Alexander gradings surviving to total rank `target`, with multiplicity and sorted.
using Survivors = std::vector<Rational>;

// All outcomes of cancelling pairs until `target` generators remain. A pair
// cancels when the higher member has strictly larger Alexander grading and,
// when both Maslov gradings are known, Maslov grading exactly one larger.
std::set<Survivors> survivor_deduction(const std::vector<GradedRank>& ranks, std::size_t target);

// Smallest spread max - min over the outcomes above.
Rational min_breadth_lower_bound(const std::vector<GradedRank>& ranks, std::size_t target);

}  // namespace ratslice
