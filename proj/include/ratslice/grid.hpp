#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratslice/complex.hpp"

namespace ratslice {

// n x n grid; column i carries an X in row x[i] and an O in row o[i].
class GridDiagram {
 public:
  GridDiagram(std::vector<int> x, std::vector<int> o);

  std::size_t size() const { return x_.size(); }
  const std::vector<int>& x() const { return x_; }
  const std::vector<int>& o() const { return o_; }
  // Cycles of x composed with o inverse.
  std::size_t components() const;
  bool is_knot() const { return components() == 1; }

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

 private:
  std::vector<int> x_;
  std::vector<int> o_;
};

inline constexpr std::size_t kMaxCompileSize = 8;
inline constexpr std::size_t kMaxTauSize = 10;

struct Crossing {
  int column;
  int row;
  int sign;
};

// Vertical strands pass over horizontal ones.
std::vector<Crossing> crossings(const GridDiagram& g);
int writhe(const GridDiagram& g);

GridDiagram mirror(const GridDiagram& g);
GridDiagram torus_knot_grid(int p, int q);

// Move library. Each returns a grid of the same knot type.
GridDiagram cyclic_shift_columns(const GridDiagram& g, int k);
GridDiagram cyclic_shift_rows(const GridDiagram& g, int k);
bool can_commute_columns(const GridDiagram& g, std::size_t i);
// Swaps columns i and i+1 (mod n); throws InputError if their segments interleave.
GridDiagram commute_columns(const GridDiagram& g, std::size_t i);
// Splits the X of `column` into a 2x2 block. The column's O moves to the right
// half when o_right, the row's O to the upper half when o_up.
GridDiagram stabilize(const GridDiagram& g, std::size_t column, bool o_right, bool o_up);

// Maslov and Alexander gradings of the grid state `perm` (column -> row).
std::pair<int, int> grid_gradings(const GridDiagram& g, const std::vector<int>& perm);

// Full filtered complex on n! generators; refuses n > kMaxCompileSize.
FilteredComplex compile(const GridDiagram& g);

// tau of the Maslov-0 homology class. Streams generators in the Maslov window
// {-1, 0, 1}, so it reaches n = kMaxTauSize without storing the full complex.
Rational grid_tau(const GridDiagram& g);

using BigradedRanks = std::map<std::pair<Rational, Rational>, std::size_t>;  // (maslov, alexander)

// Associated graded homology of the compiled complex.
BigradedRanks tilde_knot_floer_ranks(const GridDiagram& g);
// The above with the tensor factor W^(n-1) divided out; W has generators in
// bigradings (0,0) and (-1,-1). Throws CheckFailure if the division is not exact.
BigradedRanks divide_out_w(const BigradedRanks& tilde, std::size_t power);
BigradedRanks hat_knot_floer_ranks(const GridDiagram& g);

// Maslov-graded ranks of a homology with W^(n-1) divided out.
std::map<Rational, std::size_t> divide_out_w(const std::map<Rational, std::size_t>& ranks,
                                             std::size_t power);

// Two whitespace-separated integer rows: X then O.
GridDiagram parse_grid(const std::string& text);
std::string format_grid(const GridDiagram& g);

}  // namespace ratslice
