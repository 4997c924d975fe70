#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ratslice/complex.hpp"
#include "ratslice/rational.hpp"
#include "ratslice/ratlink.hpp"

namespace ratslice {

struct PoincareTerm {
  Rational maslov;
  Rational alexander;
  std::size_t rank = 0;

  friend bool operator==(const PoincareTerm&, const PoincareTerm&) = default;
};

struct PoincarePolynomial {
  std::vector<PoincareTerm> terms;
  std::string spinc;

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

// Throws InputError on a zero rank or a repeated bigrading.
void validate(const PoincarePolynomial& p);

// One polynomial per spinc structure.
using PoincareFamily = std::vector<PoincarePolynomial>;
using Builtin = std::variant<FramedKnotData, PoincareFamily>;

std::vector<std::string> builtin_names();
// Throws InputError listing the available names.
Builtin builtin(const std::string& name);

// Two generators in distinct spinc structures, Maslov = d, A = +-1/4, no differential.
FilteredComplex rp1_model_complex();

struct DeepSliceVerdict {
  std::set<Rational> possible_tau;
  bool deep_slice = false;
  std::string citation;
};

DeepSliceVerdict deep_slice_report(const PoincarePolynomial& p, std::size_t lspace_total_rank);

// Minimum certified breadth over all rank completions of the five-grading
// pattern {+-g, +-(g-1), 0} with total 4g+1 after one cancellation.
Rational dual_knot_breadth(long long g);

}  // namespace ratslice

namespace ratslice {

struct PaperCheck {
  std::string citation;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Recomputes every worked value the library reproduces.
std::vector<PaperCheck> run_paper_checks();

}  // namespace ratslice
