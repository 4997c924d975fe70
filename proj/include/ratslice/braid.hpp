#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ratslice {

// Word in the braid group on n strands. Letter +i is sigma_i, -i its inverse;
// sigma_i exchanges strands i-1 and i (0-based). Words are never reduced.
class BraidWord {
 public:
  BraidWord() : BraidWord(1) {}
  explicit BraidWord(int index, std::vector<int> letters = {});

  int index() const { return index_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int index_;
  std::vector<int> letters_;
};

int writhe(const BraidWord& b);
// Image of each strand position under the closure permutation.
std::vector<int> permutation(const BraidWord& b);
std::size_t components(const BraidWord& b);

BraidWord inverse(const BraidWord& b);
BraidWord power(const BraidWord& b, int k);

// (sigma_1 ... sigma_{p-1})^q.
BraidWord torus_braid(int p, int q);
// (sigma_1 ... sigma_{n-1})^n.
BraidWord full_twist(int n);

// Positive and negative letter counts.
std::pair<std::size_t, std::size_t> splitting_counts(const BraidWord& b);

// Appends components(b) - 1 letters of the given sign, each joining the two
// lowest adjacent strands that lie in different cycles.
BraidWord knottify_crossings(const BraidWord& b, int sign);

// "n: i1 i2 ..."
BraidWord parse_braid(const std::string& text);
std::string format_braid(const BraidWord& b);

}  // namespace ratslice
