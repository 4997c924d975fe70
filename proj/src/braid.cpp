#include "ratslice/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ratslice/error.hpp"

namespace ratslice {

BraidWord::BraidWord(int index, std::vector<int> letters)
    : index_(index), letters_(std::move(letters)) {
  if (index_ < 1) throw InputError("braid index must be at least 1");
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    int l = letters_[k];
    if (l == 0 || std::abs(l) >= index_) {
      throw InputError("braid letter " + std::to_string(l) + " at position " + std::to_string(k) +
                       " out of range for index " + std::to_string(index_));
    }
  }
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.index_ != index_) throw InputError("braid indices differ");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int l : b.letters()) w += l > 0 ? 1 : -1;
  return w;
}

std::vector<int> permutation(const BraidWord& b) {
  std::vector<int> pos(b.index());
  std::iota(pos.begin(), pos.end(), 0);
  // pos[s] = current position of the strand that started at s
  std::vector<int> at(b.index());
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters()) {
    int i = std::abs(l);
    std::swap(at[i - 1], at[i]);
  }
  for (int p = 0; p < b.index(); ++p) pos[at[p]] = p;
  return pos;
}

std::size_t components(const BraidWord& b) {
  auto perm = permutation(b);
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t v = s; !seen[v]; v = static_cast<std::size_t>(perm[v])) seen[v] = true;
  }
  return cycles;
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(b.index(), std::move(letters));
}

BraidWord power(const BraidWord& b, int k) {
  BraidWord base = k < 0 ? inverse(b) : b;
  BraidWord out(b.index());
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

BraidWord torus_braid(int p, int q) {
  if (p < 1) throw InputError("torus braid index must be at least 1");
  std::vector<int> cycle;
  for (int i = 1; i < p; ++i) cycle.push_back(i);
  return power(BraidWord(p, cycle), q);
}

BraidWord full_twist(int n) { return torus_braid(n, n); }

std::pair<std::size_t, std::size_t> splitting_counts(const BraidWord& b) {
  std::size_t pos = 0;
  for (int l : b.letters()) pos += l > 0;
  return {pos, b.length() - pos};
}

BraidWord knottify_crossings(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  BraidWord out = b;
  while (components(out) > 1) {
    auto perm = permutation(out);
    // Label each strand by its cycle.
    std::vector<int> cycle(perm.size(), -1);
    int label = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
      if (cycle[s] >= 0) continue;
      for (std::size_t v = s; cycle[v] < 0; v = static_cast<std::size_t>(perm[v])) cycle[v] = label;
      ++label;
    }
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
      if (cycle[i] != cycle[i + 1]) {
        out *= BraidWord(out.index(), {sign * static_cast<int>(i + 1)});
        break;
      }
    }
  }
  return out;
}

BraidWord parse_braid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("braid '" + text + "': expected 'n: letters'");
  auto parse_int = [&](const std::string& tok, const std::string& what) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw InputError("braid " + what + " '" + tok + "' is not an integer");
    }
  };
  std::istringstream head(text.substr(0, colon));
  std::string index_tok;
  std::string extra;
  if (!(head >> index_tok) || (head >> extra)) throw InputError("braid index missing before ':'");
  int n = parse_int(index_tok, "index");
  std::istringstream body(text.substr(colon + 1));
  std::vector<int> letters;
  std::string tok;
  while (body >> tok) letters.push_back(parse_int(tok, "letter"));
  return BraidWord(n, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string s = std::to_string(b.index()) + ":";
  for (int l : b.letters()) s += " " + std::to_string(l);
  return s;
}

}  // namespace ratslice
