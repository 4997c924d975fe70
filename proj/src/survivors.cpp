#include <algorithm>
#include <numeric>
#include <set>

#include "ratslice/complex.hpp"
#include "ratslice/error.hpp"

namespace ratslice {

namespace {

constexpr std::size_t kStateLimit = 2'000'000;

struct Search {
  const std::vector<GradedRank>& ranks;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (higher, lower)
  std::size_t target;
  std::set<std::vector<std::size_t>> seen;
  std::set<Survivors> outcomes;

  void run(std::vector<std::size_t>& state, std::size_t total) {
    if (!seen.insert(state).second) return;
    if (seen.size() > kStateLimit) throw InputError("survivor search exceeds state limit");
    if (total == target) {
      Survivors s;
      for (std::size_t i = 0; i < state.size(); ++i) {
        s.insert(s.end(), state[i], ranks[i].alexander);
      }
      std::sort(s.begin(), s.end());
      outcomes.insert(std::move(s));
      return;
    }
    for (auto [hi, lo] : pairs) {
      if (state[hi] == 0 || state[lo] == 0) continue;
      --state[hi];
      --state[lo];
      run(state, total - 2);
      ++state[hi];
      ++state[lo];
    }
  }
};

}  // namespace

std::set<Survivors> survivor_deduction(const std::vector<GradedRank>& ranks, std::size_t target) {
  std::size_t total = 0;
  for (const auto& r : ranks) total += r.rank;
  if (target > total) {
    throw InputError("target rank " + std::to_string(target) + " exceeds total rank " +
                     std::to_string(total));
  }
  if ((total - target) % 2 != 0) {
    throw InputError("parity obstruction: total rank " + std::to_string(total) +
                     " and target " + std::to_string(target) + " differ by an odd number");
  }
  Search search{ranks, {}, target, {}, {}};
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    for (std::size_t j = 0; j < ranks.size(); ++j) {
      if (!(ranks[i].alexander > ranks[j].alexander)) continue;
      if (ranks[i].maslov && ranks[j].maslov && *ranks[i].maslov - *ranks[j].maslov != 1) continue;
      search.pairs.emplace_back(i, j);
    }
  }
  std::vector<std::size_t> state;
  for (const auto& r : ranks) state.push_back(r.rank);
  search.run(state, total);
  if (search.outcomes.empty()) {
    throw InputError("target rank " + std::to_string(target) +
                     " unreachable: no admissible cancelling pairs remain");
  }
  return search.outcomes;
}

Rational min_breadth_lower_bound(const std::vector<GradedRank>& ranks, std::size_t target) {
  if (target == 0) throw InputError("target rank must be positive");
  auto outcomes = survivor_deduction(ranks, target);
  std::optional<Rational> best;
  for (const auto& s : outcomes) {
    Rational spread = s.back() - s.front();
    if (!best || spread < *best) best = spread;
  }
  return *best;
}

}  // namespace ratslice
