#include "fog/semiprime.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fog {

WitnessReport is_semiprime_def1(const FuzzySubset& f) {
  const Groupoid& s = f.structure();
  for (int x = 0; x < s.size(); ++x) {
    const int xx = s.mul(x, x);
    if (f.at(x) < f.at(xx)) {
      return {false, "def1",
              ElementWitness{x, s.label(x), f.at(x), f.at(xx)}};
    }
  }
  return {true, "def1", std::nullopt};
}

Grade def2_threshold(const FuzzySubset& f, int x) {
  const Groupoid& s = f.structure();
  if (x < 0 || x >= s.size()) throw UsageError("element index out of range");
  const int xx = s.mul(x, x);
  Grade m = f.at(xx);
  std::uint64_t below = s.down_set(xx);
  while (below != 0) {
    const int a = __builtin_ctzll(below);
    below &= below - 1;
    if (f.at(a) < m) m = f.at(a);
  }
  return m;
}

WitnessReport is_semiprime_def2(const FuzzySubset& f) {
  const Groupoid& s = f.structure();
  for (int x = 0; x < s.size(); ++x) {
    const Grade m = def2_threshold(f, x);
    if (f.at(x) < m) {
      return {false, "def2",
              SubsetWitness{fuzzy_point(f.structure_ptr(), x, m), x,
                            s.label(x)}};
    }
  }
  return {true, "def2", std::nullopt};
}

WitnessReport def2_bruteforce(const FuzzySubset& f, std::vector<Grade> grid) {
  const Groupoid& s = f.structure();
  const int n = s.size();
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) throw UsageError("oracle grid must be nonempty");
  for (int x = 0; x < n; ++x) {
    if (!std::binary_search(grid.begin(), grid.end(), f.at(x))) {
      throw UsageError("oracle grid must contain every grade of f, missing " +
                       f.at(x).str());
    }
  }
  const double space = std::pow(static_cast<double>(grid.size()), n);
  if (space > 1e7) {
    throw ResourceError("oracle enumeration of " + std::to_string(grid.size()) +
                        "^" + std::to_string(n) +
                        " candidates exceeds the 10^7 budget");
  }

  std::vector<std::size_t> digits(n, 0);
  std::vector<Grade> grades(n, grid[0]);
  while (true) {
    const FuzzySubset g(f.structure_ptr(), grades);
    if (leq_fuzzy(square(g), f) && !leq_fuzzy(g, f)) {
      int where = 0;
      while (g.at(where) <= f.at(where)) ++where;
      return {false, "def2-bruteforce", SubsetWitness{g, where, s.label(where)}};
    }
    // Advance the mixed-radix counter, least significant digit last.
    int pos = n - 1;
    while (pos >= 0 && digits[pos] + 1 == grid.size()) {
      digits[pos] = 0;
      grades[pos] = grid[0];
      --pos;
    }
    if (pos < 0) break;
    ++digits[pos];
    grades[pos] = grid[digits[pos]];
  }
  return {true, "def2-bruteforce", std::nullopt};
}

WitnessReport has_property_a(const FuzzySubset& f) {
  const Groupoid& s = f.structure();
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!s.leq(a, s.mul(x, y))) continue;
        const Grade m = min(f.at(s.mul(x, x)), f.at(s.mul(y, y)));
        if (f.at(a) < m) {
          return {false, "property-a",
                  TripleWitness{a, x, y, s.label(a), s.label(x), s.label(y), m,
                                f.at(a)}};
        }
      }
    }
  }
  return {true, "property-a", std::nullopt};
}

WitnessReport crisp_semiprime(const Groupoid& s, const std::vector<int>& t) {
  std::set<int> members;
  for (const int x : t) {
    if (x < 0 || x >= s.size()) throw UsageError("set member out of range");
    members.insert(x);
  }
  for (int x = 0; x < s.size(); ++x) {
    if (members.contains(s.mul(x, x)) && !members.contains(x)) {
      return {false, "crisp",
              ElementWitness{x, s.label(x), Grade::zero(), Grade::one()}};
    }
  }
  return {true, "crisp", std::nullopt};
}

}  // namespace fog
