#include "fog/fuzzy.hpp"

#include <utility>

namespace fog {

namespace {

void require_same_structure(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.structure_ptr() == g.structure_ptr()) return;
  if (f.structure() == g.structure()) return;
  throw UsageError("fuzzy subsets are over different structures");
}

}  // namespace

FuzzySubset::FuzzySubset(std::shared_ptr<const Groupoid> structure,
                         std::vector<Grade> grades)
    : structure_(std::move(structure)), grades_(std::move(grades)) {
  if (!structure_) {
    throw UsageError("fuzzy subset requires a structure");
  }
  if (static_cast<int>(grades_.size()) != structure_->size()) {
    throw UsageError("fuzzy subset needs exactly one grade per element");
  }
}

FuzzySubset compose(const FuzzySubset& f, const FuzzySubset& g) {
  require_same_structure(f, g);
  const Groupoid& s = f.structure();
  const int n = s.size();
  std::vector<Grade> out(n);  // defaults to 0, the empty-pair-set value
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Grade m = min(f.at(x), g.at(y));
      // (x, y) lies in the pair set of every a below x*y.
      std::uint64_t covered = s.down_set(s.mul(x, y));
      while (covered != 0) {
        const int a = __builtin_ctzll(covered);
        covered &= covered - 1;
        if (out[a] < m) out[a] = m;
      }
    }
  }
  return FuzzySubset(f.structure_ptr(), std::move(out));
}

FuzzySubset square(const FuzzySubset& f) { return compose(f, f); }

bool leq_fuzzy(const FuzzySubset& f, const FuzzySubset& g) {
  require_same_structure(f, g);
  for (int x = 0; x < f.size(); ++x)
    if (g.at(x) < f.at(x)) return false;
  return true;
}

FuzzySubset fuzzy_point(std::shared_ptr<const Groupoid> structure, int x,
                        const Grade& lambda) {
  if (!structure || x < 0 || x >= structure->size()) {
    throw UsageError("fuzzy point element out of range");
  }
  std::vector<Grade> grades(structure->size());
  grades[x] = lambda;
  return FuzzySubset(std::move(structure), std::move(grades));
}

FuzzySubset characteristic(std::shared_ptr<const Groupoid> structure,
                           const std::vector<int>& members) {
  if (!structure) throw UsageError("characteristic requires a structure");
  std::vector<Grade> grades(structure->size());
  for (const int x : members) {
    if (x < 0 || x >= structure->size()) {
      throw UsageError("characteristic member out of range");
    }
    grades[x] = Grade::one();
  }
  return FuzzySubset(std::move(structure), std::move(grades));
}

FuzzySubset constant_subset(std::shared_ptr<const Groupoid> structure,
                            const Grade& value) {
  if (!structure) throw UsageError("constant subset requires a structure");
  std::vector<Grade> grades(structure->size(), value);
  return FuzzySubset(std::move(structure), std::move(grades));
}

}  // namespace fog
