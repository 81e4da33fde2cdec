#pragma once

#include <memory>
#include <vector>

#include "fog/grade.hpp"
#include "fog/groupoid.hpp"

namespace fog {

// Total assignment of a grade to every element of one structure.
// Immutable; all operations below are pure.
class FuzzySubset {
 public:
  FuzzySubset(std::shared_ptr<const Groupoid> structure,
              std::vector<Grade> grades);

  const Groupoid& structure() const { return *structure_; }
  const std::shared_ptr<const Groupoid>& structure_ptr() const {
    return structure_;
  }
  int size() const { return structure_->size(); }
  const Grade& at(int x) const { return grades_[x]; }
  const std::vector<Grade>& grades() const { return grades_; }

  // Equality is exact pointwise grade equality over equal structures.
  friend bool operator==(const FuzzySubset& a, const FuzzySubset& b) {
    return *a.structure_ == *b.structure_ && a.grades_ == b.grades_;
  }

 private:
  std::shared_ptr<const Groupoid> structure_;
  std::vector<Grade> grades_;
};

// (f o g)(a) = max of min(f(x), g(y)) over all (x, y) with a <= x*y, and 0
// when no such pair exists. Throws UsageError on mismatched structures.
FuzzySubset compose(const FuzzySubset& f, const FuzzySubset& g);

FuzzySubset square(const FuzzySubset& f);

// Pointwise f(x) <= g(x) at every element.
bool leq_fuzzy(const FuzzySubset& f, const FuzzySubset& g);

// lambda at x, 0 elsewhere.
FuzzySubset fuzzy_point(std::shared_ptr<const Groupoid> structure, int x,
                        const Grade& lambda);

// 1 on the given members, 0 elsewhere.
FuzzySubset characteristic(std::shared_ptr<const Groupoid> structure,
                           const std::vector<int>& members);

FuzzySubset constant_subset(std::shared_ptr<const Groupoid> structure,
                            const Grade& value);

}  // namespace fog
