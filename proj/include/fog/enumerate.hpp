#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fog/semiprime.hpp"

namespace fog {

// Description of one enumeration run. grid must contain 0 and 1; max_n is
// capped at 4 because labeled poset and table counts explode beyond that.
struct SearchTask {
  int max_n = 2;
  std::vector<Grade> grid;
  std::string goal;  // def2-not-def1 | property-a-violations |
                     // nonassoc-compose | theorem5-scan | theorem4-scan
  std::int64_t budget = 10'000'000;
};

// One witness found by a search. subsets holds the fuzzy subsets the goal
// predicate quantifies over (one for the semiprimeness goals, three for the
// composition-associativity goal).
struct SearchHit {
  std::shared_ptr<const Groupoid> structure;
  std::vector<FuzzySubset> subsets;
  WitnessReport report;
};

struct SearchResult {
  std::int64_t examined = 0;
  std::vector<SearchHit> found;
  bool exhausted = false;  // true iff the whole bounded space was scanned
};

// Every partial order on n labeled elements, exactly once, sorted by the
// row-major bit sequence of the relation matrix. n is capped at 4.
std::vector<std::vector<std::vector<bool>>> enumerate_posets(int n);

// Streams every multiplication table compatible with the given partial
// order, as validated structures, in row-major lexicographic table order.
// Tables are built cell by cell with compatibility checked on filled cells,
// so incompatible prefixes are pruned. visit returns false to stop early;
// the function returns false iff the walk was stopped.
bool for_each_compatible_table(
    const std::vector<std::vector<bool>>& leq,
    const std::function<bool(const Groupoid&)>& visit);

// Streams all |grid|^n grade assignments in mixed-radix order over the
// sorted grid, element 0 most significant. visit returns false to stop.
bool for_each_fuzzy(const std::shared_ptr<const Groupoid>& structure,
                    std::vector<Grade> grid,
                    const std::function<bool(const FuzzySubset&)>& visit);

// Materialized variant; throws ResourceError if |grid|^n exceeds limit.
std::vector<FuzzySubset> enumerate_fuzzy(
    const std::shared_ptr<const Groupoid>& structure, std::vector<Grade> grid,
    std::int64_t limit = 10'000'000);

// Scans posets x compatible tables x fuzzy subsets up to the task bounds in
// one fixed deterministic order. Budget exhaustion is reported through
// exhausted=false, not an error. Every hit re-checks its goal predicate.
SearchResult run_search(const SearchTask& task);

// Auto-generated labels "a", "b", ... used for enumerated structures.
std::vector<std::string> default_labels(int n);

}  // namespace fog
