#include "fog/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace fog {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (n <= 26) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      labels.push_back("e" + std::to_string(i));
    }
  }
  return labels;
}

std::vector<std::vector<std::vector<bool>>> enumerate_posets(int n) {
  if (n < 1 || n > 4) {
    throw UsageError("poset enumeration supports 1 <= n <= 4");
  }
  const int off_diagonal = n * n - n;
  std::vector<std::vector<std::vector<bool>>> posets;
  for (std::uint32_t mask = 0; mask < (1u << off_diagonal); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) {
          rel[a][b] = true;
        } else {
          rel[a][b] = (mask >> bit) & 1u;
          ++bit;
        }
      }
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && rel[a][b] && rel[b][a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (rel[a][b] && rel[b][c] && !rel[a][c]) ok = false;
      }
    if (ok) posets.push_back(std::move(rel));
  }
  std::sort(posets.begin(), posets.end());
  return posets;
}

namespace {

// Backtracking fill of the multiplication table in row-major cell order.
// When a cell is assigned, every compatibility constraint whose other cell
// is already filled gets checked, so each constraint is enforced exactly
// once, when its later cell arrives.
class TableSearch {
 public:
  TableSearch(const std::vector<std::vector<bool>>& leq,
              const std::function<bool(const Groupoid&)>& visit)
      : n_(static_cast<int>(leq.size())),
        leq_(leq),
        mul_(static_cast<std::size_t>(n_) * n_, 0),
        visit_(visit) {}

  bool run() { return fill(0); }

 private:
  int cell(int x, int y) const { return mul_[x * n_ + y]; }

  bool admissible(int x, int y) const {
    const int v = cell(x, y);
    for (int u = 0; u < x; ++u) {
      if (leq_[u][x] && !leq_[cell(u, y)][v]) return false;
      if (leq_[x][u] && !leq_[v][cell(u, y)]) return false;
    }
    for (int w = 0; w < y; ++w) {
      if (leq_[w][y] && !leq_[cell(x, w)][v]) return false;
      if (leq_[y][w] && !leq_[v][cell(x, w)]) return false;
    }
    return true;
  }

  // Returns false iff the visitor asked to stop.
  bool fill(int k) {
    if (k == n_ * n_) {
      RawStructure raw;
      raw.labels = default_labels(n_);
      raw.leq = leq_;
      raw.mul.assign(n_, std::vector<int>(n_));
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) raw.mul[x][y] = cell(x, y);
      return visit_(Groupoid(std::move(raw)));
    }
    const int x = k / n_;
    const int y = k % n_;
    for (int v = 0; v < n_; ++v) {
      mul_[x * n_ + y] = v;
      if (!admissible(x, y)) continue;
      if (!fill(k + 1)) return false;
    }
    return true;
  }

  int n_;
  const std::vector<std::vector<bool>>& leq_;
  std::vector<int> mul_;
  const std::function<bool(const Groupoid&)>& visit_;
};

std::vector<Grade> sorted_unique(std::vector<Grade> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

bool for_each_compatible_table(
    const std::vector<std::vector<bool>>& leq,
    const std::function<bool(const Groupoid&)>& visit) {
  if (leq.empty() || leq.size() > static_cast<std::size_t>(kMaxElements)) {
    throw UsageError("order relation has unsupported size");
  }
  return TableSearch(leq, visit).run();
}

bool for_each_fuzzy(const std::shared_ptr<const Groupoid>& structure,
                    std::vector<Grade> grid,
                    const std::function<bool(const FuzzySubset&)>& visit) {
  if (!structure) throw UsageError("fuzzy enumeration requires a structure");
  grid = sorted_unique(std::move(grid));
  if (grid.empty()) throw UsageError("grade grid must be nonempty");
  const int n = structure->size();
  std::vector<std::size_t> digits(n, 0);
  std::vector<Grade> grades(n, grid[0]);
  while (true) {
    if (!visit(FuzzySubset(structure, grades))) return false;
    int pos = n - 1;
    while (pos >= 0 && digits[pos] + 1 == grid.size()) {
      digits[pos] = 0;
      grades[pos] = grid[0];
      --pos;
    }
    if (pos < 0) return true;
    ++digits[pos];
    grades[pos] = grid[digits[pos]];
  }
}

std::vector<FuzzySubset> enumerate_fuzzy(
    const std::shared_ptr<const Groupoid>& structure, std::vector<Grade> grid,
    std::int64_t limit) {
  if (!structure) throw UsageError("fuzzy enumeration requires a structure");
  const std::size_t radix = sorted_unique(grid).size();
  const double count =
      std::pow(static_cast<double>(radix), structure->size());
  if (count > static_cast<double>(limit)) {
    throw ResourceError("fuzzy enumeration exceeds its budget");
  }
  std::vector<FuzzySubset> all;
  all.reserve(static_cast<std::size_t>(count));
  for_each_fuzzy(structure, std::move(grid), [&all](const FuzzySubset& f) {
    all.push_back(f);
    return true;
  });
  return all;
}

namespace {

constexpr const char* kGoals[] = {"def2-not-def1", "property-a-violations",
                                  "nonassoc-compose", "theorem5-scan",
                                  "theorem4-scan"};

void check_task(const SearchTask& task) {
  if (task.max_n < 1 || task.max_n > 4) {
    throw UsageError("search max_n must be between 1 and 4");
  }
  if (task.budget <= 0) throw UsageError("search budget must be positive");
  const auto grid = sorted_unique(task.grid);
  if (grid.empty() || grid.front() != Grade::zero() ||
      grid.back() != Grade::one()) {
    throw UsageError("search grid must contain 0 and 1");
  }
  if (std::find_if(std::begin(kGoals), std::end(kGoals), [&](const char* g) {
        return task.goal == g;
      }) == std::end(kGoals)) {
    throw UsageError("unknown search goal '" + task.goal + "'");
  }
}

}  // namespace

SearchResult run_search(const SearchTask& task) {
  check_task(task);
  const std::vector<Grade> grid = sorted_unique(task.grid);
  SearchResult result;
  bool stopped = false;

  // Counts one candidate against the budget; false once the budget is gone.
  auto admit = [&]() {
    if (result.examined >= task.budget) {
      stopped = true;
      return false;
    }
    ++result.examined;
    return true;
  };

  auto scan_structure = [&](const Groupoid& s) -> bool {
    auto shared = std::make_shared<const Groupoid>(s);
    if (task.goal == "nonassoc-compose") {
      if (is_associative(s)) return true;
      return for_each_fuzzy(shared, grid, [&](const FuzzySubset& f) {
        return for_each_fuzzy(shared, grid, [&](const FuzzySubset& g) {
          return for_each_fuzzy(shared, grid, [&](const FuzzySubset& h) {
            if (!admit()) return false;
            const FuzzySubset lhs = compose(compose(f, g), h);
            const FuzzySubset rhs = compose(f, compose(g, h));
            for (int a = 0; a < s.size(); ++a) {
              if (lhs.at(a) != rhs.at(a)) {
                WitnessReport report{
                    false, "compose-assoc",
                    PointDiffWitness{a, s.label(a), lhs.at(a), rhs.at(a)}};
                result.found.push_back(
                    SearchHit{shared, {f, g, h}, std::move(report)});
                break;
              }
            }
            return true;
          });
        });
      });
    }
    return for_each_fuzzy(shared, grid, [&](const FuzzySubset& f) {
      if (!admit()) return false;
      if (task.goal == "def2-not-def1") {
        if (is_semiprime_def2(f).holds) {
          WitnessReport d1 = is_semiprime_def1(f);
          if (!d1.holds) {
            result.found.push_back(SearchHit{shared, {f}, std::move(d1)});
          }
        }
      } else if (task.goal == "property-a-violations") {
        WitnessReport pa = has_property_a(f);
        if (!pa.holds) {
          result.found.push_back(SearchHit{shared, {f}, std::move(pa)});
        }
      } else if (task.goal == "theorem4-scan") {
        if (is_semiprime_def1(f).holds) {
          WitnessReport d2 = is_semiprime_def2(f);
          if (!d2.holds) {
            result.found.push_back(SearchHit{shared, {f}, std::move(d2)});
          }
        }
      } else {  // theorem5-scan
        if (has_property_a(f).holds && is_semiprime_def2(f).holds) {
          WitnessReport d1 = is_semiprime_def1(f);
          if (!d1.holds) {
            result.found.push_back(SearchHit{shared, {f}, std::move(d1)});
          }
        }
      }
      return true;
    });
  };

  for (int n = 1; n <= task.max_n && !stopped; ++n) {
    for (const auto& leq : enumerate_posets(n)) {
      if (stopped) break;
      for_each_compatible_table(leq, scan_structure);
    }
  }
  result.exhausted = !stopped;
  return result;
}

}  // namespace fog
