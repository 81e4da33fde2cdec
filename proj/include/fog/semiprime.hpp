#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fog/fuzzy.hpp"

namespace fog {

// One element x whose own grade undercuts the grade of its square.
struct ElementWitness {
  int index = 0;
  std::string label;
  Grade f_x;
  Grade f_xx;
};

// (a, x, y) with a <= x*y but min{f(x*x), f(y*y)} > f(a).
struct TripleWitness {
  int a = 0;
  int x = 0;
  int y = 0;
  std::string a_label;
  std::string x_label;
  std::string y_label;
  Grade min_fx2_fy2;
  Grade f_a;
};

// A fuzzy subset g with g o g below f while g itself is not; exceeds_at is
// the first element where g(x) > f(x).
struct SubsetWitness {
  FuzzySubset g;
  int exceeds_at = 0;
  std::string exceeds_at_label;
};

// One element where two compositions disagree.
struct PointDiffWitness {
  int index = 0;
  std::string label;
  Grade left;
  Grade right;
};

using Witness =
    std::variant<ElementWitness, TripleWitness, SubsetWitness, PointDiffWitness>;

// Outcome of a decision procedure. When holds is false the witness
// re-checks against the defining condition exactly.
struct WitnessReport {
  bool holds = true;
  std::string checker;
  std::optional<Witness> witness;
};

// f(x) >= f(x*x) at every element; first violating x otherwise.
WitnessReport is_semiprime_def1(const FuzzySubset& f);

// min of f over the down-set {a : a <= x*x}; the set always contains x*x.
Grade def2_threshold(const FuzzySubset& f, int x);

// Decides "every g with g o g below f is itself below f" through the
// fuzzy-point reduction: f passes iff f(x) >= def2_threshold(f, x) for all
// x. A failing x yields the fuzzy point x_m with m = def2_threshold(f, x);
// its square is below f while the point itself is not.
WitnessReport is_semiprime_def2(const FuzzySubset& f);

// Exhaustive oracle for the same property: enumerates every g with grades
// drawn from grid, in mixed-radix order over the sorted grid with element 0
// as the most significant digit. The grid must contain every grade of f;
// |grid|^n is capped at 10^7 (ResourceError beyond).
WitnessReport def2_bruteforce(const FuzzySubset& f, std::vector<Grade> grid);

// a <= x*y implies min{f(x*x), f(y*y)} <= f(a); first violating (a, x, y)
// otherwise.
WitnessReport has_property_a(const FuzzySubset& f);

// x*x in T implies x in T. The witness carries the characteristic grades
// (f_x = 0 since x is outside T, f_xx = 1 since x*x is inside).
WitnessReport crisp_semiprime(const Groupoid& s, const std::vector<int>& t);

}  // namespace fog
