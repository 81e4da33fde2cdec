#pragma once

#include <string>
#include <vector>

#include "fog/semiprime.hpp"

namespace fog::gallery {

// A gallery check: the decision outcome plus a line-by-line transcript of
// what was evaluated. The two carriers here are infinite (the naturals from
// 2 up, and the rational points of [0,1]), so checks run over finite
// windows or samples with closed-form grades; the transcript states exactly
// which bounded claim was machine-checked.
struct GalleryCheck {
  WitnessReport report;
  std::vector<std::string> transcript;
};

inline constexpr int kDefaultWindow = 1000;

// Step subset on {2,3,4,...}: grade 0 at 2 and 1 everywhere above. Scans
// every x in the window {2..n} and reports that f(x) >= f(x*x) fails at
// x = 2 (grades 0 vs 1) and nowhere else. Requires n >= 4.
GalleryCheck theorem4_def1(int window = kDefaultWindow);

// Same subset; checks the per-element criterion f(x) >= min{f(a) : 2 <= a
// <= x*x} for every x with x*x inside the window, which holds throughout.
// Requires n >= 4 so the window reaches 2*2.
GalleryCheck theorem4_def2(int window = kDefaultWindow);

struct Remark6Result {
  GalleryCheck def1;        // identity subset on [0,1] is semiprime: holds
  GalleryCheck property_a;  // fails at the triple (1/10, 1/2, 1/3)
};

// Identity subset on the unit interval, evaluated at an exact rational
// sample with products computed symbolically.
Remark6Result remark6();

}  // namespace fog::gallery
