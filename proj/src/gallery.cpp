#include "fog/gallery.hpp"

#include "fog/errors.hpp"

namespace fog::gallery {

namespace {

// The step subset on {2,3,4,...}.
Grade step(long long x) { return x == 2 ? Grade::zero() : Grade::one(); }

void require_window(int window) {
  if (window < 4) {
    throw UsageError("window must be at least 4 to contain 2*2");
  }
}

}  // namespace

GalleryCheck theorem4_def1(int window) {
  require_window(window);
  GalleryCheck check;
  check.transcript.push_back(
      "carrier: naturals {2.." + std::to_string(window) +
      "} under usual multiplication and order; f(2)=0, f(x)=1 for x>2");
  std::vector<long long> violations;
  for (long long x = 2; x <= window; ++x) {
    if (step(x) < step(x * x)) violations.push_back(x);
  }
  for (const long long x : violations) {
    check.transcript.push_back("f(" + std::to_string(x) + ")=" +
                               step(x).str() + " < f(" +
                               std::to_string(x * x) + ")=" +
                               step(x * x).str());
  }
  check.transcript.push_back(
      "violations in the window: " + std::to_string(violations.size()) +
      " (every x>2 has f(x)=1 >= f(x*x))");
  check.report.checker = "def1";
  check.report.holds = violations.empty();
  if (!violations.empty()) {
    const long long x = violations.front();
    check.report.witness = ElementWitness{
        static_cast<int>(x), std::to_string(x), step(x), step(x * x)};
  }
  return check;
}

GalleryCheck theorem4_def2(int window) {
  require_window(window);
  GalleryCheck check;
  check.report.checker = "def2-window";
  check.report.holds = true;
  long long limit = 2;
  while ((limit + 1) * (limit + 1) <= window) ++limit;
  check.transcript.push_back(
      "per-element criterion f(x) >= min{f(a) : 2 <= a <= x*x}, checked for "
      "x in {2.." +
      std::to_string(limit) + "} so every down-set stays inside the window");
  for (long long x = 2; x <= limit; ++x) {
    Grade m = Grade::one();
    for (long long a = 2; a <= x * x; ++a) m = min(m, step(a));
    if (step(x) < m) {
      check.report.holds = false;
      check.report.witness = ElementWitness{static_cast<int>(x),
                                            std::to_string(x), step(x), m};
      check.transcript.push_back("x=" + std::to_string(x) + ": f(x)=" +
                                 step(x).str() + " < min=" + m.str());
      return check;
    }
    if (x <= 3) {
      check.transcript.push_back(
          "x=" + std::to_string(x) + ": min f over {2.." +
          std::to_string(x * x) + "} = " + m.str() + " <= f(" +
          std::to_string(x) + ") = " + step(x).str());
    }
  }
  check.transcript.push_back(
      "x in {4.." + std::to_string(limit) +
      "}: f(x)=1 bounds every minimum; no violation");
  check.transcript.push_back(
      "this certifies the windowed per-element criterion only, not a machine "
      "claim about every fuzzy subset of the infinite carrier");
  return check;
}

Remark6Result remark6() {
  Remark6Result result;

  // Exact rational sample of [0,1]; products are evaluated symbolically so
  // the sample need not be closed under multiplication.
  const std::vector<Grade> sample = {
      Grade::zero(),  Grade(1, 10), Grade(1, 9), Grade(1, 6),
      Grade(1, 4),    Grade(1, 3),  Grade(1, 2), Grade::one()};

  result.def1.report.checker = "def1";
  result.def1.report.holds = true;
  result.def1.transcript.push_back(
      "carrier: [0,1] under usual multiplication and order; f is the "
      "identity map, sampled at exact rationals");
  for (const Grade& x : sample) {
    const Grade xx = x * x;
    if (x < xx) {
      result.def1.report.holds = false;
      result.def1.report.witness = ElementWitness{0, x.str(), x, xx};
      break;
    }
    result.def1.transcript.push_back("x=" + x.str() + ": f(x)=" + x.str() +
                                     " >= f(x*x)=" + xx.str());
  }
  result.def1.transcript.push_back(
      "x*x <= x holds throughout [0,1], with equality at 0 and 1");

  const Grade a(1, 10);
  const Grade x(1, 2);
  const Grade y(1, 3);
  const Grade xy = x * y;
  const Grade m = min(x * x, y * y);
  result.property_a.report.checker = "property-a";
  result.property_a.transcript.push_back("a=" + a.str() + " <= " + xy.str() +
                                         " = (" + x.str() + ")*(" + y.str() +
                                         ")");
  result.property_a.transcript.push_back(
      "min{f(" + (x * x).str() + "), f(" + (y * y).str() + ")} = " + m.str());
  if (a <= xy && a < m) {
    result.property_a.report.holds = false;
    result.property_a.report.witness =
        TripleWitness{0, 0, 0, a.str(), x.str(), y.str(), m, a};
    result.property_a.transcript.push_back(
        m.str() + " > " + a.str() + " = f(" + a.str() +
        "), so the triple violates the condition (exact cross-multiplied "
        "comparison)");
  } else {
    result.property_a.report.holds = true;
  }
  return result;
}

}  // namespace fog::gallery
