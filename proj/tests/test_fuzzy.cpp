#include <doctest.h>

#include <memory>

#include "fog/enumerate.hpp"
#include "fog/errors.hpp"
#include "fog/fuzzy.hpp"
#include "support/random_structures.hpp"

using namespace fog;

namespace {

std::shared_ptr<const Groupoid> chain_constant_a() {
  return std::make_shared<const Groupoid>(RawStructure{
      {"a", "b"}, {{0, 0}, {0, 0}}, {{true, true}, {false, true}}});
}

std::shared_ptr<const Groupoid> single() {
  return std::make_shared<const Groupoid>(
      RawStructure{{"a"}, {{0}}, {{true}}});
}

// Composition evaluated straight from its definition: the max of
// min(f(x), g(y)) over the explicitly materialized pair set of a.
Grade compose_by_definition(const FuzzySubset& f, const FuzzySubset& g,
                            int a) {
  Grade best = Grade::zero();
  for (const auto& [x, y] : pairs_above(f.structure(), a)) {
    best = max(best, min(f.at(x), g.at(y)));
  }
  return best;
}

}  // namespace

TEST_CASE("fuzzy subsets require one grade per element") {
  auto s = chain_constant_a();
  CHECK_THROWS_AS(FuzzySubset(s, {Grade::zero()}), UsageError);
  CHECK_THROWS_AS(FuzzySubset(s, std::vector<Grade>(3)), UsageError);
  CHECK_THROWS_AS(FuzzySubset(nullptr, {}), UsageError);
}

TEST_CASE("composition on the chain with constant multiplication") {
  auto s = chain_constant_a();
  const FuzzySubset f(s, {Grade(3, 10), Grade(7, 10)});
  const FuzzySubset ff = square(f);

  // No pair multiplies to anything above b, so the value there is 0.
  CHECK(ff.at(1) == Grade::zero());
  // Every pair multiplies to a; the best is min(f(b), f(b)) = 7/10.
  CHECK(ff.at(0) == Grade(7, 10));

  CHECK(ff.at(0) == compose_by_definition(f, f, 0));
  CHECK(ff.at(1) == compose_by_definition(f, f, 1));
}

TEST_CASE("composition matches its definition on every small case") {
  const std::vector<Grade> grid = {Grade::zero(), Grade(1, 2), Grade::one()};
  for (int n = 1; n <= 2; ++n) {
    for (const auto& leq : enumerate_posets(n)) {
      for_each_compatible_table(leq, [&](const Groupoid& s) {
        auto shared = std::make_shared<const Groupoid>(s);
        for_each_fuzzy(shared, grid, [&](const FuzzySubset& f) {
          for_each_fuzzy(shared, grid, [&](const FuzzySubset& g) {
            const FuzzySubset h = compose(f, g);
            for (int a = 0; a < s.size(); ++a) {
              CHECK(h.at(a) == compose_by_definition(f, g, a));
            }
            return true;
          });
          return true;
        });
        return true;
      });
    }
  }
}

TEST_CASE("composition matches its definition on random structures") {
  testsupport::Rng rng(20240817);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto s = testsupport::random_structure(rng, n);
    const FuzzySubset f = testsupport::random_fuzzy(rng, s);
    const FuzzySubset g = testsupport::random_fuzzy(rng, s);
    const FuzzySubset h = compose(f, g);
    for (int a = 0; a < n; ++a) {
      CHECK(h.at(a) == compose_by_definition(f, g, a));
    }
  }
}

TEST_CASE("composition rejects mismatched structures but accepts equal ones") {
  auto s = chain_constant_a();
  const FuzzySubset f(s, {Grade::zero(), Grade::one()});
  const FuzzySubset g(single(), {Grade::one()});
  CHECK_THROWS_AS(compose(f, g), UsageError);
  CHECK_THROWS_AS(leq_fuzzy(f, g), UsageError);

  // A different shared_ptr to an equal structure is the same carrier.
  const FuzzySubset f2(chain_constant_a(), {Grade::zero(), Grade::one()});
  CHECK(compose(f, f2) == square(f));
  CHECK(f == f2);
}

TEST_CASE("pointwise order on fuzzy subsets") {
  auto s = chain_constant_a();
  const FuzzySubset f(s, {Grade(3, 10), Grade(7, 10)});
  const FuzzySubset g(s, {Grade(3, 10), Grade(1, 2)});
  const FuzzySubset zero = constant_subset(s, Grade::zero());

  CHECK(leq_fuzzy(f, f));
  CHECK(leq_fuzzy(zero, f));
  CHECK_FALSE(leq_fuzzy(f, g));  // fails at b: 7/10 > 1/2
  CHECK(leq_fuzzy(g, f));
}

TEST_CASE("the pointwise order is a partial order") {
  testsupport::Rng rng(7);
  auto s = testsupport::random_structure(rng, 5);
  for (int round = 0; round < 200; ++round) {
    const FuzzySubset f = testsupport::random_fuzzy(rng, s);
    const FuzzySubset g = testsupport::random_fuzzy(rng, s);
    const FuzzySubset h = testsupport::random_fuzzy(rng, s);
    CHECK(leq_fuzzy(f, f));
    if (leq_fuzzy(f, g) && leq_fuzzy(g, f)) CHECK(f == g);
    if (leq_fuzzy(f, g) && leq_fuzzy(g, h)) CHECK(leq_fuzzy(f, h));
  }
}

TEST_CASE("the constant-one subset sits above every fuzzy subset") {
  testsupport::Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    auto s = testsupport::random_structure(rng, 1 + static_cast<int>(rng() % 6));
    const FuzzySubset one = constant_subset(s, Grade::one());
    CHECK(leq_fuzzy(testsupport::random_fuzzy(rng, s), one));
  }
}

TEST_CASE("fuzzy points concentrate their grade at one element") {
  auto s = chain_constant_a();

  CHECK(fuzzy_point(s, 1, Grade::zero()) ==
        constant_subset(s, Grade::zero()));
  CHECK(fuzzy_point(single(), 0, Grade::one()) ==
        constant_subset(single(), Grade::one()));

  const FuzzySubset b_half = fuzzy_point(s, 1, Grade(1, 2));
  CHECK(b_half.at(0) == Grade::zero());
  CHECK(b_half.at(1) == Grade(1, 2));
  const FuzzySubset squared = square(b_half);
  CHECK(squared.at(0) == Grade(1, 2));  // (b,b) lands on a's pair set
  CHECK(squared.at(1) == Grade::zero());

  CHECK_THROWS_AS(fuzzy_point(s, 2, Grade::one()), UsageError);
  CHECK_THROWS_AS(fuzzy_point(s, -1, Grade::one()), UsageError);
}

TEST_CASE("characteristic functions take 1 on members and 0 elsewhere") {
  auto s = chain_constant_a();
  CHECK(characteristic(s, {}) == constant_subset(s, Grade::zero()));
  CHECK(characteristic(s, {0, 1}) == constant_subset(s, Grade::one()));

  const FuzzySubset just_b = characteristic(s, {1});
  CHECK(just_b.at(0) == Grade::zero());
  CHECK(just_b.at(1) == Grade::one());

  CHECK_THROWS_AS(characteristic(s, {2}), UsageError);
}

TEST_CASE("every element's grade survives into the square at its square") {
  // f(x) <= (f o f)(x*x), since the pair (x,x) always competes at x*x.
  testsupport::Rng rng(20240818);
  for (int round = 0; round < 400; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto s = testsupport::random_structure(rng, n);
    const FuzzySubset f = testsupport::random_fuzzy(rng, s);
    const FuzzySubset ff = square(f);
    for (int x = 0; x < n; ++x) {
      CHECK(f.at(x) <= ff.at(s->mul(x, x)));
    }
  }
}

TEST_CASE("a square dominated by f pins every grade under f at the square") {
  // If g o g <= f pointwise then g(x) <= f(x*x) for every x.
  testsupport::Rng rng(20240819);
  for (int round = 0; round < 400; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto s = testsupport::random_structure(rng, n);
    const FuzzySubset g = testsupport::random_fuzzy(rng, s);
    const FuzzySubset f = testsupport::random_above(rng, square(g));
    REQUIRE(leq_fuzzy(square(g), f));
    for (int x = 0; x < n; ++x) {
      CHECK(g.at(x) <= f.at(s->mul(x, x)));
    }
  }
}

TEST_CASE("composition is monotone in both arguments") {
  testsupport::Rng rng(977);
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto s = testsupport::random_structure(rng, n);
    const FuzzySubset g = testsupport::random_fuzzy(rng, s);
    const FuzzySubset f = testsupport::random_below(rng, g);
    const FuzzySubset h = testsupport::random_fuzzy(rng, s);
    REQUIRE(leq_fuzzy(f, g));
    CHECK(leq_fuzzy(compose(f, h), compose(g, h)));
    CHECK(leq_fuzzy(compose(h, f), compose(h, g)));
  }
}

TEST_CASE("composition is associative on associative structures") {
  testsupport::Rng rng(3141);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& leq : enumerate_posets(n)) {
      for_each_compatible_table(leq, [&](const Groupoid& s) {
        if (!is_associative(s)) return true;
        auto shared = std::make_shared<const Groupoid>(s);
        for (int round = 0; round < 40; ++round) {
          const FuzzySubset f = testsupport::random_fuzzy(rng, shared);
          const FuzzySubset g = testsupport::random_fuzzy(rng, shared);
          const FuzzySubset h = testsupport::random_fuzzy(rng, shared);
          CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        }
        return true;
      });
    }
  }
}

TEST_CASE("under the trivial order composition sees exact products only") {
  // With only x <= x in the order, a pair contributes to a exactly when
  // x*y equals a.
  testsupport::Rng rng(555);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (auto& row : mul) {
      for (int& cell : row) cell = static_cast<int>(rng() % n);
    }
    auto s = std::make_shared<const Groupoid>(
        RawStructure{default_labels(n), mul, leq});
    const FuzzySubset f = testsupport::random_fuzzy(rng, s);
    const FuzzySubset g = testsupport::random_fuzzy(rng, s);
    const FuzzySubset h = compose(f, g);
    for (int a = 0; a < n; ++a) {
      Grade best = Grade::zero();
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (mul[x][y] == a) best = max(best, min(f.at(x), g.at(y)));
        }
      }
      CHECK(h.at(a) == best);
    }
  }
}
