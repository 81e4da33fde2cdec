#include "fog/groupoid.hpp"

#include <set>
#include <string>

namespace fog {

namespace {

void check_structural(const RawStructure& raw) {
  const std::size_t n = raw.labels.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxElements)) {
    throw StructuralError("element count must be between 1 and " +
                          std::to_string(kMaxElements) + ", got " +
                          std::to_string(n));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.labels[i].empty()) {
      throw StructuralError("empty label at index " + std::to_string(i));
    }
    if (!seen.insert(raw.labels[i]).second) {
      throw StructuralError("duplicate label '" + raw.labels[i] + "'");
    }
  }
  if (raw.mul.size() != n) {
    throw StructuralError("multiplication table must have " +
                          std::to_string(n) + " rows");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (raw.mul[x].size() != n) {
      throw StructuralError("multiplication row " + std::to_string(x) +
                            " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t y = 0; y < n; ++y) {
      const int v = raw.mul[x][y];
      if (v < 0 || v >= static_cast<int>(n)) {
        throw StructuralError("multiplication entry out of range at (" +
                              std::to_string(x) + "," + std::to_string(y) +
                              ")");
      }
    }
  }
  if (raw.leq.size() != n) {
    throw StructuralError("order relation must have " + std::to_string(n) +
                          " rows");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (raw.leq[a].size() != n) {
      throw StructuralError("order row " + std::to_string(a) + " must have " +
                            std::to_string(n) + " entries");
    }
  }
}

}  // namespace

ValidationReport validate(const RawStructure& raw) {
  check_structural(raw);
  const int n = static_cast<int>(raw.labels.size());
  ValidationReport report;
  auto violated = [&report](std::string axiom, std::vector<int> witness) {
    report.ok = false;
    report.violations.push_back({std::move(axiom), std::move(witness)});
  };

  for (int a = 0; a < n; ++a) {
    if (!raw.leq[a][a]) {
      violated("reflexive", {a});
      break;
    }
  }
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && raw.leq[a][b] && raw.leq[b][a]) {
          violated("antisymmetric", {a, b});
          return;
        }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (raw.leq[a][b] && raw.leq[b][c] && !raw.leq[a][c]) {
            violated("transitive", {a, b, c});
            return;
          }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (raw.leq[a][b] && !raw.leq[raw.mul[a][c]][raw.mul[b][c]]) {
            violated("compatible-right", {a, b, c});
            return;
          }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (raw.leq[a][b] && !raw.leq[raw.mul[c][a]][raw.mul[c][b]]) {
            violated("compatible-left", {a, b, c});
            return;
          }
  }();
  return report;
}

std::vector<std::vector<bool>> reflexive_transitive_closure(
    std::vector<std::vector<bool>> rel) {
  const std::size_t n = rel.size();
  for (std::size_t a = 0; a < n; ++a) rel[a][a] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (rel[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (rel[k][b]) rel[a][b] = true;
  return rel;
}

Groupoid::Groupoid(RawStructure raw) : raw_(std::move(raw)) {
  ValidationReport report = validate(raw_);
  if (!report.ok) {
    std::string message = "axiom violation:";
    for (const auto& v : report.violations) message += " " + v.axiom;
    throw ValidationError(std::move(message), std::move(report));
  }
  n_ = static_cast<int>(raw_.labels.size());
  mul_.resize(static_cast<std::size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      mul_[x * n_ + y] = static_cast<std::uint8_t>(raw_.mul[x][y]);
  up_.assign(n_, 0);
  down_.assign(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (raw_.leq[a][b]) {
        up_[a] |= std::uint64_t{1} << b;
        down_[b] |= std::uint64_t{1} << a;
      }
}

bool is_associative(const Groupoid& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) return false;
  return true;
}

std::optional<int> greatest_element(const Groupoid& s) {
  const int n = s.size();
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int e = 0; e < n; ++e)
    if (s.down_set(e) == all) return e;
  return std::nullopt;
}

std::vector<std::pair<int, int>> pairs_above(const Groupoid& s, int a) {
  if (a < 0 || a >= s.size()) {
    throw UsageError("element index out of range");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (s.leq(a, s.mul(x, y))) pairs.emplace_back(x, y);
  return pairs;
}

}  // namespace fog
