#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fog/fuzzy.hpp"

namespace fog::dsl {

enum class ErrorKind {
  syntax,    // bad token or grammar shape
  semantic,  // unknown identifier, duplicate, incomplete table, bad grade
  axiom,     // structure parsed but fails validation
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, ErrorKind kind, const std::string& reason,
             std::optional<ValidationReport> report = std::nullopt)
      : std::runtime_error("line " + std::to_string(line) + " col " +
                           std::to_string(col) + ": " + reason),
        line(line),
        col(col),
        kind(kind),
        report(std::move(report)) {}

  int line;
  int col;
  ErrorKind kind;
  std::optional<ValidationReport> report;  // set for axiom violations
};

struct NamedStructure {
  std::string name;
  std::shared_ptr<const Groupoid> value;

  friend bool operator==(const NamedStructure& a, const NamedStructure& b) {
    return a.name == b.name && *a.value == *b.value;
  }
};

struct NamedFuzzy {
  std::string name;
  std::string structure;
  FuzzySubset value;

  friend bool operator==(const NamedFuzzy&, const NamedFuzzy&) = default;
};

struct NamedSet {
  std::string name;
  std::string structure;
  std::vector<int> members;

  friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

struct Document {
  std::vector<NamedStructure> structures;
  std::vector<NamedFuzzy> fuzzies;
  std::vector<NamedSet> sets;

  const NamedStructure* find_structure(std::string_view name) const;
  const NamedFuzzy* find_fuzzy(std::string_view name) const;
  const NamedSet* find_set(std::string_view name) const;

  friend bool operator==(const Document&, const Document&) = default;
};

// Parses a document. Order lines may give any relation; the parser takes
// the reflexive-transitive closure and rejects if antisymmetry fails. Every
// multiplication cell must be given exactly once. Fuzzy definitions must
// grade every element of their structure. Structures must be defined
// before the fuzzy subsets and sets that reference them.
Document parse(std::string_view source);

// Canonical text form; parse(print(d)) == d.
std::string print(const Document& doc);

}  // namespace fog::dsl
