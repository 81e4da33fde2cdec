#include "fog/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace fog::dsl {

namespace {

enum class Tok {
  word,    // identifier or keyword: [A-Za-z_][A-Za-z0-9_]*
  number,  // [0-9]+
  lbrace,
  rbrace,
  colon,
  comma,
  star,
  equals,
  leq,  // <=
  slash,
  eof,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::eof:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') bump(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    int tl = line;
    int tc = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), tl, tc});
      bump(1);
    };
    if (c == '{') {
      single(Tok::lbrace);
    } else if (c == '}') {
      single(Tok::rbrace);
    } else if (c == ':') {
      single(Tok::colon);
    } else if (c == ',') {
      single(Tok::comma);
    } else if (c == '*') {
      single(Tok::star);
    } else if (c == '=') {
      single(Tok::equals);
    } else if (c == '/') {
      single(Tok::slash);
    } else if (c == '<') {
      if (i + 1 < src.size() && src[i + 1] == '=') {
        out.push_back({Tok::leq, "<=", tl, tc});
        bump(2);
      } else {
        throw ParseError(tl, tc, ErrorKind::syntax, "expected '<=' after '<'");
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::word, std::string(src.substr(i, j - i)), tl, tc});
      bump(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), tl, tc});
      bump(j - i);
    } else {
      throw ParseError(tl, tc, ErrorKind::syntax,
                       std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::eof, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Document run() {
    Document doc;
    while (peek().kind != Tok::eof) {
      const Token& head = expect(Tok::word, "'groupoid', 'fuzzy' or 'set'");
      if (head.text == "groupoid") {
        parse_groupoid(doc);
      } else if (head.text == "fuzzy") {
        parse_fuzzy(doc);
      } else if (head.text == "set") {
        parse_set(doc);
      } else {
        throw ParseError(head.line, head.col, ErrorKind::syntax,
                         "expected 'groupoid', 'fuzzy' or 'set', got '" +
                             head.text + "'");
      }
    }
    return doc;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }

  const Token& advance() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw ParseError(t.line, t.col, ErrorKind::syntax,
                       "expected " + what + ", got " + describe(t));
    }
    return advance();
  }

  const Token& expect_keyword(const std::string& word) {
    const Token& t = peek();
    if (t.kind != Tok::word || t.text != word) {
      throw ParseError(t.line, t.col, ErrorKind::syntax,
                       "expected '" + word + "', got " + describe(t));
    }
    return advance();
  }

  // True when the upcoming tokens are `<word> :`, i.e. a section header.
  bool at_header(std::string_view word) const {
    return peek().kind == Tok::word && peek().text == word &&
           peek(1).kind == Tok::colon;
  }

  void skip_comma() {
    if (peek().kind == Tok::comma) advance();
  }

  struct ElementScope {
    std::vector<std::string> labels;
    std::map<std::string, int, std::less<>> index;

    int resolve(const Token& t) const {
      auto it = index.find(t.text);
      if (it == index.end()) {
        throw ParseError(t.line, t.col, ErrorKind::semantic,
                         "unknown element '" + t.text + "'");
      }
      return it->second;
    }
  };

  void check_fresh_name(const Document& doc, const Token& name) {
    bool taken = doc.find_structure(name.text) != nullptr ||
                 doc.find_fuzzy(name.text) != nullptr ||
                 doc.find_set(name.text) != nullptr;
    if (taken) {
      throw ParseError(name.line, name.col, ErrorKind::semantic,
                       "name '" + name.text + "' is already defined");
    }
  }

  const NamedStructure& resolve_structure(const Document& doc,
                                          const Token& name) {
    const NamedStructure* s = doc.find_structure(name.text);
    if (s == nullptr) {
      throw ParseError(name.line, name.col, ErrorKind::semantic,
                       "unknown groupoid '" + name.text + "'");
    }
    return *s;
  }

  void parse_groupoid(Document& doc) {
    const Token name = expect(Tok::word, "a groupoid name");
    check_fresh_name(doc, name);
    expect(Tok::lbrace, "'{'");

    expect_keyword("elements");
    expect(Tok::colon, "':'");
    ElementScope scope;
    while (peek().kind == Tok::word && !at_header("order") &&
           !at_header("mul")) {
      const Token& el = advance();
      if (scope.index.contains(el.text)) {
        throw ParseError(el.line, el.col, ErrorKind::semantic,
                         "duplicate element '" + el.text + "'");
      }
      scope.index.emplace(el.text, static_cast<int>(scope.labels.size()));
      scope.labels.push_back(el.text);
      skip_comma();
    }
    if (scope.labels.empty()) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, ErrorKind::syntax,
                       "expected at least one element");
    }
    const int n = static_cast<int>(scope.labels.size());

    expect_keyword("order");
    expect(Tok::colon, "':'");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x) leq[x][x] = true;
    while (peek().kind == Tok::word && !at_header("mul")) {
      int lhs = scope.resolve(advance());
      expect(Tok::leq, "'<='");
      int rhs = scope.resolve(expect(Tok::word, "an element"));
      leq[lhs][rhs] = true;
      skip_comma();
    }

    expect_keyword("mul");
    expect(Tok::colon, "':'");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
    while (peek().kind != Tok::rbrace) {
      const Token xt = expect(Tok::word, "an element or '}'");
      int x = scope.resolve(xt);
      expect(Tok::star, "'*'");
      int y = scope.resolve(expect(Tok::word, "an element"));
      expect(Tok::equals, "'='");
      int z = scope.resolve(expect(Tok::word, "an element"));
      if (mul[x][y] != -1) {
        throw ParseError(xt.line, xt.col, ErrorKind::semantic,
                         "duplicate product for " + scope.labels[x] + "*" +
                             scope.labels[y]);
      }
      mul[x][y] = z;
      skip_comma();
    }
    const Token close = expect(Tok::rbrace, "'}'");
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (mul[x][y] == -1) {
          throw ParseError(close.line, close.col, ErrorKind::semantic,
                           "incomplete table: missing product " +
                               scope.labels[x] + "*" + scope.labels[y]);
        }
      }
    }

    RawStructure raw{scope.labels, std::move(mul),
                     reflexive_transitive_closure(leq)};
    ValidationReport report = validate(raw);
    if (!report.ok) {
      const AxiomViolation& v = report.violations.front();
      std::string detail = "axiom violation in '" + name.text + "': " +
                           v.axiom + " fails at (";
      for (std::size_t k = 0; k < v.elements.size(); ++k) {
        if (k > 0) detail += ", ";
        detail += scope.labels[static_cast<std::size_t>(v.elements[k])];
      }
      detail += ")";
      throw ParseError(name.line, name.col, ErrorKind::axiom, detail, report);
    }
    doc.structures.push_back(
        {name.text, std::make_shared<const Groupoid>(std::move(raw))});
  }

  Grade parse_grade() {
    const Token num = expect(Tok::number, "a grade");
    std::string text = num.text;
    if (peek().kind == Tok::slash) {
      advance();
      text += "/" + expect(Tok::number, "a denominator").text;
    }
    try {
      return Grade::parse(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(num.line, num.col, ErrorKind::semantic, e.what());
    }
  }

  void parse_fuzzy(Document& doc) {
    const Token name = expect(Tok::word, "a fuzzy subset name");
    check_fresh_name(doc, name);
    expect_keyword("on");
    const Token sname = expect(Tok::word, "a groupoid name");
    const NamedStructure& host = resolve_structure(doc, sname);
    ElementScope scope;
    for (int x = 0; x < host.value->size(); ++x) {
      scope.index.emplace(host.value->label(x), x);
      scope.labels.push_back(host.value->label(x));
    }
    expect(Tok::lbrace, "'{'");
    std::vector<std::optional<Grade>> grades(scope.labels.size());
    while (peek().kind != Tok::rbrace) {
      const Token el = expect(Tok::word, "an element or '}'");
      int x = scope.resolve(el);
      expect(Tok::colon, "':'");
      Grade g = parse_grade();
      if (grades[static_cast<std::size_t>(x)].has_value()) {
        throw ParseError(el.line, el.col, ErrorKind::semantic,
                         "duplicate grade for element '" + el.text + "'");
      }
      grades[static_cast<std::size_t>(x)] = g;
      skip_comma();
    }
    const Token close = expect(Tok::rbrace, "'}'");
    std::vector<Grade> full;
    for (std::size_t x = 0; x < grades.size(); ++x) {
      if (!grades[x].has_value()) {
        throw ParseError(close.line, close.col, ErrorKind::semantic,
                         "missing grade for element '" + scope.labels[x] +
                             "'");
      }
      full.push_back(*grades[x]);
    }
    doc.fuzzies.push_back(
        {name.text, sname.text, FuzzySubset(host.value, std::move(full))});
  }

  void parse_set(Document& doc) {
    const Token name = expect(Tok::word, "a set name");
    check_fresh_name(doc, name);
    expect_keyword("on");
    const Token sname = expect(Tok::word, "a groupoid name");
    const NamedStructure& host = resolve_structure(doc, sname);
    ElementScope scope;
    for (int x = 0; x < host.value->size(); ++x) {
      scope.index.emplace(host.value->label(x), x);
      scope.labels.push_back(host.value->label(x));
    }
    expect(Tok::lbrace, "'{'");
    std::vector<int> members;
    while (peek().kind != Tok::rbrace) {
      const Token el = expect(Tok::word, "an element or '}'");
      int x = scope.resolve(el);
      if (std::find(members.begin(), members.end(), x) != members.end()) {
        throw ParseError(el.line, el.col, ErrorKind::semantic,
                         "duplicate member '" + el.text + "'");
      }
      members.push_back(x);
      skip_comma();
    }
    expect(Tok::rbrace, "'}'");
    std::sort(members.begin(), members.end());
    doc.sets.push_back({name.text, sname.text, std::move(members)});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

const NamedStructure* Document::find_structure(std::string_view name) const {
  for (const auto& s : structures) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const NamedFuzzy* Document::find_fuzzy(std::string_view name) const {
  for (const auto& f : fuzzies) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const NamedSet* Document::find_set(std::string_view name) const {
  for (const auto& s : sets) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Document parse(std::string_view source) { return Parser(source).run(); }

std::string print(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  auto gap = [&] {
    if (!first) out << "\n";
    first = false;
  };
  for (const auto& s : doc.structures) {
    gap();
    const Groupoid& g = *s.value;
    const int n = g.size();
    out << "groupoid " << s.name << " {\n  elements:";
    for (int x = 0; x < n; ++x) out << " " << g.label(x);
    out << "\n  order:";
    bool first_pair = true;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b && g.leq(a, b)) {
          out << (first_pair ? " " : ", ") << g.label(a) << " <= "
              << g.label(b);
          first_pair = false;
        }
      }
    }
    out << "\n  mul:";
    for (int x = 0; x < n; ++x) {
      out << (x == 0 ? " " : "\n       ");
      for (int y = 0; y < n; ++y) {
        out << (y == 0 ? "" : ", ") << g.label(x) << "*" << g.label(y) << "="
            << g.label(g.mul(x, y));
      }
      if (x + 1 < n) out << ",";
    }
    out << "\n}\n";
  }
  for (const auto& f : doc.fuzzies) {
    gap();
    const Groupoid& g = f.value.structure();
    out << "fuzzy " << f.name << " on " << f.structure << " {\n  ";
    for (int x = 0; x < g.size(); ++x) {
      out << (x == 0 ? "" : ", ") << g.label(x) << ": " << f.value.at(x).str();
    }
    out << "\n}\n";
  }
  for (const auto& s : doc.sets) {
    gap();
    const NamedStructure* host = doc.find_structure(s.structure);
    out << "set " << s.name << " on " << s.structure << " {";
    for (int x : s.members) out << " " << host->value->label(x);
    out << " }\n";
  }
  return out.str();
}

}  // namespace fog::dsl
