#include "fog/json_io.hpp"

#include <variant>

namespace fog {

using nlohmann::json;

json to_json(const Grade& g) { return g.str(); }

json to_json(const Groupoid& s) {
  const int n = s.size();
  json elements = json::array();
  for (int x = 0; x < n; ++x) elements.push_back(s.label(x));
  json mul = json::array();
  json leq = json::array();
  for (int x = 0; x < n; ++x) {
    json mrow = json::array();
    json lrow = json::array();
    for (int y = 0; y < n; ++y) {
      mrow.push_back(s.label(s.mul(x, y)));
      lrow.push_back(s.leq(x, y));
    }
    mul.push_back(std::move(mrow));
    leq.push_back(std::move(lrow));
  }
  return json{{"elements", std::move(elements)},
              {"leq", std::move(leq)},
              {"mul", std::move(mul)}};
}

json to_json(const FuzzySubset& f) {
  json grades = json::array();
  for (int x = 0; x < f.size(); ++x) grades.push_back(f.at(x).str());
  return grades;
}

json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ElementWitness>) {
          return json{{"kind", "element"},
                      {"element", v.label},
                      {"index", v.index},
                      {"f_x", v.f_x.str()},
                      {"f_xx", v.f_xx.str()}};
        } else if constexpr (std::is_same_v<T, TripleWitness>) {
          return json{{"kind", "triple"},
                      {"a", v.a_label},
                      {"x", v.x_label},
                      {"y", v.y_label},
                      {"min_fx2_fy2", v.min_fx2_fy2.str()},
                      {"f_a", v.f_a.str()}};
        } else if constexpr (std::is_same_v<T, SubsetWitness>) {
          return json{{"kind", "subset"},
                      {"g", to_json(v.g)},
                      {"exceeds_at", v.exceeds_at_label},
                      {"g_at", v.g.at(v.exceeds_at).str()}};
        } else {
          static_assert(std::is_same_v<T, PointDiffWitness>);
          return json{{"kind", "point-diff"},
                      {"element", v.label},
                      {"left", v.left.str()},
                      {"right", v.right.str()}};
        }
      },
      w);
}

json to_json(const WitnessReport& r) {
  json out{{"checker", r.checker}, {"holds", r.holds}};
  out["witness"] = r.witness.has_value() ? to_json(*r.witness) : json(nullptr);
  return out;
}

json to_json(const SearchHit& hit) {
  json subsets = json::array();
  for (const auto& f : hit.subsets) subsets.push_back(to_json(f));
  return json{{"structure", to_json(*hit.structure)},
              {"subsets", std::move(subsets)},
              {"report", to_json(hit.report)}};
}

json to_json(const SearchResult& result) {
  json found = json::array();
  for (const auto& hit : result.found) found.push_back(to_json(hit));
  return json{{"examined", result.examined},
              {"exhausted", result.exhausted},
              {"found", std::move(found)}};
}

json to_json(const gallery::GalleryCheck& check) {
  return json{{"report", to_json(check.report)},
              {"transcript", check.transcript}};
}

std::string describe(const Witness& w) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ElementWitness>) {
          return "f(" + v.label + ")=" + v.f_x.str() + " < f(" + v.label +
                 "*" + v.label + ")=" + v.f_xx.str();
        } else if constexpr (std::is_same_v<T, TripleWitness>) {
          return "a=" + v.a_label + " <= " + v.x_label + "*" + v.y_label +
                 " but min{f(" + v.x_label + "^2),f(" + v.y_label +
                 "^2)}=" + v.min_fx2_fy2.str() + " > f(a)=" + v.f_a.str();
        } else if constexpr (std::is_same_v<T, SubsetWitness>) {
          std::string grades;
          for (int x = 0; x < v.g.size(); ++x) {
            if (x > 0) grades += ", ";
            grades += v.g.structure().label(x) + ": " + v.g.at(x).str();
          }
          return "g = {" + grades + "} has g o g below f but g(" +
                 v.exceeds_at_label + ")=" + v.g.at(v.exceeds_at).str() +
                 " exceeds f";
        } else {
          static_assert(std::is_same_v<T, PointDiffWitness>);
          return "values differ at " + v.label + ": " + v.left.str() +
                 " vs " + v.right.str();
        }
      },
      w);
}

std::string describe(const WitnessReport& r) {
  if (r.holds) return r.checker + ": holds";
  std::string out = r.checker + ": fails";
  if (r.witness.has_value()) out += " — " + describe(*r.witness);
  return out;
}

}  // namespace fog
