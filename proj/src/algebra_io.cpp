#include "prolong/algebra_io.hpp"

#include <json.hpp>

namespace prolong {

using json = nlohmann::ordered_json;

std::string algebra_to_json(const GradedAlgebra& a) {
  json j;
  j["basis"] = json::array();
  for (auto& e : a.basis()) j["basis"].push_back({{"name", e.name}, {"degree", e.degree}});
  j["brackets"] = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t l = i + 1; l < a.dim(); ++l) {
      Vec v = a.bracket_basis(i, l);
      json value = json::array();
      for (std::size_t m = 0; m < v.size(); ++m)
        if (v[m] != 0)
          value.push_back({{"name", a.element(m).name}, {"coeff", rat_to_string(v[m])}});
      if (!value.empty())
        j["brackets"].push_back({{"left", a.element(i).name},
                                 {"right", a.element(l).name},
                                 {"value", std::move(value)}});
    }
  }
  return j.dump(2) + "\n";
}

GradedAlgebra algebra_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<BasisElement> basis;
  for (auto& e : j.at("basis"))
    basis.push_back({e.at("name").get<std::string>(), e.at("degree").get<int>()});
  std::vector<BracketSpec> brackets;
  for (auto& b : j.at("brackets")) {
    BracketSpec spec;
    spec.left = b.at("left").get<std::string>();
    spec.right = b.at("right").get<std::string>();
    for (auto& t : b.at("value"))
      spec.value.emplace_back(t.at("name").get<std::string>(),
                              rat_parse(t.at("coeff").get<std::string>()));
    brackets.push_back(std::move(spec));
  }
  return GradedAlgebra::build(std::move(basis), brackets);
}

}  // namespace prolong
