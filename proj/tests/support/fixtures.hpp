#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fakequad/branching.hpp"

namespace fixtures {

inline std::shared_ptr<const fakequad::Group> group(const std::string& label) {
  return std::make_shared<const fakequad::Group>(fakequad::construct_group(label));
}

inline std::vector<fakequad::Elem> elems(const fakequad::Group& g, const std::string& text) {
  std::vector<fakequad::Elem> out;
  for (const auto& p : fakequad::parse_perm_list(text, g.degree())) out.push_back(g.index_of(p));
  return out;
}

inline fakequad::GenVectorCheck check(const std::shared_ptr<const fakequad::Group>& g, const std::string& text,
                                      std::vector<std::size_t> orders) {
  return fakequad::verify_generating_vector(g, elems(*g, text), std::move(orders));
}

inline fakequad::GenVector vec(const std::shared_ptr<const fakequad::Group>& g, const std::string& text,
                               std::vector<std::size_t> orders) {
  return *check(g, text, std::move(orders)).vector;
}

inline const char* const kMainGv1 = "(2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)";
inline const char* const kMainGv2 = "(1,2,3) (3,4,5) (4,3,2) (2,1,5)";

inline fakequad::UnmixedPair main_pair() {
  const auto a5 = group("A5");
  return fakequad::make_pair(vec(a5, kMainGv1, {2, 5, 5}), vec(a5, kMainGv2, {3, 3, 3, 3}));
}

}  // namespace fixtures
