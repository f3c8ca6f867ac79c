#pragma once

#include <string>
#include <vector>

#include "semidual/module.hpp"

namespace fixtures {

using namespace semidual;

struct Artinian {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  int D;  // every monomial of degree D lies in the ideal
};

inline const std::vector<Artinian>& artinian() {
  static const std::vector<Artinian> list = {
      {"x3", {"x"}, {"x^3"}, 3},
      {"m2", {"x", "y"}, {"x^2", "x*y", "y^2"}, 2},
      {"ci", {"x", "y"}, {"x^2", "y^2"}, 3},
      {"x2xyy3", {"x", "y"}, {"x^2", "x*y", "y^3"}, 3},
      {"gor", {"x", "y"}, {"x^2 - y^2", "x*y"}, 3},
      {"m2z", {"x", "y", "z"}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}, 2},
  };
  return list;
}

inline Ring make(const Artinian& a) {
  std::vector<int> w(a.vars.size(), 1);
  return make_ring(Field::rationals(), a.vars, a.relations, MonomialOrder::grevlex(a.vars.size()), w);
}

inline Ring x3() { return make(artinian()[0]); }
inline Ring rm() { return make(artinian()[1]); }

/// k[t^3, t^4, t^5] as Q[x,y,z]/(y^2 - xz, yz - x^3, z^2 - x^2 y), weights (3,4,5).
inline Ring semigroup() {
  return make_ring(Field::rationals(), {"x", "y", "z"}, {"y^2 - x*z", "y*z - x^3", "z^2 - x^2*y"},
                   MonomialOrder::grevlex(3), std::vector<int>{3, 4, 5});
}

inline PresentedModule coker(const Ring& R, std::size_t rows, const std::vector<std::vector<std::string>>& cols) {
  Matrix m(R, rows);
  for (const auto& c : cols) {
    Vec v;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Polynomial e = R->parse(c[i]);
      for (const auto& t : e.terms()) v.push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(i)});
    }
    m.push(std::move(v));
  }
  std::optional<std::vector<int>> deg;
  if (R->graded()) deg = std::vector<int>(rows, 0);
  return PresentedModule(m, deg);
}

/// R / (x_1, ..., x_n).
inline PresentedModule residue_field(const Ring& R) {
  std::vector<std::vector<std::string>> cols;
  for (const auto& n : R->names()) cols.push_back({n});
  return coker(R, 1, cols);
}

inline std::vector<Polynomial> polys(const Ring& R, const std::vector<std::string>& s) {
  std::vector<Polynomial> out;
  for (const auto& t : s) out.push_back(R->parse(t));
  return out;
}

}  // namespace fixtures
