#pragma once

// Independent model of the trefoil Δ-groupoid: the free groupoid on
// x : A -> A and y : A -> B, with
//   H = {x, x^-1, x^2, x^-2, y, y^-1, xy, (xy)^-1}
// and j given by x <-> x^-1, x^2 <-> y, x^-2 <-> xy, y^-1 <-> (xy)^-1.
// Products are computed by free reduction of words, independently of the
// completion algorithm.

#include <cctype>
#include <string>
#include <vector>

#include "dgw/deltacore/delta_table.hpp"

namespace dgw::testing {

inline DeltaTable trefoil_reference() {
  // letters: x, X (x^-1), y, Y (y^-1); words spelled as strings
  const std::vector<std::string> h{"x", "X", "xx", "XX", "y", "Y", "xy", "YX"};
  auto inverse = [](const std::string& w) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      out += static_cast<char>(std::islower(*it) ? std::toupper(*it) : std::tolower(*it));
    return out;
  };
  auto reduce = [](const std::string& w) {
    std::string out;
    for (char c : w) {
      if (!out.empty() && out.back() != c && std::tolower(out.back()) == std::tolower(c))
        out.pop_back();
      else
        out.push_back(c);
    }
    return out;
  };
  // objects: A = 0, B = 1; only y leaves A for B
  auto dom = [](const std::string& w) { return w.front() == 'Y' ? 1u : 0u; };
  auto cod = [](const std::string& w) { return w.back() == 'y' ? 1u : 0u; };
  auto index = [&](const std::string& w) -> std::size_t {
    for (std::size_t q = 0; q < h.size(); ++q)
      if (h[q] == w) return q;
    return DeltaTable::none;
  };
  const std::vector<std::pair<std::string, std::string>> j_pairs{
      {"x", "X"}, {"xx", "y"}, {"XX", "xy"}, {"Y", "YX"}};

  DeltaTable t;
  t.num_objects = 2;
  t.object_names = {"A", "B"};
  t.names = h;
  for (const auto& w : h) {
    t.dom.push_back(dom(w));
    t.cod.push_back(cod(w));
    t.inv.push_back(index(inverse(w)));
    t.j.push_back(DeltaTable::none);
  }
  for (const auto& [a, b] : j_pairs) {
    t.j[index(a)] = index(b);
    t.j[index(b)] = index(a);
  }
  const std::size_t n = h.size();
  t.prod.assign(n * n, DeltaTable::none);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t.cod[a] == t.dom[b]) t.prod[a * n + b] = index(reduce(h[a] + h[b]));
  t.finalize();
  return t;
}

}  // namespace dgw::testing
