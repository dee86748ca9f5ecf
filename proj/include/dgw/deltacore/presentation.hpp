#pragma once

// Presented Δ-groupoids.
//
// A presentation is a quiver whose arrows are the elements of H, together with
// the involutions i (formal inverse) and j on the arrows and a partial product
// table μ: V -> H on a set V of composable pairs.  The presented groupoid is
// the free groupoid on the quiver modulo x·i(x) = 1 and x·y = μ(x,y) for
// (x,y) in V.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dgw/error.hpp"

namespace dgw {

struct ProductEntry {
  std::size_t x = 0, y = 0, xy = 0;
  friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
  friend auto operator<=>(const ProductEntry&, const ProductEntry&) = default;
};

struct DeltaPresentation {
  std::vector<std::string> node_names;
  std::vector<std::string> arrow_names;
  std::vector<std::size_t> dom, cod;  // per arrow
  std::vector<std::size_t> inv;       // i, per arrow
  std::vector<std::size_t> j;         // per arrow
  std::vector<ProductEntry> products; // sorted by (x, y)

  std::size_t num_nodes() const noexcept { return node_names.size(); }
  std::size_t num_arrows() const noexcept { return arrow_names.size(); }
  std::size_t k(std::size_t x) const { return inv[j[inv[x]]]; }

  /// Checks the structural invariants; throws ValidationError on the first
  /// failure.  Sorts `products` as a side effect.
  void validate() {
    const std::size_t n = num_arrows();
    const std::size_t m = num_nodes();
    if (dom.size() != n || cod.size() != n || inv.size() != n || j.size() != n)
      throw ValidationError("presentation tables have inconsistent sizes");
    for (std::size_t x = 0; x < n; ++x) {
      const std::string& nm = arrow_names[x];
      if (dom[x] >= m || cod[x] >= m)
        throw ValidationError("arrow " + nm + " has an endpoint out of range");
      if (inv[x] >= n || j[x] >= n)
        throw ValidationError("i or j of arrow " + nm + " out of range");
      if (inv[inv[x]] != x) throw ValidationError("i is not an involution at " + nm);
      if (j[j[x]] != x) throw ValidationError("j is not an involution at " + nm);
      if (dom[inv[x]] != cod[x] || cod[inv[x]] != dom[x])
        throw ValidationError("i(" + nm + ") does not swap the endpoints");
    }
    for (std::size_t x = 0; x < n; ++x)
      if (inv[j[inv[x]]] != j[inv[j[x]]])
        throw ValidationError("iji != jij at " + arrow_names[x]);
    std::sort(products.begin(), products.end());
    for (std::size_t e = 0; e < products.size(); ++e) {
      const auto& p = products[e];
      if (p.x >= n || p.y >= n || p.xy >= n)
        throw ValidationError("product entry refers to a missing arrow");
      if (cod[p.x] != dom[p.y])
        throw ValidationError("product of non-composable arrows " +
                              arrow_names[p.x] + ", " + arrow_names[p.y]);
      if (dom[p.xy] != dom[p.x] || cod[p.xy] != cod[p.y])
        throw ValidationError("product " + arrow_names[p.x] + "·" +
                              arrow_names[p.y] + " has wrong endpoints");
      if (e > 0 && products[e - 1].x == p.x && products[e - 1].y == p.y &&
          products[e - 1].xy != p.xy)
        throw ValidationError("conflicting products for " + arrow_names[p.x] +
                              "·" + arrow_names[p.y]);
    }
    products.erase(std::unique(products.begin(), products.end()), products.end());
  }

  /// μ(x, y) if (x, y) is in the table.
  std::optional<std::size_t> product(std::size_t x, std::size_t y) const {
    auto it = std::lower_bound(products.begin(), products.end(),
                               ProductEntry{x, y, 0});
    if (it != products.end() && it->x == x && it->y == y) return it->xy;
    return std::nullopt;
  }

  /// Human-readable listing: nodes, arrows with endpoints, i, j, and μ.
  std::string to_text() const {
    std::ostringstream os;
    os << "nodes " << num_nodes() << ":";
    for (const auto& s : node_names) os << " " << s;
    os << "\narrows " << num_arrows() << "\n";
    for (std::size_t x = 0; x < num_arrows(); ++x) {
      os << "  " << arrow_names[x] << ": " << node_names[dom[x]] << " -> "
         << node_names[cod[x]] << "  i=" << arrow_names[inv[x]]
         << "  j=" << arrow_names[j[x]] << "\n";
    }
    os << "products " << products.size() << "\n";
    for (const auto& p : products)
      os << "  " << arrow_names[p.x] << " " << arrow_names[p.y] << " = "
         << arrow_names[p.xy] << "\n";
    return os.str();
  }
};

/// A* = dom(j(x)) for any arrow x with dom(x) = A.  Throws StructuralError if
/// no arrow starts at A or if the choices disagree.
inline std::size_t object_involution(const DeltaPresentation& p, std::size_t node) {
  std::size_t result = p.num_nodes();
  for (std::size_t x = 0; x < p.num_arrows(); ++x) {
    if (p.dom[x] != node) continue;
    std::size_t a = p.dom[p.j[x]];
    if (result == p.num_nodes()) {
      result = a;
    } else if (result != a) {
      throw StructuralError("object involution is not well defined at " +
                            p.node_names[node]);
    }
  }
  if (result == p.num_nodes())
    throw StructuralError("no arrow starts at " + p.node_names[node]);
  return result;
}

}  // namespace dgw
