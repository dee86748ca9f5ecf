#pragma once

// The Δ-groupoid axiom checker, written once against a small "model"
// interface so that the same code verifies explicit finite groupoids and
// presented groupoids (where equality is decided by rewriting).
//
// A model M provides
//
//   using Elem = ...;                            groupoid element
//   std::size_t h_size() const;                  |H|
//   Elem h_elem(std::size_t x) const;            x-th element of H
//   std::optional<std::size_t> h_index(const Elem&) const;
//   std::size_t dom(const Elem&) const, cod(const Elem&) const;
//   std::optional<Elem> compose(const Elem&, const Elem&) const;  // xy
//   Elem inverse(const Elem&) const;
//   bool is_identity(const Elem&) const;
//   std::size_t j(std::size_t x) const;          j on H, by H-index
//   std::string name(const Elem&) const;
//
// Elements must be comparable with ==.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dgw {

struct AxiomViolation {
  /// One of "groupoid", "generation", "j", "i", "ii", "iii", "iv".
  std::string axiom;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  /// Names of identity morphisms found in H.  Reported for information; the
  /// definition does not forbid them.
  std::vector<std::string> identities_in_h;
  std::size_t pairs_checked = 0;

  bool passed() const { return violations.empty(); }

  void add(std::string axiom, std::string witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
};

/// Checks i(H) = H, that j is an involution of H, iji = jij, and the
/// composability and product conditions for every pair in H x H.
template <class Model>
void check_delta_axioms(const Model& m, AxiomReport& report) {
  const std::size_t n = m.h_size();
  std::vector<std::size_t> inv(n), jj(n);
  std::vector<bool> inv_ok(n, true);
  for (std::size_t x = 0; x < n; ++x) {
    auto e = m.h_elem(x);
    if (m.is_identity(e)) report.identities_in_h.push_back(m.name(e));
    auto ix = m.h_index(m.inverse(e));
    if (!ix) {
      report.add("i", "inverse of " + m.name(e) + " is not in H");
      inv_ok[x] = false;
      inv[x] = x;
    } else {
      inv[x] = *ix;
    }
    jj[x] = m.j(x);
  }
  bool j_ok = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (jj[x] >= n) {
      report.add("j", "j(" + m.name(m.h_elem(x)) + ") is not in H");
      j_ok = false;
    } else if (jj[jj[x]] != x) {
      report.add("j", "j is not an involution at " + m.name(m.h_elem(x)));
    }
  }
  if (!j_ok) return;
  auto k = [&](std::size_t x) { return inv[jj[inv[x]]]; };
  for (std::size_t x = 0; x < n; ++x) {
    if (inv[jj[inv[x]]] != jj[inv[jj[x]]]) {
      report.add("ii", "iji != jij at " + m.name(m.h_elem(x)));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto ex = m.h_elem(x);
    for (std::size_t y = 0; y < n; ++y) {
      auto ey = m.h_elem(y);
      auto xy = m.compose(ex, ey);
      if (!xy) continue;
      ++report.pairs_checked;
      std::string pair = "(" + m.name(ex) + ", " + m.name(ey) + ")";
      auto kx = m.h_elem(k(x));
      auto jy = m.h_elem(jj[y]);
      auto kxjy = m.compose(kx, jy);
      if (!kxjy) {
        report.add("iii", "(k(x), j(y)) not composable for " + pair);
        continue;
      }
      auto hxy = m.h_index(*xy);
      if (!hxy) continue;  // composable but not H-composable
      auto hk = m.h_index(*kxjy);
      if (!hk) {
        report.add("iv", "k(x)j(y) is not in H for H-composable " + pair);
        continue;
      }
      // k(xy) i(k(y)) = k(k(x) j(y))
      auto lhs = m.compose(m.h_elem(k(*hxy)), m.h_elem(inv[k(y)]));
      if (!lhs) {
        report.add("iv", "k(xy) and ik(y) not composable for " + pair);
        continue;
      }
      if (!(*lhs == m.h_elem(k(*hk)))) {
        report.add("iv", "k(xy)ik(y) != k(k(x)j(y)) for " + pair);
      }
    }
  }
}

}  // namespace dgw
