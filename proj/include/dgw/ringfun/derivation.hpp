#pragma once

// Structure constants of a finitely presented ring from its relations.
//
// Given generators, relations r = 0 and a candidate Z-basis of words, every
// product of two basis words is rewritten into the span of the basis using
// only consequences u * r * w of the relations (u, w words), i.e. elements of
// the two-sided ideal truncated at a word-length bound.  The consequences are
// row-reduced over Q with basis words ordered last, so non-basis words are
// eliminated first.  The bound is raised until every product reduces; the
// resulting table must be integral.  Soundness does not depend on the bound:
// every identity used lies in the ideal.  Completeness of the basis (that it
// is not further collapsed) is what the associativity certificate of the
// resulting algebra establishes.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dgw/error.hpp"
#include "dgw/ringfun/algebra.hpp"
#include "dgw/ringfun/polynomial.hpp"

namespace dgw {

struct DerivationResult {
  FiniteRankAlgebra algebra;
  std::size_t word_bound = 0;    // longest word used in the consequences
  std::size_t consequences = 0;  // number of relation multiples u r w
  std::size_t pivots = 0;        // rank of the truncated ideal
};

namespace detail {

class SparseEliminator {
 public:
  using Row = std::map<std::size_t, mpq_class>;  // column order index -> coefficient

  /// Reduces `row` by the pivots (one ordered pass suffices because a pivot
  /// row only contains columns at or after its pivot).
  void reduce(Row& row) const {
    for (auto it = row.begin(); it != row.end();) {
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end()) {
        ++it;
        continue;
      }
      const mpq_class f = it->second;
      std::size_t col = it->first;
      for (const auto& [c, v] : piv->second) {
        mpq_class& slot = row[c];
        slot -= f * v;
      }
      // drop zeros at or after col
      for (auto jt = row.find(col); jt != row.end();) {
        if (jt->second == 0) jt = row.erase(jt);
        else ++jt;
      }
      it = row.upper_bound(col);
    }
  }

  bool insert(Row row) {
    reduce(row);
    if (row.empty()) return false;
    const mpq_class lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    pivots_.emplace(row.begin()->first, std::move(row));
    return true;
  }

  std::size_t size() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

inline void words_up_to(std::size_t gens, std::size_t len, std::vector<Monomial>& out) {
  out.clear();
  out.push_back({});
  std::size_t start = 0;
  for (std::size_t l = 1; l <= len; ++l) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (std::size_t g = 0; g < gens; ++g) {
        Monomial m = out[i];
        m.push_back(g);
        out.push_back(std::move(m));
      }
    start = end;
  }
}

}  // namespace detail

/// Derives the multiplication table on `basis_words` (the first must be the
/// empty word, i.e. 1).  Throws ComputationError if some product does not
/// reduce into the basis span within `max_bound`, or reduces with a
/// non-integral coefficient.
inline DerivationResult derive_structure_constants(
    const std::vector<std::string>& generators, const std::vector<NCPolynomial>& relations,
    const std::vector<Monomial>& basis_words, const std::vector<std::string>& basis_names,
    std::size_t max_bound = 6) {
  const std::size_t n = basis_words.size();
  if (n == 0 || !basis_words[0].empty())
    throw ValidationError("the first basis word must be the empty word");
  if (basis_names.size() != n) throw ValidationError("one name per basis word is required");
  std::size_t need = 0;
  for (const auto& w : basis_words) need = std::max(need, 2 * w.size());

  for (std::size_t bound = std::max<std::size_t>(need, 2); bound <= max_bound; ++bound) {
    std::vector<Monomial> words;
    detail::words_up_to(generators.size(), bound, words);
    // column order: non-basis words first, longer first; basis words last
    std::vector<std::size_t> order(words.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto is_basis = [&](const Monomial& m) {
      return std::find(basis_words.begin(), basis_words.end(), m) != basis_words.end();
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      bool ba = is_basis(words[a]), bb = is_basis(words[b]);
      if (ba != bb) return !ba;
      if (words[a].size() != words[b].size()) return words[a].size() > words[b].size();
      return words[a] < words[b];
    });
    std::map<Monomial, std::size_t> column;
    for (std::size_t pos = 0; pos < order.size(); ++pos) column[words[order[pos]]] = pos;

    detail::SparseEliminator elim;
    std::size_t count = 0;
    for (const auto& rel : relations) {
      const std::size_t d = rel.degree();
      if (d > bound) continue;
      for (const auto& u : words) {
        if (u.size() + d > bound) continue;
        for (const auto& w : words) {
          if (u.size() + d + w.size() > bound) continue;
          detail::SparseEliminator::Row row;
          for (const auto& [m, c] : rel.terms()) {
            Monomial full = u;
            full.insert(full.end(), m.begin(), m.end());
            full.insert(full.end(), w.begin(), w.end());
            row[column.at(full)] += mpq_class(c);
          }
          for (auto it = row.begin(); it != row.end();) {
            if (it->second == 0) it = row.erase(it);
            else ++it;
          }
          ++count;
          elim.insert(std::move(row));
        }
      }
    }
    // a basis word that is a pivot would mean the basis is dependent
    std::vector<std::size_t> basis_col(n);
    for (std::size_t i = 0; i < n; ++i) basis_col[i] = column.at(basis_words[i]);

    std::vector<IntVector> table;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        Monomial w = basis_words[i];
        w.insert(w.end(), basis_words[j].begin(), basis_words[j].end());
        detail::SparseEliminator::Row row{{column.at(w), mpq_class(1)}};
        elim.reduce(row);
        IntVector coords(n);
        for (const auto& [c, v] : row) {
          auto k = std::find(basis_col.begin(), basis_col.end(), c);
          if (k == basis_col.end()) {
            ok = false;
            break;
          }
          if (v.get_den() != 1)
            throw ComputationError("product " + basis_names[i] + "*" + basis_names[j] +
                                   " has a non-integral coefficient");
          coords[static_cast<std::size_t>(k - basis_col.begin())] = v.get_num();
        }
        table.push_back(std::move(coords));
      }
    if (!ok) continue;
    for (std::size_t c : basis_col) {
      detail::SparseEliminator::Row probe{{c, mpq_class(1)}};
      elim.reduce(probe);
      if (probe.size() != 1 || probe.begin()->first != c)
        throw ComputationError("the candidate basis is linearly dependent modulo the relations");
    }
    IntVector unit(n);
    unit[0] = 1;
    DerivationResult res{FiniteRankAlgebra(basis_names, std::vector<Integer>(n, 0),
                                           std::move(table), std::move(unit)),
                         bound, count, elim.size()};
    return res;
  }
  throw ComputationError("products do not reduce into the basis within word length " +
                         std::to_string(max_bound));
}

}  // namespace dgw
