#pragma once

// The graded sets V_n of a Δ-groupoid with their face maps and symmetric
// group actions.
//
//   V_-1 = {*},  V_0 = connected components,  V_1 = objects,  V_2 = H,
//   V_n (n >= 3) = (n-1)-tuples (x_1, ..., x_{n-1}) of H-elements whose
//   consecutive pairs are H-composable and whose faces ∂_1 .. ∂_n lie in
//   V_{n-1}.
//
// Faces of a tuple t = (x_1, ..., x_m) in V_n (m = n-1):
//   ∂_0 t = (y_1, ..., y_{m-1}),  y_q = z_q * x_{q+1},  z_q = x_1 ... x_q,
//           where x * y = j(k(x) j(y));
//   ∂_1 t = (x_2, ..., x_m);
//   ∂_q t = (..., x_{q-1} x_q, ...) for 2 <= q <= m (merge of two entries);
//   ∂_n t = (x_1, ..., x_{m-1}).
// Low degrees: ∂_0 x = cod j(x), ∂_1 x = cod x, ∂_2 x = dom x on H;
// ∂_0 A = [A*], ∂_1 A = [A] on objects; ∂_0 c = * on components.
//
// Generators s_1 .. s_n of S_{n+1} act on V_n:
//   degree 1: s_1 A = A*;  degree 2: s_1 = j, s_2 = i;
//   degree n >= 3: s_1 t = (j(x_1), y_1, ..., y_{m-1}),
//                  s_2 t = (i(x_1), x_1 x_2, x_3, ...),
//                  s_q t = (..., x_{q-2} x_{q-1}, i(x_{q-1}), x_{q-1} x_q, ...),
//                  s_n t = (..., x_{m-1} x_m, i(x_m)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgw/deltacore/delta_table.hpp"
#include "dgw/error.hpp"
#include "dgw/perm.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

using Tuple = std::vector<std::uint32_t>;

namespace detail {

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t x : t) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace detail

class TupleComplex {
 public:
  static constexpr std::size_t default_max_dim = 12;

  struct Options {
    std::size_t max_dim = default_max_dim;
    /// If set, every V_n is listed in a pseudo-random order drawn from this
    /// seed (the homology must not depend on it).
    std::optional<std::uint64_t> shuffle_seed;
  };

  explicit TupleComplex(DeltaTable table) : TupleComplex(std::move(table), Options{}) {}

  TupleComplex(DeltaTable table, Options opts) : t_(std::move(table)), opts_(opts) {
    const std::size_t n = t_.size();
    std::vector<Tuple> level;
    // degree -1, 0, 1, 2
    levels_.push_back({Tuple{}});
    for (std::size_t c = 0; c < t_.num_components; ++c) level.push_back({u32(c)});
    shuffle(level, 0);
    levels_.push_back(level);
    level.clear();
    for (std::size_t a = 0; a < t_.num_objects; ++a) level.push_back({u32(a)});
    shuffle(level, 1);
    levels_.push_back(level);
    level.clear();
    for (std::size_t x = 0; x < n; ++x) level.push_back({u32(x)});
    levels_.push_back(level);
    shuffle(levels_.back(), 2);
    star_object_.assign(t_.num_objects, DeltaTable::none);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = t_.dom[x], s = t_.dom[t_.j[x]];
      if (star_object_[a] != DeltaTable::none && star_object_[a] != s)
        throw StructuralError("object involution is not well defined at " +
                              t_.object_names[a]);
      star_object_[a] = s;
    }
    rebuild_index(2);

    // degree 3: H-composable pairs; higher degrees by extension
    if (opts_.max_dim >= 2 && n > 0) {
      level.clear();
      for (auto [x, y] : t_.h_composable_pairs()) level.push_back({u32(x), u32(y)});
      if (!level.empty()) push_level(std::move(level));
    }
    while (levels_.size() >= 5 && levels_.size() - 2 <= opts_.max_dim) {
      auto next = extend(levels_.size() - 2);
      if (next.empty()) break;
      push_level(std::move(next));
    }
    // V_{max_dim + 1} was computed only to close the top boundary
    truncated_ = top_degree() > static_cast<long>(opts_.max_dim);
  }

  const DeltaTable& table() const noexcept { return t_; }

  /// Highest degree with a nonempty V_n that was enumerated (-1 at least).
  long top_degree() const noexcept {
    long top = -1;
    for (std::size_t l = 0; l < levels_.size(); ++l)
      if (!levels_[l].empty()) top = static_cast<long>(l) - 1;
    return top;
  }
  bool truncated() const noexcept { return truncated_; }
  std::size_t max_dim() const noexcept { return opts_.max_dim; }

  /// Elements of V_n (n >= -1); empty above the enumerated range.
  const std::vector<Tuple>& elements(long n) const {
    static const std::vector<Tuple> empty;
    if (n < -1 || static_cast<std::size_t>(n + 1) >= levels_.size()) return empty;
    return levels_[static_cast<std::size_t>(n + 1)];
  }
  std::size_t size(long n) const { return elements(n).size(); }

  /// Index of a tuple in V_n, if present.
  std::optional<std::size_t> index_of(long n, const Tuple& t) const {
    if (n < -1 || static_cast<std::size_t>(n + 1) >= index_.size()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(n + 1)];
    auto it = idx.find(t);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  /// x * y = j(k(x) j(y)).  Throws StructuralError if k(x) j(y) is not in H.
  std::size_t star(std::size_t x, std::size_t y) const {
    std::size_t p = t_.product(t_.k(x), t_.j[y]);
    if (p == DeltaTable::none)
      throw StructuralError("k(" + t_.names[x] + ") j(" + t_.names[y] + ") is not in H");
    return t_.j[p];
  }

  /// The equivalent form i(j(x)) j(xy), or nothing if that product is not
  /// in H.
  std::optional<std::size_t> star_alt(std::size_t x, std::size_t y) const {
    std::size_t xy = t_.product(x, y);
    if (xy == DeltaTable::none) return std::nullopt;
    std::size_t p = t_.product(t_.inv[t_.j[x]], t_.j[xy]);
    if (p == DeltaTable::none) return std::nullopt;
    return p;
  }

  /// Face ∂_q of the given element of V_n (0 <= q <= n), as a tuple of
  /// V_{n-1}.
  Tuple face(long n, const Tuple& t, std::size_t q) const {
    if (n <= -1) throw ValidationError("degree -1 has no faces");
    if (q > static_cast<std::size_t>(n)) throw ValidationError("face index out of range");
    if (n == 0) return {};
    if (n == 1) {
      std::size_t a = q == 0 ? star_object(t[0]) : t[0];
      return {u32(t_.component[a])};
    }
    if (n == 2) {
      std::size_t x = t[0];
      std::size_t a = q == 0 ? t_.cod[t_.j[x]] : q == 1 ? t_.cod[x] : t_.dom[x];
      return {u32(a)};
    }
    if (q == 0) return star_chain(t);
    if (q == 1) return Tuple(t.begin() + 1, t.end());
    if (q == static_cast<std::size_t>(n)) return Tuple(t.begin(), t.end() - 1);
    // merge x_{q-1} x_q (1-based)
    Tuple out(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(q - 2));
    out.push_back(u32(product(t[q - 2], t[q - 1])));
    out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(q), t.end());
    return out;
  }

  /// Index in V_{n-1} of face ∂_q of element e of V_n.  Throws
  /// StructuralError if the face is not in V_{n-1}.
  std::size_t face_index(long n, std::size_t e, std::size_t q) const {
    Tuple f = face(n, elements(n)[e], q);
    auto idx = index_of(n - 1, f);
    if (!idx)
      throw StructuralError("face " + std::to_string(q) + " of " + describe(n, e) +
                            " is not in V_" + std::to_string(n - 1));
    return *idx;
  }

  /// Generator s_s (1 <= s <= n) applied to a tuple of V_n.
  Tuple act(long n, const Tuple& t, std::size_t s) const {
    if (n < 1 || s < 1 || s > static_cast<std::size_t>(n))
      throw ValidationError("no generator s_" + std::to_string(s) + " in degree " +
                            std::to_string(n));
    if (n == 1) return {u32(star_object(t[0]))};
    if (n == 2) return {u32(s == 1 ? t_.j[t[0]] : t_.inv[t[0]])};
    const std::size_t m = t.size();
    if (s == 1) {
      Tuple out{u32(t_.j[t[0]])};
      Tuple y = star_chain(t);
      out.insert(out.end(), y.begin(), y.end());
      return out;
    }
    if (s == 2) {
      Tuple out{u32(t_.inv[t[0]]), u32(product(t[0], t[1]))};
      out.insert(out.end(), t.begin() + 2, t.end());
      return out;
    }
    if (s < static_cast<std::size_t>(n)) {
      // 1-based x_{s-2} x_{s-1}, i(x_{s-1}), x_{s-1} x_s
      Tuple out(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(s - 3));
      out.push_back(u32(product(t[s - 3], t[s - 2])));
      out.push_back(u32(t_.inv[t[s - 2]]));
      out.push_back(u32(product(t[s - 2], t[s - 1])));
      out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(s), t.end());
      return out;
    }
    Tuple out(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(m - 2));
    out.push_back(u32(product(t[m - 2], t[m - 1])));
    out.push_back(u32(t_.inv[t[m - 1]]));
    return out;
  }

  /// s_s as a map on the indices of V_n.  Throws StructuralError if the
  /// action leaves V_n.
  std::vector<std::size_t> action(long n, std::size_t s) const {
    const auto& el = elements(n);
    std::vector<std::size_t> out(el.size());
    for (std::size_t e = 0; e < el.size(); ++e) {
      auto idx = index_of(n, act(n, el[e], s));
      if (!idx)
        throw StructuralError("s_" + std::to_string(s) + " maps " + describe(n, e) +
                              " outside V_" + std::to_string(n));
      out[e] = *idx;
    }
    return out;
  }

  /// A permutation g of {0..n} acting on V_n via a reduced word.
  std::size_t apply(long n, const Perm& g, std::size_t e) const {
    auto w = reduced_word(g);
    Tuple t = elements(n)[e];
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = act(n, t, *it);
    auto idx = index_of(n, t);
    if (!idx) throw StructuralError("group action leaves V_" + std::to_string(n));
    return *idx;
  }

  /// Matrix of ∂ = Σ (-1)^q ∂_q from V_n to V_{n-1}.
  IntMatrix boundary(long n) const {
    const std::size_t rows = size(n - 1), cols = size(n);
    IntMatrix d(rows, cols);
    if (n <= -1) return d;
    for (std::size_t e = 0; e < cols; ++e)
      for (std::size_t q = 0; q <= static_cast<std::size_t>(n); ++q)
        d(face_index(n, e, q), e) += (q % 2 == 0) ? 1 : -1;
    return d;
  }

  /// Generators e_x + e_{s x} of A_n (duplicates removed), as columns.
  IntMatrix a_relations(long n) const {
    const std::size_t dim = size(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 1; n >= 1 && s <= static_cast<std::size_t>(n); ++s) {
      auto act_s = action(n, s);
      for (std::size_t e = 0; e < dim; ++e)
        pairs.emplace_back(std::min(e, act_s[e]), std::max(e, act_s[e]));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    IntMatrix a(dim, pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      a(pairs[c].first, c) += 1;
      a(pairs[c].second, c) += 1;
    }
    return a;
  }

  /// Human-readable element of V_n.
  std::string describe(long n, std::size_t e) const {
    const Tuple& t = elements(n)[e];
    if (n == -1) return "*";
    if (n == 0) return "component " + std::to_string(t[0]);
    if (n == 1) return "object " + t_.object_names[t[0]];
    std::string s = "(";
    for (std::size_t q = 0; q < t.size(); ++q) {
      if (q) s += ", ";
      s += t_.names[t[q]];
    }
    return s + ")";
  }

 private:
  // A* = dom j(x) for any x in H starting at A.
  std::size_t star_object(std::size_t a) const {
    if (star_object_[a] == DeltaTable::none)
      throw StructuralError("no element of H starts at object " + t_.object_names[a] +
                            ", so its involution is undefined");
    return star_object_[a];
  }

  static std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

  std::size_t product(std::size_t x, std::size_t y) const {
    std::size_t p = t_.product(x, y);
    if (p == DeltaTable::none)
      throw StructuralError("(" + t_.names[x] + ", " + t_.names[y] +
                            ") is not H-composable");
    return p;
  }

  // (y_1, ..., y_{m-1}) with y_q = z_q * x_{q+1}; every prefix product z_q
  // must lie in H.
  Tuple star_chain(const Tuple& t) const {
    Tuple out;
    std::size_t z = t[0];
    for (std::size_t q = 1; q < t.size(); ++q) {
      out.push_back(u32(star(z, t[q])));
      if (q + 1 < t.size()) {
        std::size_t next = t_.product(z, t[q]);
        if (next == DeltaTable::none)
          throw StructuralError("prefix product z_" + std::to_string(q + 1) +
                                " is not in H");
        z = next;
      }
    }
    return out;
  }

  void shuffle(std::vector<Tuple>& level, std::size_t salt) const {
    if (!opts_.shuffle_seed) return;
    std::mt19937_64 rng(*opts_.shuffle_seed + salt);
    std::shuffle(level.begin(), level.end(), rng);
  }

  void rebuild_index(std::size_t upto_degree) {
    index_.resize(upto_degree + 2);
    for (std::size_t l = 0; l < upto_degree + 2; ++l) {
      index_[l].clear();
      for (std::size_t e = 0; e < levels_[l].size(); ++e) index_[l].emplace(levels_[l][e], e);
    }
  }

  void push_level(std::vector<Tuple> level) {
    shuffle(level, levels_.size());
    levels_.push_back(std::move(level));
    std::size_t l = levels_.size() - 1;
    index_.resize(levels_.size());
    index_[l].clear();
    for (std::size_t e = 0; e < levels_[l].size(); ++e) index_[l].emplace(levels_[l][e], e);
  }

  // Candidates for V_{n+1}: extensions of V_n by one H-composable entry whose
  // faces ∂_1 .. ∂_{n+1} lie in V_n; ∂_0 is then checked, not assumed.
  std::vector<Tuple> extend(std::size_t n) {
    const long d = static_cast<long>(n);
    std::vector<Tuple> out;
    for (const Tuple& t : elements(d)) {
      for (std::size_t y = 0; y < t_.size(); ++y) {
        if (!t_.h_composable(t.back(), y)) continue;
        Tuple c = t;
        c.push_back(u32(y));
        bool ok = true;
        for (std::size_t q = 1; q <= n + 1 && ok; ++q) {
          if (q >= 2 && q <= n && !t_.h_composable(c[q - 2], c[q - 1])) {
            ok = false;
            break;
          }
          ok = index_of(d, face(d + 1, c, q)).has_value();
        }
        if (!ok) continue;
        Tuple f0;
        try {
          f0 = face(d + 1, c, 0);
        } catch (const StructuralError& e) {
          throw StructuralError(std::string(e.what()) + " for a candidate of V_" +
                                std::to_string(n + 1));
        }
        if (!index_of(d, f0))
          throw StructuralError("face 0 of a tuple of V_" + std::to_string(n + 1) +
                                " is not in V_" + std::to_string(n));
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  DeltaTable t_;
  Options opts_;
  std::vector<std::vector<Tuple>> levels_;  // levels_[n + 1] = V_n
  std::vector<std::unordered_map<Tuple, std::size_t, detail::TupleHash>> index_;
  std::vector<std::size_t> star_object_;
  bool truncated_ = false;
};

}  // namespace dgw
