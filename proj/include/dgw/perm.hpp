#pragma once

// Permutations of the non-negative integers with finite support.
//
// A permutation fixing every point >= n is an element of S_n, and S_m sits
// inside S_n for m <= n without any change of representation: trailing fixed
// points are trimmed, so two permutations compare equal exactly when they
// agree everywhere.
//
// Composition convention (used everywhere in the library):
//
//     (g * h)(x) = g(h(x))
//
// i.e. h acts first.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgw/error.hpp"

namespace dgw {

class Perm {
 public:
  /// The identity.
  Perm() = default;

  /// From the image list (images[x] = g(x)).  Throws ValidationError if the
  /// list is not a bijection of {0, ..., n-1}.
  explicit Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v]) {
        throw ValidationError("permutation image list is not a bijection");
      }
      seen[v] = true;
    }
    trim();
  }

  /// The elementary transposition s_i = (i-1, i), i >= 1.
  static Perm transposition(std::size_t i) {
    if (i == 0) {
      throw ValidationError("transposition index must be at least 1");
    }
    std::vector<std::size_t> im(i + 1);
    std::iota(im.begin(), im.end(), 0);
    std::swap(im[i - 1], im[i]);
    return Perm(std::move(im));
  }

  /// The cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0.
  static Perm cycle(std::initializer_list<std::size_t> points) {
    return cycle(std::vector<std::size_t>(points));
  }

  static Perm cycle(const std::vector<std::size_t>& points) {
    std::size_t n = 0;
    for (std::size_t p : points) {
      n = std::max(n, p + 1);
    }
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (std::size_t k = 0; k < points.size(); ++k) {
      im[points[k]] = points[(k + 1) % points.size()];
    }
    return Perm(std::move(im));
  }

  /// Parses cycle notation such as "(0 1 2)(3 4)" or "e" for the identity.
  /// Cycles are composed right to left, as products of permutations.
  static Perm parse(std::string_view text) {
    Perm result;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
        ++pos;
      }
    };
    skip_ws();
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
      skip_ws();
      if (pos != text.size()) {
        throw ValidationError("bad permutation: '" + std::string(text) + "'");
      }
      return result;
    }
    std::vector<Perm> cycles;
    while (pos < text.size()) {
      if (text[pos] != '(') {
        throw ValidationError("bad permutation: '" + std::string(text) + "'");
      }
      ++pos;
      std::vector<std::size_t> pts;
      for (;;) {
        skip_ws();
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          ++pos;
        }
        if (start == pos) {
          throw ValidationError("bad permutation: '" + std::string(text) + "'");
        }
        pts.push_back(std::stoul(std::string(text.substr(start, pos - start))));
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
        }
      }
      std::vector<std::size_t> sorted = pts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("repeated point in cycle: '" + std::string(text) +
                              "'");
      }
      cycles.push_back(cycle(pts));
      skip_ws();
    }
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      result = *it * result;
    }
    return result;
  }

  /// All n! permutations of {0..n-1}, in lexicographic order of image lists.
  static std::vector<Perm> all(std::size_t n) {
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Perm> out;
    do {
      out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
  }

  std::size_t operator()(std::size_t x) const noexcept {
    return x < images_.size() ? images_[x] : x;
  }

  /// Least n such that every point >= n is fixed.
  std::size_t degree() const noexcept { return images_.size(); }

  bool is_identity() const noexcept { return images_.empty(); }

  /// Image list of length degree().
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// Image list padded with fixed points to length n (n >= degree()).
  std::vector<std::size_t> images(std::size_t n) const {
    std::vector<std::size_t> im(std::max(n, images_.size()));
    for (std::size_t x = 0; x < im.size(); ++x) {
      im[x] = (*this)(x);
    }
    return im;
  }

  Perm inverse() const {
    std::vector<std::size_t> im(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) {
      im[images_[x]] = x;
    }
    return Perm(std::move(im));
  }

  /// +1 for even, -1 for odd permutations.
  int sign() const {
    int s = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (seen[x]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        ++len;
      }
      if (len % 2 == 0) {
        s = -s;
      }
    }
    return s;
  }

  /// (g * h)(x) = g(h(x)).
  friend Perm operator*(const Perm& g, const Perm& h) {
    std::size_t n = std::max(g.degree(), h.degree());
    std::vector<std::size_t> im(n);
    for (std::size_t x = 0; x < n; ++x) {
      im[x] = g(h(x));
    }
    Perm r;
    r.images_ = std::move(im);
    r.trim();
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; "e" for the identity.
  std::string to_string() const {
    if (is_identity()) {
      return "e";
    }
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (seen[x] || images_[x] == x) {
        continue;
      }
      out += '(';
      for (std::size_t y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        if (y != x) {
          out += ' ';
        }
        out += std::to_string(y);
      }
      out += ')';
    }
    return out;
  }

 private:
  void trim() {
    while (!images_.empty() && images_.back() == images_.size() - 1) {
      images_.pop_back();
    }
  }

  std::vector<std::size_t> images_;
};

inline Perm compose(const Perm& g, const Perm& h) { return g * h; }

inline Perm transposition(std::size_t i) { return Perm::transposition(i); }

/// A word w = (w_0, ..., w_{m-1}) with g = s_{w_0} * s_{w_1} * ... * s_{w_{m-1}}
/// and m equal to the number of inversions of g.  Built by peeling right
/// descents: if g(k-1) > g(k) then g = (g * s_k) * s_k with g * s_k shorter.
inline std::vector<std::size_t> reduced_word(const Perm& g) {
  std::vector<std::size_t> word;
  Perm h = g;
  for (;;) {
    std::size_t k = 1;
    while (k < h.degree() && h(k - 1) < h(k)) {
      ++k;
    }
    if (k >= h.degree()) {
      break;
    }
    h = h * Perm::transposition(k);
    word.push_back(k);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// A second reduced word, built by peeling left descents instead:
/// if g^{-1}(k-1) > g^{-1}(k) then g = s_k * (s_k * g) with s_k * g shorter.
/// Generally differs from reduced_word(g); both multiply out to g.
inline std::vector<std::size_t> reduced_word_left(const Perm& g) {
  std::vector<std::size_t> word;
  Perm h = g;
  for (;;) {
    Perm hi = h.inverse();
    std::size_t k = 1;
    while (k < hi.degree() && hi(k - 1) < hi(k)) {
      ++k;
    }
    if (k >= hi.degree()) {
      break;
    }
    h = Perm::transposition(k) * h;
    word.push_back(k);
  }
  return word;
}

/// Product s_{w_0} * ... * s_{w_{m-1}}.
inline Perm from_word(std::span<const std::size_t> word) {
  Perm g;
  for (std::size_t j : word) {
    g = g * Perm::transposition(j);
  }
  return g;
}

/// delta_i on a generator s_j:  s_{j-1} if i < j-1, identity if i is j-1 or
/// j, and s_j if i > j.
inline Perm delta_generator(std::size_t i, std::size_t j) {
  if (i + 1 < j) {
    return Perm::transposition(j - 1);
  }
  if (i + 1 == j || i == j) {
    return Perm();
  }
  return Perm::transposition(j);
}

/// delta_i of the product s_{w_0} * ... * s_{w_{m-1}}, evaluated by the
/// product rule delta_i(gh) = delta_i(g) delta_{g^{-1}(i)}(h).  The word need
/// not be reduced.
inline Perm delta_along(std::size_t i, std::span<const std::size_t> word) {
  Perm result;
  std::size_t cur = i;
  for (std::size_t j : word) {
    result = result * delta_generator(cur, j);
    // s_j is an involution, so s_j^{-1}(cur) = s_j(cur).
    if (cur + 1 == j) {
      cur = j;
    } else if (cur == j) {
      cur = j - 1;
    }
  }
  return result;
}

/// The face cocycle delta_i : S_infinity -> S_infinity.
inline Perm delta(std::size_t i, const Perm& g) {
  auto w = reduced_word(g);
  return delta_along(i, w);
}

}  // namespace dgw
