#pragma once

// Representations of finitely presented group pairs in R* ⋉ R.
//
// R* ⋉ R is R* × R with (x, y)(x', y') = (x x', y x' + y').  A representation
// is given by images (α(g), β(g)) of the generators; it extends to words by
// the product rule, with (α, β)^-1 = (α^-1, -β α^-1).  Coefficient rings are
// finite-rank algebras; α must be an (integral) unit.
//
// Conditions quantified over the whole group (weak speciality: β(G) consists
// of units and zero and is not {0}) are verified on the ball of words of
// bounded length; the report states the radius.  Since β values may be units
// of R ⊗ Q without being units of R, invertibility is tested both integrally
// and over Q, and the rational case is reported separately.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dgw/error.hpp"
#include "dgw/grouppair/group_presentation.hpp"
#include "dgw/report.hpp"
#include "dgw/ringfun/algebra.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

struct SemidirectElement {
  IntVector alpha;
  IntVector beta;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
  friend bool operator<(const SemidirectElement& a, const SemidirectElement& b) {
    return std::tie(a.alpha, a.beta) < std::tie(b.alpha, b.beta);
  }
};

/// Arithmetic of R* ⋉ R for a finite-rank algebra R.
class SemidirectGroup {
 public:
  explicit SemidirectGroup(const FiniteRankAlgebra& r) : r_(&r) {}

  const FiniteRankAlgebra& ring() const noexcept { return *r_; }

  SemidirectElement identity() const { return {r_->unit_vector(), r_->zero_vector()}; }

  SemidirectElement make(const IntVector& alpha, const IntVector& beta) const {
    if (!r_->is_unit(alpha))
      throw ValidationError("alpha = " + r_->format(alpha) + " is not a unit of the ring");
    return {r_->reduce(alpha), r_->reduce(beta)};
  }

  SemidirectElement mul(const SemidirectElement& a, const SemidirectElement& b) const {
    return {r_->mul(a.alpha, b.alpha), r_->add(r_->mul(a.beta, b.alpha), b.beta)};
  }

  SemidirectElement inverse(const SemidirectElement& a) const {
    auto ai = r_->inverse(a.alpha);
    if (!ai) throw ComputationError("alpha = " + r_->format(a.alpha) + " is not a unit");
    return {*ai, r_->scale(-1, r_->mul(a.beta, *ai))};
  }

  bool is_identity(const SemidirectElement& a) const {
    return r_->equal(a.alpha, r_->unit_vector()) && r_->is_zero(a.beta);
  }

  std::string format(const SemidirectElement& a) const {
    return "(" + r_->format(a.alpha) + ", " + r_->format(a.beta) + ")";
  }

 private:
  const FiniteRankAlgebra* r_;
};

/// Images of the generators, one per generator of the presentation.
using SemidirectAssignment = std::vector<SemidirectElement>;

/// The multiplicative extension of `assign` along `word`.
inline SemidirectElement cocycle_extend(const SemidirectGroup& grp,
                                        const SemidirectAssignment& assign,
                                        const GroupWord& word) {
  SemidirectElement acc = grp.identity();
  for (const Letter& l : word) {
    if (l.gen >= assign.size()) throw ValidationError("no image for a generator in the word");
    acc = grp.mul(acc, l.inverse ? grp.inverse(assign[l.gen]) : assign[l.gen]);
  }
  return acc;
}

namespace detail {

using QVector = std::vector<mpq_class>;

inline QVector to_q(const IntVector& v) { return QVector(v.begin(), v.end()); }

inline bool q_is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

inline QVector q_add(const QVector& a, const QVector& b) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline QVector q_mul(const FiniteRankAlgebra& alg, const QVector& a, const QVector& b) {
  const std::size_t n = alg.rank();
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const mpq_class c = a[i] * b[j];
      const IntVector& s = alg.structure_constant(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (s[k] != 0) out[k] += c * mpq_class(s[k]);
    }
  }
  return out;
}

// Inverse in R ⊗ Q (R torsion-free), by solving a z = 1.  In a finite-
// dimensional algebra over a field a right inverse is two-sided.
inline std::optional<QVector> q_inverse(const FiniteRankAlgebra& alg, const QVector& a) {
  const std::size_t n = alg.rank();
  std::vector<QVector> m(n, QVector(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    QVector ej(n);
    ej[j] = 1;
    QVector col = q_mul(alg, a, ej);
    for (std::size_t k = 0; k < n; ++k) m[k][j] = col[k];
  }
  for (std::size_t k = 0; k < n; ++k) m[k][n] = mpq_class(alg.unit_vector()[k]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    const mpq_class lead = m[c][c];
    for (auto& v : m[c]) v /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  QVector z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = m[k][n];
  return z;
}

inline std::string q_format(const FiniteRankAlgebra& alg, const QVector& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  IntVector num(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) num[i] = mpz_class(v[i] * den);
  std::string s = alg.format(num);
  return den == 1 ? s : "(" + s + ")/" + den.get_str();
}

}  // namespace detail

/// Words of length <= radius (freely reduced), one per distinct image.
struct WordBall {
  std::vector<GroupWord> words;
  std::vector<SemidirectElement> images;
  std::size_t words_enumerated = 0;
};

/// Enumerates the ball in the letters `letters` (each a word of the
/// presentation, usable with either orientation).
inline WordBall enumerate_ball(const SemidirectGroup& grp, const SemidirectAssignment& assign,
                               const std::vector<GroupWord>& letters, std::size_t radius) {
  WordBall ball;
  std::vector<SemidirectElement> letter_img;
  for (const auto& w : letters) {
    letter_img.push_back(cocycle_extend(grp, assign, w));
    letter_img.push_back(grp.inverse(letter_img.back()));
  }
  struct Node {
    GroupWord word;
    SemidirectElement img;
    std::size_t last;  // index into letter_img, or npos
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::map<SemidirectElement, std::size_t> seen;
  std::vector<Node> frontier{{{}, grp.identity(), npos}};
  seen.emplace(grp.identity(), 0);
  ball.words.push_back({});
  ball.images.push_back(grp.identity());
  ball.words_enumerated = 1;
  for (std::size_t len = 1; len <= radius; ++len) {
    std::vector<Node> next;
    for (const auto& node : frontier)
      for (std::size_t l = 0; l < letter_img.size(); ++l) {
        if (node.last != npos && (node.last ^ 1) == l) continue;  // free reduction
        const GroupWord& lw = letters[l / 2];
        GroupWord w = concat(node.word, (l % 2) ? inverse_word(lw) : lw);
        SemidirectElement img = grp.mul(node.img, letter_img[l]);
        ++ball.words_enumerated;
        if (seen.emplace(img, ball.images.size()).second) {
          ball.words.push_back(w);
          ball.images.push_back(img);
        }
        next.push_back({std::move(w), std::move(img), l});
      }
    frontier = std::move(next);
  }
  return ball;
}

inline std::vector<GroupWord> generator_letters(const GroupPresentationData& pres) {
  std::vector<GroupWord> out;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) out.push_back({{g, false}});
  return out;
}

struct SpecialCheckOptions {
  std::size_t ball_radius = 6;        // words in the generators
  std::size_t peripheral_radius = 4;  // words in the peripheral words
  bool rational_units = true;         // accept units of R ⊗ Q
  bool check_values = true;           // the invertible-or-zero condition
};

/// Relators map to (1, 0); β vanishes on the peripheral subgroup (ball);
/// β is invertible or zero on the ball, and not identically zero.
inline CheckReport special_check(const GroupPresentationData& pres, const FiniteRankAlgebra& ring,
                                 const SemidirectAssignment& assign,
                                 const SpecialCheckOptions& opt = {}) {
  if (assign.size() != pres.generators.size())
    throw ValidationError("one image per generator is required");
  CheckReport rep;
  SemidirectGroup grp(ring);
  for (const auto& r : pres.relators) {
    auto img = cocycle_extend(grp, assign, r);
    rep.add("relator " + pres.word_to_string(r) + " maps to (1, 0)", grp.is_identity(img),
            grp.is_identity(img) ? "" : "image " + grp.format(img));
  }
  if (!pres.peripheral.empty()) {
    WordBall pb = enumerate_ball(grp, assign, pres.peripheral, opt.peripheral_radius);
    std::size_t bad = 0;
    std::string first;
    for (std::size_t i = 0; i < pb.images.size(); ++i)
      if (!ring.is_zero(pb.images[i].beta)) {
        if (bad++ == 0) first = pres.word_to_string(pb.words[i]) + " -> " + grp.format(pb.images[i]);
      }
    rep.add("beta = 0 on the peripheral subgroup (words of length <= " +
                std::to_string(opt.peripheral_radius) + " in the peripheral words)",
            bad == 0, bad ? std::to_string(bad) + " violations, e.g. " + first : "");
  }
  if (!opt.check_values) return rep;
  if (opt.rational_units && !ring.is_torsion_free())
    throw ValidationError("invertibility over Q needs a torsion-free coefficient ring");
  WordBall ball = enumerate_ball(grp, assign, generator_letters(pres), opt.ball_radius);
  std::size_t zeros = 0, units = 0, q_units = 0, bad = 0;
  std::string first_bad, first_q;
  for (std::size_t i = 0; i < ball.images.size(); ++i) {
    const IntVector& b = ball.images[i].beta;
    if (ring.is_zero(b)) {
      ++zeros;
    } else if (ring.is_unit(b)) {
      ++units;
    } else if (opt.rational_units && ring.is_unit_over_q(b)) {
      if (q_units++ == 0) first_q = pres.word_to_string(ball.words[i]) + " -> " + ring.format(b);
    } else if (bad++ == 0) {
      first_bad = pres.word_to_string(ball.words[i]) + " -> " + ring.format(b);
    }
  }
  rep.add("beta invertible or zero on words of length <= " + std::to_string(opt.ball_radius),
          bad == 0, bad ? std::to_string(bad) + " non-invertible values, e.g. " + first_bad : "");
  rep.add("beta is not identically zero", units + q_units > 0);
  rep.note("ball of radius " + std::to_string(opt.ball_radius) + ": " +
           std::to_string(ball.words_enumerated) + " reduced words, " +
           std::to_string(ball.images.size()) + " distinct images; beta zero " +
           std::to_string(zeros) + ", unit " + std::to_string(units) + ", unit only over Q " +
           std::to_string(q_units));
  if (q_units)
    rep.note("first beta value invertible over Q but not over Z: " + first_q);
  rep.note("a finite-ball verification is a consistency certificate, not a proof");
  return rep;
}

struct QRelationOptions {
  std::size_t ball_radius = 6;
  std::size_t peripheral_radius = 2;
  std::size_t triple_sample = 30;  // images used for the cocycle identity on triples
  std::size_t shift_sample = 40;   // images used for the peripheral shift identities
};

/// The values u_{x,y} = β(x^-1) β(y^-1)^-1 (computed in R ⊗ Q) satisfy
/// u_{x,y} u_{y,z} = u_{x,z}, u_{xh,y} = u_{x,yh} = u_{hx,hy} = u_{x,y}
/// (h peripheral), u_{y^-1 x, y^-1} + u_{x,y} = 1 (x != y) and u_{x,x} = 1,
/// on pairs from the ball where the inverses exist.
inline CheckReport q_relation_check(const GroupPresentationData& pres,
                                    const FiniteRankAlgebra& ring,
                                    const SemidirectAssignment& assign,
                                    const QRelationOptions& opt = {}) {
  using detail::QVector;
  if (!ring.is_torsion_free())
    throw ValidationError("the u-values are computed over Q; the ring must be torsion-free");
  CheckReport rep;
  SemidirectGroup grp(ring);
  WordBall ball = enumerate_ball(grp, assign, generator_letters(pres), opt.ball_radius);
  const std::size_t n = ball.images.size();

  // beta(x^-1) and its inverse over Q, per image
  std::vector<QVector> binv(n);
  std::vector<std::optional<QVector>> binv_inv(n);
  auto beta_of_inverse = [&](const SemidirectElement& e) {
    return detail::to_q(grp.inverse(e).beta);
  };
  std::size_t usable = 0;
  for (std::size_t i = 0; i < n; ++i) {
    binv[i] = beta_of_inverse(ball.images[i]);
    if (!detail::q_is_zero(binv[i])) binv_inv[i] = detail::q_inverse(ring, binv[i]);
    if (binv_inv[i]) ++usable;
  }
  auto u_value = [&](const SemidirectElement& x, const SemidirectElement& y)
      -> std::optional<QVector> {
    QVector by = beta_of_inverse(y);
    if (detail::q_is_zero(by)) return std::nullopt;
    auto byi = detail::q_inverse(ring, by);
    if (!byi) return std::nullopt;
    return detail::q_mul(ring, beta_of_inverse(x), *byi);
  };
  const QVector one = detail::to_q(ring.unit_vector());

  // u_{x,x} = 1
  {
    std::size_t checked = 0, bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!binv_inv[i]) continue;
      ++checked;
      if (detail::q_mul(ring, binv[i], *binv_inv[i]) != one) ++bad;
    }
    rep.add("u_{x,x} = 1", bad == 0 && checked > 0, std::to_string(checked) + " elements");
  }
  // u_{x,y} u_{y,z} = u_{x,z}
  {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n && idx.size() < opt.triple_sample; ++i)
      if (binv_inv[i]) idx.push_back(i);
    std::size_t checked = 0, bad = 0;
    for (std::size_t x : idx)
      for (std::size_t y : idx)
        for (std::size_t z : idx) {
          QVector uxy = detail::q_mul(ring, binv[x], *binv_inv[y]);
          QVector uyz = detail::q_mul(ring, binv[y], *binv_inv[z]);
          QVector uxz = detail::q_mul(ring, binv[x], *binv_inv[z]);
          ++checked;
          if (detail::q_mul(ring, uxy, uyz) != uxz) ++bad;
        }
    rep.add("u_{x,y} u_{y,z} = u_{x,z}", bad == 0 && checked > 0,
            std::to_string(checked) + " triples" + (bad ? ", " + std::to_string(bad) + " failures" : ""));
  }
  // peripheral shifts
  if (!pres.peripheral.empty()) {
    WordBall hb = enumerate_ball(grp, assign, pres.peripheral, opt.peripheral_radius);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n && idx.size() < opt.shift_sample; ++i)
      if (binv_inv[i]) idx.push_back(i);
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (std::size_t hi = 1; hi < hb.images.size(); ++hi) {
      const auto& h = hb.images[hi];
      for (std::size_t x : idx)
        for (std::size_t y : idx) {
          const auto& X = ball.images[x];
          const auto& Y = ball.images[y];
          QVector uxy = detail::q_mul(ring, binv[x], *binv_inv[y]);
          auto a = u_value(grp.mul(X, h), Y);
          auto b = u_value(X, grp.mul(Y, h));
          auto c = u_value(grp.mul(h, X), grp.mul(h, Y));
          ++checked;
          if (!a || !b || !c || *a != uxy || *b != uxy || *c != uxy) {
            if (bad++ == 0)
              first = "x = " + pres.word_to_string(ball.words[x]) +
                      ", y = " + pres.word_to_string(ball.words[y]) +
                      ", h = " + pres.word_to_string(hb.words[hi]);
          }
        }
    }
    rep.add("u_{xh,y} = u_{x,yh} = u_{hx,hy} = u_{x,y} for peripheral h", bad == 0 && checked > 0,
            std::to_string(checked) + " cases" + (bad ? ", first failure " + first : ""));
  }
  // u_{y^-1 x, y^-1} + u_{x,y} = 1
  {
    std::size_t checked = 0, skipped = 0, bad = 0;
    std::string first;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        if (!binv_inv[y]) {
          ++skipped;
          continue;
        }
        const auto yinv = grp.inverse(ball.images[y]);
        auto first_term = u_value(grp.mul(yinv, ball.images[x]), yinv);
        if (!first_term) {
          ++skipped;
          continue;
        }
        QVector uxy = detail::q_mul(ring, binv[x], *binv_inv[y]);
        ++checked;
        if (detail::q_add(*first_term, uxy) != one) {
          if (bad++ == 0)
            first = "x = " + pres.word_to_string(ball.words[x]) +
                    ", y = " + pres.word_to_string(ball.words[y]);
        }
      }
    rep.add("u_{y^-1 x, y^-1} + u_{x,y} = 1 for x != y", bad == 0 && checked > 0,
            std::to_string(checked) + " pairs" + (bad ? ", first failure " + first : ""));
    rep.note(std::to_string(skipped) + " pairs skipped (beta not invertible over Q)");
  }
  rep.note("ball of radius " + std::to_string(opt.ball_radius) + ": " + std::to_string(n) +
           " distinct images, " + std::to_string(usable) + " with beta(x^-1) invertible over Q");
  return rep;
}

/// Matrix representation: every relator and every listed kernel word maps
/// to the identity, and the generator images are unimodular.  ρ(w) is the
/// product of the generator matrices in word order (a right action on row
/// vectors).
inline IntMatrix matrix_word_image(const std::vector<IntMatrix>& images, const GroupWord& w) {
  if (images.empty()) throw ValidationError("no generator images");
  const std::size_t d = images.front().rows();
  IntMatrix acc = IntMatrix::identity(d);
  for (const Letter& l : w) {
    const IntMatrix& m = images.at(l.gen);
    if (!l.inverse) {
      acc = acc * m;
    } else {
      SmithForm s = snf(m, true);
      if (s.rank != d || s.diagonal.back() != 1)
        throw ComputationError("generator image is not invertible over Z");
      acc = acc * (s.v * s.u);
    }
  }
  return acc;
}

inline CheckReport matrix_representation_check(const GroupPresentationData& pres,
                                               const std::vector<IntMatrix>& images,
                                               const std::vector<GroupWord>& kernel_words = {}) {
  if (images.size() != pres.generators.size())
    throw ValidationError("one matrix per generator is required");
  CheckReport rep;
  const std::size_t d = images.front().rows();
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g].rows() != d || images[g].cols() != d)
      throw ValidationError("generator images must be square of one size");
    const Integer det = determinant(images[g]);
    rep.add("det " + pres.generators[g] + " = 1", det == 1, "det = " + det.get_str());
  }
  const IntMatrix id = IntMatrix::identity(d);
  for (const auto& r : pres.relators)
    rep.add("relator " + pres.word_to_string(r) + " maps to I", matrix_word_image(images, r) == id);
  for (const auto& w : kernel_words)
    rep.add(pres.word_to_string(w) + " maps to I", matrix_word_image(images, w) == id);
  return rep;
}

// ---------------------------------------------------------------------------
// Built-in knot group pairs and representations.

namespace presets {

/// <a, b | a^2 = b^3>, peripheral subgroup generated by ab^-1 and a^2.
inline GroupPresentationData trefoil_group() {
  return GroupPresentationData::parse(
      "gen a b\n"
      "rel a a B B B\n"
      "peripheral a B\n"
      "peripheral a a\n");
}

/// <a1, a2 | a1 w = w a2>, w = a2^-1 a1 a2 a1^-1; peripheral subgroup
/// generated by a1 and w w', w' = a1^-1 a2 a1 a2^-1.
inline GroupPresentationData fig8_group() {
  return GroupPresentationData::parse(
      "gen a1 a2\n"
      "rel a1 A2 a1 a2 A1 A2 a1 A2 A1 a2\n"
      "peripheral a1\n"
      "peripheral A2 a1 a2 A1 A1 a2 a1 A2\n");
}

/// Z[t]/(t^2 - t + 1).
inline FiniteRankAlgebra trefoil_ring() { return FiniteRankAlgebra::monic_quotient({1, -1}); }

/// a -> (-1, 1), b -> (-t^-1, 1) = (t - 1, 1) in trefoil_ring().
inline SemidirectAssignment trefoil_phi(const FiniteRankAlgebra& ring) {
  SemidirectGroup grp(ring);
  return {grp.make(ring.parse("-1").coords(), ring.parse("1").coords()),
          grp.make(ring.parse("t-1").coords(), ring.parse("1").coords())};
}

/// a1 -> (x, 0), a2 -> (x + r, 1) in S.
inline SemidirectAssignment fig8_phi(const FiniteRankAlgebra& s) {
  SemidirectGroup grp(s);
  return {grp.make(s.parse("x").coords(), s.zero_vector()),
          grp.make(s.parse("x+r").coords(), s.parse("1").coords())};
}

inline std::vector<IntMatrix> fig8_sl4() {
  auto mat = [](std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(4, 4);
    std::size_t i = 0;
    for (const auto& r : rows) {
      std::size_t j = 0;
      for (long v : r) m(i, j++) = v;
      ++i;
    }
    return m;
  };
  return {mat({{0, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 1}}),
          mat({{0, 0, 1, 0}, {0, 1, 1, -1}, {-1, 0, 1, 0}, {-1, 1, 1, 0}})};
}

/// The kernel generator a1^-1 a2 a1^2 a2 of the SL(4, Z) representation.
inline GroupWord fig8_sl4_kernel_word(const GroupPresentationData& fig8) {
  return fig8.parse_word("A1 a2 a1 a1 a2");
}

}  // namespace presets

}  // namespace dgw
