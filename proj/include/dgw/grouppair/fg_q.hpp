#pragma once

// The maps between A'𝒢_{G,H} and the ring of special representations,
// evaluated concretely for a finite malnormal pair.
//
// For g not in H, f_g sends s_x to u_{g,xg} (x in H) or -u_{g,x} u_{x^-1,g}
// (x not in H), and v_x to 0 (x in H) or u_{x^-1,g}; q sends u_{x,y} to
// v_{x^-1} v_{y^-1}^-1.  Hence f_g(q(u_{x,y})) = u_{x,g} u_{y,g}^-1, which
// must equal u_{x,y}.  The images f_g(s_x), f_g(v_x) are also checked against
// the defining relations s_1 = 1, s_x s_y = s_{xy}, v_{xy} = v_y + v_x s_y
// and the specialness of v.
//
// u_{x,y} denotes the image in A'𝒢 of the orbit of (x, y).  The identity of
// A'𝒢 is u_{x,x} only when 𝒢 has a single object (G = H ∪ HgH), which is
// therefore required.

#include <cstddef>
#include <string>
#include <vector>

#include "dgw/error.hpp"
#include "dgw/grouppair/group_pair.hpp"
#include "dgw/report.hpp"
#include "dgw/ringfun/functors.hpp"

namespace dgw {

inline CheckReport fg_q_identity_check(const GroupPair& pair, std::size_t g) {
  const GroupTable& grp = pair.group;
  if (g >= grp.order() || pair.contains(g)) throw ValidationError("g must lie outside H");
  PairDelta pd = build_pair_delta(pair);
  if (pd.groupoid.num_objects() != 1)
    throw ValidationError("the pair groupoid has " + std::to_string(pd.groupoid.num_objects()) +
                          " objects; the check needs G = H ∪ HgH");
  QuotientAlgebra a = aprime_quotient(pd.groupoid);
  const FiniteRankAlgebra& alg = a.algebra;
  const std::size_t n = grp.order();
  const std::size_t m = pd.groupoid.num_morphisms();

  std::vector<IntVector> image(m);
  for (std::size_t x = 0; x < m; ++x) {
    IntVector e(m);
    e[x] = 1;
    image[x] = a.project(e);
  }
  auto u = [&](std::size_t x, std::size_t y) -> const IntVector& {
    return image[pd.orbit_of(x, y)];
  };
  auto inv = [&](std::size_t x) { return grp.inverse(x); };
  const IntVector one = alg.unit_vector();

  CheckReport rep;
  rep.note("A' of the pair groupoid: " + alg.additive_group().to_string() + ", g = " +
           grp.name(g));

  // f_g(q(u_{x,y})) = u_{x,g} u_{y,g}^-1
  std::size_t checked = 0, bad = 0, diag_bad = 0;
  std::string first;
  for (std::size_t x = 0; x < n; ++x) {
    if (pair.contains(x)) continue;
    if (!alg.equal(u(x, x), one)) ++diag_bad;
    for (std::size_t y = 0; y < n; ++y) {
      if (pair.contains(y)) continue;
      auto uyg_inv = alg.inverse(u(y, g));
      ++checked;
      const bool ok = uyg_inv && alg.equal(alg.mul(u(x, g), *uyg_inv), u(x, y)) &&
                      alg.equal(*uyg_inv, u(g, y));
      if (!ok && bad++ == 0) first = "(" + grp.name(x) + ", " + grp.name(y) + ")";
    }
  }
  rep.add("f_g(q(u_{x,y})) = u_{x,y} for all x, y outside H", bad == 0,
          std::to_string(checked) + " generators" + (bad ? ", first failure " + first : ""));
  rep.add("u_{x,x} = 1", diag_bad == 0);

  // images of s and v
  std::vector<IntVector> fs(n), fv(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (pair.contains(x)) {
      fs[x] = u(g, grp.mul(x, g));
      fv[x] = alg.zero_vector();
    } else {
      fs[x] = alg.scale(-1, alg.mul(u(g, x), u(inv(x), g)));
      fv[x] = u(inv(x), g);
    }
  }
  rep.add("f_g(s_1) = 1", alg.equal(fs[grp.identity()], one));
  std::size_t s_bad = 0, v_bad = 0, v_inv_bad = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!pair.contains(x) && !alg.is_unit(fv[x])) ++v_inv_bad;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = grp.mul(x, y);
      if (!alg.equal(alg.mul(fs[x], fs[y]), fs[xy])) ++s_bad;
      if (!alg.equal(alg.add(fv[y], alg.mul(fv[x], fs[y])), fv[xy])) ++v_bad;
    }
  }
  rep.add("f_g(s_x) f_g(s_y) = f_g(s_xy)", s_bad == 0,
          s_bad ? std::to_string(s_bad) + " failing pairs" : "");
  rep.add("f_g(v_xy) = f_g(v_y) + f_g(v_x) f_g(s_y)", v_bad == 0,
          v_bad ? std::to_string(v_bad) + " failing pairs" : "");
  rep.add("f_g(v_x) is invertible for x outside H", v_inv_bad == 0);
  return rep;
}

}  // namespace dgw
