// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// required criterion fails.  Criterion 4 depends on the external 5_1
// triangulation in the data directory and is skipped (not failed) when the
// file is absent.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dgw/deltacore/axioms.hpp"
#include "dgw/deltacore/constructions.hpp"
#include "dgw/deltacore/delta_table.hpp"
#include "dgw/deltacore/isomorphism.hpp"
#include "dgw/deltacore/strip.hpp"
#include "dgw/deltacore/vertex_group.hpp"
#include "dgw/grouppair/group_pair.hpp"
#include "dgw/grouppair/representation.hpp"
#include "dgw/homology/homology.hpp"
#include "dgw/perm.hpp"
#include "dgw/ringfun/functors.hpp"
#include "dgw/ringfun/s_algebra.hpp"
#include "dgw/tetra/completion.hpp"
#include "dgw/tetra/pachner.hpp"
#include "support/trefoil_reference.hpp"

using namespace dgw;

namespace {

enum class Status { pass, fail, skipped };

struct Outcome {
  Status status = Status::fail;
  std::string detail;
};

Outcome pass_if(bool ok, std::string detail) {
  return {ok ? Status::pass : Status::fail, std::move(detail)};
}

InvariantFactors free_group(std::size_t rank) {
  InvariantFactors f;
  f.free_rank = rank;
  return f;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

// Tuple complexes are expensive; each is built once and shared between the
// homology criteria and the structural checks of criterion 11.
class ComplexCache {
 public:
  const TupleComplex& get(const std::string& key, const std::function<DeltaTable()>& make) {
    auto it = complexes_.find(key);
    if (it == complexes_.end())
      it = complexes_.emplace(key, std::make_unique<TupleComplex>(make())).first;
    return *it->second;
  }
  const std::map<std::string, std::unique_ptr<TupleComplex>>& all() const { return complexes_; }

 private:
  std::map<std::string, std::unique_ptr<TupleComplex>> complexes_;
};

DeltaTable knot_table(const Triangulation& t) { return mu_table(complete(t).presentation); }

std::optional<Triangulation> five_one() {
  std::ifstream in(std::string(DGW_DATA_DIR) + "/5_1.tri");
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

// H_n equal to `expected` (default 0) in every computed degree.
bool homology_is(const HomologyResult& h, const std::map<long, InvariantFactors>& expected) {
  if (h.truncated) return false;
  for (long n = h.min_degree; n <= h.max_degree; ++n) {
    auto it = expected.find(n);
    if (h.at(n) != (it == expected.end() ? InvariantFactors{} : it->second)) return false;
  }
  for (const auto& [n, g] : expected)
    if (n > h.max_degree) return false;
  return true;
}

std::string brief(const HomologyResult& h) {
  std::string s;
  for (long n = h.min_degree; n <= h.max_degree; ++n) {
    if (h.at(n).is_trivial()) continue;
    if (!s.empty()) s += ", ";
    s += "H_" + std::to_string(n) + " = " + h.at(n).to_string();
  }
  return s.empty() ? "all zero" : s + ", others 0";
}

std::string axiom_summary(const AxiomReport& r) {
  return r.passed() ? "ok" : r.violations.front().axiom + ": " + r.violations.front().witness;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  ComplexCache cache;
  auto fig8 = *presets::find("fig8");
  auto trefoil_complex = [&]() -> const TupleComplex& {
    return cache.get("trefoil", [] { return knot_table(*presets::find("trefoil")); });
  };
  auto fig8_complex = [&]() -> const TupleComplex& {
    return cache.get("fig8", [&] { return knot_table(fig8); });
  };

  std::vector<Criterion> criteria;

  criteria.push_back({1, "trefoil homology", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto h = homology(trefoil_complex());
    double s = seconds_since(t0);
    return pass_if(homology_is(h, {{2, free_group(1)}}) && s < 10,
                   brief(h) + "; " + fmt_seconds(s) + " (limit 10 s)");
  }});

  criteria.push_back({2, "figure-eight homology", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto h = homology(fig8_complex());
    double s = seconds_since(t0);
    return pass_if(homology_is(h, {{2, free_group(1)}, {3, free_group(1)}}) && s < 60,
                   brief(h) + "; " + fmt_seconds(s) + " (limit 60 s)");
  }});

  criteria.push_back({3, "2-3 Pachner move preserves figure-eight homology", [&] {
    auto base = homology(fig8_complex());
    std::string differing;
    for (const char* face : {"a", "b", "c", "d"}) {
      const auto& tc = cache.get(std::string("fig8/pachner23 ") + face,
                                 [&] { return knot_table(pachner23(fig8, face, "u")); });
      auto h = homology(tc);
      if (h.groups != base.groups || h.truncated != base.truncated)
        differing += std::string(differing.empty() ? "" : ", ") + face + ": " + brief(h);
    }
    return pass_if(differing.empty(),
                   differing.empty() ? "moves across faces a, b, c, d all give " + brief(base)
                                     : "DISAGREEMENT with " + brief(base) + " at " + differing);
  }});

  criteria.push_back({4, "5_1 homology (optional, external triangulation)", [&]() -> Outcome {
    auto tri = five_one();
    if (!tri) return {Status::skipped, "data/5_1.tri not found"};
    auto t0 = std::chrono::steady_clock::now();
    auto h = homology(cache.get("5_1", [&] { return knot_table(*tri); }));
    InvariantFactors z5;
    z5.torsion.push_back(5);
    return pass_if(homology_is(h, {{2, free_group(1)}, {3, z5}}),
                   brief(h) + "; " + fmt_seconds(seconds_since(t0)));
  }});

  criteria.push_back({5, "completion fingerprints", [&] {
    auto tref = complete(*presets::find("trefoil")).presentation;
    auto reference = testing::trefoil_reference();
    auto computed = delta_table(tref);
    bool iso = fingerprint(reference) == fingerprint(computed) &&
               find_isomorphism(reference, computed).has_value();
    auto f8 = complete(fig8).presentation;
    bool ok = tref.num_nodes() == 2 && tref.num_arrows() == 8 && iso && f8.num_arrows() == 24;
    return pass_if(ok, "trefoil " + std::to_string(tref.num_nodes()) + " nodes, " +
                           std::to_string(tref.num_arrows()) + " arrows, " +
                           (iso ? "isomorphic" : "NOT isomorphic") +
                           " to {x^±1, x^±2, y^±1, (xy)^±1}; figure-eight " +
                           std::to_string(f8.num_arrows()) + " arrows");
  }});

  criteria.push_back({6, "abelianized vertex groups", [&] {
    std::string detail;
    bool ok = true;
    for (auto [name, expected] : {std::pair{"trefoil", "Z"}, std::pair{"fig8", "Z^2"}}) {
      auto p = complete(*presets::find(name)).presentation;
      auto q = quiver_relators(p);
      for (std::size_t node = 0; node < p.num_nodes(); ++node) {
        auto got = vertex_group_abelianized(q, node).to_string();
        ok = ok && got == expected;
        if (node == 0) detail += std::string(detail.empty() ? "" : "; ") + name + " " + got;
      }
      detail += " at all " + std::to_string(p.num_nodes()) + " nodes";
    }
    return pass_if(ok, detail);
  }});

  criteria.push_back({7, "ring functor values", [&] {
    auto a2 = aprime_finite(ring_A(FiniteRing::zmod(2))).additive_group();
    auto b2 = bprime_finite(ring_B(FiniteRing::zmod(2))).additive_group();
    auto s3 = delta_from_pair(GroupPair::generated(GroupTable::symmetric(3), {"(0 1)"}));
    auto a_s3 = aprime_finite(s3).additive_group();
    // Z[Z/2] = Z1 + Zu modulo 2u - 1 and u(2u - 1) = 2 - u
    auto oracle = cokernel_invariants(IntMatrix{{-1, 2}, {2, -1}});
    bool ok = a2 == free_group(1) && b2 == free_group(1) && a_s3 == oracle &&
              oracle.to_string() == "Z/3";
    return pass_if(ok, "A'(A(Z/2)) = " + a2.to_string() + ", B'(B(Z/2)) = " + b2.to_string() +
                           ", A'(S3, <(0 1)>) = " + a_s3.to_string() + " (oracle " +
                           oracle.to_string() + ")");
  }});

  criteria.push_back({8, "the ring S", [&] {
    auto t0 = std::chrono::steady_clock::now();
    const FiniteRankAlgebra s = s_algebra();
    auto p = s.parse("p").coords(), r = s.parse("r").coords(), x = s.parse("x").coords();
    bool rel = s_relation_check(s, p, r, x).ok();
    std::size_t assoc_bad = 0;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        for (std::size_t c = 0; c < 6; ++c) {
          auto ea = s.basis_vector(a), eb = s.basis_vector(b), ec = s.basis_vector(c);
          if (!s.equal(s.mul(s.mul(ea, eb), ec), s.mul(ea, s.mul(eb, ec)))) ++assoc_bad;
        }
    bool ideal = lemma15_check(s).ok();
    bool mod_r = s_mod_r_check().ok();
    bool hw = s_hurwitz_check().ok();
    double secs = seconds_since(t0);
    return pass_if(rel && assoc_bad == 0 && ideal && mod_r && hw && secs < 1,
                   std::string("relations ") + (rel ? "ok" : "FAIL") + ", associativity " +
                       std::to_string(216 - assoc_bad) + "/216, ideal identities " +
                       (ideal ? "ok" : "FAIL") + ", S/(r) " + (mod_r ? "ok" : "FAIL") +
                       ", Hurwitz " + (hw ? "ok" : "FAIL") + "; " + fmt_seconds(secs) +
                       " (limit 1 s)");
  }});

  criteria.push_back({9, "representations", [&] {
    auto ring = presets::trefoil_ring();
    auto tref = presets::trefoil_group();
    auto phi = presets::trefoil_phi(ring);
    auto special = special_check(tref, ring, phi);
    auto f8 = presets::fig8_group();
    auto sl4 = matrix_representation_check(f8, presets::fig8_sl4(),
                                           {presets::fig8_sl4_kernel_word(f8)});
    // u_{x,y} depends only on the images of x and y, and the ball is
    // deduplicated by image, so a sample bound above the ball size is exhaustive.
    QRelationOptions qo;
    qo.triple_sample = 1000;
    qo.shift_sample = 1000;
    auto q = q_relation_check(tref, ring, phi, qo);
    return pass_if(special.ok() && sl4.ok() && q.ok(),
                   std::string("trefoil phi ") + (special.ok() ? "ok" : "FAIL") +
                       ", figure-eight SL(4,Z) " + (sl4.ok() ? "ok" : "FAIL") +
                       ", q-relations " + (q.ok() ? "ok" : "FAIL") + " (" +
                       std::to_string(q.items.size()) + " identities, words of length <= 6)");
  }});

  criteria.push_back({10, "axiom suites", [&] {
    auto s3 = GroupTable::symmetric(3);
    std::vector<std::pair<std::string, FiniteDeltaGroupoid>> cases{
        {"pair_delta(Z/4)", pair_delta(GroupTable::cyclic(4))},
        {"pair_delta(S3)", pair_delta(s3)},
        {"triple_delta(3)", triple_delta(3)},
        {"ring_A(Z/5)", ring_A(FiniteRing::zmod(5))},
        {"ring_A(Z/7)", ring_A(FiniteRing::zmod(7))},
        {"ring_B(Z/3)", ring_B(FiniteRing::zmod(3))},
        {"ring_B(Z/5)", ring_B(FiniteRing::zmod(5))},
        {"(S3, <(0 1)>)", delta_from_pair(GroupPair::generated(s3, {"(0 1)"}))},
    };
    std::string failed;
    for (const auto& [name, g] : cases) {
      auto r = check_axioms(g);
      if (!r.passed()) failed += name + " (" + axiom_summary(r) + ") ";
    }
    auto strip_report = strip::check_samples(12);
    if (!strip_report.passed()) failed += "strip (" + axiom_summary(strip_report) + ")";
    return pass_if(failed.empty(), failed.empty()
                                       ? std::to_string(cases.size()) +
                                             " groupoids exhaustive, strip samples with "
                                             "denominators <= 12 ok"
                                       : "failures: " + failed);
  }});

  criteria.push_back({11, "structural invariants of the complexes", [&] {
    std::string failed;
    std::size_t checked = 0;
    for (const auto& [name, tc] : cache.all()) {
      auto v = check_complex(*tc);
      ++checked;
      if (!v.empty()) failed += name + " (" + v.front().check + ": " + v.front().witness + ") ";
    }
    std::size_t cocycle_bad = 0;
    auto s4 = Perm::all(4);
    for (const auto& g : s4)
      for (const auto& h : s4)
        for (std::size_t i = 0; i <= 4; ++i)
          if (!(delta(i, g * h) == delta(i, g) * delta(g.inverse()(i), h))) ++cocycle_bad;
    if (cocycle_bad) failed += std::to_string(cocycle_bad) + " cocycle failures on S4";
    return pass_if(failed.empty() && checked > 0,
                   failed.empty() ? std::to_string(checked) +
                                        " complexes (boundary squared, faces, intertwining, "
                                        "symmetric relations, subcomplex) ok; "
                                        "delta cocycle ok on S4 x S4 x {0..4}"
                                  : "failures: " + failed);
  }});

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Status::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "SKIP";
    if (o.status == Status::fail) ++failures;
    std::printf("criterion %2d  %s  %s: %s\n", c.id, tag, c.title.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
