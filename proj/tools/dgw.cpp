// Command-line front end.
//
//   dgw validate INPUT
//   dgw complete INPUT [--trace]
//   dgw homology INPUT [--max-dim N]
//   dgw ring aprime|bprime INPUT [--present-only]
//   dgw pair-delta --group FILE --subgroup LIST [--aprime]
//   dgw axioms [NAME|FILE]
//   dgw repcheck trefoil-phi|fig8-sl4 [--ball N]
//   dgw pachner23 INPUT --face NAME [--tet NAME]
//   dgw preset list
//
// INPUT is a triangulation file, '-' for standard input, or a preset name.
// Every command accepts --json.  Exit status: 0 success, 1 invalid input or
// a failed check, 2 computation failure.  DGW_MAX_DIM overrides the default
// homology degree cap.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgw/deltacore/axioms.hpp"
#include "dgw/deltacore/constructions.hpp"
#include "dgw/deltacore/delta_table.hpp"
#include "dgw/deltacore/strip.hpp"
#include "dgw/deltacore/word_problem.hpp"
#include "dgw/error.hpp"
#include "dgw/grouppair/group_pair.hpp"
#include "dgw/grouppair/representation.hpp"
#include "dgw/homology/homology.hpp"
#include "dgw/ringfun/functors.hpp"
#include "dgw/ringfun/json.hpp"
#include "dgw/ringfun/presentation.hpp"
#include "dgw/tetra/completion.hpp"
#include "dgw/tetra/pachner.hpp"

using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kFailure = 2;

// ---------------------------------------------------------------------------
// Input handling

struct Input {
  std::string source;  // path, "-" or "preset:<name>"
  std::string text;
  std::string fingerprint;
};

// FNV-1a, 64 bit, as 16 hex digits.
std::string fingerprint(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dgw::ValidationError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A file of that name wins over a preset of the same name.
Input read_input(const std::string& arg) {
  Input in;
  if (arg == "-") {
    in.source = "-";
    in.text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (!std::filesystem::exists(arg) &&
             dgw::presets::triangulation_texts().count(arg)) {
    in.source = "preset:" + arg;
    in.text = dgw::presets::triangulation_texts().at(arg);
  } else {
    in.source = arg;
    in.text = read_file(arg);
  }
  in.fingerprint = fingerprint(in.text);
  return in;
}

json input_json(const Input& in) { return {{"source", in.source}, {"fingerprint", in.fingerprint}}; }

dgw::Triangulation read_triangulation(const Input& in) {
  auto t = dgw::parse_triangulation(in.text);
  t.validate();
  return t;
}

// Finite constructions by name: pair-delta:Z4, pair-delta:S3, triple-delta:3,
// ring-a:Z5, ring-b:Z3.
dgw::GroupTable named_group(const std::string& s) {
  if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'S')) {
    const std::string digits = s.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      const std::size_t n = std::stoul(digits);
      if (s[0] == 'Z' && n >= 1) return dgw::GroupTable::cyclic(n);
      if (s[0] == 'S' && n >= 1 && n <= 5) return dgw::GroupTable::symmetric(n);
    }
  }
  throw dgw::ValidationError("unknown group '" + s + "' (expected Z<n> or S<n>, n <= 5)");
}

std::optional<dgw::FiniteDeltaGroupoid> finite_construction(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  auto zmod = [&]() {
    if (arg.size() < 2 || arg[0] != 'Z' ||
        arg.find_first_not_of("0123456789", 1) != std::string::npos)
      throw dgw::ValidationError("expected Z<n> in '" + spec + "'");
    return dgw::FiniteRing::zmod(std::stoul(arg.substr(1)));
  };
  if (kind == "pair-delta") return dgw::pair_delta(named_group(arg));
  if (kind == "triple-delta") {
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw dgw::ValidationError("expected a size in '" + spec + "'");
    return dgw::triple_delta(std::stoul(arg));
  }
  if (kind == "ring-a") return dgw::ring_A(zmod());
  if (kind == "ring-b") return dgw::ring_B(zmod());
  return std::nullopt;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

json invariants_json(const dgw::InvariantFactors& f) {
  json t = json::array();
  for (const auto& d : f.torsion) t.push_back(dgw::detail::integer_to_json(d));
  return {{"free_rank", f.free_rank}, {"torsion", t}, {"text", f.to_string()}};
}

json axioms_json(const dgw::AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return {{"passed", r.passed()}, {"pairs_checked", r.pairs_checked}, {"violations", v}};
}

json report_json(const dgw::CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"check", i.name}, {"ok", i.ok}, {"detail", i.detail}});
  return {{"ok", r.ok()}, {"items", items}, {"notes", r.notes}};
}

std::string axioms_text(const dgw::AxiomReport& r) {
  std::string s = r.passed() ? "axioms: ok" : "axioms: FAILED";
  s += " (" + std::to_string(r.pairs_checked) + " pairs)\n";
  for (const auto& v : r.violations) s += "  " + v.axiom + ": " + v.witness + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// Output

struct Output {
  bool as_json = false;
  json doc;
  std::string text;
  std::string timing;  // human output only, so JSON stays byte-identical

  int emit(int code) const {
    if (as_json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text;
      if (!timing.empty()) std::cerr << timing << "\n";
    }
    return code;
  }
};

class Stopwatch {
 public:
  std::string lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    return stage + " " + buf;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// Commands

int cmd_validate(const std::string& arg, Output& out) {
  auto in = read_input(arg);
  out.doc = {{"command", "validate"}, {"input", input_json(in)}};
  try {
    auto t = read_triangulation(in);
    out.doc["valid"] = true;
    out.doc["tetrahedra"] = t.tets.size();
    out.doc["faces"] = t.face_names().size();
    out.text = "valid: " + std::to_string(t.tets.size()) + " tetrahedra, " +
               std::to_string(t.face_names().size()) + " faces\n";
    return out.emit(kOk);
  } catch (const dgw::ValidationError& e) {
    out.doc["valid"] = false;
    out.doc["error"] = e.what();
    out.doc["line"] = e.line();
    out.text = std::string("invalid: ") + e.what() + "\n";
    return out.emit(kInvalid);
  }
}

int cmd_complete(const std::string& arg, bool trace, Output& out) {
  Stopwatch sw;
  auto in = read_input(arg);
  auto c = dgw::complete(read_triangulation(in));
  out.timing = sw.lap("completion");
  const auto& p = c.presentation;
  out.doc = {{"command", "complete"},
             {"input", input_json(in)},
             {"nodes", p.num_nodes()},
             {"arrows", p.num_arrows()},
             {"products", p.products.size()},
             {"presentation", p.to_text()},
             {"presentation_fingerprint", fingerprint(p.to_text())}};
  out.text = p.to_text() + "fingerprint " + fingerprint(p.to_text()) + "\n";
  if (trace) {
    json stages = json::array();
    std::string t = "trace (" + std::to_string(c.trace.rounds) + " rounds)\n";
    for (const auto& s : c.trace.stages) {
      stages.push_back({{"label", s.label},
                        {"v_size", s.v_size},
                        {"i_size", s.i_size},
                        {"merges", s.merges}});
      t += "  " + s.label + ": |V| = " + std::to_string(s.v_size) +
           ", |I| = " + std::to_string(s.i_size) + ", merges " + std::to_string(s.merges) + "\n";
    }
    out.doc["trace"] = {{"rounds", c.trace.rounds}, {"stages", stages}};
    out.text += t;
  }
  return out.emit(kOk);
}

std::size_t degree_cap(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DGW_MAX_DIM")) {
    const std::string s = env;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw dgw::ValidationError("DGW_MAX_DIM must be a non-negative integer, got '" + s + "'");
    return std::stoul(s);
  }
  return dgw::TupleComplex::default_max_dim;
}

int cmd_homology(const std::string& arg, std::optional<std::size_t> max_dim, Output& out) {
  Stopwatch sw;
  auto in = read_input(arg);
  auto c = dgw::complete(read_triangulation(in));
  std::string timing = sw.lap("completion");
  auto table = dgw::mu_table(c.presentation);
  timing += ", " + sw.lap("products");
  dgw::TupleComplex::Options opts;
  opts.max_dim = degree_cap(max_dim);
  dgw::TupleComplex tc(table, opts);
  timing += ", " + sw.lap("tuples");
  auto h = dgw::homology(tc);
  out.timing = timing + ", " + sw.lap("homology");

  json groups = json::array();
  for (long n = h.min_degree; n <= h.max_degree; ++n) {
    const auto g = h.at(n);
    json t = json::array();
    for (const auto& d : g.torsion) t.push_back(dgw::detail::integer_to_json(d));
    groups.push_back({{"degree", n}, {"free_rank", g.free_rank}, {"torsion", t}});
  }
  out.doc = {{"command", "homology"},
             {"input", input_json(in)},
             {"max_dim", opts.max_dim},
             {"truncated", h.truncated},
             {"sizes", h.sizes},
             {"homology", groups}};
  out.text = h.to_string();
  return out.emit(kOk);
}

int cmd_ring(const std::string& which, const std::string& arg, bool present_only, Output& out) {
  if (which != "aprime" && which != "bprime")
    throw dgw::ValidationError("expected 'aprime' or 'bprime', got '" + which + "'");
  const bool a = which == "aprime";
  out.doc = {{"command", "ring"}, {"functor", which}};
  if (auto g = finite_construction(arg)) {
    out.doc["input"] = {{"source", "construction:" + arg}};
    auto pres = a ? dgw::aprime_presentation(*g) : dgw::bprime_presentation(*g);
    out.doc["presentation"] = dgw::presentation_to_json(pres);
    out.text = pres.to_text();
    if (!present_only) {
      auto alg = a ? dgw::aprime_finite(*g) : dgw::bprime_finite(*g);
      auto cert = alg.certificate();
      out.doc["algebra"] = dgw::algebra_to_json(alg);
      out.doc["additive_group"] = invariants_json(alg.additive_group());
      out.doc["certificate_violations"] = cert.size();
      out.text += "\nadditive group: " + alg.additive_group().to_string() + "\n";
      for (std::size_t i = 0; i < alg.rank(); ++i)
        for (std::size_t j = 0; j < alg.rank(); ++j)
          out.text += alg.name(i) + " * " + alg.name(j) + " = " +
                      alg.format(alg.structure_constant(i, j)) + "\n";
      out.text += "unit: " + alg.format(alg.unit_vector()) + "\n";
      out.text += "certificate: " + std::string(cert.empty() ? "ok" : "FAILED") + "\n";
      if (!cert.empty()) return out.emit(kFailure);
    }
    return out.emit(kOk);
  }
  auto in = read_input(arg);
  out.doc["input"] = input_json(in);
  auto c = dgw::complete(read_triangulation(in));
  auto pres = a ? dgw::aprime_presentation(c.presentation)
                : dgw::bprime_presentation(c.presentation);
  out.doc["presentation"] = dgw::presentation_to_json(pres);
  out.text = pres.to_text();
  if (!present_only) {
    // the groupoid of a knot complement is infinite
    out.doc["algebra"] = nullptr;
    out.text += "\n(infinite groupoid: presentation only)\n";
  }
  return out.emit(kOk);
}

int cmd_pair_delta(const std::string& group_file, const std::string& subgroup, bool aprime,
                   Output& out) {
  dgw::GroupTable g = std::filesystem::exists(group_file)
                          ? dgw::GroupTable::parse(read_file(group_file))
                          : named_group(group_file);
  auto pair = dgw::GroupPair::generated(std::move(g), split_list(subgroup));
  out.doc = {{"command", "pair-delta"},
             {"group_order", pair.group.order()},
             {"subgroup_order", pair.subgroup.size()}};
  std::vector<std::string> h_names;
  for (std::size_t x : pair.subgroup) h_names.push_back(pair.group.name(x));
  out.doc["subgroup"] = h_names;
  out.text = "|G| = " + std::to_string(pair.group.order()) +
             ", |H| = " + std::to_string(pair.subgroup.size()) + "\n";
  auto mal = dgw::is_malnormal(pair);
  out.doc["malnormal"] = mal.malnormal;
  if (!mal.malnormal) {
    out.doc["reason"] = mal.reason;
    out.text += "not malnormal: " + mal.reason + "\n";
    return out.emit(kInvalid);
  }
  auto pd = dgw::build_pair_delta(pair);
  const auto& gd = pd.groupoid;
  auto ax = dgw::check_axioms(gd);
  out.doc["objects"] = gd.num_objects();
  out.doc["morphisms"] = gd.num_morphisms();
  out.doc["h_size"] = gd.h().size();
  out.doc["axioms"] = axioms_json(ax);
  out.text += "malnormal; " + std::to_string(gd.num_objects()) +
              (gd.num_objects() == 1 ? " object, " : " objects, ") +
              std::to_string(gd.num_morphisms()) + " morphisms, |H| = " +
              std::to_string(gd.h().size()) + "\n" + axioms_text(ax);
  if (aprime) {
    auto alg = dgw::aprime_finite(gd);
    out.doc["aprime"] = dgw::algebra_to_json(alg);
    out.doc["aprime_additive_group"] = invariants_json(alg.additive_group());
    out.text += "A' additive group: " + alg.additive_group().to_string() + "\n";
  }
  return out.emit(ax.passed() ? kOk : kInvalid);
}

int cmd_axioms(const std::string& target, Output& out) {
  std::vector<std::pair<std::string, dgw::AxiomReport>> results;
  auto run_finite = [&](const std::string& name, const dgw::FiniteDeltaGroupoid& g) {
    results.emplace_back(name, dgw::check_axioms(g));
  };
  if (target.empty() || target == "all") {
    for (const char* spec : {"pair-delta:Z4", "pair-delta:S3", "triple-delta:3", "ring-a:Z5",
                             "ring-a:Z7", "ring-b:Z3", "ring-b:Z5"})
      run_finite(spec, *finite_construction(spec));
    auto s3 = dgw::GroupTable::symmetric(3);
    run_finite("pair (S3, <(0 1)>)",
               dgw::delta_from_pair(dgw::GroupPair::generated(s3, {"(0 1)"})));
    results.emplace_back("strip (denominators <= 12)", dgw::strip::check_samples(12));
  } else if (target == "strip") {
    results.emplace_back("strip (denominators <= 12)", dgw::strip::check_samples(12));
  } else if (auto g = finite_construction(target)) {
    run_finite(target, *g);
  } else if (dgw::presets::triangulation_texts().count(target) ||
             std::filesystem::exists(target)) {
    auto in = read_input(target);
    auto c = dgw::complete(read_triangulation(in));
    dgw::GroupoidWordProblem wp(c.presentation);
    results.emplace_back(in.source, dgw::check_axioms(c.presentation, wp));
  } else {
    throw dgw::ValidationError("unknown axiom target '" + target + "'");
  }
  bool all = true;
  json list = json::array();
  for (const auto& [name, r] : results) {
    all = all && r.passed();
    json j = axioms_json(r);
    j["name"] = name;
    list.push_back(j);
    out.text += name + ": " + axioms_text(r);
  }
  out.doc = {{"command", "axioms"}, {"passed", all}, {"results", list}};
  return out.emit(all ? kOk : kInvalid);
}

int cmd_repcheck(const std::string& which, std::size_t ball, Output& out) {
  out.doc = {{"command", "repcheck"}, {"representation", which}, {"ball", ball}};
  dgw::CheckReport rep;
  if (which == "trefoil-phi") {
    auto ring = dgw::presets::trefoil_ring();
    auto pres = dgw::presets::trefoil_group();
    auto phi = dgw::presets::trefoil_phi(ring);
    dgw::SpecialCheckOptions so;
    so.ball_radius = ball;
    rep.append(dgw::special_check(pres, ring, phi, so));
    dgw::QRelationOptions qo;
    qo.ball_radius = ball;
    rep.append(dgw::q_relation_check(pres, ring, phi, qo));
  } else if (which == "fig8-sl4") {
    auto pres = dgw::presets::fig8_group();
    rep = dgw::matrix_representation_check(pres, dgw::presets::fig8_sl4(),
                                           {dgw::presets::fig8_sl4_kernel_word(pres)});
  } else {
    throw dgw::ValidationError("unknown representation '" + which +
                               "' (expected trefoil-phi or fig8-sl4)");
  }
  out.doc["report"] = report_json(rep);
  out.text = rep.to_string();
  return out.emit(rep.ok() ? kOk : kInvalid);
}

int cmd_pachner23(const std::string& arg, const std::string& face, const std::string& tet,
                  Output& out) {
  auto in = read_input(arg);
  auto moved = dgw::pachner23(read_triangulation(in), face, tet);
  out.doc = {{"command", "pachner23"},
             {"input", input_json(in)},
             {"face", face},
             {"tet", tet},
             {"triangulation", moved.to_text()}};
  out.text = moved.to_text();
  return out.emit(kOk);
}

int cmd_preset(const std::string& what, Output& out) {
  if (what != "list") throw dgw::ValidationError("expected 'preset list'");
  out.doc = {{"command", "preset"}, {"presets", dgw::presets::names()}};
  for (const auto& n : dgw::presets::names()) out.text += n + "\n";
  return out.emit(kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Δ-groupoids of ideal triangulations: completion, homology, rings, group pairs"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Machine-readable output");
  app.fallthrough();

  std::string input, which, face, tet, group, subgroup, target;
  bool trace = false, present_only = false, aprime = false;
  std::optional<std::size_t> max_dim;
  std::size_t ball = 6;

  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Validate a triangulation");
  validate->add_option("input", input, "File, '-' or preset")->required();
  validate->callback([&] { action = [&] { return cmd_validate(input, out); }; });

  auto* complete = app.add_subcommand("complete", "Complete a triangulation to a Δ-groupoid");
  complete->add_option("input", input, "File, '-' or preset")->required();
  complete->add_flag("--trace", trace, "Print the completion stages");
  complete->callback([&] { action = [&] { return cmd_complete(input, trace, out); }; });

  auto* homology = app.add_subcommand("homology", "Homology of the completed Δ-groupoid");
  homology->add_option("input", input, "File, '-' or preset")->required();
  homology->add_option("--max-dim", max_dim, "Degree cap (default 12, or DGW_MAX_DIM)");
  homology->callback([&] { action = [&] { return cmd_homology(input, max_dim, out); }; });

  auto* ring = app.add_subcommand("ring", "Emit the A' or B' ring");
  ring->add_option("functor", which, "aprime or bprime")->required();
  ring->add_option("input", input,
                   "File, '-', preset, or construction "
                   "(pair-delta:Z4, triple-delta:3, ring-a:Z5, ring-b:Z3)")
      ->required();
  ring->add_flag("--present-only", present_only, "Skip the finite-rank computation");
  ring->callback([&] { action = [&] { return cmd_ring(which, input, present_only, out); }; });

  auto* pair = app.add_subcommand("pair-delta", "Δ-groupoid of a malnormal group pair");
  pair->add_option("--group", group, "Group table file (or Z<n>, S<n>)")->required();
  pair->add_option("--subgroup", subgroup, "Comma-separated generators of H")->required();
  pair->add_flag("--aprime", aprime, "Also compute the A' algebra");
  pair->callback([&] { action = [&] { return cmd_pair_delta(group, subgroup, aprime, out); }; });

  auto* axioms = app.add_subcommand("axioms", "Run the Δ-groupoid axiom suite");
  axioms->add_option("target", target,
                     "all (default), strip, a construction, a preset or a triangulation file");
  axioms->callback([&] { action = [&] { return cmd_axioms(target, out); }; });

  auto* repcheck = app.add_subcommand("repcheck", "Check a built-in representation");
  repcheck->add_option("representation", which, "trefoil-phi or fig8-sl4")->required();
  repcheck->add_option("--ball", ball, "Word length bound for the ball checks");
  repcheck->callback([&] { action = [&] { return cmd_repcheck(which, ball, out); }; });

  auto* pachner = app.add_subcommand("pachner23", "Apply a 2-3 Pachner move");
  pachner->add_option("input", input, "File, '-' or preset")->required();
  pachner->add_option("--face", face, "Face to move across")->required();
  pachner->add_option("--tet", tet, "Tetrahedron playing the role of u");
  pachner->callback([&] { action = [&] { return cmd_pachner23(input, face, tet, out); }; });

  auto* preset = app.add_subcommand("preset", "Built-in triangulations");
  preset->add_option("what", which, "list")->required();
  preset->callback([&] { action = [&] { return cmd_preset(which, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return action();
  } catch (const dgw::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const dgw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
