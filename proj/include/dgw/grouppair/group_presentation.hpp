#pragma once

// Finitely presented groups.
//
// Text format:
//
//   gen a b              generator names
//   rel a a B B B        a relator; a name in upper case is the inverse
//   peripheral a B       a distinguished (peripheral) word
//
// Generator names must be lower case so that the upper-case spelling of a
// name is free to denote its inverse.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dgw/error.hpp"
#include "dgw/zlin.hpp"

namespace dgw {

struct Letter {
  std::size_t gen = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using GroupWord = std::vector<Letter>;

inline GroupWord inverse_word(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

/// Cancels adjacent x x^-1 pairs.
inline GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline GroupWord concat(GroupWord a, const GroupWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct GroupPresentationData {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  std::vector<GroupWord> peripheral;

  std::size_t find_generator(const std::string& name) const {
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (generators[g] == name) return g;
    throw ValidationError("unknown generator '" + name + "'");
  }

  /// Parses a whitespace-separated word; upper-case names denote inverses.
  GroupWord parse_word(const std::string& text, std::size_t line = 0) const {
    GroupWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      bool found = false;
      for (std::size_t g = 0; g < generators.size() && !found; ++g) {
        if (generators[g] == tok) {
          w.push_back({g, false});
          found = true;
        } else if (upper(generators[g]) == tok) {
          w.push_back({g, true});
          found = true;
        }
      }
      if (!found) throw ValidationError("unknown letter '" + tok + "'", line);
    }
    return w;
  }

  std::string word_to_string(const GroupWord& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += ' ';
      out += w[k].inverse ? upper(generators[w[k].gen]) : generators[w[k].gen];
    }
    return out;
  }

  static GroupPresentationData parse(const std::string& text) {
    GroupPresentationData p;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_gens = false;
    while (std::getline(is, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head)) continue;
      std::string rest;
      std::getline(ls, rest);
      if (head == "gen") {
        std::istringstream gs(rest);
        std::string g;
        while (gs >> g) {
          if (g != lower(g) || upper(g) == g)
            throw ValidationError("generator names must be lower case: '" + g + "'", lineno);
          if (std::find(p.generators.begin(), p.generators.end(), g) != p.generators.end())
            throw ValidationError("generator '" + g + "' declared twice", lineno);
          p.generators.push_back(g);
        }
        have_gens = true;
      } else if (head == "rel" || head == "peripheral") {
        if (!have_gens) throw ValidationError("'" + head + "' before 'gen'", lineno);
        auto w = p.parse_word(rest, lineno);
        (head == "rel" ? p.relators : p.peripheral).push_back(std::move(w));
      } else {
        throw ValidationError("unknown statement '" + head + "'", lineno);
      }
    }
    return p;
  }

  std::string to_text() const {
    std::string out = "gen";
    for (const auto& g : generators) out += " " + g;
    out += "\n";
    for (const auto& r : relators) out += "rel " + word_to_string(r) + "\n";
    for (const auto& r : peripheral) out += "peripheral " + word_to_string(r) + "\n";
    return out;
  }

  /// Relation matrix of the abelianization: one column per relator, one row
  /// per generator, entry = exponent sum.
  IntMatrix abelian_relation_matrix() const {
    IntMatrix m(generators.size(), relators.size());
    for (std::size_t r = 0; r < relators.size(); ++r)
      for (const Letter& l : relators[r]) m(l.gen, r) += l.inverse ? -1 : 1;
    return m;
  }

  InvariantFactors abelianization() const {
    return cokernel_invariants(abelian_relation_matrix());
  }

 private:
  static std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
  }
  static std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }
};

/// Cyclic reduction: free reduction, then cancellation of inverse letters at
/// the two ends.
inline GroupWord cyclic_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a].gen == r[b - 1].gen && r[a].inverse != r[b - 1].inverse) {
    ++a;
    --b;
  }
  return GroupWord(r.begin() + static_cast<std::ptrdiff_t>(a),
                   r.begin() + static_cast<std::ptrdiff_t>(b));
}

/// Result of Tietze simplification: an isomorphic presentation on a subset
/// of the original generators, and for every original generator its image
/// as a word in the kept generators.
struct TietzeResult {
  GroupPresentationData simplified;
  std::vector<std::size_t> kept;   // simplified generator -> original index
  std::vector<GroupWord> image;    // original generator -> simplified word
};

/// Repeatedly eliminates a generator occurring exactly once in some relator
/// (choosing the shortest such relator), substituting its solution into all
/// other relators.  An elimination that would make some relator longer than
/// `max_length` is skipped.
inline TietzeResult tietze_simplify(const GroupPresentationData& p,
                                    std::size_t max_length = 64) {
  const std::size_t n = p.generators.size();
  std::vector<GroupWord> value(n);  // current expression of each generator
  std::vector<bool> eliminated(n, false);
  for (std::size_t g = 0; g < n; ++g) value[g] = {{g, false}};
  std::vector<GroupWord> rels;
  for (const auto& r : p.relators) rels.push_back(cyclic_reduce(r));

  auto substitute = [](const GroupWord& w, std::size_t g, const GroupWord& v) {
    GroupWord out;
    const GroupWord vi = inverse_word(v);
    for (const Letter& l : w) {
      if (l.gen != g) out.push_back(l);
      else out.insert(out.end(), (l.inverse ? vi : v).begin(), (l.inverse ? vi : v).end());
    }
    return free_reduce(out);
  };

  for (;;) {
    // drop trivial and duplicate relators
    std::vector<GroupWord> clean;
    for (auto& r : rels) {
      r = cyclic_reduce(r);
      if (!r.empty() && std::find(clean.begin(), clean.end(), r) == clean.end())
        clean.push_back(r);
    }
    rels = std::move(clean);
    std::sort(rels.begin(), rels.end(),
              [](const GroupWord& a, const GroupWord& b) { return a.size() < b.size(); });

    bool done = true;
    for (std::size_t ri = 0; ri < rels.size() && done; ++ri) {
      const GroupWord& r = rels[ri];
      std::map<std::size_t, std::size_t> count;
      for (const Letter& l : r) ++count[l.gen];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        if (count[r[pos].gen] != 1) continue;
        // rotate so the letter comes first: r ~ g^e w, so g = w^-1 (e = +1)
        // or g = w (e = -1)
        const std::size_t g = r[pos].gen;
        GroupWord w(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
        w.insert(w.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        GroupWord sol = r[pos].inverse ? w : inverse_word(w);
        bool too_long = false;
        for (std::size_t rj = 0; rj < rels.size() && !too_long; ++rj)
          if (rj != ri && substitute(rels[rj], g, sol).size() > max_length) too_long = true;
        if (too_long) continue;
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(ri));
        for (auto& other : rels) other = substitute(other, g, sol);
        for (auto& v : value) v = substitute(v, g, sol);
        eliminated[g] = true;
        done = false;
        break;
      }
    }
    if (done) break;
  }

  TietzeResult out;
  std::vector<std::size_t> new_index(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (eliminated[g]) continue;
    new_index[g] = out.kept.size();
    out.kept.push_back(g);
    out.simplified.generators.push_back(p.generators[g]);
  }
  auto reindex = [&](const GroupWord& w) {
    GroupWord r;
    for (const Letter& l : w) r.push_back({new_index[l.gen], l.inverse});
    return r;
  };
  for (const auto& r : rels) out.simplified.relators.push_back(reindex(r));
  for (const auto& w : p.peripheral) {
    GroupWord v;
    for (const Letter& l : w) {
      const GroupWord& img = l.inverse ? inverse_word(value[l.gen]) : value[l.gen];
      v.insert(v.end(), img.begin(), img.end());
    }
    out.simplified.peripheral.push_back(reindex(free_reduce(v)));
  }
  for (std::size_t g = 0; g < n; ++g) out.image.push_back(reindex(value[g]));
  return out;
}

}  // namespace dgw
