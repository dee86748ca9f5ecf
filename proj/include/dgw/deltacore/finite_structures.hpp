#pragma once

// Finite groups and finite rings given by explicit tables.
//
// Text format (one statement per line, '#' starts a comment):
//
//   elem a b c          optional; declares the elements in order
//   mul a b = c         multiplication table entry
//   add a b = c         addition table entry (rings only)
//
// Undeclared elements are added in order of first appearance.  Tables must
// be complete; all axioms are checked exhaustively on load.

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dgw/error.hpp"
#include "dgw/perm.hpp"

namespace dgw {

namespace detail {

struct TableText {
  std::vector<std::string> elements;
  std::map<std::string, std::size_t> index;
  // (op, a, b, c, line)
  struct Entry {
    std::string op;
    std::size_t a, b, c, line;
  };
  std::vector<Entry> entries;

  std::size_t intern(const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    index.emplace(name, elements.size());
    elements.push_back(name);
    return elements.size() - 1;
  }
};

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline TableText parse_table_text(const std::string& text,
                                  const std::set<std::string>& ops) {
  TableText t;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "elem") {
      if (tok.size() < 2) throw ValidationError("'elem' without names", lineno);
      for (std::size_t k = 1; k < tok.size(); ++k) {
        if (t.index.count(tok[k])) {
          throw ValidationError("element '" + tok[k] + "' declared twice",
                                lineno);
        }
        t.intern(tok[k]);
      }
      continue;
    }
    if (!ops.count(tok[0])) {
      throw ValidationError("unknown statement '" + tok[0] + "'", lineno);
    }
    if (tok.size() != 5 || tok[3] != "=") {
      throw ValidationError("expected '" + tok[0] + " a b = c'", lineno);
    }
    auto lookup = [&](const std::string& name) {
      auto it = t.index.find(name);
      if (it == t.index.end())
        throw ValidationError("undeclared element '" + name + "'", lineno);
      return it->second;
    };
    t.entries.push_back(
        {tok[0], lookup(tok[1]), lookup(tok[2]), lookup(tok[4]), lineno});
  }
  return t;
}

inline std::vector<std::size_t> fill_table(const TableText& t,
                                           const std::string& op) {
  const std::size_t n = t.elements.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(n * n, unset);
  for (const auto& e : t.entries) {
    if (e.op != op) continue;
    std::size_t& slot = table[e.a * n + e.b];
    if (slot != unset && slot != e.c) {
      throw ValidationError("conflicting entries for " + op + " " +
                                t.elements[e.a] + " " + t.elements[e.b],
                            e.line);
    }
    slot = e.c;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a * n + b] == unset) {
        throw ValidationError("missing entry: " + op + " " + t.elements[a] +
                              " " + t.elements[b]);
      }
  return table;
}

}  // namespace detail

/// A finite group as a multiplication table on {0, ..., order-1}.
class GroupTable {
 public:
  GroupTable() = default;

  GroupTable(std::vector<std::string> names, std::vector<std::size_t> table)
      : names_(std::move(names)), mul_(std::move(table)) {
    const std::size_t n = names_.size();
    if (n == 0) throw ValidationError("a group has at least one element");
    if (mul_.size() != n * n) throw ValidationError("group table has wrong size");
    for (std::size_t v : mul_)
      if (v >= n) throw ValidationError("group table entry out of range");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw ValidationError("group table is not associative at (" +
                                  names_[a] + ", " + names_[b] + ", " +
                                  names_[c] + ")");
          }
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) identity_ = e;
    }
    if (identity_ == n) throw ValidationError("group table has no identity");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
      if (inverse_[a] == n) {
        throw ValidationError("element " + names_[a] + " has no inverse");
      }
  }

  /// Z/n with elements named "0", ..., "n-1".
  static GroupTable cyclic(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::size_t> mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
    }
    return GroupTable(std::move(names), std::move(mul));
  }

  /// S_n with elements named in cycle notation (identity "e"), composing
  /// right-to-left like Perm.
  static GroupTable symmetric(std::size_t n) {
    auto perms = Perm::all(n);
    std::map<Perm, std::size_t> idx;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      idx.emplace(perms[k], k);
      names.push_back(perms[k].to_string());
    }
    std::vector<std::size_t> mul(perms.size() * perms.size());
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b)
        mul[a * perms.size() + b] = idx.at(perms[a] * perms[b]);
    return GroupTable(std::move(names), std::move(mul));
  }

  static GroupTable parse(const std::string& text) {
    auto t = detail::parse_table_text(text, {"mul"});
    auto mul = detail::fill_table(t, "mul");
    return GroupTable(t.elements, std::move(mul));
  }

  std::size_t order() const noexcept { return names_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return mul_[a * names_.size() + b];
  }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Index of the element with the given name; throws if absent.
  std::size_t find(const std::string& name) const {
    for (std::size_t a = 0; a < names_.size(); ++a)
      if (names_[a] == name) return a;
    throw ValidationError("no group element named '" + name + "'");
  }

  /// The subgroup generated by `gens`, as a sorted list of elements.
  std::vector<std::size_t> generated_subgroup(
      const std::vector<std::size_t>& gens) const {
    std::set<std::size_t> sub{identity_};
    std::vector<std::size_t> frontier{identity_};
    while (!frontier.empty()) {
      std::size_t a = frontier.back();
      frontier.pop_back();
      for (std::size_t g : gens) {
        std::size_t b = mul(a, g);
        if (sub.insert(b).second) frontier.push_back(b);
      }
    }
    return {sub.begin(), sub.end()};
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> mul_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// A finite unital ring given by addition and multiplication tables.
class FiniteRing {
 public:
  FiniteRing(std::vector<std::string> names, std::vector<std::size_t> add_table,
             std::vector<std::size_t> mul_table)
      : names_(std::move(names)),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)) {
    const std::size_t n = names_.size();
    if (n == 0) throw ValidationError("a ring has at least one element");
    if (add_.size() != n * n || mul_.size() != n * n)
      throw ValidationError("ring tables have wrong size");
    for (std::size_t v : add_)
      if (v >= n) throw ValidationError("ring table entry out of range");
    for (std::size_t v : mul_)
      if (v >= n) throw ValidationError("ring table entry out of range");
    auto fail = [&](const std::string& what, std::size_t a, std::size_t b,
                    std::size_t c) {
      throw ValidationError("ring axiom fails (" + what + ") at (" +
                            names_[a] + ", " + names_[b] + ", " + names_[c] +
                            ")");
    };
    zero_ = one_ = n;
    for (std::size_t e = 0; e < n; ++e) {
      bool z = true, o = true;
      for (std::size_t a = 0; a < n; ++a) {
        z = z && add(e, a) == a && add(a, e) == a;
        o = o && mul(e, a) == a && mul(a, e) == a;
      }
      if (z && zero_ == n) zero_ = e;
      if (o && one_ == n) one_ = e;
    }
    if (zero_ == n) throw ValidationError("ring has no additive identity");
    if (one_ == n) throw ValidationError("ring has no multiplicative identity");
    neg_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (add(a, b) == zero_) neg_[a] = b;
    for (std::size_t a = 0; a < n; ++a) {
      if (neg_[a] == n) fail("additive inverse", a, a, a);
      for (std::size_t b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) fail("commutativity of +", a, b, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) fail("associativity of +", a, b, c);
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity of *", a, b, c);
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("left distributivity", a, b, c);
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) fail("right distributivity", a, b, c);
        }
      }
    }
  }

  /// Z/n.  n = 1 gives the zero ring.
  static FiniteRing zmod(std::size_t n) {
    if (n == 0) throw ValidationError("Z/n needs n >= 1");
    std::vector<std::string> names;
    std::vector<std::size_t> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = (a + b) % n;
        mul[a * n + b] = (a * b) % n;
      }
    }
    return FiniteRing(std::move(names), std::move(add), std::move(mul));
  }

  static FiniteRing parse(const std::string& text) {
    auto t = detail::parse_table_text(text, {"add", "mul"});
    auto add = detail::fill_table(t, "add");
    auto mul = detail::fill_table(t, "mul");
    return FiniteRing(t.elements, std::move(add), std::move(mul));
  }

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t add(std::size_t a, std::size_t b) const {
    return add_[a * names_.size() + b];
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return mul_[a * names_.size() + b];
  }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  std::size_t zero() const noexcept { return zero_; }
  std::size_t one() const noexcept { return one_; }
  const std::string& name(std::size_t a) const { return names_[a]; }

  /// Two-sided inverse of a, or size() if a is not a unit.
  std::size_t unit_inverse(std::size_t a) const {
    for (std::size_t b = 0; b < size(); ++b)
      if (mul(a, b) == one_ && mul(b, a) == one_) return b;
    return size();
  }
  bool is_unit(std::size_t a) const { return unit_inverse(a) != size(); }

  /// The units, in index order.
  std::vector<std::size_t> units() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a)
      if (is_unit(a)) out.push_back(a);
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> add_, mul_;
  std::size_t zero_ = 0, one_ = 0;
  std::vector<std::size_t> neg_;
};

}  // namespace dgw
