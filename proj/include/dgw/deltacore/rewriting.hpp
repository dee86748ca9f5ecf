#pragma once

// String rewriting for the word problem of presented groupoids.
//
// Words are sequences of arrow indices.  Rules are oriented by the shortlex
// order (shorter first, then lexicographic on arrow indices) and the system
// is completed with the Knuth-Bendix procedure.  Completion is capped: if the
// number of rules exceeds the cap, WordProblemUnresolved is thrown rather than
// answering with a possibly unsound equality.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgw/deltacore/presentation.hpp"
#include "dgw/error.hpp"

namespace dgw {

using ArrowWord = std::vector<std::uint32_t>;

/// Shortlex comparison: a < b.
inline bool shortlex_less(const ArrowWord& a, const ArrowWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct RewriteRule {
  ArrowWord lhs, rhs;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

class RewriteSystem {
 public:
  static constexpr std::size_t default_rule_cap = 10000;

  RewriteSystem() = default;

  /// Builds the system {x·i(x) -> 1} ∪ {x·y -> μ(x,y)} and completes it.
  explicit RewriteSystem(const DeltaPresentation& p,
                         std::size_t rule_cap = default_rule_cap)
      : rule_cap_(rule_cap) {
    std::vector<RewriteRule> initial;
    for (std::size_t x = 0; x < p.num_arrows(); ++x)
      initial.push_back({{static_cast<std::uint32_t>(x),
                          static_cast<std::uint32_t>(p.inv[x])},
                         {}});
    for (const auto& e : p.products)
      initial.push_back({{static_cast<std::uint32_t>(e.x),
                          static_cast<std::uint32_t>(e.y)},
                         {static_cast<std::uint32_t>(e.xy)}});
    complete(std::move(initial));
  }

  /// Builds and completes a system from arbitrary equations.
  static RewriteSystem from_equations(
      const std::vector<std::pair<ArrowWord, ArrowWord>>& eqs,
      std::size_t rule_cap = default_rule_cap) {
    RewriteSystem rs;
    rs.rule_cap_ = rule_cap;
    std::vector<RewriteRule> initial;
    for (const auto& [a, b] : eqs) initial.push_back({a, b});
    rs.complete(std::move(initial));
    return rs;
  }

  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  bool confluent() const noexcept { return confluent_; }
  /// Number of rules in the final system that are not (reduced forms of)
  /// the input equations.
  std::size_t rules_added() const noexcept { return added_; }
  std::size_t rule_cap() const noexcept { return rule_cap_; }

  /// Applies rules until none matches.
  ArrowWord normal_form(ArrowWord w) const {
    for (;;) {
      bool changed = false;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (std::size_t len : lengths_) {
          if (pos + len > w.size()) break;
          ArrowWord sub(w.begin() + pos, w.begin() + pos + len);
          auto it = index_.find(sub);
          if (it == index_.end()) continue;
          const ArrowWord& r = rules_[it->second].rhs;
          ArrowWord out(w.begin(), w.begin() + pos);
          out.insert(out.end(), r.begin(), r.end());
          out.insert(out.end(), w.begin() + pos + len, w.end());
          w = std::move(out);
          changed = true;
          break;
        }
      }
      if (!changed) return w;
    }
  }

  bool equal(const ArrowWord& a, const ArrowWord& b) const {
    return normal_form(a) == normal_form(b);
  }

  /// True if no rule applies to w.
  bool is_irreducible(const ArrowWord& w) const { return normal_form(w) == w; }

 private:
  struct WordLess {
    bool operator()(const ArrowWord& a, const ArrowWord& b) const { return a < b; }
  };

  static bool contains(const ArrowWord& big, const ArrowWord& small) {
    return small.size() <= big.size() &&
           std::search(big.begin(), big.end(), small.begin(), small.end()) !=
               big.end();
  }

  // Rewriting with the live rules of the working set.
  ArrowWord reduce(ArrowWord w) const {
    for (;;) {
      bool changed = false;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (std::size_t len : work_lengths_) {
          if (pos + len > w.size()) break;
          auto it = work_index_.find(ArrowWord(w.begin() + pos, w.begin() + pos + len));
          if (it == work_index_.end()) continue;
          const ArrowWord& r = work_[it->second].rhs;
          ArrowWord out(w.begin(), w.begin() + pos);
          out.insert(out.end(), r.begin(), r.end());
          out.insert(out.end(), w.begin() + pos + len, w.end());
          w = std::move(out);
          changed = true;
          break;
        }
      }
      if (!changed) return w;
    }
  }

  void index_rule(std::size_t r) {
    work_index_[work_[r].lhs] = r;
    auto len = work_[r].lhs.size();
    if (std::find(work_lengths_.begin(), work_lengths_.end(), len) == work_lengths_.end()) {
      work_lengths_.push_back(len);
      std::sort(work_lengths_.begin(), work_lengths_.end());
    }
  }

  /// Orients and adds a = b (after reduction), then interreduces: rules
  /// whose left side contains the new left side die and are re-queued as
  /// equations; right sides are renormalized.
  void add_equation(ArrowWord a, ArrowWord b) {
    std::vector<std::pair<ArrowWord, ArrowWord>> pending{{std::move(a), std::move(b)}};
    while (!pending.empty()) {
      auto [u, v] = std::move(pending.back());
      pending.pop_back();
      u = reduce(std::move(u));
      v = reduce(std::move(v));
      if (u == v) continue;
      if (shortlex_less(u, v)) std::swap(u, v);
      std::size_t id = work_.size();
      work_.push_back({u, v});
      alive_.push_back(true);
      ++live_;
      if (live_ > rule_cap_)
        throw WordProblemUnresolved("Knuth-Bendix completion exceeded the cap of " +
                                    std::to_string(rule_cap_) + " rules");
      for (std::size_t r = 0; r < id; ++r) {
        if (!alive_[r]) continue;
        if (contains(work_[r].lhs, u)) {
          alive_[r] = false;
          --live_;
          work_index_.erase(work_[r].lhs);
          pending.emplace_back(work_[r].lhs, work_[r].rhs);
        }
      }
      index_rule(id);
      for (std::size_t r = 0; r < id; ++r)
        if (alive_[r] && contains(work_[r].rhs, u)) work_[r].rhs = reduce(work_[r].rhs);
    }
  }

  /// Overlaps of a's suffix with b's prefix: a.lhs = p s, b.lhs = s q gives
  /// the pair (a.rhs q, p b.rhs).  Containments never occur between live
  /// rules of an interreduced system.
  void process_overlaps(std::size_t ia, std::size_t ib) {
    const ArrowWord l1 = work_[ia].lhs, r1 = work_[ia].rhs;
    const ArrowWord l2 = work_[ib].lhs, r2 = work_[ib].rhs;
    for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
      if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin()))
        continue;
      ArrowWord left = r1;
      left.insert(left.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
      ArrowWord right(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), r2.begin(), r2.end());
      add_equation(std::move(left), std::move(right));
      if (!alive_[ia] || !alive_[ib]) return;
    }
  }

  void complete(std::vector<RewriteRule> initial) {
    std::sort(initial.begin(), initial.end(), [](const auto& a, const auto& b) {
      return shortlex_less(a.lhs, b.lhs) ||
             (a.lhs == b.lhs && shortlex_less(a.rhs, b.rhs));
    });
    for (auto& r : initial) add_equation(r.lhs, r.rhs);
    std::vector<RewriteRule> reduced_input;
    for (std::size_t r = 0; r < work_.size(); ++r)
      if (alive_[r]) reduced_input.push_back(work_[r]);
    for (std::size_t i = 0; i < work_.size(); ++i) {
      for (std::size_t j = 0; j <= i && alive_[i]; ++j) {
        if (!alive_[j]) continue;
        process_overlaps(i, j);
        if (j != i && alive_[i] && alive_[j]) process_overlaps(j, i);
      }
    }
    for (std::size_t r = 0; r < work_.size(); ++r)
      if (alive_[r]) rules_.push_back(work_[r]);
    rebuild_index();
    confluent_ = true;
    added_ = 0;
    for (const auto& r : rules_)
      if (std::find(reduced_input.begin(), reduced_input.end(), r) ==
          reduced_input.end())
        ++added_;
    work_.clear();
    alive_.clear();
    work_index_.clear();
  }

  void rebuild_index() {
    index_.clear();
    std::set<std::size_t> lens;
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      index_.emplace(rules_[r].lhs, r);
      lens.insert(rules_[r].lhs.size());
    }
    lengths_.assign(lens.begin(), lens.end());
  }

  // working state of the completion
  std::vector<RewriteRule> work_;
  std::vector<bool> alive_;
  std::map<ArrowWord, std::size_t, WordLess> work_index_;
  std::vector<std::size_t> work_lengths_;
  std::size_t live_ = 0;

  std::vector<RewriteRule> rules_;
  std::map<ArrowWord, std::size_t, WordLess> index_;
  std::vector<std::size_t> lengths_;
  std::size_t rule_cap_ = default_rule_cap;
  std::size_t added_ = 0;
  bool confluent_ = false;
};

}  // namespace dgw
