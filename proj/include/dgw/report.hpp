#pragma once

// A flat list of named pass/fail checks, used by the instance-level
// verifications (lemma identities, representation checks, ring maps).

#include <algorithm>
#include <string>
#include <vector>

namespace dgw {

struct CheckReport {
  struct Item {
    std::string name;
    bool ok = false;
    std::string detail;
  };
  std::vector<Item> items;
  std::vector<std::string> notes;  // context that is neither pass nor fail

  void add(std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(name), ok, std::move(detail)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.ok; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const Item& i) { return !i.ok; }));
  }
  const Item* find(const std::string& name) const {
    for (const auto& i : items)
      if (i.name == name) return &i;
    return nullptr;
  }

  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& i : other.items) items.push_back({prefix + i.name, i.ok, i.detail});
    for (const auto& n : other.notes) notes.push_back(prefix + n);
  }

  std::string to_string() const {
    std::string out;
    for (const auto& i : items) {
      out += (i.ok ? "ok    " : "FAIL  ") + i.name;
      if (!i.detail.empty()) out += "  (" + i.detail + ")";
      out += "\n";
    }
    for (const auto& n : notes) out += "note  " + n + "\n";
    return out;
  }
};

}  // namespace dgw
