#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fixcat/support.hpp"

namespace fixcat::cat {

// A finite set with canonically sorted, duplicate-free element names.
// Sorted storage makes equality extensional and object identity decidable.
struct FinSet {
  std::vector<std::string> elems;

  FinSet() = default;
  explicit FinSet(std::vector<std::string> names) : elems(std::move(names)) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  }

  static FinSet canonical(std::size_t n, const std::string& prefix = "e") {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return FinSet(std::move(names));
  }

  std::size_t size() const { return elems.size(); }
  bool empty() const { return elems.empty(); }

  int index_of(const std::string& name) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), name);
    if (it == elems.end() || *it != name) return -1;
    return static_cast<int>(it - elems.begin());
  }
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  bool operator==(const FinSet&) const = default;
};

// A total function between finite sets, stored as a dense index array over
// the (sorted) source elements.
struct FinMap {
  std::vector<int> img;

  bool operator==(const FinMap&) const = default;

  static FinMap identity(std::size_t n) {
    FinMap m;
    m.img.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.img[i] = static_cast<int>(i);
    return m;
  }

  static FinMap constant(std::size_t n, int value) {
    FinMap m;
    m.img.assign(n, value);
    return m;
  }

  // g after f.
  static FinMap compose(const FinMap& g, const FinMap& f) {
    FinMap m;
    m.img.resize(f.img.size());
    for (std::size_t i = 0; i < f.img.size(); ++i) m.img[i] = g.img[f.img[i]];
    return m;
  }

  bool valid_into(std::size_t tgt_size) const {
    for (int v : img)
      if (v < 0 || static_cast<std::size_t>(v) >= tgt_size) return false;
    return true;
  }

  bool is_bijection(std::size_t tgt_size) const {
    if (img.size() != tgt_size) return false;
    std::vector<char> hit(tgt_size, 0);
    for (int v : img) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }

  std::optional<FinMap> inverse(std::size_t tgt_size) const {
    if (!is_bijection(tgt_size)) return std::nullopt;
    FinMap inv;
    inv.img.resize(tgt_size);
    for (std::size_t i = 0; i < img.size(); ++i) inv.img[img[i]] = static_cast<int>(i);
    return inv;
  }

  // Human-readable reason a map fails to be a bijection, for invertibility
  // error reports: either a non-injective pair or an uncovered element.
  std::string iso_failure(const FinSet& src, const FinSet& tgt) const {
    if (img.size() != tgt.size() || true) {
      std::vector<int> pre(tgt.size(), -1);
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (pre[img[i]] >= 0)
          return "elements '" + src.elems[pre[img[i]]] + "' and '" + src.elems[i] +
                 "' share the image '" + tgt.elems[img[i]] + "'";
        pre[img[i]] = static_cast<int>(i);
      }
      for (std::size_t j = 0; j < tgt.size(); ++j)
        if (pre[j] < 0) return "element '" + tgt.elems[j] + "' has no preimage";
    }
    return "";
  }
};

// All total functions src -> tgt in lexicographic order; |tgt|^|src| entries.
std::vector<FinMap> all_maps(std::size_t src_size, std::size_t tgt_size, std::size_t cap);

// Union-find over n slots; used for quotient and pushout constructions.  The
// resulting class structure doubles as the mediating-map witness.
class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  // Dense renumbering of classes in order of least member.
  std::vector<int> classes(int& count) {
    std::vector<int> cls(parent_.size(), -1);
    count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      int root = find(static_cast<int>(i));
      if (cls[root] < 0) cls[root] = count++;
      cls[i] = cls[root];
    }
    return cls;
  }

private:
  std::vector<int> parent_;
};

}  // namespace fixcat::cat
