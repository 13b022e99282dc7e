#ifndef AVCURVES_SRC_GROUP_TABLE_HPP_
#define AVCURVES_SRC_GROUP_TABLE_HPP_

// Internal helpers: subgroup enumeration and partition search over a finite
// group given by its multiplication table (identity at index 0).

#include <algorithm>
#include <set>
#include <vector>

namespace avc::internal {

struct TableGroup {
  int n = 0;
  std::vector<int> mul;  // n*n row-major
  int at(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
};

inline std::vector<std::vector<int>> table_subgroups(const TableGroup& g) {
  std::vector<int> inv(static_cast<std::size_t>(g.n), -1);
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b) {
      if (g.at(a, b) == 0) inv[static_cast<std::size_t>(a)] = b;
    }
  }
  auto close = [&](std::vector<int> gens) {
    std::set<int> have = {0};
    for (int x : gens) have.insert(x);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(have.begin(), have.end());
      for (int a : cur) {
        for (int b : cur) {
          if (have.insert(g.at(a, b)).second) grew = true;
        }
        if (have.insert(inv[static_cast<std::size_t>(a)]).second) grew = true;
      }
    }
    return std::vector<int>(have.begin(), have.end());
  };
  std::set<std::vector<int>> seen;
  seen.insert({0});
  std::vector<std::vector<int>> frontier = {{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& H : frontier) {
      for (int x = 1; x < g.n; ++x) {
        if (std::binary_search(H.begin(), H.end(), x)) continue;
        auto gens = H;
        gens.push_back(x);
        auto bigger = close(gens);
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// All partitions of the group into >= 2 nontrivial proper subgroups with
// pairwise trivial intersections, by exact cover over the least uncovered
// element; candidate parts are tried larger-first, then lexicographically.
inline std::vector<std::vector<std::vector<int>>> table_partitions(
    const TableGroup& g) {
  auto subs = table_subgroups(g);
  std::vector<std::vector<int>> parts;
  for (auto& s : subs) {
    if (s.size() > 1 && static_cast<int>(s.size()) < g.n) {
      parts.push_back(std::move(s));
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });

  std::vector<std::vector<std::vector<int>>> found;
  std::vector<char> covered(static_cast<std::size_t>(g.n), 0);
  covered[0] = 1;
  std::vector<std::vector<int>> chosen;
  int remaining = g.n - 1;

  auto search = [&](auto&& self) -> void {
    if (remaining == 0) {
      if (chosen.size() >= 2) found.push_back(chosen);
      return;
    }
    int pivot = 1;
    while (covered[static_cast<std::size_t>(pivot)]) ++pivot;
    for (const auto& p : parts) {
      if (!std::binary_search(p.begin(), p.end(), pivot)) continue;
      bool clash = false;
      for (int e : p) {
        if (e != 0 && covered[static_cast<std::size_t>(e)]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (int e : p) {
        if (e != 0) covered[static_cast<std::size_t>(e)] = 1;
      }
      remaining -= static_cast<int>(p.size()) - 1;
      chosen.push_back(p);
      self(self);
      chosen.pop_back();
      remaining += static_cast<int>(p.size()) - 1;
      for (int e : p) {
        if (e != 0) covered[static_cast<std::size_t>(e)] = 0;
      }
    }
  };
  search(search);
  return found;
}

}  // namespace avc::internal

#endif  // AVCURVES_SRC_GROUP_TABLE_HPP_
