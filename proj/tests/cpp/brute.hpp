#pragma once

// Small independent oracles: nothing here calls the search or linear
// algebra code under test.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "idemlab/group.hpp"

namespace brute {

using idemlab::Elem;
using idemlab::FiniteGroup;

inline bool is_hom(const FiniteGroup& x, const FiniteGroup& g, const std::vector<Elem>& f) {
  for (Elem a = 0; a < x.order(); ++a) {
    for (Elem b = 0; b < x.order(); ++b) {
      if (f[x.mul(a, b)] != g.mul(f[a], f[b])) return false;
    }
  }
  return true;
}

/// Every function X → G, tested on all pairs. |G|^|X| must stay small.
inline std::vector<std::vector<Elem>> all_homs(const FiniteGroup& x, const FiniteGroup& g) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(x.order(), 0);
  while (true) {
    if (f[0] == 0 && is_hom(x, g, f)) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == g.order()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return out;
}

inline std::vector<Elem> closure(const FiniteGroup& g, std::vector<Elem> elems) {
  std::set<Elem> s(elems.begin(), elems.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur) {
      for (Elem b : cur) {
        if (s.insert(g.mul(a, b)).second) grew = true;
      }
    }
  }
  return {s.begin(), s.end()};
}

/// Subgroups by closing every subset of size ≤ 2 (enough for groups whose
/// subgroups are 2-generated) and then joining pairs until stable.
inline std::set<std::vector<Elem>> subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> subs;
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = a; b < g.order(); ++b) subs.insert(closure(g, {a, b}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elem>> cur(subs.begin(), subs.end());
    for (const auto& s : cur) {
      for (const auto& t : cur) {
        std::vector<Elem> u = s;
        u.insert(u.end(), t.begin(), t.end());
        if (subs.insert(closure(g, u)).second) grew = true;
      }
    }
  }
  return subs;
}

inline std::size_t element_order(const FiniteGroup& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

inline std::vector<std::size_t> element_order_census(const FiniteGroup& g) {
  std::vector<std::size_t> census(g.order() + 1, 0);
  for (Elem x = 0; x < g.order(); ++x) ++census[element_order(g, x)];
  return census;
}

}  // namespace brute
