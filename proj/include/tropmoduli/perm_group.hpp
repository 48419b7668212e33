#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tropmoduli/errors.hpp"
#include "tropmoduli/finite_geometry.hpp"

namespace tropmoduli {

using Perm = std::vector<uint16_t>;

inline Perm perm_compose(const Perm& f, const Perm& g) {
  // (f*g)(x) = f(g(x))
  Perm r(f.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Permutation group given by generators acting on [0, degree).
/// The element set is materialized on demand by breadth-first closure.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
  mutable std::vector<Perm> elements_;  // lazy

  const std::vector<Perm>& elements() const {
    if (!elements_.empty() || gens.empty()) return elements_;
    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = static_cast<uint16_t>(i);
    std::unordered_set<Perm, PermHash> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& p : frontier)
        for (const auto& g : gens) {
          Perm q = perm_compose(g, p);
          if (seen.insert(q).second) next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end());
    return elements_;
  }
  size_t order() const { return elements().size(); }
};

/// The group of symplectic-form-preserving linear maps of F_q^4 as
/// permutations of the projective lines, generated by the transvections
/// x -> x + <x,v> v over all line representatives v. For q = 3 the center
/// acts trivially on lines, so the image realizes PSp4(F3) of order 25920
/// rather than Sp4(F3) of order 51840.
inline PermGroup generate_sp4(int q) {
  auto lines = enumerate_lines(q, 4);
  std::unordered_map<unsigned, int> index;
  for (size_t i = 0; i < lines.size(); ++i) index[lines[i].encode()] = static_cast<int>(i);
  PermGroup g;
  g.degree = static_cast<int>(lines.size());
  for (const auto& v : lines) {
    Perm p(lines.size());
    bool trivial = true;
    for (size_t i = 0; i < lines.size(); ++i) {
      int s = symplectic_form(lines[i], v);
      FqVector img = lines[i] + v.scaled(s);
      int j = index.at(img.line_rep().encode());
      p[i] = static_cast<uint16_t>(j);
      if (j != static_cast<int>(i)) trivial = false;
    }
    if (!trivial) g.gens.push_back(std::move(p));
  }
  return g;
}

/// Orbit partition of index-set objects under a permutation group acting on
/// the ground indices; orbit sizes are reported in decreasing order.
struct OrbitReport {
  std::vector<std::vector<std::vector<int>>> orbits;  // each orbit: list of objects
  std::vector<size_t> sizes;                          // decreasing
};

inline OrbitReport orbits(const PermGroup& g, std::vector<std::vector<int>> objects) {
  for (auto& o : objects) std::sort(o.begin(), o.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < objects.size(); ++i) index.emplace(objects[i], static_cast<int>(i));
  std::vector<int> orbit_id(objects.size(), -1);
  OrbitReport rep;
  for (size_t start = 0; start < objects.size(); ++start) {
    if (orbit_id[start] >= 0) continue;
    int id = static_cast<int>(rep.orbits.size());
    rep.orbits.emplace_back();
    std::vector<int> frontier{static_cast<int>(start)};
    orbit_id[start] = id;
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      rep.orbits.back().push_back(objects[cur]);
      for (const auto& p : g.gens) {
        std::vector<int> img;
        img.reserve(objects[cur].size());
        for (int x : objects[cur]) img.push_back(p[x]);
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end())
          throw Error("orbit leaves the given object family");
        if (orbit_id[it->second] < 0) {
          orbit_id[it->second] = id;
          frontier.push_back(it->second);
        }
      }
    }
  }
  for (const auto& o : rep.orbits) rep.sizes.push_back(o.size());
  std::sort(rep.sizes.rbegin(), rep.sizes.rend());
  return rep;
}

}  // namespace tropmoduli
