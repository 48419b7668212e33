#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tropmoduli/errors.hpp"
#include "tropmoduli/matroid.hpp"

namespace tropmoduli {

/// Canonical representative in tropical projective space: subtract the
/// minimum so the smallest coordinate is 0, then divide by the gcd.
/// The zero vector is the lineality class.
inline std::vector<long long> tp_normalize(std::vector<long long> v) {
  if (v.empty()) return v;
  long long mn = *std::min_element(v.begin(), v.end());
  long long g = 0;
  for (auto& x : v) {
    x -= mn;
    g = std::gcd(g, x);
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline bool tp_is_zero(const std::vector<long long>& v) {
  for (long long x : v)
    if (x) return false;
  return true;
}

struct VecHash {
  size_t operator()(const std::vector<long long>& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Simplicial cone complex: integer rays plus cones given as sorted ray
/// index sets (all faces stored, grouped by dimension). Multiplicities,
/// when present, are attached to maximal cones.
struct SimplicialFan {
  int ambient = 0;
  std::vector<std::vector<long long>> rays;
  std::vector<std::vector<std::vector<int>>> cones_by_dim;  // [k] = cones with k+1 rays

  std::vector<long long> fvector() const {
    std::vector<long long> f;
    for (const auto& lvl : cones_by_dim) f.push_back(static_cast<long long>(lvl.size()));
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
  }
  int dim() const {
    for (int k = static_cast<int>(cones_by_dim.size()); k-- > 0;)
      if (!cones_by_dim[k].empty()) return k + 1;
    return 0;
  }
};

/// Bergman fan of a matroid as the fan over the nested set complex of the
/// irreducible (connected) proper flats: a set of building flats is nested
/// when every antichain of size >= 2 has its join outside the building set;
/// the join being the whole (connected) ground set also violates
/// nestedness. Rays are the 0/1 incidence vectors of the flats.
struct NestedComplex {
  std::vector<LinearMatroid::FlatInfo> building;  // sorted by (rank, mask)
  SimplicialFan fan;  // rays follow the building order; all faces stored
};

inline NestedComplex nested_complex(const LinearMatroid& m) {
  NestedComplex nc;
  auto irr = m.irreducible_proper_flats();
  std::sort(irr.begin(), irr.end(), [](const auto& a, const auto& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.elems < b.elems;
  });
  nc.building = irr;
  const int nb = static_cast<int>(irr.size());
  const uint64_t ground = m.all_mask();
  std::unordered_set<uint64_t> building_set;
  for (const auto& f : irr) building_set.insert(f.elems);

  const bool ground_connected = m.connected_flat(ground);
  auto join_ok = [&](uint64_t u) {
    uint64_t cl = m.closure(u);
    if (cl == ground) return !ground_connected;
    return !building_set.count(cl);
  };

  // pairwise nestedness
  std::vector<std::vector<uint64_t>> ok(nb, std::vector<uint64_t>((nb + 63) / 64, 0));
  auto set_ok = [&](int i, int j) {
    ok[i][j >> 6] |= 1ull << (j & 63);
    ok[j][i >> 6] |= 1ull << (i & 63);
  };
  auto comparable = [&](int i, int j) {
    uint64_t a = irr[i].elems, b = irr[j].elems;
    return (a & b) == a || (a & b) == b;
  };
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      if (comparable(i, j) || join_ok(irr[i].elems | irr[j].elems)) set_ok(i, j);
    }

  const int max_size = m.full_rank() - 1;
  nc.fan.ambient = m.size();
  for (const auto& f : irr) {
    std::vector<long long> ray(m.size(), 0);
    for (int e = 0; e < m.size(); ++e)
      if (f.elems >> e & 1) ray[e] = 1;
    nc.fan.rays.push_back(std::move(ray));
  }
  nc.fan.cones_by_dim.assign(max_size, {});

  // check all antichains containing the newly added flat
  std::vector<int> cur;
  auto antichains_ok = [&](int f) {
    std::vector<int> incmp;
    for (int x : cur)
      if (x != f && !comparable(x, f)) incmp.push_back(x);
    const int k = static_cast<int>(incmp.size());
    for (int sub = 1; sub < (1 << k); ++sub) {
      uint64_t u = irr[f].elems;
      std::vector<int> mem;
      for (int b = 0; b < k; ++b)
        if (sub >> b & 1) mem.push_back(incmp[b]);
      bool anti = true;
      for (size_t x = 0; x < mem.size() && anti; ++x)
        for (size_t y = x + 1; y < mem.size() && anti; ++y)
          if (comparable(mem[x], mem[y])) anti = false;
      if (!anti) continue;
      for (int x : mem) u |= irr[x].elems;
      if (!join_ok(u)) return false;
    }
    return true;
  };

  std::vector<uint64_t> cand_stack;
  const int words = (nb + 63) / 64;
  std::vector<uint64_t> all(words, 0);
  for (int i = 0; i < nb; ++i) all[i >> 6] |= 1ull << (i & 63);

  auto emit = [&](const std::vector<int>& face) {
    nc.fan.cones_by_dim[face.size() - 1].push_back(face);
  };

  std::vector<std::vector<uint64_t>> cand_by_depth(max_size + 1,
                                                   std::vector<uint64_t>(words));
  auto rec = [&](auto&& self, int depth) -> void {
    const auto& cand = cand_by_depth[depth];
    for (int w = 0; w < words; ++w) {
      uint64_t bits = cand[w];
      while (bits) {
        int j = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (!antichains_ok(j)) continue;
        cur.push_back(j);
        emit(cur);
        if (depth + 1 < max_size) {
          auto& next = cand_by_depth[depth + 1];
          bool any = false;
          for (int w2 = 0; w2 < words; ++w2) {
            // only candidates with index above j, compatible with j
            uint64_t mask = cand[w2] & ok[j][w2];
            if (w2 == w) mask &= ~((2ull << (j & 63)) - 1);
            else if (w2 < w) mask = 0;
            next[w2] = mask;
            any |= mask != 0;
          }
          if (any) self(self, depth + 1);
        }
        cur.pop_back();
      }
    }
  };
  cand_by_depth[0] = all;
  rec(rec, 0);
  return nc;
}

}  // namespace tropmoduli
