#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tropmoduli/cyclotomic.hpp"
#include "tropmoduli/errors.hpp"

namespace tropmoduli {

/// Eisenstein integer a + b*omega. All catalog arrangements have coefficient
/// vectors in Z[omega] (after clearing denominators), so rank and closure
/// computations run fraction-free over this ring.
struct Eis {
  long long a = 0, b = 0;
  constexpr Eis() = default;
  constexpr Eis(long long x) : a(x), b(0) {}
  constexpr Eis(long long x, long long y) : a(x), b(y) {}
  bool is_zero() const { return a == 0 && b == 0; }
  friend Eis operator+(Eis x, Eis y) { return {x.a + y.a, x.b + y.b}; }
  friend Eis operator-(Eis x, Eis y) { return {x.a - y.a, x.b - y.b}; }
  friend Eis operator*(Eis x, Eis y) {
    // (a+bw)(c+dw) = ac - bd + (ad + bc - bd) w   since w^2 = -1 - w
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(Eis x, Eis y) { return x.a == y.a && x.b == y.b; }
  Eis conj() const { return {a - b, -b}; }
  long long norm() const { return a * a - a * b + b * b; }
};

/// Exact quotient x / y in Z[omega]; the caller guarantees divisibility
/// (Bareiss elimination steps always divide exactly).
inline Eis exact_div(Eis x, Eis y) {
  Eis num = x * y.conj();
  long long n = y.norm();
  assert(n != 0);
  assert(num.a % n == 0 && num.b % n == 0);
  return {num.a / n, num.b / n};
}

inline Eis eis_from_cyc(const Cyc& c) {
  if (c.order() == 5) throw Error("order-5 values are not Eisenstein integers");
  const auto& co = c.coeffs();
  auto as_ll = [](const Rat& r) {
    if (r.get_den() != 1) throw Error("non-integral coefficient");
    return static_cast<long long>(r.get_num().get_si());
  };
  if (c.order() == 1) return Eis(as_ll(co[0]));
  return Eis(as_ll(co[0]), as_ll(co[1]));
}

inline Cyc cyc_from_eis(Eis e) {
  return Cyc(static_cast<long>(e.a)) + Cyc(static_cast<long>(e.b)) * Cyc::omega();
}

/// Linear matroid on up to 63 labeled coefficient vectors (element subsets
/// are 64-bit masks). Rank and closure run by incremental fraction-free
/// elimination; closure results are memoized on demand.
class LinearMatroid {
 public:
  using Mask = uint64_t;
  static constexpr int kMaxDim = 8;

  LinearMatroid(std::vector<std::vector<Eis>> vectors) {
    n_ = static_cast<int>(vectors.size());
    if (n_ > 63) throw TooLarge("ground set exceeds 63 elements");
    dim_ = vectors.empty() ? 0 : static_cast<int>(vectors[0].size());
    if (dim_ > kMaxDim) throw TooLarge("ambient dimension exceeds 8");
    vec_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      vec_[i].fill(Eis(0));
      for (int j = 0; j < dim_; ++j) vec_[i][j] = vectors[i][j];
    }
    full_rank_ = rank(all_mask());
  }

  int size() const { return n_; }
  int ambient_dim() const { return dim_; }
  int full_rank() const { return full_rank_; }
  Mask all_mask() const { return n_ == 64 ? ~0ull : ((1ull << n_) - 1); }
  const std::array<Eis, kMaxDim>& vector(int i) const { return vec_[i]; }

  int rank(Mask s) const {
    auto it = rank_memo_.find(s);
    if (it != rank_memo_.end()) return it->second;
    Ech e(dim_);
    for (Mask m = s; m; m &= m - 1) e.add(vec_[std::countr_zero(m)]);
    rank_memo_.emplace(s, e.k);
    return e.k;
  }

  Mask closure(Mask s) const {
    auto it = closure_memo_.find(s);
    if (it != closure_memo_.end()) return it->second;
    Mask c = closure_raw(s);
    closure_memo_.emplace(s, c);
    return c;
  }

  Mask closure_raw(Mask s) const {
    Ech e(dim_);
    for (Mask m = s; m; m &= m - 1) e.add(vec_[std::countr_zero(m)]);
    Mask c = s;
    for (int i = 0; i < n_; ++i) {
      if (c >> i & 1) continue;
      if (e.in_span(vec_[i])) c |= 1ull << i;
    }
    return c;
  }

  bool independent(Mask s) const {
    return rank(s) == std::popcount(s);
  }

  /// Greedy basis of the span of s (subset of s).
  Mask basis_of(Mask s) const {
    Ech e(dim_);
    Mask b = 0;
    for (Mask m = s; m; m &= m - 1) {
      int i = std::countr_zero(m);
      if (e.add(vec_[i])) b |= 1ull << i;
    }
    return b;
  }

  /// Connectivity of the restriction to a flat, via the hypergraph of
  /// fundamental circuits with respect to one basis of the flat: every
  /// circuit of the restriction is a symmetric-difference combination of
  /// fundamental circuits, so the component partition agrees.
  bool connected_flat(Mask f) const {
    int cnt = std::popcount(f);
    if (cnt <= 1) return cnt == 1;
    Mask b = basis_of(f);
    if (b == f) return false;  // independent flat with >= 2 elements
    std::array<int, 64> parent;
    for (int i = 0; i < 64; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    std::vector<int> bas;
    for (Mask m = b; m; m &= m - 1) bas.push_back(std::countr_zero(m));
    for (Mask m = f & ~b; m; m &= m - 1) {
      int e = std::countr_zero(m);
      // b is in the fundamental circuit of e iff e depends on b:
      // e not in span(basis minus b)
      for (int bi : bas) {
        Ech ech(dim_);
        for (int bj : bas)
          if (bj != bi) ech.add(vec_[bj]);
        if (!ech.in_span(vec_[e])) unite(e, bi);
      }
    }
    int root = -1;
    for (Mask m = f; m; m &= m - 1) {
      int i = std::countr_zero(m);
      if (root < 0) root = find(i);
      else if (find(i) != root) return false;
    }
    return true;
  }

  struct FlatInfo {
    Mask elems;
    int rank;
    bool irreducible;
  };

  /// All flats grouped by rank (rank 0 through full rank), with
  /// irreducibility flags. Levels are produced by closing covers, so memory
  /// scales with the two largest levels plus the output.
  std::vector<std::vector<FlatInfo>> flats_by_rank() const {
    std::vector<std::vector<FlatInfo>> levels(full_rank_ + 1);
    Mask bottom = closure_raw(0);
    levels[0].push_back({bottom, 0, false});
    std::vector<Mask> cur{bottom};
    for (int r = 0; r + 1 <= full_rank_; ++r) {
      std::unordered_set<Mask> next;
      for (Mask f : cur) {
        Mask covered = f;
        for (int e = 0; e < n_; ++e) {
          if (covered >> e & 1) continue;
          Mask c = closure_raw(f | (1ull << e));
          covered |= c;
          next.insert(c);
        }
      }
      auto& lvl = levels[r + 1];
      lvl.reserve(next.size());
      cur.assign(next.begin(), next.end());
      std::sort(cur.begin(), cur.end());
      for (Mask f : cur) lvl.push_back({f, r + 1, connected_flat(f)});
    }
    return levels;
  }

  /// Irreducible (connected) proper flats, sorted by (rank, mask).
  std::vector<FlatInfo> irreducible_proper_flats() const {
    auto levels = flats_by_rank();
    std::vector<FlatInfo> out;
    for (int r = 1; r < full_rank_; ++r)
      for (const auto& fi : levels[r])
        if (fi.irreducible) out.push_back(fi);
    return out;
  }

  /// |mu(bottom, top)| of the lattice of flats.
  long long moebius_number() const {
    auto levels = flats_by_rank();
    std::vector<FlatInfo> flats;
    for (auto& lvl : levels)
      for (auto& f : lvl) flats.push_back(f);
    std::vector<long long> mu(flats.size(), 0);
    mu[0] = 1;
    for (size_t i = 1; i < flats.size(); ++i) {
      long long s = 0;
      for (size_t j = 0; j < i; ++j) {
        if (flats[j].rank >= flats[i].rank) continue;
        if ((flats[j].elems & flats[i].elems) == flats[j].elems) s += mu[j];
      }
      mu[i] = -s;
    }
    long long m = mu.back();
    return m < 0 ? -m : m;
  }

  /// All circuits (minimal dependent sets); sizes are at most rank+1.
  /// Enumeration walks independent sets, so it is capped at rank 5 on at
  /// most 40 elements (the reflection arrangements of rank >= 6 are served
  /// by the nested-set route only).
  std::vector<Mask> circuits() const {
    if (n_ > 40 || full_rank_ > 5)
      throw TooLarge("circuit enumeration is capped at rank 5 on 40 elements");
    std::vector<Mask> out;
    std::vector<int> stack;
    circuits_rec(0, -1, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Tropical membership against an explicit circuit list: on every circuit
  /// the minimum weight must be attained at least twice.
  static bool circuit_membership(const std::vector<long long>& w,
                                 const std::vector<Mask>& circuits) {
    for (Mask c : circuits) {
      long long mn = 0;
      int cnt = 0;
      bool first = true;
      for (Mask m = c; m; m &= m - 1) {
        long long x = w[std::countr_zero(m)];
        if (first || x < mn) {
          mn = x;
          cnt = 1;
          first = false;
        } else if (x == mn) {
          ++cnt;
        }
      }
      if (cnt < 2) return false;
    }
    return true;
  }

 private:
  // Incremental Bareiss echelon. Stored rows are the fraction-free reduced
  // forms; piv_[i] is the pivot of row i and divides the next update step.
  struct Ech {
    int dim;
    int k = 0;
    std::array<std::array<Eis, kMaxDim>, kMaxDim> row;
    std::array<int, kMaxDim> pc{};
    std::array<Eis, kMaxDim + 1> piv;
    explicit Ech(int d) : dim(d) { piv[0] = Eis(1); }

    void reduce(std::array<Eis, kMaxDim>& v) const {
      for (int i = 0; i < k; ++i) {
        Eis p = row[i][pc[i]];
        Eis c = v[pc[i]];
        Eis prev = i == 0 ? Eis(1) : row[i - 1][pc[i - 1]];
        for (int j = 0; j < dim; ++j)
          v[j] = exact_div(p * v[j] - c * row[i][j], prev);
      }
    }
    bool add(std::array<Eis, kMaxDim> v) {
      reduce(v);
      int lead = -1;
      for (int j = 0; j < dim; ++j)
        if (!v[j].is_zero()) {
          lead = j;
          break;
        }
      if (lead < 0) return false;
      row[k] = v;
      pc[k] = lead;
      ++k;
      return true;
    }
    bool in_span(std::array<Eis, kMaxDim> v) const {
      reduce(v);
      for (int j = 0; j < dim; ++j)
        if (!v[j].is_zero()) return false;
      return true;
    }
  };

  void circuits_rec(Mask ind, int maxi, std::vector<Mask>& out) const {
    Mask cl = closure_raw(ind);
    int sz = std::popcount(ind);
    for (int e = maxi + 1; e < n_; ++e) {
      Mask ce = 1ull << e;
      if (cl & ce) {
        Mask cand = ind | ce;
        bool minimal = true;
        for (Mask m = ind; m && minimal; m &= m - 1) {
          Mask sub = cand & ~(1ull << std::countr_zero(m));
          if (rank(sub) != sz) minimal = false;
        }
        if (minimal) out.push_back(cand);
      } else if (sz + 1 <= full_rank_) {
        circuits_rec(ind | ce, e, out);
      }
    }
  }

  int n_ = 0, dim_ = 0, full_rank_ = 0;
  std::vector<std::array<Eis, kMaxDim>> vec_;
  mutable std::unordered_map<Mask, Mask> closure_memo_;
  mutable std::unordered_map<Mask, int> rank_memo_;
};

}  // namespace tropmoduli
