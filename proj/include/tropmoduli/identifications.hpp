#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tropmoduli/arrangement.hpp"
#include "tropmoduli/fan.hpp"
#include "tropmoduli/pushforward.hpp"

namespace tropmoduli {

/// Type dictionary for image rays: canonical representative -> type letter.
struct RayDictionary {
  std::unordered_map<std::vector<long long>, char, VecHash> type_of;
};

namespace detail {

inline std::vector<long long> matrix_column(const std::vector<std::vector<int>>& a, int c) {
  std::vector<long long> v(a.size());
  for (size_t r = 0; r < a.size(); ++r) v[r] = a[r][c];
  return v;
}

inline std::vector<long long> matrix_times_mask(const std::vector<std::vector<int>>& a,
                                                uint64_t mask) {
  std::vector<long long> v(a.size(), 0);
  for (size_t r = 0; r < a.size(); ++r) {
    long long s = 0;
    for (int c = 0; c < 64; ++c)
      if (mask >> c & 1) s += a[r][c];
    v[r] = s;
  }
  return v;
}

}  // namespace detail

/// Rays of the tropical Burkhardt quartic: type (a) are images of the 40
/// line rays, type (b) images of the 90 plane rays (45 plane pairs).
inline RayDictionary burkhardt_ray_dictionary() {
  RayDictionary d;
  auto inc = incidence("burkhardt").entries;
  for (int c = 0; c < 40; ++c)
    d.type_of[tp_normalize(detail::matrix_column(inc, c))] = 'a';
  auto planes = classify_planes(3);
  for (const auto& [w, wp] : planes.plane_pairs) {
    for (const FqSubspace* s : {&w, &wp}) {
      uint64_t mask = 0;
      for (const auto& l : s->lines()) mask |= 1ull << u_index(l.digits());
      d.type_of[tp_normalize(detail::matrix_times_mask(inc, mask))] = 'b';
    }
  }
  return d;
}

/// Rays of the tree space: type (a) are images of the 15 pair rays
/// (cherries), type (b) images of the 10 triple rays (middle splits).
inline RayDictionary treespace_ray_dictionary(const std::string& kind) {
  RayDictionary d;
  auto inc = incidence(kind).entries;
  for (int c = 0; c < 15; ++c)
    d.type_of[tp_normalize(detail::matrix_column(inc, c))] = 'a';
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) {
        uint64_t mask = (1ull << z_index(i, j)) | (1ull << z_index(i, k)) |
                        (1ull << z_index(j, k));
        d.type_of[tp_normalize(detail::matrix_times_mask(inc, mask))] = 'b';
      }
  return d;
}

struct LabeledFan {
  std::vector<char> ray_type;                 // per image ray
  std::map<std::string, long> cone_type_count;  // per dimension-labelled type, e.g. "aab"
};

inline LabeledFan label_types(const PushedFan& pf, const RayDictionary& dict) {
  LabeledFan out;
  out.ray_type.resize(pf.image.rays.size());
  for (size_t i = 0; i < pf.image.rays.size(); ++i) {
    auto it = dict.type_of.find(pf.image.rays[i]);
    if (it == dict.type_of.end())
      throw UnlabeledRay("image ray " + std::to_string(i) + " matches no dictionary entry");
    out.ray_type[i] = it->second;
  }
  for (const auto& lvl : pf.image.cones_by_dim)
    for (const auto& cone : lvl) {
      std::string t;
      for (int r : cone) t += out.ray_type[r];
      std::sort(t.begin(), t.end());
      out.cone_type_count[t]++;
    }
  return out;
}

struct CheckLine {
  std::string what;
  bool pass = false;
  std::string detail;
};

struct IdentificationReport {
  std::string name;
  std::vector<CheckLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

namespace detail {

inline void add_line(IdentificationReport& rep, const std::string& what, bool pass,
                     const std::string& detail = "") {
  rep.lines.push_back({what, pass, detail});
}

// subsets sigma of {1..6} with 2 <= |sigma| <= 5 mapped through E_sigma
inline std::vector<long long> e_sigma_image(const std::vector<std::vector<int>>& a,
                                            unsigned sigma) {
  uint64_t mask = 0;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if ((sigma >> (i - 1) & 1) && (sigma >> (j - 1) & 1))
        mask |= 1ull << z_index(i, j);
  return matrix_times_mask(a, mask);
}

}  // namespace detail

/// Image ray classes of a ray family under a monomial map, grouped by the
/// (rank, size) signature of the contributing source flat families.
struct RayClassification {
  // distinct nonzero image rays per source-family signature
  std::map<std::set<std::pair<int, int>>, std::vector<std::vector<long long>>> classes;
  long zero_class_sources = 0;
  long distinct_rays = 0;
};

inline RayClassification classify_ray_images(
    const ExponentMatrix& em, const std::vector<LinearMatroid::FlatInfo>& irr) {
  std::unordered_map<std::vector<long long>, std::set<std::pair<int, int>>, VecHash>
      class_of;
  RayClassification out;
  for (const auto& f : irr) {
    auto img = tp_normalize(detail::matrix_times_mask(em.e, f.elems));
    if (tp_is_zero(img)) {
      ++out.zero_class_sources;
      continue;
    }
    class_of[img].insert({f.rank, std::popcount(f.elems)});
  }
  out.distinct_rays = static_cast<long>(class_of.size());
  for (auto& [v, sig] : class_of) out.classes[sig].push_back(v);
  return out;
}

namespace detail {

// counts the representations of each target as a normalized sum of `arity`
// vectors from the parts; returns true when every target has exactly one
inline bool unique_sum_decomposition(const std::vector<std::vector<long long>>& targets,
                                     const std::vector<std::vector<long long>>& part1,
                                     const std::vector<std::vector<long long>>& part2,
                                     int arity_from_part1) {
  std::unordered_map<std::vector<long long>, int, VecHash> target_idx;
  for (size_t i = 0; i < targets.size(); ++i) target_idx[targets[i]] = static_cast<int>(i);
  std::vector<int> count(targets.size(), 0);
  const size_t n = targets.empty() ? 0 : targets[0].size();
  auto probe = [&](const std::vector<long long>& sum) {
    auto it = target_idx.find(tp_normalize(sum));
    if (it != target_idx.end()) count[it->second]++;
  };
  std::vector<long long> s(n);
  if (arity_from_part1 == 3) {
    for (size_t a = 0; a < part1.size(); ++a)
      for (size_t b = a + 1; b < part1.size(); ++b)
        for (size_t c = b + 1; c < part1.size(); ++c) {
          for (size_t k = 0; k < n; ++k)
            s[k] = part1[a][k] + part1[b][k] + part1[c][k];
          probe(s);
        }
  } else {
    for (const auto& x : part1)
      for (const auto& y : part2) {
        for (size_t k = 0; k < n; ++k) s[k] = x[k] + y[k];
        probe(s);
      }
  }
  for (int c : count)
    if (c != 1) return false;
  return true;
}

// every target uniquely a positive rational combination a*x + b*y modulo
// the all-ones vector, over pairs (x, y) from the two parts
inline bool unique_positive_combination(
    const std::vector<std::vector<long long>>& targets,
    const std::vector<std::vector<long long>>& part1,
    const std::vector<std::vector<long long>>& part2) {
  const int n = targets.empty() ? 0 : static_cast<int>(targets[0].size());
  for (const auto& v : targets) {
    int found = 0;
    for (const auto& x : part1)
      for (const auto& y : part2) {
        // solve a*x + b*y + c*1 = v on three independent coordinates, then
        // verify all of them; exact rational arithmetic via determinants
        long long det = 0;
        int i0 = -1, i1 = -1, i2 = -1;
        for (int i = 0; i < n && i2 < 0; ++i)
          for (int j = i + 1; j < n && i2 < 0; ++j)
            for (int k = j + 1; k < n && i2 < 0; ++k) {
              long long d = x[i] * (y[j] - y[k]) - x[j] * (y[i] - y[k]) +
                            x[k] * (y[i] - y[j]);
              if (d != 0) {
                det = d;
                i0 = i;
                i1 = j;
                i2 = k;
              }
            }
        if (i2 < 0) continue;
        // Cramer on rows (i0,i1,i2) for unknowns (a,b,c)
        long long vi = v[i0], vj = v[i1], vk = v[i2];
        long long na = vi * (y[i1] - y[i2]) - vj * (y[i0] - y[i2]) + vk * (y[i0] - y[i1]);
        long long nb = x[i0] * (vj - vk) - x[i1] * (vi - vk) + x[i2] * (vi - vj);
        // positivity of a and b relative to det
        if (det < 0) {
          na = -na;
          nb = -nb;
          det = -det;
        }
        if (na <= 0 || nb <= 0) continue;
        // verify all coordinates: det*v - na*x - nb*y must be constant
        long long c0 = det * v[0] - na * x[0] - nb * y[0];
        bool ok = true;
        for (int i = 1; i < n && ok; ++i)
          if (det * v[i] - na * x[i] - nb * y[i] != c0) ok = false;
        if (ok) ++found;
      }
    if (found != 1) return false;
  }
  return true;
}

}  // namespace detail

inline IdentificationReport yoshida_ray_checks(
    const Arrangement& arr, const LinearMatroid& M,
    const std::vector<LinearMatroid::FlatInfo>& irr) {
  IdentificationReport rep;
  rep.name = "yoshida";
  auto em = exponent_matrix("yoshida", arr, &M);
  auto rc = classify_ray_images(em, irr);
  std::multiset<long> sizes;
  for (auto& [sig, v] : rc.classes) sizes.insert(static_cast<long>(v.size()));
  detail::add_line(rep, "image ray classes have sizes 36/40/270",
                   sizes == std::multiset<long>{36, 40, 270});
  detail::add_line(rep, "all other ray families map to the zero class",
                   rc.zero_class_sources == 45 + 27,
                   std::to_string(rc.zero_class_sources) + " rays to zero");
  detail::add_line(rep, "total distinct rays is 346", rc.distinct_rays == 346,
                   std::to_string(rc.distinct_rays));
  bool merged = false;
  for (auto& [sig, v] : rc.classes)
    if (v.size() == 36 && sig.size() == 3) merged = true;
  detail::add_line(rep, "three flat families share the 36-element class", merged);
  return rep;
}

inline IdentificationReport goepel_ray_checks(
    const Arrangement& arr, const LinearMatroid& M,
    const std::vector<LinearMatroid::FlatInfo>& irr) {
  IdentificationReport rep;
  rep.name = "goepel-rays";
  auto em = exponent_matrix("goepel", arr, &M);
  auto rc = classify_ray_images(em, irr);
  std::multiset<long> sizes;
  std::map<long, const std::vector<std::vector<long long>>*> by_size;
  for (auto& [sig, v] : rc.classes) {
    sizes.insert(static_cast<long>(v.size()));
    by_size[static_cast<long>(v.size())] = &v;
  }
  detail::add_line(
      rep, "nonzero image ray classes have sizes {63,336,630,36,2016,315,1008}",
      sizes == std::multiset<long>{36, 63, 315, 336, 630, 1008, 2016});
  if (!rep.ok()) return rep;
  detail::add_line(rep, "sekiguchi ray count 1065 = 63+336+630+36", true);
  detail::add_line(
      rep, "class 2016 rays are uniquely sums of a 336-class and a 36-class ray",
      detail::unique_sum_decomposition(*by_size[2016], *by_size[336], *by_size[36], 1));
  detail::add_line(rep, "class 315 rays are uniquely sums of three 63-class rays",
                   detail::unique_sum_decomposition(*by_size[315], *by_size[63], {}, 3));
  detail::add_line(
      rep,
      "class 1008 rays are uniquely positive combinations of a 63-class and a "
      "36-class ray",
      detail::unique_positive_combination(*by_size[1008], *by_size[63], *by_size[36]));
  return rep;
}

/// The identification rules the monomial maps perform on Bergman rays.
inline IdentificationReport identification_checks(const std::string& name) {
  IdentificationReport rep;
  rep.name = name;
  if (name == "segre" || name == "igusa") {
    auto a = incidence(name).entries;
    bool collide = true;
    std::set<std::vector<long long>> distinct;
    for (unsigned sigma = 1; sigma < 63; ++sigma) {
      int pc = std::popcount(sigma);
      if (pc < 2 || pc > 5) continue;
      unsigned comp = 63u & ~sigma;
      auto vi = tp_normalize(detail::e_sigma_image(a, sigma));
      auto vc = tp_normalize(detail::e_sigma_image(a, comp));
      if (vi != vc) collide = false;
      if (!tp_is_zero(vi)) distinct.insert(vi);
    }
    detail::add_line(rep, "E_sigma and E_sigma_complement identify", collide);
    detail::add_line(rep, "56 rays map onto 25 distinct rays", distinct.size() == 25,
                     std::to_string(distinct.size()));
    if (name == "igusa") {
      bool doubled = true;
      for (int i = 1; i <= 6 && doubled; ++i)
        for (int j = i + 1; j <= 6 && doubled; ++j)
          for (int k = j + 1; k <= 6 && doubled; ++k) {
            unsigned sigma = (1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1));
            auto v = detail::e_sigma_image(a, sigma);
            long long mn = *std::min_element(v.begin(), v.end());
            int twos = 0;
            for (auto& x : v) {
              x -= mn;
              if (x == 2) ++twos;
              else if (x != 0) doubled = false;
            }
            if (twos != 1) doubled = false;
          }
      detail::add_line(rep, "triple rays map to doubled unit vectors", doubled);
    }
    return rep;
  }
  if (name == "burkhardt") {
    auto a = incidence("burkhardt").entries;
    auto g32 = arrangement("g32");
    auto M = matroid_of(g32);
    auto irr = M.irreducible_proper_flats();
    // rank-3 flats map to twice the image of the dual line
    bool doubling = true;
    auto lines = enumerate_lines(3, 4);
    for (const auto& f : irr) {
      if (f.rank != 3) continue;
      // the dual line: the unique line whose form is not in the flat but
      // whose hyperplane contains all 12 lines of the flat
      int dual = -1;
      for (int l = 0; l < 40; ++l) {
        bool perp = true;
        for (int x = 0; x < 40 && perp; ++x)
          if (f.elems >> x & 1)
            if (symplectic_form(lines[l], lines[x]) != 0) perp = false;
        if (perp) {
          dual = l;
          break;
        }
      }
      if (dual < 0 || (f.elems >> dual & 1)) {
        doubling = false;
        break;
      }
      auto lhs = detail::matrix_times_mask(a, f.elems);
      auto rhs = detail::matrix_column(a, dual);
      long long diff = lhs[0] - 2 * rhs[0];
      for (size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] - 2 * rhs[i] != diff) doubling = false;
    }
    detail::add_line(rep, "rank-3 rays equal twice the dual line ray", doubling);
    // orthogonal plane pairs have identical images
    bool pairing = true;
    auto planes = classify_planes(3);
    for (const auto& [w, wp] : planes.plane_pairs) {
      uint64_t mw = 0, mp = 0;
      for (const auto& l : w.lines()) mw |= 1ull << u_index(l.digits());
      for (const auto& l : wp.lines()) mp |= 1ull << u_index(l.digits());
      if (detail::matrix_times_mask(a, mw) != detail::matrix_times_mask(a, mp))
        pairing = false;
    }
    detail::add_line(rep, "plane pairs share one image ray", pairing);
    detail::add_line(rep, "45 plane pairs", planes.plane_pairs.size() == 45);
    return rep;
  }
  if (name == "yoshida") {
    auto arr = arrangement("e6");
    auto M = matroid_of(arr);
    return yoshida_ray_checks(arr, M, M.irreducible_proper_flats());
  }
  if (name == "goepel-rays") {
    auto arr = arrangement("e7");
    auto M = matroid_of(arr);
    return goepel_ray_checks(arr, M, M.irreducible_proper_flats());
  }
  throw UnknownName(name);
}

/// Face counts of the coarsest (Naruki) structure on the image of the
/// Bergman fan of E6 under the Yoshida map: type (a) and (b) rays span the
/// Naruki cones; the 270 subdivision rays are refinement data, each the sum
/// of two type (a) rays spanning a cone.
struct NarukiReport {
  std::map<std::string, long> type_counts;  // a, b, aa, ab, aaa, aab, aaaa, aaab
  std::vector<long> totals;                 // faces per dimension
  long refinement_rays = 0;
  bool decompositions_ok = false;
};

inline NarukiReport naruki_complex() {
  auto arr = arrangement("e6");
  auto M = matroid_of(arr);
  auto nc = nested_complex(M);
  auto em = exponent_matrix("yoshida", arr, &M);
  auto pf = push_fan(nc, em, /*compute_indices=*/false, /*allow_subdivision=*/true);

  // classify image rays by source family
  auto irr = nc.building;
  std::vector<char> rtype(pf.image.rays.size(), '?');
  for (size_t i = 0; i < irr.size(); ++i) {
    int id = pf.ray_class_of_source[i];
    if (id < 0) continue;
    int sz = std::popcount(irr[i].elems);
    char t = '?';
    if (irr[i].rank == 1 || (irr[i].rank == 4 && sz == 10) ||
        (irr[i].rank == 5 && sz == 15))
      t = 'a';
    else if (irr[i].rank == 2 && sz == 3)
      t = 'b';
    else if (irr[i].rank == 3 && sz == 6)
      t = 'r';
    if (rtype[id] != '?' && rtype[id] != t) throw RuleViolation("ray class clash");
    rtype[id] = t;
  }

  NarukiReport rep;
  std::vector<int> a_rays;
  for (size_t i = 0; i < rtype.size(); ++i) {
    if (rtype[i] == 'a') a_rays.push_back(static_cast<int>(i));
    if (rtype[i] == 'r') ++rep.refinement_rays;
  }

  // decompose each refinement ray as a sum of two type (a) rays forming a cone
  std::set<std::vector<int>> image_edges;
  for (const auto& e : pf.image.cones_by_dim[1]) image_edges.insert(e);
  std::unordered_map<std::vector<long long>, int, VecHash> a_lookup;
  for (int r : a_rays) a_lookup[pf.image.rays[r]] = r;
  std::map<int, std::pair<int, int>> split_of;  // refinement ray -> (a, a')
  bool decomp = true;
  for (size_t i = 0; i < rtype.size(); ++i) {
    if (rtype[i] != 'r') continue;
    bool found = false;
    for (size_t xi = 0; xi < a_rays.size() && !found; ++xi)
      for (size_t yi = xi + 1; yi < a_rays.size() && !found; ++yi) {
        std::vector<long long> s(pf.image.rays[i].size());
        for (size_t c = 0; c < s.size(); ++c)
          s[c] = pf.image.rays[a_rays[xi]][c] + pf.image.rays[a_rays[yi]][c];
        if (tp_normalize(s) == pf.image.rays[i]) {
          std::vector<int> edge{a_rays[xi], a_rays[yi]};
          std::sort(edge.begin(), edge.end());
          if (image_edges.count(edge)) {
            split_of[static_cast<int>(i)] = {a_rays[xi], a_rays[yi]};
            found = true;
          }
        }
      }
    if (!found) decomp = false;
  }
  rep.decompositions_ok = decomp;

  // coarse support: replace refinement rays by their two type (a) summands
  std::set<std::vector<int>> coarse;
  for (const auto& lvl : pf.image.cones_by_dim)
    for (const auto& cone : lvl) {
      std::set<int> rays;
      for (int r : cone) {
        if (rtype[r] == 'r') {
          auto [x, y] = split_of.at(r);
          rays.insert(x);
          rays.insert(y);
        } else {
          rays.insert(r);
        }
      }
      coarse.insert(std::vector<int>(rays.begin(), rays.end()));
    }
  size_t maxd = 0;
  for (const auto& c : coarse) maxd = std::max(maxd, c.size());
  rep.totals.assign(maxd, 0);
  for (const auto& c : coarse) {
    std::string t;
    for (int r : c) t += rtype[r];
    std::sort(t.begin(), t.end());
    rep.type_counts[t]++;
    rep.totals[c.size() - 1]++;
  }
  return rep;
}

}  // namespace tropmoduli
