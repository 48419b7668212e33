#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropmoduli/arrangement.hpp"
#include "tropmoduli/fan.hpp"
#include "tropmoduli/lattice.hpp"

namespace tropmoduli {

/// Split of the tropical torus lattice Z^(n+1)/Z(1,..,1): subtract the last
/// coordinate and drop it. Any such splitting yields the same lattice
/// indices below.
inline std::vector<Int> tp_split(const std::vector<long long>& v) {
  std::vector<Int> out;
  out.reserve(v.size() - 1);
  for (size_t i = 0; i + 1 < v.size(); ++i)
    out.emplace_back(static_cast<long>(v[i] - v.back()));
  return out;
}

/// Image fan of a Bergman fan under the tropicalized monomial map given by
/// an exponent matrix. Image rays are deduplicated by their canonical
/// tropical-projective representative; rays in the lineality class are
/// dropped and their cones collapse. Per image cone the covering report
/// lists every source cone; multiplicities are computed from the
/// dimension-preserving sources as source multiplicity times the lattice
/// index [N_img : A(N_src)] (saturated lattices on both sides), and all
/// such sources must agree.
struct PushedFan {
  SimplicialFan image;  // cones_by_dim holds distinct image cones
  // flattened cone ids: (dim, index) -> id in covering tables
  struct SourceRec {
    int src_dim = 0;        // number of rays of the source cone
    long src_index = -1;    // position within the source cones of that dimension
    bool dim_preserving = false;
    Int lattice_index = 0;  // set for dim-preserving sources when computed
  };
  std::vector<std::vector<int>> cone_ids;            // per dim: cone id
  std::vector<std::vector<SourceRec>> covering;      // per cone id
  std::vector<Int> multiplicity;                     // per cone id (0 = not computed)
  std::vector<int> ray_class_of_source;              // per source ray: image ray id or -1
  long subdivided_sources = 0;  // sources whose distinct image rays became dependent

  int cone_id(int dim_index, int pos) const { return cone_ids[dim_index][pos]; }
};

namespace detail {

inline std::vector<long long> apply_matrix(const std::vector<std::vector<int>>& a,
                                           const std::vector<long long>& v) {
  std::vector<long long> out(a.size(), 0);
  for (size_t r = 0; r < a.size(); ++r) {
    long long s = 0;
    for (size_t c = 0; c < v.size(); ++c) s += static_cast<long long>(a[r][c]) * v[c];
    out[r] = s;
  }
  return out;
}

inline ZMat saturated_lattice_basis(const std::vector<std::vector<long long>>& rays) {
  ZMat rows;
  for (const auto& r : rays) rows.push_back(tp_split(r));
  return saturation_basis(rows);
}

}  // namespace detail

/// `allow_subdivision`: when the map drops one dimension without any ray
/// identification, a cone's distinct image rays become dependent; its image
/// is then covered by the images of its facets (Caratheodory) and it is not
/// registered as a cone. Without the flag such a cone raises
/// DimensionCollapse.
inline PushedFan push_fan(const NestedComplex& src, const ExponentMatrix& a,
                          bool compute_indices = true,
                          bool allow_subdivision = false) {
  PushedFan out;
  const int n_src_rays = static_cast<int>(src.fan.rays.size());
  if (a.cols() != src.fan.ambient)
    throw DimensionMismatch("exponent matrix does not match the fan's ambient space");

  // map rays
  out.ray_class_of_source.assign(n_src_rays, -1);
  std::unordered_map<std::vector<long long>, int, VecHash> ray_ids;
  for (int i = 0; i < n_src_rays; ++i) {
    auto img = tp_normalize(detail::apply_matrix(a.e, src.fan.rays[i]));
    if (tp_is_zero(img)) continue;
    auto it = ray_ids.find(img);
    int id;
    if (it == ray_ids.end()) {
      id = static_cast<int>(out.image.rays.size());
      ray_ids.emplace(img, id);
      out.image.rays.push_back(img);
    } else {
      id = it->second;
    }
    out.ray_class_of_source[i] = id;
  }
  out.image.ambient = a.rows();

  // map cones
  std::map<std::vector<int>, int> cone_of_rayset;
  int max_dim = static_cast<int>(src.fan.cones_by_dim.size());
  out.image.cones_by_dim.assign(max_dim, {});
  out.cone_ids.assign(max_dim, {});

  std::map<std::vector<int>, bool> full_rank_of_rayset;
  auto rayset_full_rank = [&](const std::vector<int>& key) {
    auto it = full_rank_of_rayset.find(key);
    if (it != full_rank_of_rayset.end()) return it->second;
    ZMat rows;
    for (int r : key) rows.push_back(tp_split(out.image.rays[r]));
    bool ok = zrank(rows) == static_cast<int>(key.size());
    full_rank_of_rayset.emplace(key, ok);
    return ok;
  };

  for (int d = 0; d < max_dim; ++d) {
    for (size_t p = 0; p < src.fan.cones_by_dim[d].size(); ++p) {
      const auto& cone = src.fan.cones_by_dim[d][p];
      std::set<int> img;
      for (int r : cone)
        if (out.ray_class_of_source[r] >= 0) img.insert(out.ray_class_of_source[r]);
      if (img.empty()) continue;  // collapses entirely to the lineality class
      std::vector<int> key(img.begin(), img.end());
      if (!rayset_full_rank(key)) {
        if (!allow_subdivision) {
          std::ostringstream os;
          os << "image cone of " << key.size() << " distinct rays is rank-deficient";
          throw DimensionCollapse(os.str());
        }
        ++out.subdivided_sources;
        continue;
      }
      auto it = cone_of_rayset.find(key);
      int id;
      if (it == cone_of_rayset.end()) {
        id = static_cast<int>(out.covering.size());
        cone_of_rayset.emplace(key, id);
        out.covering.emplace_back();
        int k = static_cast<int>(key.size());
        out.image.cones_by_dim[k - 1].push_back(key);
        out.cone_ids[k - 1].push_back(id);
      } else {
        id = it->second;
      }
      PushedFan::SourceRec rec;
      rec.src_dim = d + 1;
      rec.src_index = static_cast<long>(p);
      rec.dim_preserving = (static_cast<int>(key.size()) == d + 1);
      out.covering[id].push_back(rec);
    }
  }

  out.multiplicity.assign(out.covering.size(), Int(0));
  if (!compute_indices) return out;

  // Lattice indices of the dimension-preserving sources. The multiplicity
  // of an image cone is the index in N_img of the subgroup generated by all
  // the sheet lattices A(N_src) together; when the sheets agree this is the
  // common sheet index.
  for (auto& [key, id] : cone_of_rayset) {
    ZMat img_rows;
    for (int r : key) img_rows.push_back(tp_split(out.image.rays[r]));
    ZMat img_sat = saturation_basis(img_rows);
    ZMat joint;
    for (auto& rec : out.covering[id]) {
      if (!rec.dim_preserving) continue;
      const auto& cone = src.fan.cones_by_dim[rec.src_dim - 1][rec.src_index];
      std::vector<std::vector<long long>> srays;
      for (int r : cone) srays.push_back(src.fan.rays[r]);
      ZMat src_sat = detail::saturated_lattice_basis(srays);
      // push the source lattice basis through the matrix; split vectors
      // represent classes via "last coordinate = 0"
      ZMat pushed;
      for (const auto& b : src_sat) {
        std::vector<Int> v(a.rows(), 0);
        for (int rr = 0; rr < a.rows(); ++rr) {
          Int s = 0;
          for (size_t c = 0; c < b.size(); ++c) s += Int(a.e[rr][c]) * b[c];
          v[rr] = s;
        }
        std::vector<Int> q(v.size() - 1);
        for (size_t i = 0; i + 1 < v.size(); ++i) q[i] = v[i] - v.back();
        pushed.push_back(std::move(q));
      }
      if (zrank(pushed) != static_cast<int>(img_sat.size()))
        throw DimensionCollapse("image lattice rank does not match the image cone");
      rec.lattice_index = lattice_index_rows(pushed, img_sat);
      for (auto& row : pushed) joint.push_back(std::move(row));
    }
    if (!joint.empty()) out.multiplicity[id] = lattice_index_rows(joint, img_sat);
  }
  return out;
}

/// Locates the cone of the image fan containing a point in its relative
/// interior (all cone coefficients strictly positive); the zero class lies
/// in the origin cone, reported as an empty cone with no coefficients.
struct PointLocation {
  bool found = false;
  int dim = 0;                 // 0 for the origin
  std::vector<int> cone;       // ray indices
  std::vector<Rat> coefficients;
};

inline PointLocation locate_in_fan(const SimplicialFan& fan,
                                   const std::vector<long long>& point) {
  PointLocation loc;
  bool constant = true;
  for (long long x : point)
    if (x != point[0]) constant = false;
  if (constant) {
    loc.found = true;
    return loc;
  }
  // splitting is shift-invariant, so the coefficients recover the point's
  // actual cone coordinates (no gcd rescaling here)
  auto psplit = tp_split(point);
  std::vector<Rat> b;
  for (const auto& x : psplit) b.emplace_back(x);
  for (int d = static_cast<int>(fan.cones_by_dim.size()); d-- > 0;) {
    for (const auto& cone : fan.cones_by_dim[d]) {
      std::vector<std::vector<Rat>> a(b.size(), std::vector<Rat>(cone.size()));
      for (size_t k = 0; k < cone.size(); ++k) {
        auto rs = tp_split(fan.rays[cone[k]]);
        for (size_t i = 0; i < rs.size(); ++i) a[i][k] = Rat(rs[i]);
      }
      auto sol = field_solve(a, b);
      if (!sol) continue;
      bool ok = true;
      for (const auto& lam : *sol)
        if (lam <= 0) ok = false;
      if (!ok) continue;
      // verify (overdetermined system)
      bool exact = true;
      for (size_t i = 0; i < b.size() && exact; ++i) {
        Rat s(0);
        for (size_t k = 0; k < cone.size(); ++k)
          s += (*sol)[k] * Rat(tp_split(fan.rays[cone[k]])[i]);
        if (s != b[i]) exact = false;
      }
      if (!exact) continue;
      loc.found = true;
      loc.dim = d + 1;
      loc.cone = cone;
      loc.coefficients = *sol;
      return loc;
    }
  }
  return loc;
}

struct BalancingReport {
  bool balanced = true;
  long faces_checked = 0;
  std::string failure;
};

/// Balancing of the image fan with its computed multiplicities: at every
/// codimension-1 face tau, the weighted primitive normal vectors of the
/// adjacent maximal cones sum to zero in the quotient lattice Z^n / N_tau.
inline BalancingReport check_balancing(const PushedFan& pf) {
  BalancingReport rep;
  const int d = pf.image.dim();
  if (d < 2) return rep;
  // adjacency: facets of maximal cones
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;  // facet -> (max cone pos, extra ray)
  const auto& maxcones = pf.image.cones_by_dim[d - 1];
  for (size_t p = 0; p < maxcones.size(); ++p) {
    const auto& cone = maxcones[p];
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> facet;
      for (size_t i = 0; i < cone.size(); ++i)
        if (i != drop) facet.push_back(cone[i]);
      facets[facet].emplace_back(static_cast<int>(p), cone[drop]);
    }
  }
  for (const auto& [facet, adj] : facets) {
    ++rep.faces_checked;
    ZMat tau_rows;
    for (int r : facet) tau_rows.push_back(tp_split(pf.image.rays[r]));
    auto cr = column_reduction(tau_rows);
    const int n = static_cast<int>(cr.V.size());
    const int q = n - cr.rank;
    std::vector<Int> acc(q, 0);
    for (const auto& [pos, extra] : adj) {
      auto x = tp_split(pf.image.rays[extra]);
      std::vector<Int> proj(q, 0);
      for (int c = 0; c < q; ++c) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += x[i] * cr.V[i][cr.rank + c];
        proj[c] = s;
      }
      Int g = vec_gcd(proj);
      if (g == 0) {
        rep.balanced = false;
        rep.failure = "adjacent ray lies in the span of the face";
        return rep;
      }
      const Int& m = pf.multiplicity[pf.cone_id(d - 1, pos)];
      for (int c = 0; c < q; ++c) acc[c] += m * (proj[c] / g);
    }
    for (const auto& x : acc)
      if (x != 0) {
        rep.balanced = false;
        std::ostringstream os;
        os << "balancing fails at a face of " << facet.size() << " rays";
        rep.failure = os.str();
        return rep;
      }
  }
  return rep;
}

}  // namespace tropmoduli
