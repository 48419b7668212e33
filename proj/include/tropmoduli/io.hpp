#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "tropmoduli/arrangement.hpp"
#include "tropmoduli/fan.hpp"
#include "tropmoduli/identities.hpp"
#include "tropmoduli/kummer.hpp"
#include "tropmoduli/pushforward.hpp"
#include "tropmoduli/trees.hpp"

namespace tropmoduli {

using nlohmann::json;

inline json fan_to_json(const SimplicialFan& fan,
                        const std::vector<Int>* mult_by_cone_id = nullptr,
                        const std::vector<std::vector<int>>* cone_ids = nullptr) {
  json j;
  j["rays"] = json::array();
  for (const auto& r : fan.rays) j["rays"].push_back(r);
  j["cones"] = json::array();
  json mults = json::array();
  for (size_t d = 0; d < fan.cones_by_dim.size(); ++d)
    for (size_t p = 0; p < fan.cones_by_dim[d].size(); ++p) {
      j["cones"].push_back(fan.cones_by_dim[d][p]);
      if (mult_by_cone_id && cone_ids)
        mults.push_back((*mult_by_cone_id)[(*cone_ids)[d][p]].get_str());
      else
        mults.push_back("1");
    }
  j["multiplicities"] = mults;
  return j;
}

inline json pushed_fan_to_json(const PushedFan& pf) {
  json j = fan_to_json(pf.image, &pf.multiplicity, &pf.cone_ids);
  json covering = json::array();
  for (size_t d = 0; d < pf.image.cones_by_dim.size(); ++d)
    for (size_t p = 0; p < pf.image.cones_by_dim[d].size(); ++p) {
      int id = pf.cone_ids[d][p];
      json rec;
      rec["image"] = id;
      json sources = json::array();
      for (const auto& s : pf.covering[id]) {
        json sj;
        sj["dim"] = s.src_dim;
        sj["index"] = s.src_index;
        sj["dim_preserving"] = s.dim_preserving;
        sources.push_back(sj);
      }
      rec["sources"] = sources;
      rec["index"] = pf.multiplicity[id].get_str();
      covering.push_back(rec);
    }
  j["covering"] = covering;
  return j;
}

inline std::string fvector_csv(const SimplicialFan& fan) {
  std::ostringstream os;
  os << "dim,count\n";
  auto f = fan.fvector();
  for (size_t i = 0; i < f.size(); ++i) os << i + 1 << "," << f[i] << "\n";
  return os.str();
}

inline json arrangement_to_json(const Arrangement& a) {
  json j;
  j["name"] = a.name;
  j["labels"] = a.labels;
  json m = json::array();
  for (const auto& f : a.forms) {
    json row = json::array();
    for (const auto& c : f) row.push_back(c.str());
    m.push_back(row);
  }
  j["matrix"] = m;
  return j;
}

inline json exponent_to_json(const ExponentMatrix& e) {
  json j;
  j["name"] = e.name;
  j["labels"] = e.col_labels;
  j["rows"] = e.row_labels;
  j["matrix"] = e.e;
  return j;
}

inline json kummer_to_json(const KummerFiberReport& r) {
  json j;
  json lifts = json::array();
  for (long v : r.coeff_vals) lifts.push_back(v);
  j["lifts"] = lifts;
  j["cells"] = r.cells;
  j["twoCells"] = r.two_cells;
  j["bounded"] = r.bounded;
  j["unbounded"] = r.unbounded;
  j["boundedCellPolygons"] = r.bounded_cell_vertices;
  j["boundedComplexFlat"] = r.bounded_complex_flat;
  return j;
}

inline std::string identity_report_jsonl(const IdentityReport& r) {
  json j;
  j["name"] = r.name;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["seed"] = r.seed;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j.dump();
}

inline json tree_to_json(const MetricTree& t) {
  json j;
  j["n"] = t.n;
  json splits = json::array();
  for (const auto& [s, w] : t.splits) {
    json sj;
    sj["split"] = s.str();
    sj["weight"] = w.get_str();
    splits.push_back(sj);
  }
  j["splits"] = splits;
  json leaf = json::array();
  for (const auto& l : t.leaf) leaf.push_back(l.get_str());
  j["leafWeights"] = leaf;
  return j;
}

inline json genus2_to_json(const Genus2Graph& g) {
  json j;
  j["type"] = g.type;
  json lengths = json::array();
  for (const auto& l : g.lengths) lengths.push_back(l.get_str());
  j["lengths"] = lengths;
  return j;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace tropmoduli
