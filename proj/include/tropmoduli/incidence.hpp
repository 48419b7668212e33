#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tropmoduli/errors.hpp"
#include "tropmoduli/finite_geometry.hpp"

namespace tropmoduli {

/// 0/1 incidence matrix of one of the monomial maps, with label lists.
struct IncidenceMatrix {
  std::string kind;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<int>> entries;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return rows() ? static_cast<int>(entries[0].size()) : 0; }

  std::vector<int> row_support(int r) const {
    std::vector<int> s;
    for (int c = 0; c < cols(); ++c)
      if (entries[r][c]) s.push_back(c);
    return s;
  }

  std::string csv() const {
    std::ostringstream os;
    for (const auto& c : col_labels) os << "," << c;
    os << "\n";
    for (int r = 0; r < rows(); ++r) {
      os << row_labels[r];
      for (int c = 0; c < cols(); ++c) os << "," << entries[r][c];
      os << "\n";
    }
    return os.str();
  }
};

/// The 15 pairs {i,j} in lexicographic order; this is the column order of
/// the Segre and Igusa matrices (z12, z13, ..., z56).
inline const std::vector<std::pair<int, int>>& z_pairs() {
  static const std::vector<std::pair<int, int>> p = [] {
    std::vector<std::pair<int, int>> v;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) v.emplace_back(i, j);
    return v;
  }();
  return p;
}

inline int z_index(int i, int j) {
  if (i > j) std::swap(i, j);
  const auto& p = z_pairs();
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] == std::make_pair(i, j)) return static_cast<int>(k);
  throw Error("bad pair");
}

inline std::string z_label(int k) {
  auto [i, j] = z_pairs()[k];
  return "z" + std::to_string(i) + std::to_string(j);
}

/// Bijection between the pairs {i,j} and the nonzero vectors of F_2^4 that
/// matches orthogonality of the symplectic form with disjointness of pairs.
inline const std::array<const char*, 15>& pair_to_f24_digits() {
  static const std::array<const char*, 15> d = {
      "0001", "1100", "1110", "0101", "0110",   // z12 z13 z14 z15 z16
      "1101", "1111", "0100", "0111",           // z23 z24 z25 z26
      "0010", "1001", "1010",                   // z34 z35 z36
      "1011", "1000",                           // z45 z46
      "0011"};                                  // z56
  return d;
}

inline FqVector f24_vector_from_digits(const std::string& s) {
  FqVector v;
  v.q = 2;
  v.dim = 4;
  for (int i = 0; i < 4; ++i) v.c[i] = static_cast<uint8_t>(s[i] - '0');
  return v;
}

inline FqVector f34_vector_from_digits(const std::string& s) {
  FqVector v;
  v.q = 3;
  v.dim = 4;
  for (int i = 0; i < 4; ++i) v.c[i] = static_cast<uint8_t>(s[i] - '0');
  return v;
}

/// The 15 tripartitions of {1..6} in the order of the Segre map coordinates.
inline const std::vector<std::array<std::pair<int, int>, 3>>& segre_matchings() {
  static const std::vector<std::array<std::pair<int, int>, 3>> m = {
      {{{1, 2}, {3, 4}, {5, 6}}}, {{{1, 2}, {3, 5}, {4, 6}}}, {{{1, 2}, {3, 6}, {4, 5}}},
      {{{1, 3}, {2, 4}, {5, 6}}}, {{{1, 3}, {2, 5}, {4, 6}}}, {{{1, 3}, {2, 6}, {4, 5}}},
      {{{1, 4}, {2, 3}, {5, 6}}}, {{{1, 4}, {2, 5}, {3, 6}}}, {{{1, 4}, {2, 6}, {3, 5}}},
      {{{1, 5}, {2, 3}, {4, 6}}}, {{{1, 5}, {2, 4}, {3, 6}}}, {{{1, 5}, {2, 6}, {3, 4}}},
      {{{1, 6}, {2, 3}, {4, 5}}}, {{{1, 6}, {2, 4}, {3, 5}}}, {{{1, 6}, {2, 5}, {3, 4}}}};
  return m;
}

/// The 10 bipartitions into triples, ordered by the triple containing 1.
inline const std::vector<std::array<int, 3>>& igusa_triples() {
  static const std::vector<std::array<int, 3>> t = {
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4},
      {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 5, 6}};
  return t;
}

/// The 40 quartic monomials m_0..m_39 of the Burkhardt parametrization,
/// each the product of the four coordinates u indexed by the lines of one
/// isotropic plane of F_3^4.
inline const std::vector<std::array<const char*, 4>>& burkhardt_monomials() {
  static const std::vector<std::array<const char*, 4>> m = {
      {"0001", "0010", "0011", "0012"}, {"0001", "1000", "1001", "1002"},
      {"0001", "1010", "1011", "1012"}, {"0001", "1020", "1021", "1022"},
      {"0010", "0100", "0110", "0120"}, {"0010", "0101", "0111", "0121"},
      {"0010", "0102", "0112", "0122"}, {"0011", "1200", "1211", "1222"},
      {"0011", "1201", "1212", "1220"}, {"0011", "1202", "1210", "1221"},
      {"0012", "1100", "1112", "1121"}, {"0012", "1101", "1110", "1122"},
      {"0012", "1102", "1111", "1120"}, {"0100", "1000", "1100", "1200"},
      {"0100", "1010", "1110", "1210"}, {"0100", "1020", "1120", "1220"},
      {"0101", "1000", "1101", "1202"}, {"0101", "1010", "1111", "1212"},
      {"0101", "1020", "1121", "1222"}, {"0102", "1000", "1102", "1201"},
      {"0102", "1010", "1112", "1211"}, {"0102", "1020", "1122", "1221"},
      {"0110", "1001", "1111", "1221"}, {"0110", "1011", "1121", "1201"},
      {"0110", "1021", "1101", "1211"}, {"0111", "1001", "1112", "1220"},
      {"0111", "1011", "1122", "1200"}, {"0111", "1021", "1102", "1210"},
      {"0112", "1001", "1110", "1222"}, {"0112", "1011", "1120", "1202"},
      {"0112", "1021", "1100", "1212"}, {"0120", "1002", "1122", "1212"},
      {"0120", "1012", "1102", "1222"}, {"0120", "1022", "1112", "1202"},
      {"0121", "1002", "1120", "1211"}, {"0121", "1012", "1100", "1221"},
      {"0121", "1022", "1110", "1201"}, {"0122", "1002", "1121", "1210"},
      {"0122", "1012", "1101", "1220"}, {"0122", "1022", "1111", "1200"}};
  return m;
}

/// Index of a line of F_3^4 in the lexicographic line order (the u order).
inline int u_index(const std::string& digits) {
  static const std::vector<FqVector> lines = enumerate_lines(3, 4);
  FqVector v = f34_vector_from_digits(digits);
  for (size_t i = 0; i < lines.size(); ++i)
    if (lines[i] == v) return static_cast<int>(i);
  throw Error("not a line representative: " + digits);
}

inline std::string u_label(int idx) {
  static const std::vector<FqVector> lines = enumerate_lines(3, 4);
  return "u" + lines[idx].digits();
}

inline IncidenceMatrix incidence(const std::string& kind) {
  IncidenceMatrix m;
  m.kind = kind;
  if (kind == "segre") {
    for (int k = 0; k < 15; ++k) m.col_labels.push_back(z_label(k));
    for (int r = 0; r < 15; ++r) {
      m.row_labels.push_back("m" + std::to_string(r));
      std::vector<int> row(15, 0);
      for (const auto& [i, j] : segre_matchings()[r]) row[z_index(i, j)] = 1;
      m.entries.push_back(std::move(row));
    }
  } else if (kind == "igusa") {
    for (int k = 0; k < 15; ++k) m.col_labels.push_back(z_label(k));
    for (int r = 0; r < 10; ++r) {
      m.row_labels.push_back("m" + std::to_string(r));
      std::vector<int> row(15, 0);
      const auto& t = igusa_triples()[r];
      std::array<bool, 7> in{};
      for (int x : t) in[x] = true;
      for (int k = 0; k < 15; ++k) {
        auto [i, j] = z_pairs()[k];
        if (in[i] == in[j]) row[k] = 1;  // pair inside the triple or inside its complement
      }
      m.entries.push_back(std::move(row));
    }
  } else if (kind == "burkhardt") {
    for (int k = 0; k < 40; ++k) m.col_labels.push_back(u_label(k));
    for (int r = 0; r < 40; ++r) {
      m.row_labels.push_back("m" + std::to_string(r));
      std::vector<int> row(40, 0);
      for (const char* d : burkhardt_monomials()[r]) row[u_index(d)] = 1;
      m.entries.push_back(std::move(row));
    }
  } else {
    throw UnknownName(kind);
  }
  return m;
}

}  // namespace tropmoduli
