#pragma once

#include <array>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tropmoduli/arrangement.hpp"
#include "tropmoduli/incidence.hpp"
#include "tropmoduli/linalg.hpp"

namespace tropmoduli {

struct IdentityReport {
  std::string name;
  long trials = 0;
  long failures = 0;
  unsigned long seed = 0;
  std::string witness;
  bool ok() const { return failures == 0; }
};

namespace idet {

inline Rat random_rat(std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<int> num(-3 - height, 3 + height);
  std::uniform_int_distribution<int> den(1, 2 + height / 4);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// The five Burkhardt coordinates as degree-4 polynomials in c.
inline std::array<Cyc, 5> burkhardt_rs(const std::array<Cyc, 4>& c) {
  auto cube = [](const Cyc& x) { return x * x * x; };
  std::array<Cyc, 5> out;
  out[0] = Cyc(3) * c[0] * c[1] * c[2] * c[3];                       // r
  out[1] = -(c[0] * (cube(c[1]) + cube(c[2]) + cube(c[3])));        // s01
  out[2] = c[1] * (cube(c[0]) + cube(c[2]) - cube(c[3]));           // s10
  out[3] = c[2] * (cube(c[0]) - cube(c[1]) + cube(c[3]));           // s11
  out[4] = c[3] * (cube(c[0]) + cube(c[1]) - cube(c[2]));           // s12
  return out;
}

inline Cyc burkhardt_quartic(const std::array<Cyc, 5>& p) {
  auto cube = [](const Cyc& x) { return x * x * x; };
  const Cyc &r = p[0], &a = p[1], &b = p[2], &c = p[3], &d = p[4];
  return r * (cube(r) + cube(a) + cube(b) + cube(c) + cube(d)) +
         Cyc(3) * a * b * c * d;
}

inline std::array<Cyc, 5> burkhardt_gradient(const std::array<Cyc, 5>& p) {
  auto sq = [](const Cyc& x) { return x * x; };
  auto cube = [](const Cyc& x) { return x * x * x; };
  const Cyc &r = p[0], &a = p[1], &b = p[2], &c = p[3], &d = p[4];
  return {Cyc(4) * cube(r) + cube(a) + cube(b) + cube(c) + cube(d),
          Cyc(3) * r * sq(a) + Cyc(3) * b * c * d,
          Cyc(3) * r * sq(b) + Cyc(3) * a * c * d,
          Cyc(3) * r * sq(c) + Cyc(3) * a * b * d,
          Cyc(3) * r * sq(d) + Cyc(3) * a * b * c};
}

/// Values of the 40 coordinates u and the 40 monomials m at a point c.
inline std::pair<std::vector<Cyc>, std::vector<Cyc>> burkhardt_um(
    const Arrangement& g32, const IncidenceMatrix& inc, const std::array<Cyc, 4>& c) {
  std::vector<Cyc> u(40, Cyc(0));
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 4; ++j) u[i] += g32.forms[i][j] * c[j];
  std::vector<Cyc> m(40, Cyc(1));
  for (int r = 0; r < 40; ++r)
    for (int col : inc.row_support(r)) m[r] *= u[col];
  return {u, m};
}

/// The five coordinates recovered from the monomial values.
inline std::array<Cyc, 5> rs_from_m(const std::vector<Cyc>& m) {
  const Cyc S = Cyc::sqrt_minus3();
  const Cyc third = Cyc(Rat(1, 3));
  return {m[13] * third,
          (S * m[1] - m[13]) * third,
          (-(S * m[4]) - m[13]) * third,
          (-(S * m[7]) - m[13]) * third,
          (-(S * m[10]) - m[13]) * third};
}

/// The point with 16 vanishing monomial coordinates: one of the 45 nodes,
/// written in the m-coordinates (entries in {0, +-1, +-w, +-w^2}).
inline std::vector<Cyc> singular_point_m() {
  const Cyc W = Cyc::omega();
  const Cyc W2 = Cyc::omega() * Cyc::omega();
  const Cyc o = Cyc(1), z = Cyc(0);
  return {z,   z,  z,   z,   z,  z,  z,  -W2, -W, o,  W2, -o, W,   z,
          z,   z,  z,   z,   z,  z,  z,  z,   -W2, -o, -W, -o, -W2, W2,
          -W,  W2, W2,  W2,  o,  W,  o,  W2,  -W2, W,  -W2, -W2};
}

/// Coble cubic building blocks: f and the four g polynomials on the nine
/// coordinates x indexed by F_3^2 in the order 00,01,02,10,11,12,20,21,22.
inline Rat coble_f(const std::array<Rat, 9>& x) {
  Rat s(0);
  for (const auto& v : x) s += v * v * v;
  return s;
}
inline Rat coble_g(int which, const std::array<Rat, 9>& x) {
  auto idx = [](int a, int b) { return 3 * ((a % 3 + 3) % 3) + ((b % 3 + 3) % 3); };
  Rat s(0);
  if (which == 0) {  // g01: rows
    for (int a = 0; a < 3; ++a) s += x[idx(a, 0)] * x[idx(a, 1)] * x[idx(a, 2)];
  } else if (which == 1) {  // g10: columns
    for (int b = 0; b < 3; ++b) s += x[idx(0, b)] * x[idx(1, b)] * x[idx(2, b)];
  } else if (which == 2) {  // g11: diagonals
    s = x[idx(0, 0)] * x[idx(1, 1)] * x[idx(2, 2)] +
        x[idx(0, 1)] * x[idx(1, 2)] * x[idx(2, 0)] +
        x[idx(1, 0)] * x[idx(2, 1)] * x[idx(0, 2)];
  } else {  // g12: antidiagonals
    s = x[idx(0, 0)] * x[idx(1, 2)] * x[idx(2, 1)] +
        x[idx(0, 1)] * x[idx(1, 0)] * x[idx(2, 2)] +
        x[idx(0, 2)] * x[idx(1, 1)] * x[idx(2, 0)];
  }
  return 3 * s;
}

/// Entry pattern of the skew 9x9 matrix: (sign, c index, x index); the
/// diagonal is zero and the matrix is skew-symmetric.
inline const std::array<std::array<std::array<int, 3>, 9>, 9>& skew9_pattern() {
  // x indices: 00,01,02,10,11,12,20,21,22 -> 0..8
  // upper triangle transcription; s = sign, c, x
  struct T {
    int r, cidx;
    int s, c, x;
  };
  static const std::array<std::array<std::array<int, 3>, 9>, 9> table = [] {
    std::array<std::array<std::array<int, 3>, 9>, 9> t{};
    auto set = [&](int i, int j, int s, int c, int x) {
      t[i][j] = {s, c, x};
      t[j][i] = {-s, c, x};
    };
    for (auto& row : t)
      for (auto& e : row) e = {0, 0, 0};
    // row 0
    set(0, 1, -1, 0, 2);  // -c0 x02
    set(0, 2, +1, 0, 1);  // +c0 x01
    set(0, 3, -1, 1, 6);  // -c1 x20
    set(0, 4, -1, 2, 8);  // -c2 x22
    set(0, 5, -1, 3, 7);  // -c3 x21
    set(0, 6, +1, 1, 3);  // +c1 x10
    set(0, 7, +1, 3, 5);  // +c3 x12
    set(0, 8, +1, 2, 4);  // +c2 x11
    // row 1
    set(1, 2, -1, 0, 0);  // -c0 x00
    set(1, 3, -1, 3, 8);  // -c3 x22
    set(1, 4, -1, 1, 7);  // -c1 x21
    set(1, 5, -1, 2, 6);  // -c2 x20
    set(1, 6, +1, 2, 5);  // +c2 x12
    set(1, 7, +1, 1, 4);  // +c1 x11
    set(1, 8, +1, 3, 3);  // +c3 x10
    // row 2
    set(2, 3, -1, 2, 7);  // -c2 x21
    set(2, 4, -1, 3, 6);  // -c3 x20
    set(2, 5, -1, 1, 8);  // -c1 x22
    set(2, 6, +1, 3, 4);  // +c3 x11
    set(2, 7, +1, 2, 3);  // +c2 x10
    set(2, 8, +1, 1, 5);  // +c1 x12
    // row 3
    set(3, 4, -1, 0, 5);  // -c0 x12
    set(3, 5, +1, 0, 4);  // +c0 x11
    set(3, 6, -1, 1, 0);  // -c1 x00
    set(3, 7, -1, 2, 2);  // -c2 x02
    set(3, 8, -1, 3, 1);  // -c3 x01
    // row 4
    set(4, 5, -1, 0, 3);  // -c0 x10
    set(4, 6, -1, 3, 2);  // -c3 x02
    set(4, 7, -1, 1, 1);  // -c1 x01
    set(4, 8, -1, 2, 0);  // -c2 x00
    // row 5
    set(5, 6, -1, 2, 1);  // -c2 x01
    set(5, 7, -1, 3, 0);  // -c3 x00
    set(5, 8, -1, 1, 2);  // -c1 x02
    // row 6
    set(6, 7, -1, 0, 8);  // -c0 x22
    set(6, 8, +1, 0, 7);  // +c0 x21
    // row 7
    set(7, 8, -1, 0, 6);  // -c0 x20
    return t;
  }();
  return table;
}

/// Pfaffian of a skew-symmetric matrix by expansion along the first row.
inline Rat pfaffian(std::vector<std::vector<Rat>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Rat(1);
  if (n % 2) return Rat(0);
  if (n == 2) return a[0][1];
  Rat s(0);
  int sign = 1;
  for (int j = 1; j < n; ++j) {
    if (a[0][j] != 0) {
      std::vector<std::vector<Rat>> sub;
      for (int r = 1; r < n; ++r) {
        if (r == j) continue;
        std::vector<Rat> row;
        for (int c = 1; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        sub.push_back(std::move(row));
      }
      s += sign * a[0][j] * pfaffian(std::move(sub));
    }
    sign = -sign;
  }
  return s;
}

}  // namespace idet

/// Burkhardt quartic vanishes on the degree-4 parametrization, and the
/// m-coordinate expressions agree with the c-coordinate expressions.
inline IdentityReport check_burkhardt_parametrization(long trials = 25,
                                                      unsigned long seed = 1) {
  IdentityReport rep;
  rep.name = "burkhardt_parametrization";
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  auto g32 = arrangement("g32");
  auto inc = incidence("burkhardt");
  for (long t = 0; t < trials; ++t) {
    std::array<Cyc, 4> c;
    for (auto& x : c) x = Cyc(idet::random_rat(rng, static_cast<int>(t)));
    if (t == 2) c[0] = Cyc(0);  // exercise the degenerate branch
    auto rs = idet::burkhardt_rs(c);
    Cyc q = idet::burkhardt_quartic(rs);
    bool pass = q.is_zero();
    auto [u, m] = idet::burkhardt_um(g32, inc, c);
    auto rs2 = idet::rs_from_m(m);
    for (int i = 0; i < 5; ++i)
      if (!(rs[i] == rs2[i])) pass = false;
    if (!pass) {
      ++rep.failures;
      if (rep.witness.empty()) {
        std::ostringstream os;
        os << "c = (" << c[0].str() << "," << c[1].str() << "," << c[2].str() << ","
           << c[3].str() << ")";
        rep.witness = os.str();
      }
    }
  }
  return rep;
}

/// The node (0:0:0:1:-1) as determined by the displayed m-coordinate point:
/// quartic and gradient vanish, 16 of the 40 coordinates are zero, and the
/// zero set is the support of the matching plane-pair ray.
inline IdentityReport check_singular_point() {
  IdentityReport rep;
  rep.name = "singular_point";
  rep.trials = 1;
  auto sp = idet::singular_point_m();
  auto rs = idet::rs_from_m(sp);
  bool pass = idet::burkhardt_quartic(rs).is_zero();
  for (const auto& d : idet::burkhardt_gradient(rs))
    if (!d.is_zero()) pass = false;
  // the point is projectively (0:0:0:1:-1)
  if (!(rs[0].is_zero() && rs[1].is_zero() && rs[2].is_zero())) pass = false;
  if (rs[3].is_zero() || !(rs[3] + rs[4]).is_zero()) pass = false;
  // zero pattern
  std::vector<int> zeros;
  for (int i = 0; i < 40; ++i)
    if (sp[i].is_zero()) zeros.push_back(i);
  if (zeros.size() != 16) pass = false;
  // support of the plane-pair ray spanned by the lines (0,0,0,1),(0,1,0,0)
  auto inc = incidence("burkhardt");
  std::vector<int> support;
  {
    FqSubspace b = FqSubspace::span(3, 4, {f34_vector_from_digits("0001"),
                                           f34_vector_from_digits("0100")});
    uint64_t mask = 0;
    for (const auto& l : b.lines()) mask |= 1ull << u_index(l.digits());
    for (int r = 0; r < 40; ++r) {
      long s = 0;
      for (int c = 0; c < 40; ++c)
        if (mask >> c & 1) s += inc.entries[r][c];
      if (s > 0) support.push_back(r);
    }
  }
  if (support != zeros) pass = false;
  if (!pass) rep.failures = 1;
  return rep;
}

/// For each of the 40 coordinates u, the four monomials containing it span
/// a plane: sampled value matrices have rank exactly 2, the four displayed
/// trinomials vanish, and the 160 reconstructed trinomials stack to a
/// relation matrix of rank 35.
inline IdentityReport check_local_rank2(long trials = 8, unsigned long seed = 2) {
  IdentityReport rep;
  rep.name = "local_rank2";
  rep.trials = trials;
  rep.seed = seed;
  if (trials < 4) trials = 4;
  std::mt19937_64 rng(seed);
  auto g32 = arrangement("g32");
  auto inc = incidence("burkhardt");
  // sample matrix: 40 monomials at `trials` points
  std::vector<std::vector<Cyc>> samples;  // [trial][monomial]
  for (long t = 0; t < trials; ++t) {
    std::array<Cyc, 4> c;
    while (true) {
      for (auto& x : c) x = Cyc(idet::random_rat(rng, static_cast<int>(t) + 1));
      auto [u, m] = idet::burkhardt_um(g32, inc, c);
      bool generic = true;
      for (const auto& x : u)
        if (x.is_zero()) generic = false;
      if (!generic) continue;
      samples.push_back(m);
      break;
    }
  }
  bool pass = true;
  const Cyc W = Cyc::omega(), W2 = Cyc::omega() * Cyc::omega();
  // the displayed trinomials for u0001 (monomials m0, m1, m2, m3)
  for (const auto& m : samples) {
    if (!(m[0] + W2 * m[1] - W * m[2]).is_zero()) pass = false;
    if (!(m[0] - W * m[1] - W2 * m[3]).is_zero()) pass = false;
    if (!(m[0] + W2 * m[2] + W * m[3]).is_zero()) pass = false;
    if (!(m[1] + W * m[2] - W2 * m[3]).is_zero()) pass = false;
  }
  std::vector<std::vector<Cyc>> relations;  // rows over the 40 monomials
  for (int col = 0; col < 40; ++col) {
    std::vector<int> rows;
    for (int r = 0; r < 40; ++r)
      if (inc.entries[r][col]) rows.push_back(r);
    if (rows.size() != 4) {
      pass = false;
      continue;
    }
    // rank of the 4 x trials value matrix must be exactly 2
    std::vector<std::vector<Cyc>> vals(4);
    for (int k = 0; k < 4; ++k)
      for (const auto& m : samples) vals[k].push_back(m[rows[k]]);
    if (field_rank(vals) != 2) pass = false;
    // one trinomial per omitted monomial: kernel of the 2-sample system
    for (int omit = 0; omit < 4; ++omit) {
      std::vector<int> keep;
      for (int k = 0; k < 4; ++k)
        if (k != omit) keep.push_back(k);
      std::vector<std::vector<Cyc>> sys(2, std::vector<Cyc>(3));
      for (int s = 0; s < 2; ++s)
        for (int k = 0; k < 3; ++k) sys[s][k] = samples[s][rows[keep[k]]];
      auto ker = field_kernel(sys);
      if (ker.size() != 1) {
        pass = false;
        continue;
      }
      // verify on every sample
      for (const auto& m : samples) {
        Cyc acc(0);
        for (int k = 0; k < 3; ++k) acc += ker[0][k] * m[rows[keep[k]]];
        if (!acc.is_zero()) pass = false;
      }
      std::vector<Cyc> rel(40, Cyc(0));
      for (int k = 0; k < 3; ++k) rel[rows[keep[k]]] = ker[0][k];
      relations.push_back(std::move(rel));
    }
  }
  if (relations.size() != 160) pass = false;
  if (field_rank(relations) != 35) pass = false;
  if (!pass) rep.failures = 1;
  return rep;
}

/// The nine principal 8x8 subpfaffians of the skew matrix equal
/// eps_i x_i C for a constant sign pattern eps and one global scalar
/// (absorbed into the normalization of C), with C the Coble cubic. The
/// scalar and the signs are fixed on the first trial and must not vary.
inline IdentityReport check_coble_pfaffian(long trials = 6, unsigned long seed = 3) {
  IdentityReport rep;
  rep.name = "coble_pfaffian";
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::array<Rat, 9> ratio_of;
  std::array<bool, 9> seen{};
  Rat scale(0);
  bool pass = true;
  for (long t = 0; t < trials; ++t) {
    std::array<Rat, 4> c;
    std::array<Rat, 9> x;
    for (auto& v : c) v = idet::random_rat(rng, static_cast<int>(t));
    for (auto& v : x) v = idet::random_rat(rng, static_cast<int>(t));
    if (t == 1) x[0] = 0;  // pfaffian of that block must vanish
    // r, s from the parametrization (rational c keeps everything in Q)
    std::array<Cyc, 4> cc;
    for (int i = 0; i < 4; ++i) cc[i] = Cyc(c[i]);
    auto rs = idet::burkhardt_rs(cc);
    std::array<Rat, 5> rsq;
    for (int i = 0; i < 5; ++i) rsq[i] = rs[i].rat();
    Rat C = rsq[0] * idet::coble_f(x);
    for (int g = 0; g < 4; ++g) C += rsq[g + 1] * idet::coble_g(g, x);
    const auto& pat = idet::skew9_pattern();
    std::vector<std::vector<Rat>> mat(9, std::vector<Rat>(9, Rat(0)));
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        auto [s, ci, xi] = pat[i][j];
        if (s) mat[i][j] = s * c[ci] * x[xi];
      }
    for (int i = 0; i < 9; ++i) {
      std::vector<std::vector<Rat>> sub;
      for (int r = 0; r < 9; ++r) {
        if (r == i) continue;
        std::vector<Rat> row;
        for (int cidx = 0; cidx < 9; ++cidx)
          if (cidx != i) row.push_back(mat[r][cidx]);
        sub.push_back(std::move(row));
      }
      Rat pf = idet::pfaffian(std::move(sub));
      Rat rhs = x[i] * C;
      if (rhs == 0) {
        if (pf != 0) pass = false;
        continue;
      }
      Rat ratio = pf / rhs;
      if (ratio == 0) {
        pass = false;
        continue;
      }
      if (!seen[i]) {
        ratio_of[i] = ratio;
        seen[i] = true;
        if (scale == 0) scale = abs(ratio);
        if (abs(ratio) != scale) {
          rep.witness = "proportionality constants differ across indices";
          pass = false;
        }
      } else if (ratio_of[i] != ratio) {
        rep.witness = "sign pattern varies across trials";
        pass = false;
      }
    }
  }
  if (pass) {
    std::ostringstream os;
    os << "scale = " << scale.get_str() << ", eps =";
    for (int i = 0; i < 9; ++i)
      os << " " << (seen[i] ? (ratio_of[i] > 0 ? "+1" : "-1") : "?");
    rep.witness = os.str();
  }
  if (!pass) rep.failures = 1;
  return rep;
}

/// Symbolic expansion of the twelve linear forms of the icosahedron: the
/// product equals a1^11 a2 - 11 a1^6 a2^6 - a1 a2^11 exactly.
inline IdentityReport check_icosahedral_discriminant() {
  IdentityReport rep;
  rep.name = "icosahedral_discriminant";
  rep.trials = 1;
  const Cyc g = Cyc::zeta(5);
  auto gp = [&](int k) {
    Cyc p(1);
    for (int i = 0; i < ((k % 5) + 5) % 5; ++i) p *= g;
    return p;
  };
  // binary forms as coefficient vectors: coeff[j] of a1^(d-j) a2^j
  auto mul_linear = [&](std::vector<Cyc> f, const Cyc& alpha, const Cyc& beta) {
    // multiply by alpha*a1 + beta*a2
    std::vector<Cyc> out(f.size() + 1, Cyc(0));
    for (size_t j = 0; j < f.size(); ++j) {
      out[j] += alpha * f[j];
      out[j + 1] += beta * f[j];
    }
    return out;
  };
  std::vector<Cyc> f{Cyc(1)};           // 1
  f = mul_linear(f, Cyc(1), Cyc(0));    // a1
  f = mul_linear(f, Cyc(0), Cyc(1));    // a1 a2
  for (int i = 1; i <= 5; ++i) {
    f = mul_linear(f, gp(5 - i), gp(1) + gp(4));
    f = mul_linear(f, gp(i), gp(2) + gp(3));
  }
  bool pass = f.size() == 13;
  for (int j = 0; j < 13 && pass; ++j) {
    Cyc expect(0);
    if (j == 1) expect = Cyc(1);
    if (j == 6) expect = Cyc(-11);
    if (j == 11) expect = Cyc(-1);
    if (!(f[j] == expect)) {
      pass = false;
      std::ostringstream os;
      os << "coefficient of a1^" << 12 - j << " a2^" << j << " is " << f[j].str();
      rep.witness = os.str();
    }
  }
  if (!pass) rep.failures = 1;
  return rep;
}

/// Linear and binomial relations of the Segre cubic and the Igusa quartic
/// on random six-point configurations, the kernel relation between the two
/// maps, and the classical quartic after the coordinate change.
inline IdentityReport check_segre_igusa(long trials = 25, unsigned long seed = 4) {
  IdentityReport rep;
  rep.name = "segre_igusa";
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  auto seg = incidence("segre");
  auto igu = incidence("igusa");
  bool pass = true;
  for (long t = 0; t < trials; ++t) {
    std::array<Rat, 6> x;
    bool distinct;
    do {
      distinct = true;
      for (auto& v : x) v = idet::random_rat(rng, static_cast<int>(t));
      for (int i = 0; i < 6 && distinct; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (x[i] == x[j]) distinct = false;
    } while (!distinct);
    std::array<Rat, 15> z;
    for (int k = 0; k < 15; ++k) {
      auto [i, j] = z_pairs()[k];
      z[k] = x[i - 1] - x[j - 1];
    }
    std::array<Rat, 15> m;
    for (int r = 0; r < 15; ++r) {
      Rat p(1);
      for (int c : seg.row_support(r)) p *= z[c];
      m[r] = p;
    }
    if (m[0] - m[1] + m[2] != 0) pass = false;
    if (m[0] * m[7] * m[12] - m[2] * m[6] * m[14] != 0) pass = false;
    std::array<Rat, 10> n;
    for (int r = 0; r < 10; ++r) {
      Rat p(1);
      for (int c : igu.row_support(r)) p *= z[c];
      n[r] = p;
    }
    // the five linear forms: symmetric matrix times (1,-1,1,-1,1)
    const int M[5][5] = {{-1, 0, 1, 2, 3},
                         {0, -1, 4, 5, 6},
                         {1, 4, -1, 7, 8},
                         {2, 5, 7, -1, 9},
                         {3, 6, 8, 9, -1}};
    const int sgn[5] = {1, -1, 1, -1, 1};
    for (int r = 0; r < 5; ++r) {
      Rat acc(0);
      for (int c = 0; c < 5; ++c)
        if (M[r][c] >= 0) acc += sgn[c] * n[M[r][c]];
      if (acc != 0) pass = false;
    }
    // classical quartic via the coordinate change
    Rat r0 = m[0];
    Rat s01 = 2 * m[0] - 4 * m[1];
    Rat s10 = 2 * m[0] - 4 * m[3];
    Rat s11 = 4 * m[4] - 2 * m[0] - 4 * m[7];
    Rat tt = 8 * (m[1] + m[3] - m[0] - m[4] - m[7]);
    Rat cubic = 16 * r0 * r0 * r0 - 4 * r0 * (s01 * s01 + s10 * s10 + s11 * s11) +
                4 * s01 * s10 * s11 + r0 * tt * tt;
    if (cubic != 0) pass = false;
  }
  // kernel: A_segre (E_sigma - E_sigma_complement) = 0 for all ten triples
  for (int i = 1; i <= 6 && pass; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) {
        if (i != 1) continue;  // triples containing 1 enumerate all ten classes
        std::array<long, 15> diff{};
        for (int a = 1; a <= 6; ++a)
          for (int b = a + 1; b <= 6; ++b) {
            bool ina = (a == i || a == j || a == k);
            bool inb = (b == i || b == j || b == k);
            if (ina && inb) diff[z_index(a, b)] += 1;
            if (!ina && !inb) diff[z_index(a, b)] -= 1;
          }
        for (int r = 0; r < 15; ++r) {
          long acc = 0;
          for (int c = 0; c < 15; ++c) acc += seg.entries[r][c] * diff[c];
          if (acc != 0) pass = false;
        }
      }
  if (!pass) rep.failures = 1;
  return rep;
}

}  // namespace tropmoduli
