#pragma once

#include <gmpxx.h>

#include <sstream>
#include <string>
#include <vector>

#include "tropmoduli/errors.hpp"

namespace tropmoduli {

using Rat = mpq_class;

/// Exact element of Q(zeta_n) for n in {1,3,5}, stored as a polynomial in
/// zeta of degree < phi(n) reduced modulo the n-th cyclotomic polynomial.
/// Values whose non-constant coefficients vanish are demoted to order 1,
/// so equality across orders is plain structural equality.
class Cyc {
 public:
  Cyc() : n_(1), c_(1) {}
  Cyc(long v) : n_(1), c_{Rat(v)} {}
  Cyc(int v) : n_(1), c_{Rat(v)} {}
  Cyc(const Rat& v) : n_(1), c_{v} {
    c_[0].canonicalize();
  }

  static Cyc zeta(int n) {
    if (n == 1) return Cyc(1);
    if (n != 3 && n != 5) throw Error("only cyclotomic orders 1, 3, 5 are supported");
    Cyc z;
    z.n_ = n;
    z.c_.assign(phi(n), Rat(0));
    z.c_[1] = 1;
    return z;
  }
  static Cyc omega() { return zeta(3); }
  static Cyc omega2() { return zeta(3) * zeta(3); }
  /// 2*omega + 1, which squares to -3.
  static Cyc sqrt_minus3() { return Cyc(2) * omega() + Cyc(1); }

  int order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const { return n_ == 1; }
  Rat rat() const {
    if (n_ != 1) throw Error("value is not rational");
    return c_[0];
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    auto [x, y] = promote(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    x.normalize();
    return x;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    auto [x, y] = promote(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    x.normalize();
    return x;
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    auto [x, y] = promote(a, b);
    if (x.n_ == 1) {
      x.c_[0] *= y.c_[0];
      return x;
    }
    const int d = static_cast<int>(x.c_.size());
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
      if (x.c_[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (y.c_[j] == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
      }
    }
    x.c_ = reduce(prod, x.n_);
    x.normalize();
    return x;
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }

  Cyc inv() const {
    if (is_zero()) throw DivisionByZero();
    if (n_ == 1) {
      Cyc r;
      r.c_[0] = 1 / c_[0];
      return r;
    }
    // Solve (this) * x = 1 in the phi(n)-dimensional regular representation.
    const int d = static_cast<int>(c_.size());
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1, Rat(0)));
    for (int j = 0; j < d; ++j) {
      std::vector<Rat> col(2 * d - 1, Rat(0));
      for (int i = 0; i < d; ++i) col[i + j] = c_[i];
      auto red = reduce(col, n_);
      for (int i = 0; i < d; ++i) m[i][j] = red[i];
    }
    m[0][d] = 1;
    for (int col = 0, row = 0; col < d && row < d; ++col) {
      int p = -1;
      for (int i = row; i < d; ++i)
        if (m[i][col] != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(m[p], m[row]);
      Rat pv = m[row][col];
      for (auto& x : m[row]) x /= pv;
      for (int i = 0; i < d; ++i) {
        if (i == row || m[i][col] == 0) continue;
        Rat f = m[i][col];
        for (int j = col; j <= d; ++j) m[i][j] -= f * m[row][j];
      }
      ++row;
    }
    Cyc r;
    r.n_ = n_;
    r.c_.assign(d, Rat(0));
    for (int i = 0; i < d; ++i) r.c_[i] = m[i][d];
    r.normalize();
    return r;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Conjugation zeta -> zeta^-1 (complex conjugation on Q(omega), Q(zeta5)).
  Cyc conj() const {
    if (n_ == 1) return *this;
    const int d = static_cast<int>(c_.size());
    std::vector<Rat> p(n_, Rat(0));
    for (int i = 0; i < d; ++i) p[(n_ - i) % n_] += c_[i];
    std::vector<Rat> full(p.begin(), p.end());
    Cyc r;
    r.n_ = n_;
    r.c_ = reduce(full, n_);
    r.normalize();
    return r;
  }

  std::string str() const {
    if (n_ == 1) return c_[0].get_str();
    const char* sym = (n_ == 3) ? "w" : "g";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rat v = abs(c_[i]);
      if (first) {
        if (c_[i] < 0) os << "-";
      } else {
        os << (c_[i] > 0 ? "+" : "-");
      }
      first = false;
      if (i == 0) {
        os << v.get_str();
      } else {
        if (v != 1) os << v.get_str() << "*";
        os << sym;
        if (i >= 2) os << "^" << i;
      }
    }
    if (first) return "0";
    return os.str();
  }

 private:
  int n_;
  std::vector<Rat> c_;

  static int phi(int n) { return n == 1 ? 1 : (n == 3 ? 2 : 4); }

  // Reduce a polynomial in zeta_n (any degree) to the canonical basis:
  // first pull exponents below n via zeta^n = 1, then remove the top
  // exponent with the cyclotomic relation 1 + zeta + ... + zeta^(n-1) = 0.
  static std::vector<Rat> reduce(const std::vector<Rat>& poly, int n) {
    const int d = phi(n);
    std::vector<Rat> mod(n, Rat(0));
    for (size_t i = 0; i < poly.size(); ++i) mod[i % n] += poly[i];
    std::vector<Rat> out(d, Rat(0));
    for (int i = 0; i < d; ++i) out[i] = mod[i] - mod[d];
    return out;
  }

  void normalize() {
    if (n_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return;
    Rat v = c_[0];
    n_ = 1;
    c_.assign(1, v);
  }

  static std::pair<Cyc, Cyc> promote(const Cyc& a, const Cyc& b) {
    if (a.n_ == b.n_) return {a, b};
    if (a.n_ == 1) return {embed(a, b.n_), b};
    if (b.n_ == 1) return {a, embed(b, a.n_)};
    throw IncompatibleOrders();
  }
  static Cyc embed(const Cyc& a, int n) {
    Cyc r;
    r.n_ = n;
    r.c_.assign(phi(n), Rat(0));
    r.c_[0] = a.c_[0];
    return r;
  }
};

inline Cyc operator*(long a, const Cyc& b) { return Cyc(a) * b; }
inline Cyc operator+(long a, const Cyc& b) { return Cyc(a) + b; }
inline Cyc operator-(long a, const Cyc& b) { return Cyc(a) - b; }

}  // namespace tropmoduli
