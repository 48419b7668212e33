#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "tropmoduli/cyclotomic.hpp"
#include "tropmoduli/errors.hpp"

namespace tropmoduli {

/// Finite Laurent polynomial in a uniformizer t over a cyclotomic field.
/// The zero element has an empty term map; no zero coefficient is ever stored.
class Val {
 public:
  Val() = default;
  Val(const Cyc& c) { set(0, c); }
  Val(const Rat& r) { set(0, Cyc(r)); }
  Val(long v) { set(0, Cyc(v)); }
  Val(int v) { set(0, Cyc(v)); }

  static Val t(long k = 1) { return monomial(Cyc(1), k); }
  static Val monomial(const Cyc& c, long k) {
    Val v;
    v.set(k, c);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }

  /// Minimal exponent with nonzero coefficient; nullopt encodes +infinity.
  std::optional<long> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  Cyc coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Cyc(0) : it->second;
  }
  Cyc leading_coeff() const {
    if (terms_.empty()) return Cyc(0);
    return terms_.begin()->second;
  }
  const std::map<long, Cyc>& terms() const { return terms_; }

  friend Val operator+(const Val& a, const Val& b) {
    Val r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, c);
    return r;
  }
  friend Val operator-(const Val& a, const Val& b) {
    Val r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, -c);
    return r;
  }
  Val operator-() const {
    Val r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend Val operator*(const Val& a, const Val& b) {
    Val r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
    return r;
  }

  /// Exact division only: the divisor must divide without remainder,
  /// otherwise NonPolynomialQuotient is thrown. Valuation-only ratios are
  /// handled by the callers via val(a) - val(b).
  friend Val operator/(const Val& a, const Val& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Val();
    if (b.terms_.size() == 1) {
      const auto [kb, cb] = *b.terms_.begin();
      Val r;
      for (const auto& [k, c] : a.terms_) r.terms_.emplace(k - kb, c / cb);
      return r;
    }
    // Long division by descending degree on the polynomial parts.
    long sa = a.terms_.begin()->first, sb = b.terms_.begin()->first;
    std::map<long, Cyc> rem = a.terms_;
    Val q;
    long degb = b.terms_.rbegin()->first;
    Cyc lb = b.terms_.rbegin()->second;
    while (!rem.empty()) {
      long degr = rem.rbegin()->first;
      if (degr - sa < degb - sb) throw NonPolynomialQuotient();
      Cyc f = rem.rbegin()->second / lb;
      long shift = degr - degb;
      q.add(shift, f);
      for (const auto& [k, c] : b.terms_) {
        auto it = rem.find(k + shift);
        Cyc nv = (it == rem.end() ? Cyc(0) : it->second) - f * c;
        if (it != rem.end()) rem.erase(it);
        if (!nv.is_zero()) rem.emplace(k + shift, nv);
      }
    }
    return q;
  }

  Val& operator+=(const Val& o) { return *this = *this + o; }
  Val& operator-=(const Val& o) { return *this = *this - o; }
  Val& operator*=(const Val& o) { return *this = *this * o; }

  friend bool operator==(const Val& a, const Val& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Val& a, const Val& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string cs = c.str();
      if (!first) os << "+";
      first = false;
      bool wrap = cs.find('+') != std::string::npos ||
                  cs.find('-', 1) != std::string::npos;
      if (k == 0) {
        os << (wrap ? "(" + cs + ")" : cs);
        continue;
      }
      if (cs == "1") {
      } else if (cs == "-1") {
        os << "-";
      } else {
        os << (wrap ? "(" + cs + ")" : cs) << "*";
      }
      os << "t";
      if (k != 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  std::map<long, Cyc> terms_;

  void set(long k, const Cyc& c) {
    if (!c.is_zero()) terms_[k] = c;
  }
  void add(long k, const Cyc& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
};

/// Finite valuation of a nonzero element.
inline long val_of(const Val& v) {
  auto x = v.valuation();
  if (!x) throw Error("valuation of zero is +infinity");
  return *x;
}

}  // namespace tropmoduli
