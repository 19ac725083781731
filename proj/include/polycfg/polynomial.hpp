#pragma once
// Exact polynomials in Z[x] and Z[x][z] with primitive-remainder-sequence gcds.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dual.hpp"
#include "real.hpp"

namespace polycfg {

using Int = boost::multiprecision::cpp_int;

// Univariate polynomial in x; c[i] is the coefficient of x^i, no trailing zeros.
struct UPoly {
  std::vector<Int> c;

  UPoly() = default;
  UPoly(Int k) {
    if (k != 0) c.push_back(std::move(k));
  }
  static UPoly x() {
    UPoly p;
    p.c = {0, 1};
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Int& lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r(a);
    for (auto& k : r.c) k = -k;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
};

inline Int content(const UPoly& p) {
  Int g = 0;
  for (const auto& k : p.c) g = gcd(g, k);
  return g;
}

inline UPoly divide_scalar(const UPoly& p, const Int& k) {
  UPoly r(p);
  for (auto& v : r.c) {
    if (v % k != 0) throw std::logic_error("inexact scalar division");
    v /= k;
  }
  return r;
}

inline UPoly primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (p.lead() < 0) g = -g;
  return divide_scalar(p, g);
}

// a / b, which must divide exactly over Z.
inline UPoly divexact(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  UPoly q;
  if (a.degree() < b.degree()) {
    if (!a.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
  }
  q.c.assign(a.degree() - b.degree() + 1, 0);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    if (a.lead() % b.lead() != 0) throw std::logic_error("inexact polynomial division");
    Int k = a.lead() / b.lead();
    q.c[shift] = k;
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= k * b.c[i];
    a.trim();
  }
  if (!a.is_zero()) throw std::logic_error("inexact polynomial division");
  q.trim();
  return q;
}

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) a mod b.
inline UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    Int la = a.lead();
    for (auto& k : a.c) k *= b.lead();
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= la * b.c[i];
    a.trim();
  }
  return a;
}

inline UPoly gcd(UPoly a, UPoly b) {
  if (a.is_zero()) return primitive(b) * UPoly(content(b));
  if (b.is_zero()) return primitive(a) * UPoly(content(a));
  Int g = gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a) * UPoly(g);
}

// Polynomial in z with coefficients in Z[x]; c[j] multiplies z^j.
struct BPoly {
  std::vector<UPoly> c;

  BPoly() = default;
  BPoly(Int k) {
    if (k != 0) c.push_back(UPoly(std::move(k)));
  }
  BPoly(UPoly u) {
    if (!u.is_zero()) c.push_back(std::move(u));
  }
  static BPoly x() { return BPoly(UPoly::x()); }
  static BPoly z() {
    BPoly p;
    p.c = {UPoly(), UPoly(1)};
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree_z() const { return static_cast<int>(c.size()) - 1; }
  int degree_x() const {
    int d = -1;
    for (const auto& u : c) d = std::max(d, u.degree());
    return d;
  }
  const UPoly& lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  std::size_t terms() const {
    std::size_t n = 0;
    for (const auto& u : c)
      for (const auto& k : u.c) n += k != 0;
    return n;
  }

  friend bool operator==(const BPoly&, const BPoly&) = default;
  friend BPoly operator+(const BPoly& a, const BPoly& b) {
    BPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend BPoly operator-(const BPoly& a) {
    BPoly r(a);
    for (auto& u : r.c) u = -u;
    return r;
  }
  friend BPoly operator-(const BPoly& a, const BPoly& b) { return a + (-b); }
  friend BPoly operator*(const BPoly& a, const BPoly& b) {
    BPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, UPoly());
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend BPoly operator*(const UPoly& k, const BPoly& b) { return BPoly(k) * b; }

  // Human-readable form, highest powers first.
  std::string str() const {
    std::string s;
    for (int j = degree_z(); j >= 0; --j)
      for (int i = c[j].degree(); i >= 0; --i) {
        const Int& k = c[j].c[i];
        if (k == 0) continue;
        std::string mono;
        if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
        if (j > 0) mono += std::string(mono.empty() ? "" : "*") + (j == 1 ? "z" : "z^" + std::to_string(j));
        Int a = k < 0 ? Int(-k) : k;
        std::string coef = (a == 1 && !mono.empty()) ? "" : a.str() + (mono.empty() ? "" : "*");
        s += (s.empty() ? (k < 0 ? "-" : "") : (k < 0 ? " - " : " + ")) + coef + mono;
      }
    return s.empty() ? "0" : s;
  }
};

inline UPoly content_z(const BPoly& p) {
  UPoly g;
  for (const auto& u : p.c) g = gcd(g, u);
  return g;
}

inline BPoly divexact(const BPoly& a, const UPoly& k) {
  BPoly r(a);
  for (auto& u : r.c) u = divexact(u, k);
  r.trim();
  return r;
}

inline BPoly divexact(BPoly a, const BPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  BPoly q;
  if (a.degree_z() < b.degree_z()) {
    if (!a.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
  }
  q.c.assign(a.degree_z() - b.degree_z() + 1, UPoly());
  while (!a.is_zero() && a.degree_z() >= b.degree_z()) {
    int shift = a.degree_z() - b.degree_z();
    UPoly k = divexact(a.lead(), b.lead());
    q.c[shift] = k;
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] = a.c[i + shift] - k * b.c[i];
    a.trim();
  }
  if (!a.is_zero()) throw std::logic_error("inexact polynomial division");
  q.trim();
  return q;
}

inline BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  while (!a.is_zero() && a.degree_z() >= b.degree_z()) {
    int shift = a.degree_z() - b.degree_z();
    UPoly la = a.lead();
    for (auto& u : a.c) u = u * b.lead();
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] = a.c[i + shift] - la * b.c[i];
    a.trim();
  }
  return a;
}

// Primitive part with respect to z, leading coefficient made positive.
inline BPoly primitive(const BPoly& p) {
  if (p.is_zero()) return p;
  UPoly g = content_z(p);
  if (p.lead().lead() < 0) g = -g;
  return divexact(p, g);
}

inline BPoly gcd(BPoly a, BPoly b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) return BPoly(content_z(a)) * primitive(a);
  UPoly g = gcd(content_z(a), content_z(b));
  a = primitive(a);
  b = primitive(b);
  if (a.degree_z() < b.degree_z()) std::swap(a, b);
  while (!b.is_zero()) {
    BPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  BPoly out = BPoly(g) * primitive(a);
  if (!out.is_zero() && out.lead().lead() < 0) out = -out;
  return out;
}

// Exact test p(xn/xd, zn/zd) == 0.
inline bool vanishes_at(const BPoly& p, const Int& xn, const Int& xd, const Int& zn, const Int& zd) {
  int dx = std::max(p.degree_x(), 0), dz = std::max(p.degree_z(), 0);
  Int sum = 0;
  for (int j = 0; j <= p.degree_z(); ++j)
    for (int i = 0; i <= p.c[j].degree(); ++i) {
      const Int& k = p.c[j].c[i];
      if (k == 0) continue;
      sum += k * pow(xn, i) * pow(xd, dx - i) * pow(zn, j) * pow(zd, dz - j);
    }
  return sum == 0;
}

// Numeric evaluation in double, Real or their dual numbers.
class PolyEval {
 public:
  PolyEval() = default;
  explicit PolyEval(const BPoly& p) {
    for (int j = 0; j <= p.degree_z(); ++j)
      for (int i = 0; i <= p.c[j].degree(); ++i)
        if (p.c[j].c[i] != 0) terms_.push_back({i, j, p.c[j].c[i].str(), static_cast<double>(p.c[j].c[i])});
    dx_ = std::max(p.degree_x(), 0);
    dz_ = std::max(p.degree_z(), 0);
  }
  PolyEval(const PolyEval& o) : terms_(o.terms_), dx_(o.dx_), dz_(o.dz_) {}
  PolyEval& operator=(const PolyEval& o) {
    terms_ = o.terms_;
    dx_ = o.dx_;
    dz_ = o.dz_;
    std::lock_guard<std::mutex> lock(mu_);
    cache_.clear();
    return *this;
  }

  template <class T>
  T operator()(const T& x, const T& z) const {
    using B = base_scalar_t<T>;
    std::vector<T> xp(dx_ + 1), zp(dz_ + 1);
    xp[0] = T(1);
    zp[0] = T(1);
    for (int i = 1; i <= dx_; ++i) xp[i] = xp[i - 1] * x;
    for (int j = 1; j <= dz_; ++j) zp[j] = zp[j - 1] * z;
    T sum(0);
    if constexpr (std::is_same_v<B, double>) {
      for (const auto& t : terms_) sum += T(t.d) * xp[t.i] * zp[t.j];
    } else {
      const std::vector<Real>& k = coefficients();
      for (std::size_t n = 0; n < terms_.size(); ++n) sum += T(k[n]) * xp[terms_[n].i] * zp[terms_[n].j];
    }
    return sum;
  }

  // Sum of |coefficient| max(1,|x|)^i max(1,|z|)^j, the scale of a value near (x, z).
  template <class T>
  T magnitude(const T& x, const T& z) const {
    using std::abs;
    T ax = abs(x), az = abs(z);
    if (ax < T(1)) ax = T(1);
    if (az < T(1)) az = T(1);
    T sum(0);
    if constexpr (std::is_same_v<T, double>) {
      for (const auto& t : terms_) sum += std::abs(t.d) * std::pow(ax, t.i) * std::pow(az, t.j);
    } else {
      const std::vector<Real>& k = coefficients();
      for (std::size_t n = 0; n < terms_.size(); ++n) {
        T m = abs(k[n]);
        for (int i = 0; i < terms_[n].i; ++i) m *= ax;
        for (int j = 0; j < terms_[n].j; ++j) m *= az;
        sum += m;
      }
    }
    return sum;
  }

  bool empty() const { return terms_.empty(); }

 private:
  struct Term {
    int i, j;
    std::string text;
    double d;
  };

  const std::vector<Real>& coefficients() const {
    int bits = working_precision().bits;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(bits);
    if (it == cache_.end()) {
      std::vector<Real> k;
      for (const auto& t : terms_) k.emplace_back(t.text);
      it = cache_.emplace(bits, std::move(k)).first;
    }
    return it->second;
  }

  std::vector<Term> terms_;
  int dx_ = 0, dz_ = 0;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Real>> cache_;
};

}  // namespace polycfg
