#pragma once
// Multiprecision real on top of MPFR. Every value owns its precision;
// binary operations round to the larger operand precision.

#include <mpfr.h>

#include <algorithm>
#include <cstring>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polycfg {

struct Precision {
  int bits = 256;
  friend bool operator==(Precision, Precision) = default;
};

namespace detail {
inline thread_local mpfr_prec_t working_bits = 256;
}

inline Precision working_precision() { return {static_cast<int>(detail::working_bits)}; }

// Sets the precision of freshly constructed values on this thread.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision p) : saved_(detail::working_bits) {
    if (p.bits < 53) throw std::invalid_argument("precision below 53 bits");
    detail::working_bits = p.bits;
  }
  ~PrecisionScope() { detail::working_bits = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real() { init(detail::working_bits); mpfr_set_zero(v_, 1); }
  Real(double d) { init(detail::working_bits); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(int i) { init(detail::working_bits); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(long i) { init(detail::working_bits); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(long long i) { init(detail::working_bits); mpfr_set_si(v_, static_cast<long>(i), MPFR_RNDN); }
  explicit Real(const std::string& s) {
    init(detail::working_bits);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("bad real literal: " + s);
  }
  Real(const Real& o) { init(mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    std::memcpy(v_, o.v_, sizeof(mpfr_t));
    o.v_->_mpfr_d = nullptr;
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (!v_->_mpfr_d) init(mpfr_get_prec(o.v_));
      else mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) {
      if (v_->_mpfr_d) mpfr_clear(v_);
      std::memcpy(v_, o.v_, sizeof(mpfr_t));
      o.v_->_mpfr_d = nullptr;
    }
    return *this;
  }
  ~Real() {
    if (v_->_mpfr_d) mpfr_clear(v_);
  }

  static Real with_bits(int bits) {
    Real r(Tag{}, bits);
    mpfr_set_zero(r.v_, 1);
    return r;
  }
  // Copy rounded to the given precision.
  Real at_bits(int bits) const {
    Real r(Tag{}, bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }
  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  int bits() const { return static_cast<int>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  explicit operator double() const { return to_double(); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Scientific notation with the given number of significant digits.
  std::string str(int digits = 0) const {
    if (digits <= 0) digits = static_cast<int>(bits() * 0.30103) + 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator-(const Real& a) {
    Real r(Tag{}, a.bits());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

  friend Real sqrt(const Real& a) { return un(a, mpfr_sqrt); }
  friend Real abs(const Real& a) { return un(a, mpfr_abs); }
  friend Real fabs(const Real& a) { return un(a, mpfr_abs); }
  friend Real sin(const Real& a) { return un(a, mpfr_sin); }
  friend Real cos(const Real& a) { return un(a, mpfr_cos); }
  friend Real tan(const Real& a) { return un(a, mpfr_tan); }
  friend Real acos(const Real& a) { return un(a, mpfr_acos); }
  friend Real asin(const Real& a) { return un(a, mpfr_asin); }
  friend Real exp(const Real& a) { return un(a, mpfr_exp); }
  friend Real log(const Real& a) { return un(a, mpfr_log); }
  friend Real atan2(const Real& y, const Real& x) { return bin(y, x, mpfr_atan2); }
  friend Real floor(const Real& a) {
    Real r(Tag{}, a.bits());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend Real ldexp(const Real& a, int e) {
    Real r(a);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }
  friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(20); }

 private:
  struct Tag {};
  Real(Tag, mpfr_prec_t bits) { init(bits); }
  void init(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  void widen(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }
  template <class F>
  static Real bin(const Real& a, const Real& b, F f) {
    Real r(Tag{}, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <class F>
  static Real un(const Real& a, F f) {
    Real r(Tag{}, mpfr_get_prec(a.v_));
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// Scalar helpers usable for both double and Real.
template <class T>
inline T pi_value() {
  if constexpr (std::is_same_v<T, Real>) return Real::pi();
  else return T(3.14159265358979323846264338327950288);
}

inline double to_double(double d) { return d; }
inline double to_double(const Real& r) { return r.to_double(); }

// 2^-e at the precision in effect.
template <class T>
inline T pow2(int e) {
  if constexpr (std::is_same_v<T, Real>) return ldexp(Real(1), e);
  else return std::ldexp(1.0, e);
}

}  // namespace polycfg
