#include "qha/scalar.hpp"

#include <numeric>

namespace qha {

namespace {

using i128 = __int128;

constexpr long long kSmallLimit = (1LL << 62);

long long llgcd(long long a, long long b) {
  unsigned long long x = a < 0 ? -(unsigned long long)a : a;
  unsigned long long y = b < 0 ? -(unsigned long long)b : b;
  while (y) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  return (long long)x;
}

i128 iabs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = iabs128(a);
  b = iabs128(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(i128 v) { return iabs128(v) < (i128)kSmallLimit; }

mpz_class mpz_of_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  mpz_class hi((unsigned long)(u >> 64));
  mpz_class lo((unsigned long)(u & ~0ULL));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

long long mod_reduce(i128 v, std::uint32_t p) {
  i128 r = v % (i128)p;
  if (r < 0) r += p;
  return (long long)r;
}

long long inv_mod(long long a, std::uint32_t p) {
  long long t = 0, nt = 1, r = p, nr = a % (long long)p;
  if (nr < 0) nr += p;
  if (nr == 0) throw Error("division by zero in F_" + std::to_string(p));
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1)
    throw Error("not invertible mod " + std::to_string(p) + " (modulus not prime?)");
  return t < 0 ? t + p : t;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar::Scalar(long long n, long long d) {
  if (d == 0) throw Error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = llgcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  Scalar s;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long long n = q.get_num().get_si();
    long long d = q.get_den().get_si();
    if (std::llabs(n) < kSmallLimit && d < kSmallLimit) {
      s.num_ = n;
      s.den_ = d;
      return s;
    }
  }
  s.big_ = std::make_unique<mpq_class>(q);
  s.big_->canonicalize();
  return s;
}

Scalar Scalar::mod_p(long long v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.num_ = mod_reduce(v, p);
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
  auto slash = text.find('/');
  std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
  mpz_class n, d;
  try {
    n = mpz_class(ns);
    d = mpz_class(ds);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar literal '" + text + "'");
  }
  if (d == mpz_class(0)) throw ParseError("zero denominator in '" + text + "'");
  Scalar q = from_mpq(mpq_class(n, d));
  return field.is_rational() ? q : q.to_field(field.p);
}

Scalar::Scalar(const Scalar& o)
    : num_(o.num_), den_(o.den_), p_(o.p_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  p_ = o.p_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

bool Scalar::is_zero() const {
  if (big_) return *big_ == 0;
  return num_ == 0;
}

bool Scalar::is_one() const {
  if (big_) return *big_ == 1;
  return num_ == 1 && den_ == 1;
}

Scalar Scalar::to_field(std::uint32_t p) const {
  if (p_ == p) return *this;
  if (p_ != 0)
    throw InternalError("mixing elements of different prime fields");
  if (p == 0) throw InternalError("cannot lift F_p element to Q");
  if (big_) {
    mpz_class pm(p);
    mpz_class n = big_->get_num() % pm;
    mpz_class d = big_->get_den() % pm;
    long long nn = n.get_si(), dd = d.get_si();
    if (nn < 0) nn += p;
    if (dd < 0) dd += p;
    return mod_p(mod_reduce((i128)nn * inv_mod(dd, p), p), p);
  }
  long long n = mod_reduce(num_, p);
  long long d = mod_reduce(den_, p);
  return mod_p(mod_reduce((i128)n * inv_mod(d, p), p), p);
}

mpq_class Scalar::to_mpq() const {
  if (p_ != 0) throw InternalError("to_mpq on prime-field element");
  if (big_) return *big_;
  mpq_class q(mpz_of_i128(num_), mpz_of_i128(den_));
  q.canonicalize();
  return q;
}

Scalar add_like(const Scalar& a, const Scalar& b, bool subtract) {
  std::uint32_t p = a.p_ ? a.p_ : b.p_;
  if (p) {
    Scalar x = a.to_field(p), y = b.to_field(p);
    long long v = subtract ? x.num_ - y.num_ : x.num_ + y.num_;
    return Scalar::mod_p(v, p);
  }
  if (!a.big_ && !b.big_) {
    i128 n = (i128)a.num_ * b.den_;
    i128 m = (i128)b.num_ * a.den_;
    n = subtract ? n - m : n + m;
    i128 d = (i128)a.den_ * b.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits_small(n) && fits_small(d)) {
      Scalar s;
      s.num_ = (long long)n;
      s.den_ = (long long)d;
      return s;
    }
    return Scalar::from_mpq(mpq_class(mpz_of_i128(n), mpz_of_i128(d)));
  }
  mpq_class r;
  if (subtract)
    r = a.to_mpq() - b.to_mpq();
  else
    r = a.to_mpq() + b.to_mpq();
  return Scalar::from_mpq(r);
}

Scalar Scalar::operator+(const Scalar& o) const { return add_like(*this, o, false); }
Scalar Scalar::operator-(const Scalar& o) const { return add_like(*this, o, true); }

Scalar Scalar::operator*(const Scalar& o) const {
  std::uint32_t p = p_ ? p_ : o.p_;
  if (p) {
    Scalar x = to_field(p), y = o.to_field(p);
    return mod_p(mod_reduce((i128)x.num_ * y.num_, p), p);
  }
  if (!big_ && !o.big_) {
    i128 n = (i128)num_ * o.num_;
    i128 d = (i128)den_ * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits_small(n) && fits_small(d)) {
      Scalar s;
      s.num_ = (long long)n;
      s.den_ = (long long)d;
      return s;
    }
    return from_mpq(mpq_class(mpz_of_i128(n), mpz_of_i128(d)));
  }
  return from_mpq(mpq_class(to_mpq() * o.to_mpq()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_) return mod_p(-num_, p_);
  if (big_) return from_mpq(mpq_class(-*big_));
  Scalar s;
  s.num_ = -num_;
  s.den_ = den_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (p_) return mod_p(inv_mod(num_, p_), p_);
  if (big_) return from_mpq(mpq_class(1) / *big_);
  Scalar s;
  if (num_ < 0) {
    s.num_ = -den_;
    s.den_ = -num_;
  } else {
    s.num_ = den_;
    s.den_ = num_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ || o.p_) {
    std::uint32_t p = p_ ? p_ : o.p_;
    return to_field(p).num_ == o.to_field(p).num_;
  }
  if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
  return to_mpq() == o.to_mpq();
}

std::string Scalar::str() const {
  if (p_) return std::to_string(num_);
  if (big_) {
    std::string s = big_->get_num().get_str();
    if (big_->get_den() != 1) s += "/" + big_->get_den().get_str();
    return s;
  }
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

}  // namespace qha
