#include <cctype>
#include <limits>
#include <numeric>

#include "cotorkit/linalg.hpp"

namespace cotorkit {

namespace {

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min() + 1;

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v <= kMax64 && v >= kMin64; }

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::BadIdempotents: return "BadIdempotents";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorCode::NotNilpotentByBound: return "NotNilpotentByBound";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::HomothetyNotIso: return "HomothetyNotIso";
    case ErrorCode::ExtNotVanishing: return "ExtNotVanishing";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Internal: return "InternalError";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Error";
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorCode::Parse, "zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) : big_(std::make_unique<mpq_class>(q)) {
  big_->canonicalize();
  normalize_big();
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::normalize_big() {
  if (!big_) return;
  const mpz_class& n = big_->get_num();
  const mpz_class& d = big_->get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  }
}

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational(0);
  if (d != 1) {
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
  r.big_->canonicalize();
  r.normalize_big();
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i128(num_), mpz_from_i128(den_));
  return q;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      __int128 s = static_cast<__int128>(a.num_) + b.num_;
      if (fits(s)) return Rational(static_cast<std::int64_t>(s));
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      __int128 p = static_cast<__int128>(a.num_) * b.num_;
      if (fits(p)) return Rational(static_cast<std::int64_t>(p));
    }
    // Cross-cancel first so products stay within 128 bits.
    __int128 g1 = gcd128(a.num_, b.den_);
    __int128 g2 = gcd128(b.num_, a.den_);
    __int128 n = (static_cast<__int128>(a.num_) / g1) * (b.num_ / g2);
    __int128 d = (static_cast<__int128>(a.den_) / g2) * (b.den_ / g1);
    Rational r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      if (r.den_ < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
      }
      return r;
    }
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::Internal, "division by zero");
  if (!b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-*big_));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    fail(ErrorCode::Parse, "malformed scalar \"" + raw + "\"");
  }
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in scalar \"" + raw + "\"");
  return Rational(mpq_class(n, d));
}

// ---------------------------------------------------------------------------

FieldDesc FieldDesc::prime(std::int64_t p) {
  require(p >= 2 && p < (std::int64_t{1} << 31), ErrorCode::Validation,
          "prime field characteristic out of range: " + std::to_string(p));
  for (std::int64_t q = 2; q * q <= p; ++q) {
    require(p % q != 0, ErrorCode::Validation, std::to_string(p) + " is not prime");
  }
  FieldDesc f;
  f.kind = Kind::PrimeField;
  f.p = p;
  return f;
}

namespace {
std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}
std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  __int128 r = 1, x = mod_p(b, p);
  while (e > 0) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}
}  // namespace

Rational FieldDesc::add(const Rational& a, const Rational& b) const {
  if (is_rationals()) return a + b;
  return Rational(mod_p(a.small_num() + b.small_num(), p));
}
Rational FieldDesc::sub(const Rational& a, const Rational& b) const {
  if (is_rationals()) return a - b;
  return Rational(mod_p(a.small_num() - b.small_num(), p));
}
Rational FieldDesc::mul(const Rational& a, const Rational& b) const {
  if (is_rationals()) return a * b;
  return Rational(static_cast<std::int64_t>(static_cast<__int128>(a.small_num()) * b.small_num() % p));
}
Rational FieldDesc::neg(const Rational& a) const {
  if (is_rationals()) return -a;
  return Rational(mod_p(-a.small_num(), p));
}
Rational FieldDesc::inv(const Rational& a) const {
  if (a.is_zero()) fail(ErrorCode::Internal, "inverse of zero");
  if (is_rationals()) return Rational(1) / a;
  return Rational(pow_mod(a.small_num(), p - 2, p));
}
Rational FieldDesc::embed(const Rational& a) const {
  if (is_rationals()) return a;
  mpq_class q = a.to_mpq();
  mpz_class pm(static_cast<long>(p));
  mpz_class n = q.get_num() % pm;
  mpz_class d = q.get_den() % pm;
  if (d == 0) fail(ErrorCode::Parse, "denominator divisible by p in " + a.str());
  std::int64_t ni = mod_p(n.get_si(), p);
  std::int64_t di = mod_p(d.get_si(), p);
  return Rational(static_cast<std::int64_t>(static_cast<__int128>(ni) * pow_mod(di, p - 2, p) % p));
}
std::string FieldDesc::name() const {
  return is_rationals() ? std::string("Q") : "F" + std::to_string(p);
}

}  // namespace cotorkit
