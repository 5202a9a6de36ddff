#include "lpa/field.hpp"

#include <cctype>
#include <regex>
#include <vector>

namespace lpa {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) + b) % p); }
u64 submod(u64 a, u64 b, u64 p) { return addmod(a, p - b % p, p); }
u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 base, u64 e, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw DivisionByZero();
  return powmod(a, p - 2, p);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_parens(std::string_view text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(std::string_view(s).substr(1, s.size() - 2));
  return s;
}

const std::regex& rational_re() {
  static const std::regex re(R"([+-]?[0-9]+(/[0-9]+)?)");
  return re;
}

mpq_class parse_rational(const std::string& s) {
  if (!std::regex_match(s, rational_re())) throw FieldError("malformed coefficient '" + s + "'");
  std::string body = s[0] == '+' ? s.substr(1) : s;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    mpz_class den(body.substr(slash + 1));
    if (den == 0) throw FieldError("malformed coefficient '" + s + "': zero denominator");
  }
  mpq_class q(body);
  q.canonicalize();
  return q;
}

// Splits "a+bU" style literals into a real part and a coefficient of `unit`.
std::pair<mpq_class, mpq_class> parse_two_part(const std::string& s, char unit) {
  if (s.empty()) throw FieldError("malformed coefficient ''");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  terms.push_back(s.substr(start));
  if (terms.size() > 2) throw FieldError("malformed coefficient '" + s + "'");

  mpq_class re = 0, im = 0;
  bool have_re = false, have_im = false;
  for (auto t : terms) {
    t = trim(t);
    if (!t.empty() && t.back() == unit) {
      if (have_im) throw FieldError("malformed coefficient '" + s + "'");
      have_im = true;
      std::string c = trim(std::string_view(t).substr(0, t.size() - 1));
      if (c.empty() || c == "+") im = 1;
      else if (c == "-") im = -1;
      else im = parse_rational(c);
    } else {
      if (have_re) throw FieldError("malformed coefficient '" + s + "'");
      have_re = true;
      re = parse_rational(t);
    }
  }
  return {re, im};
}

std::string format_two_part(const mpq_class& re, const mpq_class& im, const std::string& unit) {
  auto unit_term = [&](const mpq_class& c) -> std::string {
    if (c == 1) return unit;
    if (c == -1) return "-" + unit;
    return c.get_str() + unit;
  };
  if (im == 0) return re.get_str();
  if (re == 0) return unit_term(im);
  std::string s = re.get_str();
  if (im > 0) s += "+";
  return s + unit_term(im);
}

u64 reduce_integer(const std::string& s, u64 p) {
  static const std::regex int_re(R"([+-]?[0-9]+)");
  if (!std::regex_match(s, int_re)) throw FieldError("malformed coefficient '" + s + "'");
  mpz_class z(s[0] == '+' ? s.substr(1) : s);
  mpz_class r;
  mpz_class mod(std::to_string(p));
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
  return std::stoull(r.get_str());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::gaussian(Involution involution) {
  if (involution == Involution::frobenius)
    throw FieldError("Q[i] supports identity or conjugation involutions");
  FieldSpec f;
  f.kind_ = FieldKind::gaussian;
  f.involution_ = involution;
  return f;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("GF(" + std::to_string(p) + "): modulus is not prime");
  if (p > (u64{1} << 32)) throw FieldError("GF(p): modulus too large");
  FieldSpec f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::quadratic(std::uint64_t p) {
  FieldSpec f = prime(p);
  if (p >= (u64{1} << 31)) throw FieldError("GF(p,2): modulus too large");
  f.kind_ = FieldKind::quadratic;
  f.involution_ = Involution::frobenius;
  if (p == 2) {
    f.alpha_ = 1;
    f.beta_ = 1;
  } else {
    u64 n = 2;
    while (powmod(n, (p - 1) / 2, p) != p - 1) ++n;
    f.alpha_ = 0;
    f.beta_ = n;
  }
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s = trim(text);
  if (s == "Q") return rationals();
  if (s == "Q[i]/id") return gaussian(Involution::identity);
  if (s == "Q[i]/conj") return gaussian(Involution::conjugation);
  static const std::regex gf(R"(GF\(\s*([0-9]+)\s*(,\s*2\s*)?\))");
  std::smatch m;
  if (std::regex_match(s, m, gf)) {
    u64 p = std::stoull(m[1].str());
    return m[2].matched ? quadratic(p) : prime(p);
  }
  throw FieldError("unknown field spec '" + s + "'");
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::gaussian: return involution_ == Involution::identity ? "Q[i]/id" : "Q[i]/conj";
    case FieldKind::prime: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::quadratic: return "GF(" + std::to_string(p_) + ",2)";
  }
  return "?";
}

std::uint64_t FieldSpec::order() const {
  if (kind_ == FieldKind::prime) return p_;
  if (kind_ == FieldKind::quadratic) return p_ * p_;
  throw FieldError(name() + " is infinite");
}

FieldValue FieldSpec::zero() const { return from_int(0); }
FieldValue FieldSpec::one() const { return from_int(1); }

FieldValue FieldSpec::from_int(long long n) const {
  switch (kind_) {
    case FieldKind::rationals: return mpq_class(static_cast<long>(n));
    case FieldKind::gaussian: return GaussianValue{mpq_class(static_cast<long>(n)), mpq_class(0)};
    case FieldKind::prime:
    case FieldKind::quadratic: {
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += static_cast<long long>(p_);
      if (kind_ == FieldKind::prime) return Residue{static_cast<u64>(r), p_};
      return QuadResidue{static_cast<u64>(r), 0, p_};
    }
  }
  return mpq_class(0);
}

FieldValue FieldSpec::generator() const {
  if (kind_ == FieldKind::gaussian) return GaussianValue{mpq_class(0), mpq_class(1)};
  if (kind_ == FieldKind::quadratic) return QuadResidue{0, 1 % p_, p_};
  throw FieldError(name() + " has no distinguished generator");
}

bool FieldSpec::contains(const FieldValue& v) const {
  switch (kind_) {
    case FieldKind::rationals: return std::holds_alternative<mpq_class>(v);
    case FieldKind::gaussian: return std::holds_alternative<GaussianValue>(v);
    case FieldKind::prime: {
      auto* r = std::get_if<Residue>(&v);
      return r && r->modulus == p_ && r->value < p_;
    }
    case FieldKind::quadratic: {
      auto* r = std::get_if<QuadResidue>(&v);
      return r && r->modulus == p_ && r->a < p_ && r->b < p_;
    }
  }
  return false;
}

void FieldSpec::check(const FieldValue& v) const {
  if (!contains(v)) throw FieldMismatch("value does not belong to " + name());
}

FieldValue FieldSpec::add(const FieldValue& x, const FieldValue& y) const {
  check(x);
  check(y);
  switch (kind_) {
    case FieldKind::rationals: return mpq_class(std::get<mpq_class>(x) + std::get<mpq_class>(y));
    case FieldKind::gaussian: {
      const auto& a = std::get<GaussianValue>(x);
      const auto& b = std::get<GaussianValue>(y);
      return GaussianValue{a.re + b.re, a.im + b.im};
    }
    case FieldKind::prime:
      return Residue{addmod(std::get<Residue>(x).value, std::get<Residue>(y).value, p_), p_};
    case FieldKind::quadratic: {
      const auto& a = std::get<QuadResidue>(x);
      const auto& b = std::get<QuadResidue>(y);
      return QuadResidue{addmod(a.a, b.a, p_), addmod(a.b, b.b, p_), p_};
    }
  }
  return x;
}

FieldValue FieldSpec::neg(const FieldValue& x) const {
  check(x);
  switch (kind_) {
    case FieldKind::rationals: return mpq_class(-std::get<mpq_class>(x));
    case FieldKind::gaussian: {
      const auto& a = std::get<GaussianValue>(x);
      return GaussianValue{-a.re, -a.im};
    }
    case FieldKind::prime: return Residue{submod(0, std::get<Residue>(x).value, p_), p_};
    case FieldKind::quadratic: {
      const auto& a = std::get<QuadResidue>(x);
      return QuadResidue{submod(0, a.a, p_), submod(0, a.b, p_), p_};
    }
  }
  return x;
}

FieldValue FieldSpec::sub(const FieldValue& x, const FieldValue& y) const { return add(x, neg(y)); }

FieldValue FieldSpec::mul(const FieldValue& x, const FieldValue& y) const {
  check(x);
  check(y);
  switch (kind_) {
    case FieldKind::rationals: return mpq_class(std::get<mpq_class>(x) * std::get<mpq_class>(y));
    case FieldKind::gaussian: {
      const auto& a = std::get<GaussianValue>(x);
      const auto& b = std::get<GaussianValue>(y);
      return GaussianValue{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    case FieldKind::prime:
      return Residue{mulmod(std::get<Residue>(x).value, std::get<Residue>(y).value, p_), p_};
    case FieldKind::quadratic: {
      // (a + b t)(c + d t) = ac + bd beta + (ad + bc + bd alpha) t
      const auto& u = std::get<QuadResidue>(x);
      const auto& v = std::get<QuadResidue>(y);
      u64 bd = mulmod(u.b, v.b, p_);
      u64 c0 = addmod(mulmod(u.a, v.a, p_), mulmod(bd, beta_, p_), p_);
      u64 c1 = addmod(addmod(mulmod(u.a, v.b, p_), mulmod(u.b, v.a, p_), p_), mulmod(bd, alpha_, p_), p_);
      return QuadResidue{c0, c1, p_};
    }
  }
  return x;
}

FieldValue FieldSpec::inv(const FieldValue& x) const {
  check(x);
  if (is_zero(x)) throw DivisionByZero();
  switch (kind_) {
    case FieldKind::rationals: return mpq_class(1 / std::get<mpq_class>(x));
    case FieldKind::gaussian: {
      const auto& a = std::get<GaussianValue>(x);
      mpq_class norm = a.re * a.re + a.im * a.im;
      return GaussianValue{a.re / norm, -a.im / norm};
    }
    case FieldKind::prime: return Residue{invmod(std::get<Residue>(x).value, p_), p_};
    case FieldKind::quadratic: {
      // x^{-1} = x^p / N(x) with N(x) = x^{p+1} in GF(p)
      FieldValue frob = conj(x);
      const auto& n = std::get<QuadResidue>(mul(frob, x));
      u64 ninv = invmod(n.a, p_);
      const auto& f = std::get<QuadResidue>(frob);
      return QuadResidue{mulmod(f.a, ninv, p_), mulmod(f.b, ninv, p_), p_};
    }
  }
  return x;
}

bool FieldSpec::eq(const FieldValue& x, const FieldValue& y) const {
  check(x);
  check(y);
  return x == y;
}

bool FieldSpec::is_zero(const FieldValue& x) const {
  switch (kind_) {
    case FieldKind::rationals: return std::get<mpq_class>(x) == 0;
    case FieldKind::gaussian: {
      const auto& a = std::get<GaussianValue>(x);
      return a.re == 0 && a.im == 0;
    }
    case FieldKind::prime: return std::get<Residue>(x).value == 0;
    case FieldKind::quadratic: {
      const auto& a = std::get<QuadResidue>(x);
      return a.a == 0 && a.b == 0;
    }
  }
  return false;
}

bool FieldSpec::is_one(const FieldValue& x) const { return eq(x, one()); }

FieldValue FieldSpec::pow(const FieldValue& x, std::uint64_t e) const {
  FieldValue result = one();
  FieldValue base = x;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldValue FieldSpec::conj(const FieldValue& x) const {
  check(x);
  switch (involution_) {
    case Involution::identity: return x;
    case Involution::conjugation: {
      const auto& a = std::get<GaussianValue>(x);
      return GaussianValue{a.re, -a.im};
    }
    case Involution::frobenius: {
      // t^p is the other root of t^2 - alpha t - beta, namely alpha - t
      const auto& a = std::get<QuadResidue>(x);
      return QuadResidue{addmod(a.a, mulmod(a.b, alpha_, p_), p_), submod(0, a.b, p_), p_};
    }
  }
  return x;
}

FieldValue FieldSpec::parse_value(std::string_view text) const {
  std::string s = strip_parens(text);
  switch (kind_) {
    case FieldKind::rationals: return parse_rational(s);
    case FieldKind::gaussian: {
      auto [re, im] = parse_two_part(s, 'i');
      return GaussianValue{re, im};
    }
    case FieldKind::prime: return Residue{reduce_integer(s, p_), p_};
    case FieldKind::quadratic: {
      auto [re, im] = parse_two_part(s, 't');
      if (re.get_den() != 1 || im.get_den() != 1)
        throw FieldError("malformed coefficient '" + s + "': GF literals are integers");
      return QuadResidue{reduce_integer(re.get_num().get_str(), p_),
                         reduce_integer(im.get_num().get_str(), p_), p_};
    }
  }
  throw FieldError("unreachable");
}

std::string FieldSpec::format(const FieldValue& x) const {
  check(x);
  switch (kind_) {
    case FieldKind::rationals: return std::get<mpq_class>(x).get_str();
    case FieldKind::gaussian: {
      const auto& a = std::get<GaussianValue>(x);
      return format_two_part(a.re, a.im, "i");
    }
    case FieldKind::prime: return std::to_string(std::get<Residue>(x).value);
    case FieldKind::quadratic: {
      const auto& a = std::get<QuadResidue>(x);
      return format_two_part(mpq_class(std::to_string(a.a)), mpq_class(std::to_string(a.b)), "t");
    }
  }
  return "?";
}

bool FieldSpec::prints_negative(const FieldValue& x) const {
  check(x);
  if (kind_ == FieldKind::rationals) return std::get<mpq_class>(x) < 0;
  if (kind_ == FieldKind::gaussian) {
    const auto& a = std::get<GaussianValue>(x);
    return (a.im == 0 && a.re < 0) || (a.re == 0 && a.im < 0);
  }
  return false;
}

FieldValue FieldSpec::element_at(std::uint64_t index) const {
  if (index >= order()) throw std::out_of_range("field element index out of range");
  if (kind_ == FieldKind::prime) return Residue{index, p_};
  return QuadResidue{index % p_, index / p_, p_};
}

std::uint64_t FieldSpec::index_of(const FieldValue& x) const {
  check(x);
  if (kind_ == FieldKind::prime) return std::get<Residue>(x).value;
  if (kind_ == FieldKind::quadratic) {
    const auto& a = std::get<QuadResidue>(x);
    return a.a + a.b * p_;
  }
  throw FieldError(name() + " is infinite");
}

}  // namespace lpa
