#include "wnc/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wnc {

namespace {

constexpr uint64_t kOrderCeiling = 1u << 20;

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first,
// trailing zeros trimmed.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    }
  }
  trim(out);
  return out;
}

uint32_t mod_inv_prime(uint32_t a, uint32_t p) {
  // Fermat: a^(p-2) mod p.
  uint64_t r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

// Remainder of a modulo b (b nonzero).
Poly poly_rem(Poly a, const Poly& b, uint32_t p) {
  trim(a);
  const uint32_t lead_inv = mod_inv_prime(b.back(), p);
  while (a.size() >= b.size()) {
    uint32_t factor = static_cast<uint32_t>(
        static_cast<uint64_t>(a.back()) * lead_inv % p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t sub = static_cast<uint64_t>(factor) * b[i] % p;
      a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Trial division against every monic polynomial of degree 1..m/2.
bool poly_irreducible(const Poly& f, uint32_t p) {
  const size_t m = f.size() - 1;
  for (size_t d = 1; 2 * d <= m; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      uint64_t v = idx;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(uint32_t p, uint32_t m) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < m; ++i) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    Poly f(m + 1, 0);
    uint64_t v = idx;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible modulus found");
}

}  // namespace

struct Field::Rep {
  uint32_t p = 0;
  uint32_t m = 1;
  uint32_t q = 0;
  std::vector<uint32_t> modulus;  // empty for m == 1
  uint32_t alpha = 0;
  std::vector<uint32_t> exp;  // size q-1, exp[i] = alpha^i
  std::vector<uint32_t> log;  // size q, log[exp[i]] = i

  std::vector<uint32_t> unpack(uint32_t v) const {
    std::vector<uint32_t> c(m, 0);
    for (uint32_t i = 0; i < m; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  }

  uint32_t pack(const std::vector<uint32_t>& c) const {
    uint32_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * p + (c[i] % p);
    return v;
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (m == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    uint32_t out = 0, mul = 1;
    for (uint32_t i = 0; i < m; ++i) {
      out += (a % p + b % p) % p * mul;
      a /= p;
      b /= p;
      mul *= p;
    }
    return out;
  }

  uint32_t neg(uint32_t a) const {
    if (m == 1) return (p - a) % p;
    if (p == 2) return a;
    uint32_t out = 0, mul = 1;
    for (uint32_t i = 0; i < m; ++i) {
      out += (p - a % p) % p * mul;
      a /= p;
      mul *= p;
    }
    return out;
  }

  // Direct product, used before the tables exist.
  uint32_t mul_direct(uint32_t a, uint32_t b) const {
    if (m == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    Poly pa = unpack(a), pb = unpack(b);
    trim(pa);
    trim(pb);
    Poly prod = poly_mul(pa, pb, p);
    if (prod.size() >= modulus.size()) prod = poly_rem(prod, modulus, p);
    prod.resize(m, 0);
    return pack(prod);
  }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    return exp[(static_cast<uint64_t>(log[a]) + log[b]) % (q - 1)];
  }

  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp[(q - 1 - log[a]) % (q - 1)];
  }

  uint32_t pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    return exp[static_cast<uint64_t>(log[a]) % (q - 1) * (e % (q - 1)) %
               (q - 1)];
  }
};

Field::Field(uint32_t p, uint32_t m) : Field(p, m, std::vector<uint32_t>{}) {}

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kOrderCeiling)
      throw std::invalid_argument("field order exceeds 2^20 ceiling");
  }

  auto rep = std::make_shared<Rep>();
  rep->p = p;
  rep->m = m;
  rep->q = static_cast<uint32_t>(q);
  if (m > 1) {
    if (modulus.empty()) {
      rep->modulus = smallest_irreducible(p, m);
    } else {
      if (modulus.size() != m + 1 || modulus.back() % p != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
      for (auto& c : modulus) c %= p;
      if (!poly_irreducible(modulus, p))
        throw std::invalid_argument("modulus is reducible");
      rep->modulus = std::move(modulus);
    }
  } else if (!modulus.empty()) {
    throw std::invalid_argument("prime fields take no modulus");
  }

  // Smallest element of full multiplicative order, by exhaustive order check.
  rep->alpha = 0;
  for (uint32_t cand = 1; cand < rep->q; ++cand) {
    uint32_t w = cand;
    uint32_t ord = 1;
    while (w != 1) {
      w = rep->mul_direct(w, cand);
      ++ord;
    }
    if (ord == rep->q - 1) {
      rep->alpha = cand;
      break;
    }
  }
  if (rep->alpha == 0) throw std::logic_error("no primitive element found");

  rep->exp.resize(rep->q - 1);
  rep->log.assign(rep->q, rep->q);  // log[0] stays out of range
  uint32_t w = 1;
  for (uint32_t i = 0; i + 1 < rep->q; ++i) {
    rep->exp[i] = w;
    rep->log[w] = i;
    w = rep->mul_direct(w, rep->alpha);
  }
  rep_ = std::move(rep);
}

uint32_t Field::characteristic() const { return rep_->p; }
uint32_t Field::degree() const { return rep_->m; }
uint32_t Field::order() const { return rep_->q; }
const std::vector<uint32_t>& Field::modulus() const { return rep_->modulus; }
Fe Field::primitive() const { return Fe(*this, rep_->alpha); }

Fe Field::element(uint32_t canonical) const {
  if (canonical >= rep_->q)
    throw std::invalid_argument("element value outside field");
  return Fe(*this, canonical);
}

Fe Field::zero() const { return Fe(*this, 0); }
Fe Field::one() const { return Fe(*this, 1); }

Fe Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() != rep_->m)
    throw std::invalid_argument("coefficient count must equal the degree");
  for (uint32_t c : coeffs) {
    if (c >= rep_->p)
      throw std::invalid_argument("coefficient outside [0, p)");
  }
  return Fe(*this, rep_->pack(coeffs));
}

std::vector<Fe> Field::primitive_powers() const {
  std::vector<Fe> out;
  out.reserve(rep_->q - 1);
  for (uint32_t i = 0; i + 1 < rep_->q; ++i) out.emplace_back(*this, rep_->exp[i]);
  return out;
}

bool Field::same_as(const Field& other) const {
  if (rep_ == other.rep_) return true;
  return rep_->p == other.rep_->p && rep_->m == other.rep_->m &&
         rep_->modulus == other.rep_->modulus;
}

std::string Field::token() const {
  std::ostringstream os;
  if (rep_->m == 1) {
    os << "GF(" << rep_->p << ")";
  } else {
    os << "GF(" << rep_->p << "^" << rep_->m << ";modulus=";
    for (size_t i = 0; i < rep_->modulus.size(); ++i) {
      if (i) os << ",";
      os << rep_->modulus[i];
    }
    os << ")";
  }
  return os.str();
}

Field Field::from_token(std::string_view token) {
  std::string s(token);
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')')
    throw std::invalid_argument("bad field token: " + s);
  s = s.substr(3, s.size() - 4);
  std::string head = s;
  std::vector<uint32_t> modulus;
  auto semi = s.find(';');
  if (semi != std::string::npos) {
    head = s.substr(0, semi);
    std::string tail = s.substr(semi + 1);
    if (tail.rfind("modulus=", 0) != 0)
      throw std::invalid_argument("bad field token: expected modulus=");
    std::istringstream is(tail.substr(8));
    std::string part;
    while (std::getline(is, part, ','))
      modulus.push_back(static_cast<uint32_t>(std::stoul(part)));
  }
  uint32_t p = 0, m = 1;
  auto caret = head.find('^');
  if (caret != std::string::npos) {
    p = static_cast<uint32_t>(std::stoul(head.substr(0, caret)));
    m = static_cast<uint32_t>(std::stoul(head.substr(caret + 1)));
  } else {
    p = static_cast<uint32_t>(std::stoul(head));
  }
  if (m == 1 && modulus.empty()) return Field(p, 1);
  return modulus.empty() ? Field(p, m) : Field(p, m, std::move(modulus));
}

uint32_t Field::add_v(uint32_t a, uint32_t b) const { return rep_->add(a, b); }
uint32_t Field::sub_v(uint32_t a, uint32_t b) const {
  return rep_->add(a, rep_->neg(b));
}
uint32_t Field::neg_v(uint32_t a) const { return rep_->neg(a); }
uint32_t Field::mul_v(uint32_t a, uint32_t b) const { return rep_->mul(a, b); }
uint32_t Field::inv_v(uint32_t a) const { return rep_->inv(a); }
uint32_t Field::div_v(uint32_t a, uint32_t b) const {
  return rep_->mul(a, rep_->inv(b));
}
uint32_t Field::pow_v(uint32_t a, uint64_t e) const { return rep_->pow(a, e); }

std::string Field::value_token(uint32_t v) const {
  if (rep_->m == 1) return std::to_string(v);
  std::ostringstream os;
  os << "(";
  auto c = rep_->unpack(v);
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

uint32_t Field::value_from_token(std::string_view t) const {
  std::string s(t);
  if (rep_->m == 1) {
    unsigned long v = std::stoul(s);
    if (v >= rep_->q) throw std::invalid_argument("element token out of range");
    return static_cast<uint32_t>(v);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("extension element token must be a tuple");
  std::istringstream is(s.substr(1, s.size() - 2));
  std::vector<uint32_t> c;
  std::string part;
  while (std::getline(is, part, ','))
    c.push_back(static_cast<uint32_t>(std::stoul(part)));
  if (c.size() != rep_->m)
    throw std::invalid_argument("element tuple has wrong length");
  for (uint32_t x : c)
    if (x >= rep_->p) throw std::invalid_argument("coefficient outside [0, p)");
  return rep_->pack(c);
}

Fe::Fe(Field field, uint32_t canonical) : field_(std::move(field)), v_(canonical) {
  if (v_ >= field_.order())
    throw std::invalid_argument("element value outside field");
}

std::vector<uint32_t> Fe::coeffs() const {
  std::vector<uint32_t> c(field_.degree(), 0);
  uint32_t v = v_;
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = v % field_.characteristic();
    v /= field_.characteristic();
  }
  return c;
}

namespace {
void require_same(const Field& a, const Field& b) {
  if (!a.same_as(b))
    throw std::invalid_argument("arithmetic between elements of distinct fields");
}
}  // namespace

Fe Fe::operator+(const Fe& o) const {
  require_same(field_, o.field_);
  return Fe(field_, field_.add_v(v_, o.v_));
}
Fe Fe::operator-(const Fe& o) const {
  require_same(field_, o.field_);
  return Fe(field_, field_.sub_v(v_, o.v_));
}
Fe Fe::operator*(const Fe& o) const {
  require_same(field_, o.field_);
  return Fe(field_, field_.mul_v(v_, o.v_));
}
Fe Fe::operator/(const Fe& o) const {
  require_same(field_, o.field_);
  return Fe(field_, field_.div_v(v_, o.v_));
}
Fe Fe::operator-() const { return Fe(field_, field_.neg_v(v_)); }
Fe Fe::inverse() const { return Fe(field_, field_.inv_v(v_)); }
Fe Fe::pow(uint64_t e) const { return Fe(field_, field_.pow_v(v_, e)); }

bool Fe::operator==(const Fe& o) const {
  return field_.same_as(o.field_) && v_ == o.v_;
}

std::string Fe::token() const { return field_.value_token(v_); }

}  // namespace wnc
