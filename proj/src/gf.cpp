#include "tvg/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tvg {

namespace {

using Poly = std::vector<uint32_t>;  // low-to-high, over GF(p)

uint32_t mod_inv_prime(uint32_t a, uint32_t p) {
  // Fermat; p is prime and a != 0 mod p.
  uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  poly_trim(r);
  return r;
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  // m monic
  poly_trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead) {
      for (size_t i = 0; i <= dm; ++i) {
        uint64_t sub = static_cast<uint64_t>(lead) * m[i] % p;
        uint32_t& c = a[shift + i];
        c = static_cast<uint32_t>((c + p - sub) % p);
      }
    }
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b with b not necessarily monic
    uint32_t lead_inv = mod_inv_prime(b.back(), p);
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(r.back()) * lead_inv % p);
      size_t shift = r.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
        r[shift + i] = static_cast<uint32_t>((r[shift + i] + p - sub) % p);
      }
      poly_trim(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool Field::is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool Field::poly_irreducible(uint32_t p, const Poly& f) {
  // f monic of degree k <= kMaxDeg.  Rabin test: x^(p^k) == x mod f and
  // gcd(x^(p^(k/d)) - x, f) == 1 for every prime divisor d of k.
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  Poly x{0, 1};
  Poly xq = poly_powmod(x, ipow(p, k), f, p);
  Poly diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  poly_trim(diff);
  if (!diff.empty()) return false;
  for (int d = 2; d <= k; ++d) {
    if (k % d != 0 || !is_prime(static_cast<uint64_t>(d))) continue;
    Poly xe = poly_powmod(x, ipow(p, k / d), f, p);
    Poly g = xe;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    poly_trim(g);
    Poly gc = poly_gcd(f, g, p);
    if (!(gc.size() == 1)) return false;
  }
  return true;
}

Poly Field::canonical_modulus(uint32_t p, int k) {
  if (k == 1) return {0, 1};
  // coefficient-lexicographically least monic irreducible: scan (c0, c1, ...)
  // ascending with c0 varying slowest.
  Poly f(static_cast<size_t>(k) + 1, 0);
  f[static_cast<size_t>(k)] = 1;
  std::vector<uint32_t> c(static_cast<size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i) f[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
    if (poly_irreducible(p, f)) return f;
    // increment (c0,...,c_{k-1}) in lex order: last coordinate fastest
    int i = k - 1;
    while (i >= 0) {
      if (++c[static_cast<size_t>(i)] < p) break;
      c[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) fail(Err::InvalidArgument, "no irreducible polynomial found");
  }
}

class FieldRegistry {
 public:
  static const Field& get(uint32_t p, int k, const Poly& modulus, uint64_t q0) {
    static FieldRegistry reg;
    std::scoped_lock lock(reg.mu_);
    Key key{p, k, modulus, q0};
    auto it = reg.fields_.find(key);
    if (it != reg.fields_.end()) return *it->second;
    auto f = std::unique_ptr<Field>(new Field());
    f->p = p;
    f->k = k;
    f->modulus = modulus;
    f->q = ipow(p, k);
    f->q0 = q0;
    const Field& ref = *f;
    reg.fields_.emplace(std::move(key), std::move(f));
    return ref;
  }

 private:
  using Key = std::tuple<uint32_t, int, Poly, uint64_t>;
  std::mutex mu_;
  std::map<Key, std::unique_ptr<Field>> fields_;
};

const Field& Field::get(uint32_t p, int k, uint64_t q0) {
  return get_with_modulus(p, k, canonical_modulus(p, k), q0);
}

const Field& Field::get_with_modulus(uint32_t p, int k, const Poly& modulus, uint64_t q0) {
  if (!is_prime(p) || p == 2) fail(Err::InvalidArgument, "p must be an odd prime");
  if (k < 1 || k > kMaxDeg) fail(Err::InvalidArgument, "k out of range");
  if (p > 65521) fail(Err::InvalidArgument, "p too large");
  if (modulus.size() != static_cast<size_t>(k) + 1 || modulus[static_cast<size_t>(k)] != 1)
    fail(Err::InvalidArgument, "modulus must be monic of degree k");
  for (uint32_t c : modulus)
    if (c >= p) fail(Err::InvalidArgument, "modulus coefficient out of range");
  if (!poly_irreducible(p, modulus)) fail(Err::InvalidArgument, "modulus is reducible");
  uint64_t q = ipow(p, k);
  if (q > (1ull << 21)) fail(Err::InvalidArgument, "field too large");
  if (q0 == 0) q0 = q;
  if (q0 != q) {
    if (k % 2 != 0 || q0 * q0 != q)
      fail(Err::InvalidArgument, "q0 must be q or its square root (k even)");
  }
  return FieldRegistry::get(p, k, modulus, q0);
}

Fq Field::zero() const {
  Fq r;
  r.f_ = this;
  return r;
}

Fq Field::one() const { return from_int(1); }

Fq Field::from_int(int64_t n) const {
  Fq r;
  r.f_ = this;
  int64_t m = n % static_cast<int64_t>(p);
  if (m < 0) m += p;
  r.c_[0] = static_cast<uint16_t>(m);
  return r;
}

Fq Field::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() > static_cast<size_t>(k)) fail(Err::InvalidArgument, "too many coefficients");
  Fq r;
  r.f_ = this;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p) fail(Err::InvalidArgument, "coefficient out of range");
    r.c_[i] = static_cast<uint16_t>(c[i]);
  }
  return r;
}

Fq Field::element(uint64_t idx) const {
  Fq r;
  r.f_ = this;
  for (int i = 0; i < k; ++i) {
    r.c_[static_cast<size_t>(i)] = static_cast<uint16_t>(idx % p);
    idx /= p;
  }
  return r;
}

Fq Field::add(const Fq& a, const Fq& b) const {
  Fq x = a.lifted(this), y = b.lifted(this), r = zero();
  for (int i = 0; i < k; ++i)
    r.c_[static_cast<size_t>(i)] =
        static_cast<uint16_t>((x.c_[static_cast<size_t>(i)] + y.c_[static_cast<size_t>(i)]) % p);
  return r;
}

Fq Field::sub(const Fq& a, const Fq& b) const { return add(a, neg(b)); }

Fq Field::neg(const Fq& a) const {
  Fq x = a.lifted(this), r = zero();
  for (int i = 0; i < k; ++i)
    r.c_[static_cast<size_t>(i)] =
        static_cast<uint16_t>((p - x.c_[static_cast<size_t>(i)]) % p);
  return r;
}

Fq Field::mul(const Fq& a, const Fq& b) const {
  Fq x = a.lifted(this), y = b.lifted(this);
  std::array<uint64_t, 2 * kMaxDeg> prod{};
  for (int i = 0; i < k; ++i) {
    if (!x.c_[static_cast<size_t>(i)]) continue;
    for (int j = 0; j < k; ++j)
      prod[static_cast<size_t>(i + j)] +=
          static_cast<uint64_t>(x.c_[static_cast<size_t>(i)]) * y.c_[static_cast<size_t>(j)];
  }
  // reduce degree 2k-2 .. k by the monic modulus
  for (int d = 2 * k - 2; d >= k; --d) {
    uint64_t c = prod[static_cast<size_t>(d)] % p;
    prod[static_cast<size_t>(d)] = 0;
    if (!c) continue;
    for (int i = 0; i < k; ++i) {
      uint64_t sub = c * modulus[static_cast<size_t>(i)] % p;
      size_t pos = static_cast<size_t>(d - k + i);
      prod[pos] = (prod[pos] + p - sub) % p;
    }
  }
  Fq r = zero();
  for (int i = 0; i < k; ++i)
    r.c_[static_cast<size_t>(i)] = static_cast<uint16_t>(prod[static_cast<size_t>(i)] % p);
  return r;
}

Fq Field::inv(const Fq& a) const {
  Fq x = a.lifted(this);
  if (x.is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  // extended Euclid in GF(p)[x]
  Poly r0 = modulus, r1(x.c_.begin(), x.c_.begin() + k);
  poly_trim(r1);
  Poly s0{}, s1{1};
  while (true) {
    poly_trim(r1);
    if (r1.size() == 1) break;  // unit remainder
    uint32_t lead_inv = mod_inv_prime(r1.back(), p);
    Poly quot(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    Poly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(rem.back()) * lead_inv % p);
      size_t shift = rem.size() - r1.size();
      quot[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) {
        uint64_t sub = static_cast<uint64_t>(c) * r1[i] % p;
        rem[shift + i] = static_cast<uint32_t>((rem[shift + i] + p - sub) % p);
      }
      poly_trim(rem);
    }
    Poly qs1 = poly_mul(quot, s1, p);
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs1.size()), 0);
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] = (s2[i] + p - qs1[i] % p) % p;
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  uint32_t c_inv = mod_inv_prime(r1[0], p);
  Poly res = poly_mod(poly_mul(s1, Poly{c_inv}, p), modulus, p);
  Fq out = zero();
  for (size_t i = 0; i < res.size(); ++i) out.c_[i] = static_cast<uint16_t>(res[i]);
  return out;
}

Fq Field::div(const Fq& a, const Fq& b) const { return mul(a, inv(b)); }

Fq Field::pow(const Fq& a, uint64_t e) const {
  Fq base = a.lifted(this), r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq Field::frobenius_q0(const Fq& a) const {
  if (q0 == q) return a.lifted(this);
  return pow(a, q0);
}

Fq Field::trace_q0(const Fq& a) const { return add(a, frobenius_q0(a)); }

Fq Field::frobenius_sqrtq(const Fq& a) const {
  if (k % 2 != 0) fail(Err::QNotSquare, "q is not a perfect square");
  return pow(a, sqrtq());
}

uint64_t Field::sqrtq() const {
  if (k % 2 != 0) fail(Err::QNotSquare, "q is not a perfect square");
  return ipow(p, k / 2);
}

int Field::element_degree(const Fq& a) const {
  Fq x = a.lifted(this);
  for (int d : sorted_divisors(k)) {
    if (pow(x, ipow(p, d)) == x) return d;
  }
  return k;
}

uint64_t Field::mult_order(const Fq& a) const {
  Fq x = a.lifted(this);
  if (x.is_zero()) fail(Err::InvalidArgument, "order of zero");
  // order divides q-1; strip prime factors
  uint64_t ord = q - 1, m = ord;
  for (uint64_t d = 2; d * d <= m; ++d) {
    while (m % d == 0) m /= d;
    if ((q - 1) % d == 0)
      while (ord % d == 0 && pow(x, ord / d) == one()) ord /= d;
  }
  if (m > 1)
    while (ord % m == 0 && pow(x, ord / m) == one()) ord /= m;
  return ord;
}

bool Field::is_generator(const Fq& a) const {
  Fq x = a.lifted(this);
  if (x.is_zero()) return false;
  return mult_order(x) == q - 1;
}

Fq Field::least_generator() const {
  // lexicographic scan over coefficient tuples
  std::vector<uint64_t> idx(q);
  for (uint64_t i = 0; i < q; ++i) idx[i] = i;
  std::vector<Fq> elems;
  elems.reserve(q);
  for (uint64_t i = 0; i < q; ++i) elems.push_back(element(i));
  std::sort(elems.begin(), elems.end(), [](const Fq& a, const Fq& b) { return Fq::cmp(a, b) < 0; });
  for (const Fq& e : elems)
    if (!e.is_zero() && is_generator(e)) return e;
  fail(Err::InvalidArgument, "no generator found");
}

Fq Field::least_trace_zero() const {
  if (q0 == q || q0 * q0 != q) fail(Err::QNotSquare, "needs q0^2 == q");
  std::vector<Fq> elems;
  elems.reserve(q);
  for (uint64_t i = 0; i < q; ++i) elems.push_back(element(i));
  std::sort(elems.begin(), elems.end(), [](const Fq& a, const Fq& b) { return Fq::cmp(a, b) < 0; });
  for (const Fq& e : elems)
    if (!e.is_zero() && trace_q0(e).is_zero()) return e;
  fail(Err::InvalidArgument, "no trace-zero element");
}

// ---- Fq ----

bool Fq::is_zero() const {
  if (!f_) return ic_ == 0;
  for (int i = 0; i < f_->k; ++i)
    if (c_[static_cast<size_t>(i)]) return false;
  return true;
}

std::vector<uint32_t> Fq::coeffs() const {
  if (!f_) fail(Err::InvalidArgument, "integer constant has no coefficients");
  return std::vector<uint32_t>(c_.begin(), c_.begin() + f_->k);
}

uint64_t Fq::value() const {
  if (!f_) fail(Err::InvalidArgument, "integer constant has no value encoding");
  uint64_t v = 0;
  for (int i = f_->k - 1; i >= 0; --i) v = v * f_->p + c_[static_cast<size_t>(i)];
  return v;
}

const Field* Fq::join(const Fq& a, const Fq& b) {
  if (a.f_ && b.f_) {
    if (a.f_ != b.f_ && !a.f_->same(*b.f_)) fail(Err::FieldMismatch, "elements of different fields");
    return a.f_;
  }
  return a.f_ ? a.f_ : b.f_;
}

Fq Fq::lifted(const Field* f) const {
  if (f_) {
    if (f_ != f && !f_->same(*f)) fail(Err::FieldMismatch, "elements of different fields");
    return *this;
  }
  return f->from_int(ic_);
}

Fq operator+(const Fq& a, const Fq& b) {
  const Field* f = Fq::join(a, b);
  if (!f) return Fq(static_cast<long>(a.ic_ + b.ic_));
  return f->add(a, b);
}

Fq operator-(const Fq& a, const Fq& b) {
  const Field* f = Fq::join(a, b);
  if (!f) return Fq(static_cast<long>(a.ic_ - b.ic_));
  return f->sub(a, b);
}

Fq operator*(const Fq& a, const Fq& b) {
  const Field* f = Fq::join(a, b);
  if (!f) return Fq(static_cast<long>(a.ic_ * b.ic_));
  return f->mul(a, b);
}

Fq operator/(const Fq& a, const Fq& b) {
  const Field* f = Fq::join(a, b);
  if (!f) fail(Err::InvalidArgument, "division of integer constants");
  return f->div(a, b);
}

Fq Fq::operator-() const {
  if (!f_) return Fq(static_cast<long>(-ic_));
  return f_->neg(*this);
}

bool operator==(const Fq& a, const Fq& b) {
  const Field* f = Fq::join(a, b);
  if (!f) return a.ic_ == b.ic_;
  Fq x = a.lifted(f), y = b.lifted(f);
  for (int i = 0; i < f->k; ++i)
    if (x.c_[static_cast<size_t>(i)] != y.c_[static_cast<size_t>(i)]) return false;
  return true;
}

Fq Fq::inv() const {
  if (!f_) fail(Err::InvalidArgument, "inverse of integer constant");
  return f_->inv(*this);
}

Fq Fq::pow(uint64_t e) const {
  if (!f_) fail(Err::InvalidArgument, "pow of integer constant");
  return f_->pow(*this, e);
}

int Fq::cmp(const Fq& a, const Fq& b) {
  const Field* f = join(a, b);
  if (!f) return a.ic_ < b.ic_ ? -1 : a.ic_ > b.ic_ ? 1 : 0;
  Fq x = a.lifted(f), y = b.lifted(f);
  for (int i = 0; i < f->k; ++i) {
    if (x.c_[static_cast<size_t>(i)] != y.c_[static_cast<size_t>(i)])
      return x.c_[static_cast<size_t>(i)] < y.c_[static_cast<size_t>(i)] ? -1 : 1;
  }
  return 0;
}

std::string Fq::str() const {
  std::ostringstream os;
  if (!f_) {
    os << "#" << ic_;
    return os.str();
  }
  os << "[";
  for (int i = 0; i < f_->k; ++i) {
    if (i) os << ",";
    os << c_[static_cast<size_t>(i)];
  }
  os << "]";
  return os.str();
}

// ---- subfields ----

std::vector<int> sorted_divisors(int k) {
  std::vector<int> ds;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) ds.push_back(d);
  return ds;
}

uint64_t subfield_order(const Field& F, Subfield s) {
  uint64_t r = 1;
  for (int i = 0; i < s.divisor; ++i) r *= F.p;
  return r;
}

bool in_subfield(const Fq& a, Subfield s) {
  const Field* f = a.field();
  if (!f) return true;  // integer constants lie in the prime field
  if (f->k % s.divisor != 0) fail(Err::InvalidArgument, "divisor does not divide k");
  return f->pow(a, subfield_order(*f, s)) == a;
}

Subfield subfield_generated(const Field& F, const std::vector<Fq>& elems) {
  int d = 1;
  for (const Fq& e : elems) {
    d = std::lcm(d, F.element_degree(e));
    if (d == F.k) break;
  }
  return Subfield{d};
}

Subfield prime_subfield() { return Subfield{1}; }
Subfield full_subfield(const Field& F) { return Subfield{F.k}; }

Subfield subfield_join(const Field& F, Subfield a, Subfield b) {
  int d = std::lcm(a.divisor, b.divisor);
  if (F.k % d != 0) fail(Err::InvalidArgument, "join does not divide k");
  return Subfield{d};
}

std::vector<Fq> subfield_elements(const Field& F, Subfield s) {
  if (F.k % s.divisor != 0) fail(Err::InvalidArgument, "divisor does not divide k");
  if (F.q > (1ull << 21)) fail(Err::TooLarge, "field too large to enumerate");
  std::vector<Fq> out;
  uint64_t target = subfield_order(F, s);
  out.reserve(target);
  for (uint64_t i = 0; i < F.q; ++i) {
    Fq e = F.element(i);
    if (in_subfield(e, s)) out.push_back(e);
  }
  return out;
}

}  // namespace tvg
