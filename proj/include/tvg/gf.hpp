#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tvg/errors.hpp"

namespace tvg {

class Fq;

/// GF(p^k) in polynomial basis, p an odd prime.  The modulus is a monic
/// irreducible of degree k over GF(p), stored low-to-high (length k+1).
/// q0 is q for the linear/symplectic role and p^(k/2) for the unitary role.
///
/// Fields are interned: field() returns a reference that stays valid for the
/// lifetime of the process, so elements may hold plain pointers.
class Field {
 public:
  static constexpr int kMaxDeg = 8;

  uint32_t p;
  int k;
  std::vector<uint32_t> modulus;  // low-to-high, modulus[k] == 1
  uint64_t q;
  uint64_t q0;

  bool unitary_role() const { return q0 != q; }

  Fq zero() const;
  Fq one() const;
  Fq from_int(int64_t n) const;
  Fq from_coeffs(const std::vector<uint32_t>& c) const;
  /// Element with base-p digit expansion of idx (idx < q).
  Fq element(uint64_t idx) const;

  Fq add(const Fq& a, const Fq& b) const;
  Fq sub(const Fq& a, const Fq& b) const;
  Fq neg(const Fq& a) const;
  Fq mul(const Fq& a, const Fq& b) const;
  Fq inv(const Fq& a) const;
  Fq div(const Fq& a, const Fq& b) const;
  Fq pow(const Fq& a, uint64_t e) const;

  /// a^(q0) -- identity when q0 == q.
  Fq frobenius_q0(const Fq& a) const;
  /// a + a^(q0); lands in GF(q0) when q0^2 == q.
  Fq trace_q0(const Fq& a) const;
  /// a^(p^(k/2)); requires k even, independent of the q0 role.
  Fq frobenius_sqrtq(const Fq& a) const;
  uint64_t sqrtq() const;
  bool q_is_square() const { return k % 2 == 0; }

  /// Smallest d | k with a^(p^d) == a.
  int element_degree(const Fq& a) const;
  bool is_generator(const Fq& a) const;
  /// Least multiplicative generator in coefficient-lexicographic order.
  Fq least_generator() const;
  /// Least nonzero element with trace_q0 == 0 (requires q0^2 == q).
  Fq least_trace_zero() const;

  uint64_t mult_order(const Fq& a) const;

  bool same(const Field& o) const {
    return p == o.p && k == o.k && modulus == o.modulus && q0 == o.q0;
  }

  /// Interned field with the canonical modulus for (p, k): the
  /// coefficient-lexicographically least monic irreducible.
  static const Field& get(uint32_t p, int k, uint64_t q0 = 0);
  /// Interned field with an explicit modulus (validated).
  static const Field& get_with_modulus(uint32_t p, int k, const std::vector<uint32_t>& modulus,
                                       uint64_t q0 = 0);

  static bool is_prime(uint64_t n);
  static bool poly_irreducible(uint32_t p, const std::vector<uint32_t>& f);
  static std::vector<uint32_t> canonical_modulus(uint32_t p, int k);

 private:
  Field() = default;
  friend class FieldRegistry;
};

/// An element of a Field.  Default-constructed values (and values built from
/// a bare integer) carry no field and act as integer constants: they combine
/// with any field element by reduction mod p.  Eigen needs this for Scalar(0)
/// and Scalar(1) literals.
class Fq {
 public:
  Fq() = default;
  Fq(long n) : ic_(n) {}
  Fq(int n) : ic_(n) {}

  const Field* field() const { return f_; }
  bool has_field() const { return f_ != nullptr; }
  bool is_zero() const;
  bool is_int_const() const { return f_ == nullptr; }
  int64_t int_const() const { return ic_; }

  uint32_t coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  std::vector<uint32_t> coeffs() const;
  /// Sum c_i p^i -- canonical integer encoding, used for hashing and files.
  uint64_t value() const;

  friend Fq operator+(const Fq& a, const Fq& b);
  friend Fq operator-(const Fq& a, const Fq& b);
  friend Fq operator*(const Fq& a, const Fq& b);
  friend Fq operator/(const Fq& a, const Fq& b);
  Fq operator-() const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq& operator/=(const Fq& o) { return *this = *this / o; }
  friend bool operator==(const Fq& a, const Fq& b);
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

  Fq inv() const;
  Fq pow(uint64_t e) const;

  /// Lexicographic comparison on (c_0, ..., c_{k-1}); integer constants are
  /// lifted first.  Total order within one field, used for tie-breaking.
  static int cmp(const Fq& a, const Fq& b);

  std::string str() const;

 private:
  friend class Field;
  const Field* f_ = nullptr;
  std::array<uint16_t, Field::kMaxDeg> c_{};
  int64_t ic_ = 0;

  static const Field* join(const Fq& a, const Fq& b);
  Fq lifted(const Field* f) const;
};

struct Subfield {
  int divisor = 1;  // GF(p^divisor) inside GF(p^k), divisor | k
  friend bool operator==(const Subfield& a, const Subfield& b) { return a.divisor == b.divisor; }
  friend bool operator!=(const Subfield& a, const Subfield& b) { return !(a == b); }
};

uint64_t subfield_order(const Field& F, Subfield s);
bool in_subfield(const Fq& a, Subfield s);
Subfield subfield_generated(const Field& F, const std::vector<Fq>& elems);
Subfield prime_subfield();
Subfield full_subfield(const Field& F);
/// Union of two subfields inside GF(p^k): GF(p^lcm).
Subfield subfield_join(const Field& F, Subfield a, Subfield b);
/// All elements of GF(p^divisor) inside F, in value() order.  Guarded to
/// fields small enough to enumerate.
std::vector<Fq> subfield_elements(const Field& F, Subfield s);

std::vector<int> sorted_divisors(int k);

}  // namespace tvg
