#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvg/geom.hpp"

namespace tvg {

/// The transvection 1 + u (x) phi with phi(u) = 0, kept in canonical form:
/// u is scaled so its first nonzero coordinate is 1 and phi absorbs the
/// inverse factor, which resolves the (lu, l^-1 phi) ambiguity.
struct Transvection {
  Vec u;
  Covec phi;

  const Field* field() const { return u(0).field(); }
  Eigen::Index dim() const { return u.size(); }
  std::string key() const;
  friend bool operator==(const Transvection& a, const Transvection& b) {
    return a.key() == b.key();
  }
  friend bool operator!=(const Transvection& a, const Transvection& b) { return !(a == b); }
};

int tv_cmp(const Transvection& a, const Transvection& b);

Transvection tv_make(const Vec& u, const Covec& phi);
Vec tv_apply(const Transvection& t, const Vec& x);
Mat tv_matrix(const Transvection& t);
Transvection tv_inverse(const Transvection& t);

/// t2 t1 t2^-1 per the closed conjugation formula.
Transvection tv_conjugate(const Transvection& t1, const Transvection& t2);
/// t1^(t2^lambda) = t2^-lambda t1 t2^lambda.
Transvection tv_conj_pow(const Transvection& t1, const Transvection& t2, const Fq& lambda);
/// g t g^-1 for an arbitrary invertible g (pass g_inv when you have it).
Transvection tv_conjugate_by(const Transvection& t, const Mat& g);
Transvection tv_conjugate_by(const Transvection& t, const Mat& g, const Mat& g_inv);

/// t^lambda = 1 + lambda u (x) phi (lambda nonzero).
Transvection tv_power(const Transvection& t, const Fq& lambda);

/// Recover (u, phi) from a matrix when it is a transvection.
std::optional<Transvection> tv_from_matrix(const Mat& g);

enum class Family { SL, Sp, SU };
const char* family_name(Family f);

struct GroupSpec {
  Family family = Family::SL;
  VectorSpace space;
  Form form;

  const Field& field() const { return *space.field; }
  int n() const { return space.n; }
  uint64_t q() const { return space.field->q; }
  /// q for SL/Sp, sqrt(q) for SU.
  uint64_t q0() const { return family == Family::SU ? space.field->q0 : space.field->q; }
  /// The Thm on excluded fields: Sp q=9, SU q=81, SL q in {9,81}.
  bool unsupported_by_pipeline() const;
};

GroupSpec make_sl(const Field& F, int n);
GroupSpec make_sp(const Field& F, int n);
GroupSpec make_sp(const Field& F, int n, Form form);
GroupSpec make_su(const Field& F, int n);
GroupSpec make_su(const Field& F, int n, Form form);

/// Membership of a transvection in T(G): SL always; Sp needs phi = l phi_u
/// with f(u,u)=0; SU additionally Tr(l) = 0.
bool tv_in_group(const Transvection& t, const GroupSpec& spec);

/// For Sp/SU transvections, the scalar l with phi = l phi_u (canonical reps).
std::optional<Fq> tv_lambda_of(const Transvection& t, const GroupSpec& spec);

/// Whether g preserves the spec's form and has determinant 1.
bool in_group(const Mat& g, const GroupSpec& spec);

/// Scalar set F of a full transvection subgroup: all of F_q (symplectic) or
/// the trace-zero line F_q0 * lambda0 (unitary).
struct TransvectionSubgroup {
  Vec direction;      // canonical projective representative
  Transvection base;  // 1 + direction (x) phi_direction
  std::vector<Fq> scalars;  // the nonzero lambda with base^lambda in T(G)
};

TransvectionSubgroup tv_subgroup(const Vec& v, const GroupSpec& spec);
std::vector<Transvection> tv_subgroup_elements(const TransvectionSubgroup& T);

/// Y^K = {t^lambda : t in Y, lambda in K^x}, canonicalized and deduplicated.
std::vector<Transvection> tv_K_closure(const std::vector<Transvection>& Y, Subfield K,
                                       const GroupSpec& spec);

/// Canonical projective representative: v scaled so its first nonzero
/// coordinate is 1.
Vec direction_rep(const Vec& v);
std::string direction_key(const Vec& v);

/// All transvections in T(G), canonical, in deterministic order.
std::vector<Transvection> enumerate_transvections(const GroupSpec& spec, uint64_t cap = 1u << 20);

/// All canonical directions of transvections in T(G) (singular directions
/// for SU; every direction for SL/Sp).
std::vector<Vec> enumerate_directions(const GroupSpec& spec, uint64_t cap = 1u << 20);

}  // namespace tvg
