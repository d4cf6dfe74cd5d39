#include "tvg/trans.hpp"

#include <algorithm>

namespace tvg {

std::string Transvection::key() const {
  std::string s = vec_key(u);
  s += vec_key(phi.transpose());
  return s;
}

int tv_cmp(const Transvection& a, const Transvection& b) {
  std::string x = a.key(), y = b.key();
  return x < y ? -1 : x > y ? 1 : 0;
}

Transvection tv_make(const Vec& u, const Covec& phi) {
  if (u.size() != phi.size()) fail(Err::DimensionMismatch, "u and phi sizes differ");
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (!u(i).is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Err::ZeroData, "u is zero");
  bool phi_zero = true;
  for (Eigen::Index i = 0; i < phi.size(); ++i)
    if (!phi(i).is_zero()) phi_zero = false;
  if (phi_zero) fail(Err::ZeroData, "phi is zero");
  Fq val = (phi * u)(0, 0);
  if (!val.is_zero()) fail(Err::NotNilpotent, "phi(u) != 0");
  Fq scale = u(lead);
  Transvection t;
  t.u = u * scale.inv();
  t.phi = phi * scale;
  return t;
}

Vec tv_apply(const Transvection& t, const Vec& x) {
  if (x.size() != t.u.size()) fail(Err::DimensionMismatch, "tv_apply dimension");
  Fq c = (t.phi * x)(0, 0);
  return x + c * t.u;
}

Mat tv_matrix(const Transvection& t) {
  const Field& F = *t.field();
  return identity(F, t.u.size()) + t.u * t.phi;
}

Transvection tv_inverse(const Transvection& t) { return tv_make(-t.u, t.phi); }

Transvection tv_conjugate(const Transvection& t1, const Transvection& t2) {
  // t2 t1 t2^-1 = 1 + (a1 + phi2(a1) a2) (x) (phi1 - phi1(a2) phi2)
  Fq c1 = (t2.phi * t1.u)(0, 0);
  Fq c2 = (t1.phi * t2.u)(0, 0);
  return tv_make(t1.u + c1 * t2.u, t1.phi - c2 * t2.phi);
}

Transvection tv_conj_pow(const Transvection& t1, const Transvection& t2, const Fq& lambda) {
  // t1^(t2^l) = 1 + (u1 - l phi2(u1) u2) (x) (phi1 + l phi1(u2) phi2)
  Fq c1 = (t2.phi * t1.u)(0, 0);
  Fq c2 = (t1.phi * t2.u)(0, 0);
  return tv_make(t1.u - lambda * c1 * t2.u, t1.phi + lambda * c2 * t2.phi);
}

Transvection tv_conjugate_by(const Transvection& t, const Mat& g) {
  return tv_conjugate_by(t, g, inverse(g));
}

Transvection tv_conjugate_by(const Transvection& t, const Mat& g, const Mat& g_inv) {
  // g (1 + u phi) g^-1 = 1 + (g u) (x) (phi g^-1)
  return tv_make(g * t.u, t.phi * g_inv);
}

Transvection tv_power(const Transvection& t, const Fq& lambda) {
  if (lambda.is_zero()) fail(Err::InvalidArgument, "tv_power with lambda = 0");
  return tv_make(t.u, lambda * t.phi);
}

std::optional<Transvection> tv_from_matrix(const Mat& g) {
  const Eigen::Index n = g.rows();
  if (g.cols() != n || n == 0) return std::nullopt;
  const Field* f = g(0, 0).field();
  if (!f) return std::nullopt;
  Mat d = g - identity(*f, n);
  Echelon E = echelon_form(d);
  if (E.rank != 1) return std::nullopt;
  // d = u * phi with phi the echelon row; u from the column at the pivot.
  Covec phi = E.rref.row(0);
  int pc = E.pivots[0];
  Vec u = d.col(pc);
  if (!eq(u * phi, d)) return std::nullopt;
  Fq val = (phi * u)(0, 0);
  if (!val.is_zero()) return std::nullopt;  // unipotent but not a transvection
  return tv_make(u, phi);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::Sp: return "sp";
    case Family::SU: return "su";
  }
  return "?";
}

bool GroupSpec::unsupported_by_pipeline() const {
  uint64_t qv = q();
  switch (family) {
    case Family::Sp: return qv == 9;
    case Family::SU: return qv == 81;
    case Family::SL: return qv == 9 || qv == 81;
  }
  return false;
}

GroupSpec make_sl(const Field& F, int n) {
  if (n < 2) fail(Err::InvalidArgument, "n must be at least 2");
  return GroupSpec{Family::SL, VectorSpace{&F, n}, no_form()};
}

GroupSpec make_sp(const Field& F, int n) { return make_sp(F, n, canonical_symplectic(F, n)); }

GroupSpec make_sp(const Field& F, int n, Form form) {
  if (n < 2 || n % 2 != 0) fail(Err::InvalidArgument, "Sp needs even n >= 2");
  if (form.kind != FormKind::Symplectic) fail(Err::InvalidArgument, "Sp needs a symplectic form");
  validate_form(F, n, form);
  return GroupSpec{Family::Sp, VectorSpace{&F, n}, std::move(form)};
}

GroupSpec make_su(const Field& F, int n) { return make_su(F, n, canonical_hermitian(F, n)); }

GroupSpec make_su(const Field& F, int n, Form form) {
  if (n < 2) fail(Err::InvalidArgument, "n must be at least 2");
  if (form.kind != FormKind::Hermitian) fail(Err::InvalidArgument, "SU needs a hermitian form");
  validate_form(F, n, form);
  return GroupSpec{Family::SU, VectorSpace{&F, n}, std::move(form)};
}

std::optional<Fq> tv_lambda_of(const Transvection& t, const GroupSpec& spec) {
  if (spec.form.kind == FormKind::None) return std::nullopt;
  Covec pu = phi_u(spec.form, t.u);
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < pu.size(); ++i)
    if (!pu(i).is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return std::nullopt;  // u in the radical: cannot happen, form nondegenerate
  Fq lambda = t.phi(lead) / pu(lead);
  if (lambda.is_zero()) return std::nullopt;
  if (!eq(t.phi, lambda * pu)) return std::nullopt;
  return lambda;
}

bool tv_in_group(const Transvection& t, const GroupSpec& spec) {
  switch (spec.family) {
    case Family::SL: return true;
    case Family::Sp: {
      if (!is_singular(spec.form, t.u)) return false;
      return tv_lambda_of(t, spec).has_value();
    }
    case Family::SU: {
      if (!is_singular(spec.form, t.u)) return false;
      auto lambda = tv_lambda_of(t, spec);
      if (!lambda) return false;
      return spec.field().trace_q0(*lambda).is_zero();
    }
  }
  return false;
}

bool in_group(const Mat& g, const GroupSpec& spec) {
  const Field& F = spec.field();
  if (g.rows() != spec.n() || g.cols() != spec.n()) return false;
  if (det(g) != F.one()) return false;
  if (spec.form.kind == FormKind::None) return true;
  const Mat& G = spec.form.gram;
  Mat preserved = spec.form.kind == FormKind::Symplectic ? Mat(g.transpose() * G * g)
                                                         : Mat(conj_q0(g).transpose() * G * g);
  return eq(preserved, G);
}

Vec direction_rep(const Vec& v) {
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Err::ZeroData, "zero vector has no direction");
  return v * v(lead).inv();
}

std::string direction_key(const Vec& v) { return vec_key(direction_rep(v)); }

TransvectionSubgroup tv_subgroup(const Vec& v, const GroupSpec& spec) {
  if (spec.form.kind == FormKind::None)
    fail(Err::InvalidArgument, "tv_subgroup needs a symplectic or unitary group");
  const Field& F = spec.field();
  Vec dir = direction_rep(v);
  if (spec.family == Family::SU && !is_singular(spec.form, dir))
    fail(Err::NonSingularVector, "T_v needs a singular direction");
  Covec pv = phi_u(spec.form, dir);
  Transvection base = tv_make(dir, pv);
  TransvectionSubgroup T;
  T.direction = dir;
  T.base = base;
  if (spec.family == Family::Sp) {
    for (uint64_t i = 1; i < F.q; ++i) T.scalars.push_back(F.element(i));
  } else {
    for (uint64_t i = 1; i < F.q; ++i) {
      Fq lam = F.element(i);
      if (F.trace_q0(lam).is_zero()) T.scalars.push_back(lam);
    }
  }
  std::sort(T.scalars.begin(), T.scalars.end(),
            [](const Fq& a, const Fq& b) { return Fq::cmp(a, b) < 0; });
  return T;
}

std::vector<Transvection> tv_subgroup_elements(const TransvectionSubgroup& T) {
  std::vector<Transvection> out;
  out.reserve(T.scalars.size());
  for (const Fq& lam : T.scalars) out.push_back(tv_power(T.base, lam));
  return out;
}

std::vector<Transvection> tv_K_closure(const std::vector<Transvection>& Y, Subfield K,
                                       const GroupSpec& spec) {
  if (Y.empty()) return {};
  const Field& F = *Y[0].field();
  std::vector<Transvection> out;
  std::vector<std::string> seen;
  for (const Transvection& t : Y) {
    for (const Fq& lam : subfield_elements(F, K)) {
      if (lam.is_zero()) continue;
      Transvection tl = tv_power(t, lam);
      if (spec.form.kind != FormKind::None && !tv_in_group(tl, spec))
        fail(Err::ClosureLeavesGroup, "t^lambda leaves the group");
      std::string k = tl.key();
      if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
        seen.push_back(k);
        out.push_back(tl);
      }
    }
  }
  return out;
}

std::vector<Vec> enumerate_directions(const GroupSpec& spec, uint64_t cap) {
  const Field& F = spec.field();
  const int n = spec.n();
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= F.q;
    if (total > cap * F.q) break;
  }
  if (total / F.q > cap) fail(Err::TooLarge, "too many vectors to enumerate");
  std::vector<Vec> dirs;
  // canonical reps: first nonzero coordinate is 1
  for (int lead = 0; lead < n; ++lead) {
    uint64_t tail = 1;
    for (int i = lead + 1; i < n; ++i) tail *= F.q;
    for (uint64_t idx = 0; idx < tail; ++idx) {
      Vec v = zero_vec(F, n);
      v(lead) = F.one();
      uint64_t rest = idx;
      for (int i = lead + 1; i < n; ++i) {
        v(i) = F.element(rest % F.q);
        rest /= F.q;
      }
      if (spec.form.kind != FormKind::None && spec.family == Family::SU &&
          !is_singular(spec.form, v))
        continue;
      dirs.push_back(v);
    }
  }
  return dirs;
}

std::vector<Transvection> enumerate_transvections(const GroupSpec& spec, uint64_t cap) {
  const Field& F = spec.field();
  const int n = spec.n();
  std::vector<Transvection> out;
  std::vector<Vec> dirs = enumerate_directions(spec, cap);
  if (spec.family == Family::SL) {
    // every nonzero phi with phi(u) = 0
    for (const Vec& u : dirs) {
      Mat ut = u.transpose();
      Mat K = kernel(ut);  // covectors annihilating u, as column-coeffs
      // enumerate nonzero combinations of kernel basis covectors
      const Eigen::Index d = K.cols();
      uint64_t count = 1;
      for (Eigen::Index i = 0; i < d; ++i) count *= F.q;
      if (out.size() + count > cap) fail(Err::TooLarge, "transvection enumeration over cap");
      for (uint64_t idx = 1; idx < count; ++idx) {
        Covec phi = zero_covec(F, n);
        uint64_t rest = idx;
        for (Eigen::Index i = 0; i < d; ++i) {
          phi += F.element(rest % F.q) * K.col(i).transpose();
          rest /= F.q;
        }
        out.push_back(tv_make(u, phi));
      }
    }
  } else {
    for (const Vec& u : dirs) {
      TransvectionSubgroup T = tv_subgroup(u, spec);
      for (const Transvection& t : tv_subgroup_elements(T)) {
        if (out.size() >= cap) fail(Err::TooLarge, "transvection enumeration over cap");
        out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Transvection& a, const Transvection& b) { return tv_cmp(a, b) < 0; });
  return out;
}

}  // namespace tvg
