#include "tvg/geom.hpp"

namespace tvg {

const char* form_kind_name(FormKind k) {
  switch (k) {
    case FormKind::None: return "none";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::Hermitian: return "hermitian";
  }
  return "?";
}

Form no_form() { return Form{FormKind::None, Mat()}; }

Form canonical_symplectic(const Field& F, int n) {
  if (n % 2 != 0) fail(Err::InvalidArgument, "symplectic dimension must be even");
  Mat G = zeros(F, n, n);
  for (int i = 0; i < n; i += 2) {
    G(i, i + 1) = F.one();
    G(i + 1, i) = -F.one();
  }
  return Form{FormKind::Symplectic, std::move(G)};
}

Form canonical_hermitian(const Field& F, int n) {
  if (!F.unitary_role() || F.q0 * F.q0 != F.q)
    fail(Err::InvalidArgument, "hermitian form needs a field with q0^2 == q");
  return Form{FormKind::Hermitian, identity(F, n)};
}

void validate_form(const Field& F, int n, const Form& f) {
  if (f.kind == FormKind::None) return;
  if (f.gram.rows() != n || f.gram.cols() != n) fail(Err::DimensionMismatch, "gram size");
  if (det(f.gram).is_zero()) fail(Err::InvalidArgument, "gram is singular");
  if (f.kind == FormKind::Symplectic) {
    if (n % 2 != 0) fail(Err::InvalidArgument, "symplectic needs even n");
    for (int i = 0; i < n; ++i) {
      if (!f.gram(i, i).is_zero()) fail(Err::InvalidArgument, "gram diagonal not zero");
      for (int j = 0; j < n; ++j)
        if (f.gram(i, j) != -f.gram(j, i)) fail(Err::InvalidArgument, "gram not skew-symmetric");
    }
  } else {
    if (!F.unitary_role() || F.q0 * F.q0 != F.q)
      fail(Err::InvalidArgument, "hermitian form needs q0^2 == q");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (f.gram(j, i) != F.frobenius_q0(f.gram(i, j)))
          fail(Err::InvalidArgument, "gram not conjugate-symmetric");
  }
}

Fq form_eval(const Form& f, const Vec& u, const Vec& v) {
  if (f.kind == FormKind::None) fail(Err::InvalidArgument, "form_eval on kind none");
  if (u.size() != f.gram.rows() || v.size() != f.gram.cols())
    fail(Err::DimensionMismatch, "form_eval dimensions");
  if (f.kind == FormKind::Symplectic) return (u.transpose() * f.gram * v)(0, 0);
  return (conj_q0(u).transpose() * f.gram * v)(0, 0);
}

Covec phi_u(const Form& f, const Vec& u) {
  if (f.kind == FormKind::None) fail(Err::InvalidArgument, "phi_u on kind none");
  if (f.kind == FormKind::Symplectic) return u.transpose() * f.gram;
  return conj_q0(u).transpose() * f.gram;
}

bool is_singular(const Form& f, const Vec& v) { return form_eval(f, v, v).is_zero(); }

std::vector<Vec> radical(const Form& f, const std::vector<Vec>& basis) {
  if (f.kind == FormKind::None) fail(Err::InvalidArgument, "radical on kind none");
  if (basis.empty()) return {};
  const Field& F = *basis[0](0).field();
  const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
  // v = B x is in the radical iff f(b_j, v) = 0 for all j, i.e. R x = 0 with
  // R_ji = f(b_j, b_i).
  Mat R = zeros(F, d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      R(j, i) = form_eval(f, basis[static_cast<size_t>(j)], basis[static_cast<size_t>(i)]);
  Mat K = kernel(R);
  if (K.cols() == 0) return {};
  Mat vecs = zeros(F, K.cols(), basis[0].size());
  for (Eigen::Index c = 0; c < K.cols(); ++c) {
    Vec v = zero_vec(F, basis[0].size());
    for (Eigen::Index i = 0; i < d; ++i) v += K(i, c) * basis[static_cast<size_t>(i)];
    vecs.row(c) = v.transpose();
  }
  Mat rb = row_basis(vecs);
  std::vector<Vec> out;
  for (Eigen::Index r = 0; r < rb.rows(); ++r) out.push_back(rb.row(r).transpose());
  return out;
}

}  // namespace tvg
