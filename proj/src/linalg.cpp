#include "tvg/linalg.hpp"

#include <algorithm>

namespace tvg {

Mat zeros(const Field& F, Eigen::Index rows, Eigen::Index cols) {
  Mat A(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) A(i, j) = F.zero();
  return A;
}

Mat identity(const Field& F, Eigen::Index n) {
  Mat A = zeros(F, n, n);
  for (Eigen::Index i = 0; i < n; ++i) A(i, i) = F.one();
  return A;
}

Vec zero_vec(const Field& F, Eigen::Index n) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = F.zero();
  return v;
}

Covec zero_covec(const Field& F, Eigen::Index n) {
  Covec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = F.zero();
  return v;
}

Vec unit_vec(const Field& F, Eigen::Index n, Eigen::Index i) {
  Vec v = zero_vec(F, n);
  v(i) = F.one();
  return v;
}

Covec unit_covec(const Field& F, Eigen::Index n, Eigen::Index i) {
  Covec v = zero_covec(F, n);
  v(i) = F.one();
  return v;
}

Mat lift(const Field& F, const Mat& A) {
  Mat B(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      B(i, j) = A(i, j).has_field() ? A(i, j) : F.from_int(A(i, j).int_const());
  return B;
}

bool is_zero(const Mat& A) {
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero()) return false;
  return true;
}

Mat conj_q0(const Mat& A) {
  Mat B(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      const Field* f = A(i, j).field();
      B(i, j) = f ? f->frobenius_q0(A(i, j)) : A(i, j);
    }
  return B;
}

Vec conj_q0(const Vec& v) {
  Vec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Field* f = v(i).field();
    w(i) = f ? f->frobenius_q0(v(i)) : v(i);
  }
  return w;
}

Echelon echelon_form(Mat A) {
  Echelon E;
  const Eigen::Index rows = A.rows(), cols = A.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!A(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) A.row(piv).swap(A.row(r));
    Fq inv = A(r, c).inv();
    for (Eigen::Index j = c; j < cols; ++j) A(r, j) = A(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || A(i, c).is_zero()) continue;
      Fq factor = A(i, c);
      for (Eigen::Index j = c; j < cols; ++j) A(i, j) = A(i, j) - factor * A(r, j);
    }
    E.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  E.rank = static_cast<int>(r);
  E.rref = std::move(A);
  return E;
}

int rank(const Mat& A) { return echelon_form(A).rank; }

Fq det(Mat A) {
  if (A.rows() != A.cols()) fail(Err::DimensionMismatch, "det of non-square matrix");
  const Eigen::Index n = A.rows();
  if (n == 0) fail(Err::InvalidArgument, "det of empty matrix");
  const Field* f = A(0, 0).field();
  Fq d = f ? f->one() : Fq(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!A(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return f ? f->zero() : Fq(0);
    if (piv != c) {
      A.row(piv).swap(A.row(c));
      d = -d;
    }
    d = d * A(c, c);
    Fq inv = A(c, c).inv();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (A(i, c).is_zero()) continue;
      Fq factor = A(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) A(i, j) = A(i, j) - factor * A(c, j);
    }
  }
  return d;
}

Mat inverse(const Mat& A) {
  if (A.rows() != A.cols()) fail(Err::DimensionMismatch, "inverse of non-square matrix");
  const Eigen::Index n = A.rows();
  Mat aug(n, 2 * n);
  const Field* f = nullptr;
  for (Eigen::Index i = 0; i < n && !f; ++i)
    for (Eigen::Index j = 0; j < n && !f; ++j) f = A(i, j).field();
  if (!f) fail(Err::InvalidArgument, "inverse of constant matrix");
  aug.block(0, 0, n, n) = lift(*f, A);
  aug.block(0, n, n, n) = identity(*f, n);
  Echelon E = echelon_form(std::move(aug));
  if (E.rank != n) fail(Err::NotInvertible, "matrix is singular");
  return E.rref.block(0, n, n, n);
}

Mat kernel(const Mat& A) {
  const Field* f = nullptr;
  for (Eigen::Index i = 0; i < A.rows() && !f; ++i)
    for (Eigen::Index j = 0; j < A.cols() && !f; ++j) f = A(i, j).field();
  if (!f) fail(Err::InvalidArgument, "kernel of constant matrix");
  Echelon E = echelon_form(A);
  const Eigen::Index n = A.cols();
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (pi < E.pivots.size() && E.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(static_cast<int>(c));
    }
  }
  Mat K = zeros(*f, n, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    K(free_cols[j], static_cast<Eigen::Index>(j)) = f->one();
    for (size_t pi = 0; pi < E.pivots.size(); ++pi)
      K(E.pivots[pi], static_cast<Eigen::Index>(j)) =
          -E.rref(static_cast<Eigen::Index>(pi), free_cols[j]);
  }
  return K;
}

Mat row_basis(const Mat& A) {
  Echelon E = echelon_form(A);
  return E.rref.topRows(E.rank);
}

int span_dim(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  Mat A(static_cast<Eigen::Index>(vs.size()), vs[0].size());
  for (size_t i = 0; i < vs.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return rank(A);
}

bool in_row_span(const Echelon& basis, const Covec& v) {
  Covec r = v;
  for (int i = 0; i < basis.rank; ++i) {
    int c = basis.pivots[static_cast<size_t>(i)];
    if (!r(c).is_zero()) r -= r(c) * basis.rref.row(i);
  }
  for (Eigen::Index j = 0; j < r.size(); ++j)
    if (!r(j).is_zero()) return false;
  return true;
}

std::string mat_key(const Mat& A) {
  std::string s;
  s.reserve(static_cast<size_t>(A.size()) * 4);
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      uint64_t v = A(i, j).value();
      for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
  return s;
}

std::string vec_key(const Vec& v) {
  std::string s;
  s.reserve(static_cast<size_t>(v.size()) * 4);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    uint64_t x = v(i).value();
    for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
  }
  return s;
}

int mat_cmp(const Mat& A, const Mat& B) {
  std::string a = mat_key(A), b = mat_key(B);
  return a < b ? -1 : a > b ? 1 : 0;
}

Mat mat_power(const Mat& A, uint64_t e) {
  const Field* f = A(0, 0).field();
  Mat r = identity(*f, A.rows());
  Mat base = A;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace tvg
