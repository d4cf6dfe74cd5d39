#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tvg/gf.hpp"

namespace Eigen {

template <>
struct NumTraits<tvg::Fq> {
  typedef tvg::Fq Real;
  typedef tvg::Fq NonInteger;
  typedef tvg::Fq Nested;
  typedef tvg::Fq Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 12
  };
  static inline tvg::Fq epsilon() { return tvg::Fq(0); }
  static inline tvg::Fq dummy_precision() { return tvg::Fq(0); }
  static inline tvg::Fq highest() { return tvg::Fq(0); }
  static inline tvg::Fq lowest() { return tvg::Fq(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tvg {

using Mat = Eigen::Matrix<Fq, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Fq, Eigen::Dynamic, 1>;
using Covec = Eigen::Matrix<Fq, 1, Eigen::Dynamic>;

Mat zeros(const Field& F, Eigen::Index rows, Eigen::Index cols);
Mat identity(const Field& F, Eigen::Index n);
Vec zero_vec(const Field& F, Eigen::Index n);
Covec zero_covec(const Field& F, Eigen::Index n);
Vec unit_vec(const Field& F, Eigen::Index n, Eigen::Index i);
Covec unit_covec(const Field& F, Eigen::Index n, Eigen::Index i);

/// Replace field-less integer constants by proper field elements.
Mat lift(const Field& F, const Mat& A);

bool is_zero(const Mat& A);

template <typename DA, typename DB>
bool eq(const Eigen::MatrixBase<DA>& A, const Eigen::MatrixBase<DB>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != B(i, j)) return false;
  return true;
}

/// Entrywise a^(q0) with the field's q0 role.
Mat conj_q0(const Mat& A);
Vec conj_q0(const Vec& v);

struct Echelon {
  Mat rref;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row
  int rank = 0;
};

/// Exact Gauss-Jordan with leftmost-pivot, topmost-row tie-breaking.
Echelon echelon_form(Mat A);

int rank(const Mat& A);
Fq det(Mat A);
Mat inverse(const Mat& A);  // throws NotInvertible

/// Columns form a canonical basis of the null space {x : Ax = 0}.
Mat kernel(const Mat& A);

/// Canonical (row-echelon) basis of the row span.
Mat row_basis(const Mat& A);

/// Dimension of the span of a list of vectors.
int span_dim(const std::vector<Vec>& vs);
bool in_row_span(const Echelon& basis, const Covec& v);

/// Canonical byte key: row-major value() encoding, little-endian uint32.
std::string mat_key(const Mat& A);
std::string vec_key(const Vec& v);

/// Lexicographic order on the canonical byte keys.
int mat_cmp(const Mat& A, const Mat& B);

Mat mat_power(const Mat& A, uint64_t e);

}  // namespace tvg
