#pragma once

#include <vector>

#include "tvg/linalg.hpp"

namespace tvg {

struct VectorSpace {
  const Field* field = nullptr;
  int n = 0;
};

enum class FormKind { None, Symplectic, Hermitian };

const char* form_kind_name(FormKind k);

/// A sesquilinear/bilinear form given by its Gram matrix.  Evaluation is
/// f(u,v) = sigma(u)^T G v, conjugating the FIRST argument (sigma = identity
/// for symplectic), so that f(u, lv+w) = l f(u,v) + f(u,w) and
/// f(w,u) = f(u,w)^sigma.
struct Form {
  FormKind kind = FormKind::None;
  Mat gram;
};

Form no_form();
/// Block-diagonal [[0,1],[-1,0]] Gram.
Form canonical_symplectic(const Field& F, int n);
/// Identity Gram; requires q0^2 == q on F.
Form canonical_hermitian(const Field& F, int n);

void validate_form(const Field& F, int n, const Form& f);

Fq form_eval(const Form& f, const Vec& u, const Vec& v);

/// The covector x -> f(u, x).
Covec phi_u(const Form& f, const Vec& u);

bool is_singular(const Form& f, const Vec& v);

/// Basis of {v in span(basis) : f(v, s) = 0 for all s in span(basis)},
/// canonicalized; empty when the restriction is nondegenerate.
std::vector<Vec> radical(const Form& f, const std::vector<Vec>& basis);

}  // namespace tvg
