#include "tvg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace tvg {

namespace {

std::vector<Mat> invert_all(const std::vector<Mat>& gens) {
  std::vector<Mat> inv;
  inv.reserve(gens.size());
  for (const Mat& g : gens) inv.push_back(inverse(g));
  return inv;
}

}  // namespace

Mat eval_letters(const std::vector<Mat>& gens, const std::vector<Mat>& gen_invs,
                 const Letters& w) {
  if (gens.empty()) fail(Err::InvalidArgument, "no generators");
  const Field& F = *gens[0](0, 0).field();
  Mat r = identity(F, gens[0].rows());
  for (const auto& [idx, sign] : w)
    r = r * (sign >= 0 ? gens[static_cast<size_t>(idx)] : gen_invs[static_cast<size_t>(idx)]);
  return r;
}

ClosureResult closure_enumerate(const std::vector<Mat>& gens, uint64_t cap, bool fail_on_cap) {
  if (gens.empty()) fail(Err::InvalidArgument, "no generators");
  const Field& F = *gens[0](0, 0).field();
  const Eigen::Index n = gens[0].rows();
  for (const Mat& g : gens) {
    if (g.rows() != n || g.cols() != n) fail(Err::DimensionMismatch, "generator sizes differ");
    if (det(g) != F.one()) fail(Err::InvalidArgument, "generator with determinant != 1");
  }
  ClosureResult res;
  std::unordered_set<std::string> seen;
  std::deque<size_t> frontier;
  res.elements.push_back(identity(F, n));
  seen.insert(mat_key(res.elements[0]));
  frontier.push_back(0);
  while (!frontier.empty()) {
    size_t at = frontier.front();
    frontier.pop_front();
    for (const Mat& g : gens) {
      Mat next = res.elements[at] * g;
      std::string key = mat_key(next);
      if (seen.contains(key)) continue;
      if (res.elements.size() >= cap) {
        if (fail_on_cap) fail(Err::CapExceeded, "closure exceeds cap");
        res.truncated = true;
        res.order = res.elements.size();
        return res;
      }
      seen.insert(std::move(key));
      res.elements.push_back(std::move(next));
      frontier.push_back(res.elements.size() - 1);
    }
  }
  res.order = res.elements.size();
  return res;
}

int cayley_diameter(const std::vector<Mat>& gens, uint64_t cap) {
  if (gens.empty()) fail(Err::InvalidArgument, "no generators");
  const Field& F = *gens[0](0, 0).field();
  const Eigen::Index n = gens[0].rows();
  std::vector<Mat> step = gens;
  for (const Mat& g : invert_all(gens)) step.push_back(g);
  std::unordered_map<std::string, int> dist;
  std::deque<Mat> frontier;
  Mat id = identity(F, n);
  dist[mat_key(id)] = 0;
  frontier.push_back(id);
  int diam = 0;
  while (!frontier.empty()) {
    Mat cur = frontier.front();
    frontier.pop_front();
    int d = dist[mat_key(cur)];
    for (const Mat& g : step) {
      Mat nxt = cur * g;
      std::string key = mat_key(nxt);
      if (dist.contains(key)) continue;
      if (dist.size() >= cap) fail(Err::CapExceeded, "group exceeds cap");
      dist[key] = d + 1;
      diam = std::max(diam, d + 1);
      frontier.push_back(std::move(nxt));
    }
  }
  return diam;
}

int cayley_diameter_check(const std::vector<Mat>& gens, uint64_t cap) {
  // independent route: level-synchronized expansion by LEFT multiplication
  // with the inverse-augmented set in reversed order; distances agree with
  // the right-multiplication BFS because dist(1,g) = dist(1,g^-1) under the
  // symmetric convention.
  if (gens.empty()) fail(Err::InvalidArgument, "no generators");
  const Field& F = *gens[0](0, 0).field();
  const Eigen::Index n = gens[0].rows();
  std::vector<Mat> step = invert_all(gens);
  for (const Mat& g : gens) step.push_back(g);
  std::reverse(step.begin(), step.end());
  std::unordered_set<std::string> seen;
  std::vector<Mat> level{identity(F, n)};
  seen.insert(mat_key(level[0]));
  int depth = 0;
  while (true) {
    std::vector<Mat> next_level;
    for (const Mat& cur : level)
      for (const Mat& g : step) {
        Mat nxt = g * cur;
        std::string key = mat_key(nxt);
        if (seen.contains(key)) continue;
        if (seen.size() >= cap) fail(Err::CapExceeded, "group exceeds cap");
        seen.insert(std::move(key));
        next_level.push_back(std::move(nxt));
      }
    if (next_level.empty()) return depth;
    ++depth;
    level = std::move(next_level);
  }
}

bool closure_bfs_visit(const std::vector<Mat>& gens,
                       const std::function<bool(const Mat&, const Letters&)>& visit,
                       uint64_t budget) {
  if (gens.empty()) fail(Err::InvalidArgument, "no generators");
  const Field& F = *gens[0](0, 0).field();
  const Eigen::Index n = gens[0].rows();
  std::vector<Mat> inv = invert_all(gens);
  struct Node {
    Mat m;
    Letters w;
  };
  std::unordered_set<std::string> seen;
  std::deque<Node> frontier;
  Node id{identity(F, n), {}};
  seen.insert(mat_key(id.m));
  if (!visit(id.m, id.w)) return true;
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    Node cur = std::move(frontier.front());
    frontier.pop_front();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      for (int sign : {+1, -1}) {
        Mat nxt = cur.m * (sign > 0 ? gens[gi] : inv[gi]);
        std::string key = mat_key(nxt);
        if (seen.contains(key)) continue;
        if (seen.size() >= budget) return false;
        seen.insert(std::move(key));
        Letters w = cur.w;
        w.emplace_back(static_cast<int>(gi), sign);
        if (!visit(nxt, w)) return true;
        frontier.push_back(Node{std::move(nxt), std::move(w)});
      }
    }
  }
  return true;
}

std::vector<Letters> block_word_search(const std::vector<Mat>& block_gens,
                                       const std::vector<Mat>& targets, uint64_t budget) {
  std::vector<std::optional<Letters>> found(targets.size());
  std::unordered_map<std::string, size_t> want;
  for (size_t i = 0; i < targets.size(); ++i) want.emplace(mat_key(targets[i]), i);
  size_t remaining = want.size();
  bool done = closure_bfs_visit(
      block_gens,
      [&](const Mat& g, const Letters& w) {
        auto it = want.find(mat_key(g));
        if (it != want.end() && !found[it->second]) {
          // several targets may share a key only if targets repeat; fill all
          for (size_t i = 0; i < targets.size(); ++i)
            if (!found[i] && mat_key(targets[i]) == it->first) {
              found[i] = w;
              --remaining;
            }
        }
        return remaining != 0;
      },
      budget);
  if (remaining != 0) {
    (void)done;
    fail(Err::BudgetExceeded, "block word search budget exhausted");
  }
  std::vector<Letters> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(*f));
  return out;
}

namespace {

// all d-dimensional subspaces of F^n as canonical RREF row bases
void enumerate_subspaces(const Field& F, int n, int d, const std::function<void(const Mat&)>& fn) {
  // choose pivot columns, then fill free entries
  std::vector<int> pivots(static_cast<size_t>(d));
  std::function<void(int, int)> choose = [&](int start, int got) {
    if (got == d) {
      // free entries: in row i, columns after pivots[i] that are not pivots
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < d; ++i)
        for (int c = pivots[static_cast<size_t>(i)] + 1; c < n; ++c) {
          bool is_pivot = false;
          for (int j = 0; j < d; ++j)
            if (pivots[static_cast<size_t>(j)] == c) is_pivot = true;
          if (!is_pivot) free_pos.emplace_back(i, c);
        }
      uint64_t total = 1;
      for (size_t i = 0; i < free_pos.size(); ++i) total *= F.q;
      for (uint64_t idx = 0; idx < total; ++idx) {
        Mat B = zeros(F, d, n);
        for (int i = 0; i < d; ++i) B(i, pivots[static_cast<size_t>(i)]) = F.one();
        uint64_t rest = idx;
        for (auto& [r, c] : free_pos) {
          B(r, c) = F.element(rest % F.q);
          rest /= F.q;
        }
        fn(B);
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots[static_cast<size_t>(got)] = c;
      choose(c + 1, got + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

bool invariant_subspace_search_mats(const std::vector<Mat>& gens, const Field& F, int n) {
  uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= F.q;
    if (size > 1'000'000) fail(Err::TooLarge, "q^n too large for subspace search");
  }
  bool invariant_found = false;
  for (int d = 1; d < n && !invariant_found; ++d) {
    enumerate_subspaces(F, n, d, [&](const Mat& B) {
      if (invariant_found) return;
      Echelon basis = echelon_form(B);
      for (const Mat& g : gens) {
        for (int r = 0; r < d; ++r) {
          Covec img = (g * B.row(r).transpose()).transpose();
          if (!in_row_span(basis, img)) return;  // not invariant under g
        }
      }
      invariant_found = true;
    });
  }
  return !invariant_found;
}

bool invariant_subspace_search(const std::vector<Transvection>& Y) {
  if (Y.empty()) fail(Err::InvalidArgument, "empty set");
  const Field& F = *Y[0].field();
  std::vector<Mat> gens;
  for (const Transvection& t : Y) gens.push_back(tv_matrix(t));
  return invariant_subspace_search_mats(gens, F, static_cast<int>(Y[0].dim()));
}

uint64_t sl2_order(uint64_t r) { return r * (r * r - 1); }

uint64_t group_order(const GroupSpec& spec) {
  const uint64_t n = static_cast<uint64_t>(spec.n());
  switch (spec.family) {
    case Family::SL: {
      const uint64_t q = spec.q();
      uint64_t r = 1;
      for (uint64_t i = 0; i < n * (n - 1) / 2; ++i) r *= q;
      for (uint64_t i = 2; i <= n; ++i) {
        uint64_t qi = 1;
        for (uint64_t j = 0; j < i; ++j) qi *= q;
        r *= qi - 1;
      }
      return r;
    }
    case Family::Sp: {
      const uint64_t q = spec.q(), m = n / 2;
      uint64_t r = 1;
      for (uint64_t i = 0; i < m * m; ++i) r *= q;
      for (uint64_t i = 1; i <= m; ++i) {
        uint64_t q2i = 1;
        for (uint64_t j = 0; j < 2 * i; ++j) q2i *= q;
        r *= q2i - 1;
      }
      return r;
    }
    case Family::SU: {
      const uint64_t q0 = spec.q0();
      uint64_t r = 1;
      for (uint64_t i = 0; i < n * (n - 1) / 2; ++i) r *= q0;
      for (uint64_t i = 2; i <= n; ++i) {
        uint64_t q0i = 1;
        for (uint64_t j = 0; j < i; ++j) q0i *= q0;
        r *= i % 2 == 0 ? q0i - 1 : q0i + 1;
      }
      return r;
    }
  }
  fail(Err::InvalidArgument, "bad family");
}

namespace {

// hyperbolic-ish basis for the SU witness: x, y isotropic with f(x,y) = 1,
// z orthogonal to both with f(z,z) = 1, rest an orthogonal complement basis.
struct SUBasis {
  Vec x, y, z;
  std::vector<Vec> rest;
};

SUBasis su_witness_basis(const GroupSpec& spec) {
  const Field& F = spec.field();
  const int n = spec.n();
  const Form& f = spec.form;
  // singular x
  std::optional<Vec> x;
  for (const Vec& v : enumerate_directions(spec))
    if (is_singular(f, v)) {
      x = v;
      break;
    }
  if (!x) fail(Err::InvalidArgument, "no singular vector");
  // y' with f(x,y') != 0, normalized and made isotropic
  std::optional<Vec> y;
  for (int i = 0; i < n && !y; ++i) {
    Vec cand = unit_vec(F, n, i);
    Fq val = form_eval(f, *x, cand);
    if (val.is_zero()) continue;
    Vec y0 = cand * val.inv();  // f(x, y0) = 1
    // y = y0 + mu x with Tr-adjustment making f(y,y) = 0
    Fq target = -form_eval(f, y0, y0);
    for (uint64_t e = 0; e < F.q; ++e) {
      Fq mu = F.element(e);
      // f(y0+mux, y0+mux) = f(y0,y0) + conj(mu) f(x,y0) + mu f(y0,x)
      Vec yc = y0 + mu * *x;
      if (form_eval(f, yc, yc).is_zero()) {
        y = yc;
        break;
      }
    }
    (void)target;
  }
  if (!y) fail(Err::InvalidArgument, "no hyperbolic partner");
  // orthogonal complement of <x,y>
  Mat constraints = zeros(F, 2, n);
  constraints.row(0) = phi_u(f, *x);
  constraints.row(1) = phi_u(f, *y);
  Mat K = kernel(constraints);
  std::vector<Vec> comp;
  for (Eigen::Index c = 0; c < K.cols(); ++c) comp.push_back(K.col(c));
  // Gram-Schmidt the complement (hermitian, nondegenerate on it)
  std::vector<Vec> ortho;
  for (Vec v : comp) {
    for (const Vec& w : ortho) {
      Fq d = form_eval(f, w, w);
      Fq c = form_eval(f, w, v);
      v = v - (c / d) * w;
    }
    if (!form_eval(f, v, v).is_zero()) ortho.push_back(v);
  }
  if (static_cast<int>(ortho.size()) != n - 2)
    fail(Err::InvalidArgument, "complement not anisotropic-diagonalizable");
  // z with f(z,z) = 1: scale ortho[0] by r with N(r) = f(z0,z0)^-1
  Vec z0 = ortho[0];
  Fq nu = form_eval(f, z0, z0);
  std::optional<Vec> z;
  for (uint64_t e = 1; e < F.q; ++e) {
    Fq r = F.element(e);
    if (F.mul(F.frobenius_q0(r), r) == nu.inv()) {
      z = Vec(r * z0);
      break;
    }
  }
  if (!z) fail(Err::InvalidArgument, "norm equation unsolvable");
  SUBasis B;
  B.x = *x;
  B.y = *y;
  B.z = *z;
  for (size_t i = 1; i < ortho.size(); ++i) B.rest.push_back(ortho[i]);
  return B;
}

}  // namespace

Mat trace_witness(const GroupSpec& spec, const Fq& lambda) {
  const Field& F = spec.field();
  const int n = spec.n();
  if (spec.family == Family::SL || spec.family == Family::Sp) {
    // g(x) = y + (lambda - (n-2)) x, g(y) = -x, identity elsewhere; for Sp
    // the pair (x, y) = (e1, e2) is hyperbolic in the canonical Gram.
    Fq c = lambda - F.from_int(n - 2);
    Mat g = identity(F, n);
    g(0, 0) = c;
    g(1, 0) = F.one();
    g(0, 1) = -F.one();
    g(1, 1) = F.zero();
    return g;
  }
  if (n < 3) fail(Err::InvalidArgument, "SU witness needs n >= 3");
  // need lambda = -b^(q0-1) + (n-3) for a generator b
  Fq target = F.from_int(n - 3) - lambda;  // = b^(q0-1)
  std::optional<Fq> b;
  for (uint64_t e = 1; e < F.q; ++e) {
    Fq cand = F.element(e);
    if (F.is_generator(cand) && F.pow(cand, F.q0 - 1) == target) {
      b = cand;
      break;
    }
  }
  if (!b) fail(Err::UnreachableTrace, "trace not of the form -b^(q0-1) + (n-3)");
  SUBasis B = su_witness_basis(spec);
  Mat P = zeros(F, n, n);
  P.col(0) = B.x;
  P.col(1) = B.y;
  P.col(2) = B.z;
  for (size_t i = 0; i < B.rest.size(); ++i) P.col(static_cast<Eigen::Index>(3 + i)) = B.rest[i];
  Mat D = identity(F, n);
  D(0, 0) = F.zero();
  D(1, 1) = F.zero();
  D(1, 0) = F.pow(*b, F.q0).inv();  // g(x) = b^(-q0) y
  D(0, 1) = *b;                     // g(y) = b x
  D(2, 2) = -F.pow(*b, F.q0 - 1);   // g(z) = -b^(q0-1) z
  return P * D * inverse(P);
}

}  // namespace tvg
