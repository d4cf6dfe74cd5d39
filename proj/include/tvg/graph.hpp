#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tvg/trans.hpp"

namespace tvg {

/// Labelled transvection graph on a list of canonical transvections:
/// l(s,t) = phi_t(u_s), edge [s,t] iff l(s,t) != 0.  Labels are computed
/// from the canonical representatives, so they are deterministic; weights
/// of tuples depend on the transvections only.
class TvGraph {
 public:
  explicit TvGraph(std::vector<Transvection> verts);

  const std::vector<Transvection>& verts() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  const Field& field() const { return *verts_.at(0).field(); }

  const Fq& label(int i, int j) const { return labels_(i, j); }
  bool has_edge(int i, int j) const { return i != j && !labels_(i, j).is_zero(); }
  bool two_way(int i, int j) const { return has_edge(i, j) && has_edge(j, i); }
  const std::vector<std::vector<int>>& out_edges() const { return out_; }
  const std::vector<std::vector<int>>& twoway_edges() const { return two_; }

  std::optional<int> find(const Transvection& t) const;

 private:
  std::vector<Transvection> verts_;
  Mat labels_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> two_;
};

TvGraph build_graph(const std::vector<Transvection>& Y);

/// Label product around the tuple; nonzero iff the tuple is a directed cycle.
Fq weight(const TvGraph& g, const std::vector<int>& tuple);
Fq weight_reversed(const TvGraph& g, const std::vector<int>& tuple);

/// d_s = w(r1..rk) + (-1)^(k+1) w(rk..r1).
Fq d_s(const TvGraph& g, const std::vector<int>& tuple);
/// d_u = w(r1..rk) + (-1)^(k+1) w(rk..r1)^sqrt(q); requires square q.
Fq d_u(const TvGraph& g, const std::vector<int>& tuple);

/// w(forward) / w(backward)^sqrt(q); defined on two-way directed cycles,
/// equals (-1)^k exactly when the cycle is unitary.
Fq P_u(const TvGraph& g, const std::vector<int>& cycle);

struct GraphMetrics {
  bool strongly_connected = false;
  std::optional<int> diameter;
  bool twoway_connected = false;
  std::optional<int> twoway_diameter;
};

GraphMetrics graph_metrics(const TvGraph& g);

/// Directed distances from src along edges (or two-way edges); -1 when
/// unreachable.
std::vector<int> bfs_dist(const TvGraph& g, int src, bool twoway_only);

struct Parts {
  std::vector<Vec> V_part;
  std::vector<Covec> Vstar_part;
  int V_span_dim = 0;
  int Vstar_span_dim = 0;
};

Parts parts(const std::vector<Transvection>& Y);

/// Subfield generated by weights of all directed cycles of length <= k.
/// Enumerates injective tuples (cycles up to rotation) with zero-label
/// pruning; throws TooManyVertices past the budget.
Subfield L_k(const TvGraph& g, int k, uint64_t budget = 10'000'000);

/// Enumerate directed cycles of length between min_len and max_len; calls
/// visit(tuple, weight) for each, stopping early if visit returns false.
/// Cycles are produced once per rotation class (least vertex first); the two
/// directions of a cycle appear as separate tuples.
void for_each_cycle(const TvGraph& g, int min_len, int max_len,
                    const std::function<bool(const std::vector<int>&, const Fq&)>& visit,
                    uint64_t budget = 10'000'000);

struct QuadCoeffs {
  Fq A, B, C;  // w(s1,s2,s3^(s4^l)) = A + lB + l^2 C
  bool has_du = false;
  Fq D, E, F;  // d_u(s1,s2,s3^(s4^l)) = D + lE + l^2 F, square q only
};

QuadCoeffs af_coeffs(const TvGraph& g, int s1, int s2, int s3, int s4);

/// Weight computed from explicit (u, phi) representatives, bypassing
/// canonicalization; for representation-independence checks.
Fq weight_from_reps(const std::vector<std::pair<Vec, Covec>>& reps);

/// DOT text: two-way edges undirected, one-way edges directed.
std::string to_dot(const TvGraph& g);

}  // namespace tvg
