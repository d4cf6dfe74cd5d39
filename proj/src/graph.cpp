#include "tvg/graph.hpp"

#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace tvg {

TvGraph::TvGraph(std::vector<Transvection> verts) : verts_(std::move(verts)) {
  if (verts_.empty()) fail(Err::InvalidArgument, "empty graph");
  const Field& F = *verts_[0].field();
  const int m = static_cast<int>(verts_.size());
  labels_ = zeros(F, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) labels_(i, j) = (verts_[static_cast<size_t>(j)].phi * verts_[static_cast<size_t>(i)].u)(0, 0);
  out_.resize(static_cast<size_t>(m));
  two_.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (has_edge(i, j)) out_[static_cast<size_t>(i)].push_back(j);
      if (two_way(i, j)) two_[static_cast<size_t>(i)].push_back(j);
    }
}

std::optional<int> TvGraph::find(const Transvection& t) const {
  std::string k = t.key();
  for (size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].key() == k) return static_cast<int>(i);
  return std::nullopt;
}

TvGraph build_graph(const std::vector<Transvection>& Y) {
  std::vector<Transvection> verts;
  std::unordered_set<std::string> seen;
  for (const Transvection& t : Y) {
    if (seen.insert(t.key()).second) verts.push_back(t);
  }
  return TvGraph(std::move(verts));
}

Fq weight(const TvGraph& g, const std::vector<int>& tuple) {
  if (tuple.size() < 2) fail(Err::InvalidArgument, "weight needs length >= 2");
  const Field& F = g.field();
  Fq w = F.one();
  for (size_t i = 0; i < tuple.size(); ++i) {
    int a = tuple[i], b = tuple[(i + 1) % tuple.size()];
    w = w * g.label(a, b);
    if (w.is_zero()) return F.zero();
  }
  return w;
}

Fq weight_reversed(const TvGraph& g, const std::vector<int>& tuple) {
  std::vector<int> rev(tuple.rbegin(), tuple.rend());
  return weight(g, rev);
}

Fq d_s(const TvGraph& g, const std::vector<int>& tuple) {
  Fq fwd = weight(g, tuple), bwd = weight_reversed(g, tuple);
  if (tuple.size() % 2 == 0) bwd = -bwd;  // (-1)^(k+1)
  return fwd + bwd;
}

Fq d_u(const TvGraph& g, const std::vector<int>& tuple) {
  const Field& F = g.field();
  if (!F.q_is_square()) fail(Err::QNotSquare, "d_u needs square q");
  Fq fwd = weight(g, tuple), bwd = F.frobenius_sqrtq(weight_reversed(g, tuple));
  if (tuple.size() % 2 == 0) bwd = -bwd;
  return fwd + bwd;
}

Fq P_u(const TvGraph& g, const std::vector<int>& cycle) {
  const Field& F = g.field();
  if (!F.q_is_square()) fail(Err::QNotSquare, "P_u needs square q");
  Fq fwd = weight(g, cycle), bwd = weight_reversed(g, cycle);
  if (fwd.is_zero() || bwd.is_zero()) fail(Err::NotTwoWayCycle, "P_u needs a two-way cycle");
  return fwd / F.frobenius_sqrtq(bwd);
}

std::vector<int> bfs_dist(const TvGraph& g, int src, bool twoway_only) {
  const auto& adj = twoway_only ? g.twoway_edges() : g.out_edges();
  std::vector<int> dist(static_cast<size_t>(g.size()), -1);
  std::deque<int> q{src};
  dist[static_cast<size_t>(src)] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

GraphMetrics graph_metrics(const TvGraph& g) {
  GraphMetrics m;
  int diam = 0, tdiam = 0;
  bool sc = true, tc = true;
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> d = bfs_dist(g, s, false);
    std::vector<int> t = bfs_dist(g, s, true);
    for (int v = 0; v < g.size(); ++v) {
      if (d[static_cast<size_t>(v)] < 0)
        sc = false;
      else
        diam = std::max(diam, d[static_cast<size_t>(v)]);
      if (t[static_cast<size_t>(v)] < 0)
        tc = false;
      else
        tdiam = std::max(tdiam, t[static_cast<size_t>(v)]);
    }
  }
  m.strongly_connected = sc;
  if (sc) m.diameter = diam;
  m.twoway_connected = tc;
  if (tc) m.twoway_diameter = tdiam;
  return m;
}

Parts parts(const std::vector<Transvection>& Y) {
  Parts P;
  if (Y.empty()) return P;
  std::unordered_set<std::string> seen_u, seen_phi;
  for (const Transvection& t : Y) {
    if (seen_u.insert(vec_key(t.u)).second) P.V_part.push_back(t.u);
    if (seen_phi.insert(vec_key(t.phi.transpose())).second) P.Vstar_part.push_back(t.phi);
  }
  P.V_span_dim = span_dim(P.V_part);
  std::vector<Vec> duals;
  for (const Covec& c : P.Vstar_part) duals.push_back(c.transpose());
  P.Vstar_span_dim = span_dim(duals);
  return P;
}

void for_each_cycle(const TvGraph& g, int min_len, int max_len,
                    const std::function<bool(const std::vector<int>&, const Fq&)>& visit,
                    uint64_t budget) {
  const int m = g.size();
  uint64_t visited = 0;
  std::vector<int> path;
  std::vector<bool> used(static_cast<size_t>(m), false);
  const Field& F = g.field();
  bool stop = false;

  // least vertex first: every other vertex on the path has a larger index
  std::function<void(int, Fq)> dfs = [&](int start, Fq acc) {
    if (stop) return;
    int cur = path.back();
    int len = static_cast<int>(path.size());
    if (len >= min_len && g.has_edge(cur, start)) {
      Fq w = acc * g.label(cur, start);
      if (!visit(path, w)) {
        stop = true;
        return;
      }
    }
    if (len == max_len) return;
    for (int nxt : g.out_edges()[static_cast<size_t>(cur)]) {
      if (nxt <= start || used[static_cast<size_t>(nxt)]) continue;
      if (++visited > budget) fail(Err::TooManyVertices, "cycle enumeration budget exceeded");
      used[static_cast<size_t>(nxt)] = true;
      path.push_back(nxt);
      dfs(start, acc * g.label(cur, nxt));
      path.pop_back();
      used[static_cast<size_t>(nxt)] = false;
      if (stop) return;
    }
  };

  for (int s = 0; s < m && !stop; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), false);
    used[static_cast<size_t>(s)] = true;
    dfs(s, F.one());
  }
}

Subfield L_k(const TvGraph& g, int k, uint64_t budget) {
  if (k < 2) fail(Err::InvalidArgument, "L_k needs k >= 2");
  const Field& F = g.field();
  int d = 1;
  for_each_cycle(
      g, 2, k,
      [&](const std::vector<int>&, const Fq& w) {
        d = std::lcm(d, F.element_degree(w));
        return d != F.k;  // stop early once the full field is generated
      },
      budget);
  return Subfield{d};
}

QuadCoeffs af_coeffs(const TvGraph& g, int s1, int s2, int s3, int s4) {
  const Field& F = g.field();
  QuadCoeffs qc;
  auto w = [&](std::vector<int> t) { return weight(g, t); };
  qc.A = w({s1, s2, s3});
  qc.B = w({s1, s2, s4, s3}) - w({s1, s2, s3, s4});
  qc.C = -w({s3, s4}) * w({s1, s2, s4});
  if (F.q_is_square()) {
    qc.has_du = true;
    qc.D = d_u(g, {s1, s2, s3});
    qc.E = w({s1, s2, s4, s3}) - w({s1, s2, s3, s4}) +
           F.frobenius_sqrtq(w({s2, s1, s4, s3})) - F.frobenius_sqrtq(w({s2, s1, s3, s4}));
    qc.F = -w({s3, s4}) * d_u(g, {s1, s2, s4});
  }
  return qc;
}

Fq weight_from_reps(const std::vector<std::pair<Vec, Covec>>& reps) {
  if (reps.size() < 2) fail(Err::InvalidArgument, "weight needs length >= 2");
  const Field& F = *reps[0].first(0).field();
  Fq w = F.one();
  for (size_t i = 0; i < reps.size(); ++i) {
    const auto& [u, phi] = reps[i];
    const auto& next_phi = reps[(i + 1) % reps.size()].second;
    w = w * (next_phi * u)(0, 0);
  }
  return w;
}

std::string to_dot(const TvGraph& g) {
  std::ostringstream os;
  os << "digraph tv {\n";
  for (int i = 0; i < g.size(); ++i) os << "  v" << i << ";\n";
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      if (!g.has_edge(i, j)) continue;
      if (g.two_way(i, j)) {
        if (i < j)
          os << "  v" << i << " -> v" << j << " [dir=none, label=\"" << g.label(i, j).str()
             << "/" << g.label(j, i).str() << "\"];\n";
      } else {
        os << "  v" << i << " -> v" << j << " [label=\"" << g.label(i, j).str() << "\"];\n";
      }
    }
  os << "}\n";
  return os.str();
}

}  // namespace tvg
