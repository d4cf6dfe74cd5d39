#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tvg/trans.hpp"

namespace tvg {

/// A letter is (generator index, sign); words evaluate left-to-right:
/// letters (a,+1)(b,-1) mean gens[a] * gens[b]^-1.
using Letter = std::pair<int, int>;
using Letters = std::vector<Letter>;

struct ClosureResult {
  uint64_t order = 0;
  bool truncated = false;
  std::vector<Mat> elements;  // BFS order, starting at the identity
};

/// BFS closure of <gens> under right multiplication; exact order when it
/// fits under cap, otherwise truncated (or CapExceeded if fail_on_cap).
ClosureResult closure_enumerate(const std::vector<Mat>& gens, uint64_t cap,
                                bool fail_on_cap = false);

/// Exact diameter of Cay(<gens>, gens) with the undirected convention
/// (words over gens and their inverses).  Primary implementation.
int cayley_diameter(const std::vector<Mat>& gens, uint64_t cap);
/// Independent implementation used to cross-check the primary one.
int cayley_diameter_check(const std::vector<Mat>& gens, uint64_t cap);

/// BFS word search inside the subgroup generated by block_gens: returns a
/// word over the gens (and inverses) for each target.  Deterministic;
/// throws BudgetExceeded when the state budget runs out before all targets
/// are found.
std::vector<Letters> block_word_search(const std::vector<Mat>& block_gens,
                                       const std::vector<Mat>& targets, uint64_t budget);

/// Incremental closure BFS: visit(g, word) for every element in BFS order
/// (identity first); stops early when visit returns false.  Returns false
/// when the budget ran out before exhaustion.
bool closure_bfs_visit(const std::vector<Mat>& gens,
                       const std::function<bool(const Mat&, const Letters&)>& visit,
                       uint64_t budget);

/// True iff no proper nonzero subspace is invariant under every element.
/// Enumerates all subspaces; guarded by q^n <= 10^6.
bool invariant_subspace_search(const std::vector<Transvection>& Y);
bool invariant_subspace_search_mats(const std::vector<Mat>& gens, const Field& F, int n);

uint64_t group_order(const GroupSpec& spec);
uint64_t sl2_order(uint64_t r);

/// An element of the group with the requested trace (Lemma-style explicit
/// witnesses); SU requires the trace to be reachable as -b^(q0-1) + (n-3).
Mat trace_witness(const GroupSpec& spec, const Fq& lambda);

Mat eval_letters(const std::vector<Mat>& gens, const std::vector<Mat>& gen_invs,
                 const Letters& w);

}  // namespace tvg
