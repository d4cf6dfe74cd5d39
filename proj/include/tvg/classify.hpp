#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvg/graph.hpp"

namespace tvg {

/// Thm-style irreducibility test: the V-parts span V, the V*-parts span V*,
/// and the transvection graph is strongly connected.
bool irreducible(const std::vector<Transvection>& Y);

/// Smallest subfield over which <Y> is realisable: the field generated by
/// the weights of all cycles.  Computed as the stabilized L_k after an
/// internal diameter-2 strengthening of a scratch copy (conjugates only, so
/// the generated subgroup and its trace field are unchanged).
Subfield defining_field(const std::vector<Transvection>& Y, uint64_t budget = 10'000'000);

enum class FamilyGuess { SL, Sp, SU, Undetermined };
const char* family_guess_name(FamilyGuess f);

struct ClassifyOptions {
  uint64_t seed = 1;
  uint64_t long_cycle_samples = 100'000;
  bool strict = false;          // require oracle confirmation for Sp/SU claims
  uint64_t oracle_cap = 2'000'000;
  uint64_t cycle_budget = 10'000'000;
};

struct ClassificationResult {
  bool irreducible = false;
  Subfield defining_subfield{1};
  FamilyGuess family = FamilyGuess::Undetermined;
  bool hypothesis_met = false;
  std::string note;
  /// certificates: vertex tuples of a non-symplectic / non-unitary cycle
  std::optional<std::vector<Transvection>> nonsymplectic_witness;
  std::optional<std::vector<Transvection>> nonunitary_witness;
};

/// Tolerant classifier: always returns a result; family stays Undetermined
/// when the Thm hypotheses (n >= 3, irreducible, weights generate F_q) fail.
ClassificationResult classify(const std::vector<Transvection>& Z, const ClassifyOptions& opts);

/// Strict variant: throws HypothesisUnmet when the hypotheses fail.
ClassificationResult classify_from_cycles(const std::vector<Transvection>& Z,
                                          const ClassifyOptions& opts);

struct GroupDescriptor {
  Subfield M{1};
  bool exceptional = false;     // M = F_9: conclusion withheld
  uint64_t predicted_order = 0; // |SL(2,M)|, or 120 in the exceptional case
};

/// Thm on <s^K, t^Lambda> for a two-way edge (s,t):
/// isomorphic to SL(2, M) + identity block with M = F_p(K, Lambda, w(s,t)),
/// unless M = F_9.
GroupDescriptor dickson_pair(const Transvection& s, Subfield K, const Transvection& t,
                             const std::vector<Fq>& Lambda);

}  // namespace tvg
