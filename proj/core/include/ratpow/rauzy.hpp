#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ratpow/breakdown.hpp"
#include "ratpow/factor_index.hpp"
#include "ratpow/rational_powers.hpp"
#include "ratpow/word.hpp"

namespace ratpow {

struct RauzyEdge {
  Word label;  // length order+1
  Word from;   // its prefix
  Word to;     // its suffix
};

/// Γ_i(w): vertices Fac_i(w), edges Fac_{i+1}(w).
struct RauzyGraph {
  std::size_t order = 0;
  std::set<Word> vertices;
  std::vector<RauzyEdge> edges;  // sorted by label

  /// Graphviz rendering; labels are the factor texts.
  std::string to_dot() const;
};

/// Materializes the graph from the factor sets. Throws for order 0 or > |w|.
RauzyGraph rauzy_graph(const Word& w, std::size_t order);

struct SmallCircuit {
  Word class_key;
  std::size_t order = 0;

  friend bool operator==(const SmallCircuit&, const SmallCircuit&) = default;
};

/// Classes among `candidate_keys` whose order-i and order-(i+1) factor sets of
/// the periodic word are all factors of the source. Answers by membership
/// queries only.
std::vector<SmallCircuit> detect_small_circuits_at_order(const FactorIndex& index,
                                                         std::span<const Word> candidate_keys,
                                                         std::size_t order);
/// Candidates are the root classes of the word's rational-power factors.
std::vector<SmallCircuit> detect_small_circuits_at_order(const Word& w, std::size_t order);

/// Per-class statistics. A class is active at orders [root_len, active_end()).
struct ClassStats {
  Word class_key;
  std::size_t root_len = 0;     // ℓ
  std::size_t circuits = 0;     // m = M(u)
  std::size_t qclass_size = 0;  // |QClass_w(u)|

  std::size_t active_end() const noexcept { return root_len + circuits; }  // A
  bool active_at(std::size_t order) const noexcept {
    return order >= root_len && order < active_end();
  }
};

/// One entry per class whose square occurs in w, sorted by A descending then key.
/// The number of circuits is read off matching statistics of u^ω against the
/// source: C(u, i) exists iff every conjugate's periodic extension of length
/// i+1 occurs.
std::vector<ClassStats> class_stats(const FactorIndex& index, const RationalPowerList& factors,
                                    const RpBreakdown& breakdown);
std::vector<ClassStats> class_stats(const Word& w);

struct ScProfile {
  std::vector<std::size_t> per_order;          // entry i-1 is sc_i, i = 1..n
  std::size_t total = 0;
  std::vector<std::ptrdiff_t> complexity_gap;  // entry i-1 is |Fac_{i+1}| - |Fac_i| + 1
};

ScProfile sc_profile(const FactorIndex& index, std::span<const ClassStats> stats);
ScProfile sc_profile(const Word& w);

}  // namespace ratpow
