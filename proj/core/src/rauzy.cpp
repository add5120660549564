#include "ratpow/rauzy.hpp"

#include <algorithm>
#include <sstream>

namespace ratpow {
namespace {

std::set<Word> factors_of_length(const Word& w, std::size_t len) {
  std::set<Word> out;
  for (std::size_t i = 0; i + len <= w.size(); ++i) out.insert(w.substr(i, len));
  return out;
}

}  // namespace

std::string RauzyGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph rauzy_" << order << " {\n";
  for (const auto& v : vertices) os << "  \"" << v.text() << "\";\n";
  for (const auto& e : edges) {
    os << "  \"" << e.from.text() << "\" -> \"" << e.to.text() << "\" [label=\"" << e.label.text()
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

RauzyGraph rauzy_graph(const Word& w, std::size_t order) {
  if (order == 0 || order > w.size()) throw Error("order out of range");
  RauzyGraph g;
  g.order = order;
  g.vertices = factors_of_length(w, order);
  for (const auto& label : factors_of_length(w, order + 1)) {
    g.edges.push_back({label, label.substr(0, order), label.substr(1, order)});
  }
  return g;
}

std::vector<SmallCircuit> detect_small_circuits_at_order(const FactorIndex& index,
                                                         std::span<const Word> candidate_keys,
                                                         std::size_t order) {
  if (order == 0 || order > index.source().size()) throw Error("order out of range");
  std::vector<SmallCircuit> out;
  for (const auto& key : candidate_keys) {
    if (key.size() > order) continue;
    bool present = true;
    for (const std::size_t len : {order, order + 1}) {
      for (const auto& f : class_factors_of_order(key, len)) {
        if (!index.contains(f)) {
          present = false;
          break;
        }
      }
      if (!present) break;
    }
    if (present) out.push_back({key, order});
  }
  return out;
}

std::vector<SmallCircuit> detect_small_circuits_at_order(const Word& w, std::size_t order) {
  const FactorIndex index(w);
  const RationalPowerList factors = enumerate_rational_power_factors(w);
  return detect_small_circuits_at_order(index, factors.class_keys, order);
}

std::vector<ClassStats> class_stats(const FactorIndex& index, const RationalPowerList& factors,
                                    const RpBreakdown& breakdown) {
  const std::size_t n = index.source().size();
  std::vector<ClassStats> out;
  out.reserve(factors.class_keys.size());
  for (const auto& key : factors.class_keys) {
    const std::size_t root_len = key.size();
    // Every conjugate starts inside the first root_len letters of u^ω; no
    // factor is longer than n.
    const Word periodic = rational_power_expand(key, root_len - 1 + n + 1);
    const auto reach = index.longest_factor_prefixes(periodic.letters());
    const std::size_t shortest = *std::min_element(reach.begin(), reach.begin() + static_cast<std::ptrdiff_t>(root_len));
    ClassStats stats;
    stats.class_key = key;
    stats.root_len = root_len;
    stats.circuits = shortest > root_len ? shortest - root_len : 0;
    const auto it = breakdown.per_class.find(key);
    stats.qclass_size = it == breakdown.per_class.end() ? 0 : it->second;
    out.push_back(std::move(stats));
  }
  std::sort(out.begin(), out.end(), [](const ClassStats& a, const ClassStats& b) {
    if (a.active_end() != b.active_end()) return a.active_end() > b.active_end();
    return a.class_key < b.class_key;
  });
  return out;
}

std::vector<ClassStats> class_stats(const Word& w) {
  const FactorIndex index(w);
  const RationalPowerList factors = enumerate_rational_power_factors(w);
  return class_stats(index, factors, rp_with_breakdown(factors));
}

ScProfile sc_profile(const FactorIndex& index, std::span<const ClassStats> stats) {
  const std::size_t n = index.source().size();
  ScProfile out;
  out.per_order.assign(n, 0);
  for (const auto& c : stats) {
    for (std::size_t order = c.root_len; order < c.active_end() && order <= n; ++order) {
      ++out.per_order[order - 1];
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    out.total += out.per_order[i - 1];
    out.complexity_gap.push_back(static_cast<std::ptrdiff_t>(index.distinct_count(i + 1)) -
                                 static_cast<std::ptrdiff_t>(index.distinct_count(i)) + 1);
  }
  return out;
}

ScProfile sc_profile(const Word& w) {
  const FactorIndex index(w);
  const auto stats = class_stats(w);
  return sc_profile(index, stats);
}

}  // namespace ratpow
