#include "ratpow/breakdown.hpp"

namespace ratpow {

RpBreakdown rp_with_breakdown(const RationalPowerList& factors) {
  RpBreakdown out;
  out.total = factors.factors.size();
  for (const auto& key : factors.class_keys) {
    out.per_class[key] = 0;
    out.per_class_length_profile[key];
  }
  for (const auto& f : factors.factors) {
    const Word& key = factors.class_key(f);
    ++out.per_class[key];
    ++out.per_class_length_profile[key][f.total_len];
  }
  return out;
}

RpBreakdown rp_with_breakdown(const Word& w) {
  return rp_with_breakdown(enumerate_rational_power_factors(w));
}

std::map<std::size_t, std::size_t> qclass_length_profile(const RpBreakdown& breakdown,
                                                         const Word& class_key) {
  const auto it = breakdown.per_class_length_profile.find(class_key);
  if (it == breakdown.per_class_length_profile.end()) throw Error("unknown class");
  return it->second;
}

std::map<std::size_t, std::size_t> qclass_length_profile(const Word& w, const Word& class_key) {
  return qclass_length_profile(rp_with_breakdown(w), class_key);
}

}  // namespace ratpow
