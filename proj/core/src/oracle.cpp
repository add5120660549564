#include "ratpow/oracle.hpp"

#include <set>
#include <string>

namespace ratpow::oracle {
namespace {

// Smallest p such that s[i] == s[i + p] for all valid i, by direct scan.
std::size_t naive_period(const std::string& s) {
  for (std::size_t p = 1; p < s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < s.size() && ok; ++i) ok = s[i] == s[i + p];
    if (ok) return p;
  }
  return s.size();
}

}  // namespace

std::size_t rp_oracle(const Word& w) {
  if (w.size() > kOracleMaxLength) throw Error("oracle limit");
  const std::string text = w.text();
  std::set<std::string> factors;
  for (std::size_t i = 0; i < text.size(); ++i) {
    for (std::size_t len = 1; i + len <= text.size(); ++len) factors.insert(text.substr(i, len));
  }
  std::size_t count = 0;
  for (const auto& f : factors) {
    if (f.size() >= 2 * naive_period(f)) ++count;
  }
  return count;
}

}  // namespace ratpow::oracle
