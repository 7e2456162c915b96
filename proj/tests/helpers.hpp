#pragma once

#include <set>
#include <string>
#include <vector>

#include "spbw/catalog.hpp"
#include "spbw/expr.hpp"
#include "spbw/ring.hpp"

namespace testing_util {

inline spbw::RingPtr z(std::uint32_t n) { return spbw::validate_ring(spbw::RingDescriptor::modular(n)); }
inline spbw::RingPtr z2xz2() {
  using spbw::RingDescriptor;
  return spbw::validate_ring(RingDescriptor::product({RingDescriptor::modular(2), RingDescriptor::modular(2)}));
}
inline spbw::RingPtr ut2z2() {
  using spbw::RingDescriptor;
  return spbw::validate_ring(RingDescriptor::upper_triangular(RingDescriptor::modular(2)));
}

inline std::set<std::string> names(const spbw::Ring& R, const std::vector<spbw::Element>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(R.format(x));
  return out;
}

inline spbw::ExtensionPtr entry(const std::string& name) { return spbw::catalog_load(name).extension; }

inline bool is_finite_entry(const std::string& name) { return entry(name)->ring().is_finite(); }

inline std::vector<std::string> finite_entries() {
  std::vector<std::string> out;
  for (const auto& n : spbw::catalog_names())
    if (is_finite_entry(n)) out.push_back(n);
  return out;
}

inline spbw::SkewPoly P(const spbw::ExtensionPtr& a, const std::string& s) { return spbw::parse_poly(*a, s); }

}  // namespace testing_util
