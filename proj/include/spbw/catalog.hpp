#pragma once

#include <string>
#include <vector>

#include "spbw/definition.hpp"
#include "spbw/verdict.hpp"

namespace spbw {

// How an expected status was obtained.
enum class Basis { Construction, HandComputation, Search };
const char* basis_name(Basis b);

struct Expectation {
  PropertyId property;
  std::string status;  // status_label form, e.g. "VerifiedUpTo(2)"
  unsigned degree;     // D passed to the decider
  Basis basis;
};

// Expected tables are stated at this degree bound.
inline constexpr unsigned kCatalogDegree = 2;

struct CatalogEntry {
  std::string name;
  std::string note;
  Json definition;
  ExtensionPtr extension;
  std::vector<Expectation> expected;
};

const std::vector<std::string>& catalog_names();
// Throws UnknownEntry.
CatalogEntry catalog_load(const std::string& name, const Limits& limits = {});
const std::vector<Expectation>& expected_table(const std::string& name);

}  // namespace spbw
