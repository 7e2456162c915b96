#pragma once

#include <string>
#include <vector>

#include "spbw/catalog.hpp"
#include "spbw/definition.hpp"
#include "spbw/theorems.hpp"

namespace spbw {

// One line, e.g. "f=(0,1)*x1 + (0,1); g=(0,1)*x1 + (1,0); a0*b1=(0,1)".
std::string describe_witness(const SkewExtension& a, const Witness& w);

enum class Format { Human, Json, JsonTree };
// "human", "json", "json-like-tree"; throws DefinitionError otherwise.
Format format_from_name(const std::string& s);

// Machine documents carry no timings, so equal inputs give byte-identical output.
Json witness_json(const SkewExtension& a, const Witness& w);
Json verdict_json(const SkewExtension& a, const Verdict& v, unsigned D);
Json theorem_json(const TheoremReport& r);
Json suite_json(const std::vector<TheoremReport>& reports);
Json implication_json(const SkewExtension& a, const ImplicationReport& r, unsigned D);
Json expectation_json(const CatalogEntry& e);

std::string human_verdict(const SkewExtension& a, const Verdict& v);
std::string human_theorem(const TheoremReport& r);
std::string human_suite(const std::vector<TheoremReport>& reports);
std::string human_implication(const SkewExtension& a, const ImplicationReport& r, unsigned D);

// Json: compact single line. JsonTree: two-space indentation. Both end with a newline.
std::string emit(const Json& doc, Format f);

int exit_code(Status s);
int exit_code(TheoremStatus s);

}  // namespace spbw
