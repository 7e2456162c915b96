#pragma once

#include <vector>

#include "spbw/ring.hpp"
#include "spbw/verdict.hpp"

namespace spbw {

enum class Side { Left, Right };

struct Ideal {
  std::vector<Element> elements;  // ascending index
  std::vector<Element> generators;
  bool is_left = false;
  bool is_right = false;
  bool is_two_sided = false;

  bool contains(const Element& a) const;
  bool operator==(const Ideal& o) const { return elements == o.elements; }
};

// {r : s·r = 0 for every s}; an empty subset is treated as {0}.
std::vector<Element> right_annihilator(const Ring& ring, const std::vector<Element>& subset);
std::vector<Element> left_annihilator(const Ring& ring, const std::vector<Element>& subset);

// Finite rings only; structured rings throw UnsupportedInfinite (see Ring::closed_form_idempotents).
std::vector<Element> idempotents(const Ring& ring);
std::vector<Element> semicentral_idempotents(const Ring& ring, Side side);
std::vector<Element> central_idempotents(const Ring& ring);
// e·R as a sorted element list.
std::vector<Element> principal_right_ideal(const Ring& ring, const Element& e);

// Builds the ideal spanned additively by the given elements and computes its side flags.
Ideal make_ideal(const Ring& ring, const std::vector<Element>& elements, std::vector<Element> generators = {});
// Smallest two-sided ideal containing the generators.
Ideal two_sided_ideal_generated(const Ring& ring, const std::vector<Element>& generators);
// Every two-sided ideal, sorted by size and then by element indices.
std::vector<Ideal> enumerate_two_sided_ideals(const Ring& ring, const Limits& limits = {});

Verdict decide_classical(const Ring& ring, PropertyId property, const Limits& limits = {});

// Checks whether `set` equals e·R for some idempotent e; returns that e.
std::optional<Element> generating_idempotent(const Ring& ring, const std::vector<Element>& set);

}  // namespace spbw
