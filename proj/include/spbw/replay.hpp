#pragma once

#include "spbw/algebra.hpp"
#include "spbw/verdict.hpp"

namespace spbw {

// Re-checks a witness straight from the property's definition. Shares no code with the
// search loops: products go through the generic normal-form engine and ring operations.
bool replay(const ExtensionPtr& a, const Witness& w);
// Classical witnesses only (reduced, abelian, ifp, baer family) over the ring itself.
bool replay_classical(const Ring& r, const Witness& w);

}  // namespace spbw
