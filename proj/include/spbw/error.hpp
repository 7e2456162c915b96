#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spbw {

enum class ErrorCode {
  AxiomViolation,
  InvalidTable,
  UnsupportedInfinite,
  SizeCapExceeded,
  ClosureDiverges,
  PresentationInconsistent,
  RewriteBudgetExceeded,
  HypothesesFail,
  SearchSpaceCapExceeded,
  UnknownEntry,
  NotOre,
  DenominatorNotRegular,
  SigmaDoesNotPreserveS,
  RingMismatch,
  ParseError,
  DefinitionError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define SPBW_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorCode::Name, what) {} \
  };

SPBW_DEFINE_ERROR(AxiomViolation)
SPBW_DEFINE_ERROR(InvalidTable)
SPBW_DEFINE_ERROR(UnsupportedInfinite)
SPBW_DEFINE_ERROR(SizeCapExceeded)
SPBW_DEFINE_ERROR(ClosureDiverges)
SPBW_DEFINE_ERROR(PresentationInconsistent)
SPBW_DEFINE_ERROR(RewriteBudgetExceeded)
SPBW_DEFINE_ERROR(HypothesesFail)
SPBW_DEFINE_ERROR(SearchSpaceCapExceeded)
SPBW_DEFINE_ERROR(UnknownEntry)
SPBW_DEFINE_ERROR(NotOre)
SPBW_DEFINE_ERROR(DenominatorNotRegular)
SPBW_DEFINE_ERROR(SigmaDoesNotPreserveS)
SPBW_DEFINE_ERROR(RingMismatch)
SPBW_DEFINE_ERROR(ParseError)
SPBW_DEFINE_ERROR(DefinitionError)

#undef SPBW_DEFINE_ERROR

// Knobs shared by validation and the exhaustive deciders.
struct Limits {
  std::size_t ring_size_cap = 256;
  std::size_t ideal_ring_cap = 64;
  std::uint64_t multiplication_cap = std::uint64_t{1} << 25;
  std::uint64_t rewrite_budget = 1000000;
  unsigned alpha_cap = 8;
  unsigned threads = 1;
  std::uint64_t seed = 20240229;
  std::size_t random_pairs = 10000;
};

}  // namespace spbw
