#pragma once

#include <stdexcept>
#include <string>

namespace twograph {

enum class Errc {
  ArityMismatch,
  NonInjectiveSources,
  DanglingId,
  SortMismatch,
  UnknownSymbol,
  SizeLimitExceeded,
  NotStratified,
  NotNormalized,
  WrongClass,
  BoundExceeded,
  VariantMismatch,
  BudgetExceeded,
  ClassMismatch,
  NotATree,
  NotSeriesParallel,
  NotDisorientedSeriesParallel,
  Disconnected,
  NotTreewidth2,
  ParseError,
  NotInClassDomain,
  UnknownVerb,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace twograph
