#include "twograph/errors.hpp"

namespace twograph {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NonInjectiveSources: return "NonInjectiveSources";
    case Errc::DanglingId: return "DanglingId";
    case Errc::SortMismatch: return "SortMismatch";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotStratified: return "NotStratified";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::WrongClass: return "WrongClass";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::VariantMismatch: return "VariantMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ClassMismatch: return "ClassMismatch";
    case Errc::NotATree: return "NotATree";
    case Errc::NotSeriesParallel: return "NotSeriesParallel";
    case Errc::NotDisorientedSeriesParallel: return "NotDisorientedSeriesParallel";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotTreewidth2: return "NotTreewidth2";
    case Errc::ParseError: return "ParseError";
    case Errc::NotInClassDomain: return "NotInClassDomain";
    case Errc::UnknownVerb: return "UnknownVerb";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace twograph
