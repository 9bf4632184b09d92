#include "affgr/error.hpp"

namespace affgr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::NotSublattice: return "NotSublattice";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::AmbientG2: return "AmbientG2";
    case ErrorCode::NotAlmostSimple: return "NotAlmostSimple";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace affgr
