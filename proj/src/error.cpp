#include "nashtoric/error.hpp"

namespace nashtoric {

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_input: return "BadInput";
    case errc::non_positive_element: return "NonPositiveElement";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::singleton_input: return "SingletonInput";
    case errc::iteration_cap: return "IterationCap";
    case errc::already_smooth: return "AlreadySmooth";
    case errc::lattice_not_full: return "LatticeNotFull";
    case errc::origin_in_hull: return "OriginInHull";
    case errc::singular_pivot: return "SingularPivot";
    case errc::unsupported_dimension: return "UnsupportedDimension";
    case errc::dimension_mismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

}  // namespace nashtoric
