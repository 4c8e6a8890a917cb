#ifndef MESF_ERRORS_HPP
#define MESF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mesf {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateGeometry : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct EmptyBasis : Error { using Error::Error; };
struct ZeroVariance : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct InvalidSmoothness : Error { using Error::Error; };
struct InvalidBandwidth : Error { using Error::Error; };
struct SelectionFailure : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct CellFailure : Error { using Error::Error; };

/// Singular local weighted design in a per-site regression.
struct LocalSingularity : Error {
  explicit LocalSingularity(int site_index)
      : Error("singular local design at site " + std::to_string(site_index)),
        site(site_index) {}
  int site;
};

}  // namespace mesf

#endif
