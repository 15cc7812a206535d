#pragma once

#include <stdexcept>
#include <string>

namespace sepcrit {

// Every validation failure in the library derives from Error so callers can
// separate "bad input" from genuine logic faults.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};
struct TraceNotOne : Error {
  using Error::Error;
};
struct NotPositive : Error {
  using Error::Error;
};
struct DimMismatch : Error {
  using Error::Error;
};
struct BadParty : Error {
  using Error::Error;
};
struct NotBipartite : Error {
  using Error::Error;
};
struct BadDimension : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct BadMode : Error {
  using Error::Error;
};

}  // namespace sepcrit
