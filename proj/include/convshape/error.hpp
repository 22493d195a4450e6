#pragma once

#include <stdexcept>
#include <string>

namespace convshape {

// Single exception type for all library errors; messages carry the context
// (line numbers, field names, labels) callers need for reporting.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace convshape
