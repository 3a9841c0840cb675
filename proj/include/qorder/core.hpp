#pragma once

#include <stdexcept>
#include <string>

namespace qorder {

/// Index of an object in a base quantaloid.
using Obj = int;
/// Index of an element inside one hom-lattice carrier.
using Elem = int;

/// Thrown on violated operation preconditions (bad ids, shape mismatches,
/// structures of the wrong class). Malformed *data* that an operation is
/// meant to diagnose (validators) yields a report instead.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qorder
