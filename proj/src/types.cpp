#include "vflab/types.hpp"

#include "vflab/errors.hpp"

namespace vflab {

void PhysicalParams::validate() const {
  if (!(nu > 0.0) || !(zeta > 0.0) || !(xi > 0.0) || !(c > 0.0)) {
    throw DomainError("physical parameters must all be strictly positive");
  }
}

}  // namespace vflab
