#pragma once

#include <stdexcept>
#include <string>

namespace flatbu {

/// (H1, orientability) matches no catalog manifold, or more than one.
class AmbiguousOrUnknown : public std::runtime_error {
 public:
  explicit AmbiguousOrUnknown(const std::string& what) : std::runtime_error(what) {}
};

/// Two epimorphism classes share cover and index and no certificate merges them.
class IncompleteSeparation : public std::runtime_error {
 public:
  explicit IncompleteSeparation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flatbu
