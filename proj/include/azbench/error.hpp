#ifndef AZBENCH_ERROR_HPP_
#define AZBENCH_ERROR_HPP_

#include <array>
#include <stdexcept>
#include <string>

namespace azbench {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or out-of-contract arguments.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // A multiplication table that is not a group. `triple` holds the first
  // violating (a, b, c); unused slots are -1.
  class StructuralError : public Error {
   public:
    StructuralError(std::string const& what, std::array<int, 3> triple)
        : Error(what), _triple(triple) {}

    std::array<int, 3> const& triple() const noexcept {
      return _triple;
    }

   private:
    std::array<int, 3> _triple;
  };

  // Desk-scale limits (table order, bit-vector width, enumeration size).
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  // A finite family that is too short for the pigeonhole or pair search.
  // This is an expected outcome for finite inputs, not a bug.
  class InsufficientFamily : public Error {
   public:
    using Error::Error;
  };

}  // namespace azbench

#endif  // AZBENCH_ERROR_HPP_
