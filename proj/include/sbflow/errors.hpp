#pragma once

#include <stdexcept>
#include <string>

namespace sbflow {

// Error taxonomy shared by all modules. The CLI maps validation-type errors
// to exit code 2 and numerical failures to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };        // argument outside mathematical domain
struct PoleError : Error { using Error::Error; };          // special function evaluated at a pole
struct PreconditionError : Error { using Error::Error; };  // operation contract violated
struct InputError : Error { using Error::Error; };         // inconsistent series / container input
struct ConvergenceError : Error { using Error::Error; };   // iterative scheme exceeded its budget
struct NumericsError : Error { using Error::Error; };      // non-finite value escaped a computation

} // namespace sbflow
