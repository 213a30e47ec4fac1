#pragma once

#include <stdexcept>
#include <string>

namespace polydual {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInLattice : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };
struct OriginNotInterior : Error { using Error::Error; };
struct NotAVertex : Error { using Error::Error; };
struct WrongDegree : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct IndivisibleDegree : Error { using Error::Error; };
struct NotMagic : Error { using Error::Error; };
struct NotCoupled : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct NonReflexiveInput : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };

}  // namespace polydual
