#pragma once

#include <stdexcept>
#include <string>

namespace tov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct DimensionCapError : Error {
    using Error::Error;
};
struct EmptySetError : Error {
    using Error::Error;
};
struct EpsilonRangeError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct SingularHessianError : Error {
    using Error::Error;
};
struct RankError : Error {
    using Error::Error;
};
struct DegenerateError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace tov
