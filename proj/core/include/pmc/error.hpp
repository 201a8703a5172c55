#pragma once

#include <stdexcept>
#include <string>

namespace pmc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mismatched or invalid ring parameters.
class ParameterError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
// Truncation too coarse, or results disagree between N and N+2.
class PrecisionError : public Error { public: using Error::Error; };
class ContainmentError : public Error { public: using Error::Error; };
// Module is not generalized invertible.
class RankError : public Error { public: using Error::Error; };
class ShapeError : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class MoveNotApplicable : public Error { public: using Error::Error; };
class MissingInput : public Error { public: using Error::Error; };
class UnsupportedCase : public Error { public: using Error::Error; };
class InvariantViolation : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class LimitExceeded : public Error { public: using Error::Error; };

}  // namespace pmc
