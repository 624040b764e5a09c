#pragma once

#include <stdexcept>
#include <string>

namespace flagcalc {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class UnsupportedType : public Error {
   public:
    using Error::Error;
};

class BadIndex : public Error {
   public:
    using Error::Error;
};

class BadMask : public Error {
   public:
    using Error::Error;
};

class NotReduced : public Error {
   public:
    using Error::Error;
};

class PreconditionViolated : public Error {
   public:
    using Error::Error;
};

/// An identity that holds by construction failed; indicates an arithmetic bug.
class InternalError : public Error {
   public:
    using Error::Error;
};

/// Mathematical inconsistencies. The CLI maps both to exit code 3.
class OracleInconsistency : public Error {
   public:
    using Error::Error;
};

class NotInSpan : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg), position_(pos) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace flagcalc
