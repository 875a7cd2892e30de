#ifndef OPGB_ERRORS_HPP
#define OPGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opgb {

// Base for everything thrown by the library.  Parse-shaped failures derive
// from ParseError so the CLI can map them to its config exit code.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

#define OPGB_DEFINE_ERROR(NAME, BASE)                       \
    struct NAME : BASE {                                    \
        explicit NAME(const std::string& what) : BASE(#NAME ": " + what) {} \
    }

OPGB_DEFINE_ERROR(InvalidTree, Error);
OPGB_DEFINE_ERROR(InvalidComposition, Error);
OPGB_DEFINE_ERROR(SlotOutOfRange, Error);
OPGB_DEFINE_ERROR(LengthMismatch, Error);
OPGB_DEFINE_ERROR(MissingGenerator, Error);
OPGB_DEFINE_ERROR(ArityMismatch, Error);
OPGB_DEFINE_ERROR(WrongSignature, Error);
OPGB_DEFINE_ERROR(ZeroPolynomial, Error);
OPGB_DEFINE_ERROR(NotAnOverlap, Error);
OPGB_DEFINE_ERROR(UnknownLetter, ParseError);
OPGB_DEFINE_ERROR(UnknownName, ParseError);
OPGB_DEFINE_ERROR(UnsupportedArity, Error);
OPGB_DEFINE_ERROR(UnknownSymmetry, ParseError);

#undef OPGB_DEFINE_ERROR

} // namespace opgb

#endif
