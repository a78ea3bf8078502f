#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

// Base of every library error; `category()` is the stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(category + ": " + what), category_(std::move(category)) {}
    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

// category: DuplicateHalfEdge, UnpairedHalfEdge, FixedPointPairing, Disconnected, BadMultiplicity
struct ValidationError : Error {
    using Error::Error;
};

// category: UnknownEdge, UnknownVertex, UnknownHalfEdge
struct LookupError : Error {
    using Error::Error;
};

// category: NotAWalk, NoSignature, SignMismatch
struct WalkError : Error {
    using Error::Error;
};

struct GraphMismatch : Error {
    explicit GraphMismatch(const std::string& what) : Error("GraphMismatch", what) {}
};

struct NotEnumerable : Error {
    explicit NotEnumerable(const std::string& what) : Error("NotEnumerable", what) {}
};

struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& what)
        : Error("InternalInvariantViolation", what) {}
};

// category: NotShortString, SummandOverlap, Disconnected
struct ComplexError : Error {
    using Error::Error;
};

struct InvalidString : Error {
    explicit InvalidString(const std::string& what) : Error("InvalidString", what) {}
};

}  // namespace brauer
