#ifndef PARTPAT_ERRORS_HPP
#define PARTPAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partpat {

// Failure while parsing partition text.  position is a 0-based byte offset
// into the input string.
class PartitionParseError : public std::runtime_error {
public:
    PartitionParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An exactness guarantee was violated: a coefficient that must be an integer
// is not, or a recurrence step does not divide exactly.  Signals a bug in a
// formula transcription rather than bad user input.
class IntegrityError : public std::runtime_error {
public:
    IntegrityError(const std::string& message, long index)
        : std::runtime_error(message), index_(index) {}

    long index() const { return index_; }

private:
    long index_;
};

// The leading polynomial of a recurrence vanishes at an index required to
// extend a sequence.
class SingularIndexError : public std::runtime_error {
public:
    SingularIndexError(const std::string& message, long index)
        : std::runtime_error(message), index_(index) {}

    long index() const { return index_; }

private:
    long index_;
};

} // namespace partpat

#endif
