#ifndef EWCI_ERROR_HPP
#define EWCI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ewci {

enum class ErrorKind {
    InvalidInput,
    EmptySubset,
    IndexOutOfRange,
    Overflow,
    WrongArity,
    SequenceTooShort,
    SplitOutOfRange,
    HypothesesViolated,
    SplitImpossible,
    PreconditionViolated,
    CounterexampleFound,
    TheoremCounterexample,
};

std::string_view to_string(ErrorKind kind);

// Base of every exception thrown by the library. The kind is what callers
// branch on; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

} // namespace ewci

#endif // EWCI_ERROR_HPP
