#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace magh {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A matrix that fails one of the metric axioms, with witness indices.
class MetricError : public Error {
public:
    enum class Kind {
        NotSquare,
        LabelMismatch,
        AsymmetricAt,
        NegativeOrZeroOffDiagonal,
        NonzeroDiagonal,
        TriangleViolation,
        NTooSmall,
        NegativeEntry,
    };

    MetricError(Kind kind, std::vector<std::size_t> witness, std::string const& what)
        : Error(what), kind_(kind), witness_(std::move(witness))
    {
    }

    Kind kind() const { return kind_; }
    std::vector<std::size_t> const& witness() const { return witness_; }

private:
    Kind kind_;
    std::vector<std::size_t> witness_;
};

class EnumerationCapExceeded : public Error {
public:
    EnumerationCapExceeded(std::uint64_t requested, std::uint64_t cap)
        : Error("enumeration of " + std::to_string(requested) + " chains exceeds cap " +
                std::to_string(cap) + " (raise with --cap or MAGH_CAP)"),
          requested_(requested), cap_(cap)
    {
    }

    std::uint64_t requested() const { return requested_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

class DegreeOutOfRange : public Error {
public:
    DegreeOutOfRange(int degree, int lo, int hi)
        : Error("degree " + std::to_string(degree) + " outside complex range [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]")
    {
    }
};

class SamePoint : public Error {
public:
    explicit SamePoint(std::size_t p)
        : Error("interval endpoints must differ (both are " + std::to_string(p) + ")")
    {
    }
};

/// Raised when a frame's basis is not closed under the boundary. Always a bug.
class NotASubcomplex : public Error {
public:
    using Error::Error;
};

} // namespace magh
