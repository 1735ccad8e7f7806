#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace superq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A bracket [e_i, e_j] has a component outside the block of parity p_i + p_j.
class ParityViolation : public Error {
public:
    using Error::Error;
};

/// The table contradicts [X,Y] = -(-1)^{xy} [Y,X].
class AntisymmetryViolation : public Error {
public:
    using Error::Error;
};

/// Super Jacobi identity fails on the basis triple (i, j, k).
class JacobiViolation : public Error {
public:
    JacobiViolation(std::array<std::size_t, 3> triple, std::string residual, const std::string& what)
        : Error(what), triple_(triple), residual_(std::move(residual)) {}

    const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }
    const std::string& residual() const noexcept { return residual_; }

private:
    std::array<std::size_t, 3> triple_;
    std::string residual_;
};

/// A construction was called with inputs that break one of its stated hypotheses.
/// `condition` names the hypothesis, `witness` describes the offending residual.
class PreconditionError : public Error {
public:
    PreconditionError(std::string condition, std::string witness)
        : Error(condition + (witness.empty() ? std::string{} : ": " + witness)),
          condition_(std::move(condition)), witness_(std::move(witness)) {}

    const std::string& condition() const noexcept { return condition_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string condition_;
    std::string witness_;
};

/// super_nilindex called on an algebra whose even action does not terminate at zero.
class NotNilpotentAction : public Error {
public:
    using Error::Error;
};

/// A result that a theorem guarantees could not be reproduced. Always a bug or bad input data.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace superq
