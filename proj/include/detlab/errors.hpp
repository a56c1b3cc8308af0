/*
 * Error hierarchy for detlab.
 *
 * Three coarse classes, mirrored by the CLI exit codes:
 *   InputError      -> exit 2 (malformed or out-of-range inputs)
 *   ContractError   -> exit 3 (preconditions of an operation violated,
 *                              e.g. a polynomial outside the required ideal)
 *   BudgetExceeded  -> exit 4 (symbolic expansion hit the term budget)
 */
#ifndef DETLAB_ERRORS_HPP
#define DETLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct ContractError : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// --- input validation -------------------------------------------------
struct ParseError : InputError { using InputError::InputError; };
struct EntryOutOfBounds : InputError { using InputError::InputError; };
struct ShapeOutOfBounds : InputError { using InputError::InputError; };
struct OddOrder : InputError { using InputError::InputError; };
struct NotSkew : InputError { using InputError::InputError; };
struct BadOmega : InputError { using InputError::InputError; };
struct VariableMismatch : InputError { using InputError::InputError; };
struct InconsistentSchedule : InputError { using InputError::InputError; };
struct CondenserTooSmall : InputError { using InputError::InputError; };
struct DegreeBoundExceeded : InputError { using InputError::InputError; };
struct ExponentOverflow : InputError { using InputError::InputError; };

// --- contract violations ----------------------------------------------
struct ZeroPolynomial : ContractError { using ContractError::ContractError; };
struct NotInIdeal : ContractError { using ContractError::ContractError; };
struct TooManyVertices : ContractError { using ContractError::ContractError; };
struct NotAnApproximation : ContractError { using ContractError::ContractError; };
struct UnsupportedCharacteristic : ContractError { using ContractError::ContractError; };
struct CertificateInvalid : ContractError { using ContractError::ContractError; };
struct NoWitness : ContractError { using ContractError::ContractError; };
struct MembershipDisagreement : ContractError { using ContractError::ContractError; };
struct VerificationFailed : ContractError { using ContractError::ContractError; };

} // namespace detlab

#endif
