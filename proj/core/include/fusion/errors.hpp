#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusion {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Malformed or inconsistent user input (bad shapes, unparsable data).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("InputError", what) {}
};

enum class AxiomKind { Shape, Unit, DualPairing, Involution, Associativity, Frobenius };

const char* axiomKindName(AxiomKind k);

struct Violation {
    AxiomKind kind;
    std::vector<std::size_t> witness;
    std::string detail;
};

class AxiomViolation : public Error {
public:
    AxiomViolation(std::vector<Violation> v, std::size_t total);
    const std::vector<Violation>& violations() const noexcept { return violations_; }
    // Total count may exceed violations().size() when witnesses were capped.
    std::size_t total() const noexcept { return total_; }
    bool has(AxiomKind k) const;

private:
    std::vector<Violation> violations_;
    std::size_t total_;
};

#define FUSION_SIMPLE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    };

FUSION_SIMPLE_ERROR(NonIntegralMultiplicity)
FUSION_SIMPLE_ERROR(NotCommutative)
FUSION_SIMPLE_ERROR(DegenerateSpectrum)
FUSION_SIMPLE_ERROR(NotIntegral)
FUSION_SIMPLE_ERROR(VerificationFailed)
FUSION_SIMPLE_ERROR(ExtensionObstructed)
FUSION_SIMPLE_ERROR(Inconsistent)
FUSION_SIMPLE_ERROR(SearchBudgetExceeded)
FUSION_SIMPLE_ERROR(InternalInconsistency)
FUSION_SIMPLE_ERROR(ClosureViolation)
FUSION_SIMPLE_ERROR(NonIntegralFusion)
FUSION_SIMPLE_ERROR(NegativeFusion)
FUSION_SIMPLE_ERROR(SingularSMatrix)
FUSION_SIMPLE_ERROR(GroupTooLarge)
FUSION_SIMPLE_ERROR(UnknownEntry)
FUSION_SIMPLE_ERROR(Overflow)

#undef FUSION_SIMPLE_ERROR

}  // namespace fusion
