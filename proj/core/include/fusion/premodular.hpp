#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fusion/near_integral.hpp"
#include "fusion/ring.hpp"
#include "fusion/tolerance.hpp"

namespace fusion {

// exp(2 pi i num/den), kept reduced with 0 <= num < den.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    std::complex<double> value() const;
    RootOfUnity inverse() const;
    RootOfUnity pow(std::int64_t k) const;
    bool isOne() const noexcept { return num_ == 0; }
    std::string str() const;

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend auto operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
        return std::pair(a.num_ * b.den_, a.den_) <=> std::pair(b.num_ * a.den_, b.den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Unnormalized modular data: S[0][0] = 1 and row 0 holds the dimensions.
struct ModularDatum {
    std::vector<std::vector<std::complex<double>>> S;
    std::vector<RootOfUnity> T;
    std::vector<double> dims;
    std::vector<std::string> labels;

    std::size_t rank() const { return S.size(); }
    double globalDim() const;

    // Fills dims from row 0 when empty; throws InputError when invariants fail.
    void validate(double tol = 1e-9);
};

struct VerlindeResult {
    FusionRing ring;
    double globalDim = 0;
    double maxSnapError = 0;
};

VerlindeResult verlindeFusion(const ModularDatum& m, const Tolerance& tol = {});

std::pair<std::complex<double>, std::complex<double>> gaussSums(const std::vector<double>& dims,
                                                                const std::vector<RootOfUnity>& T);

struct BalancingViolation {
    std::size_t i, j;
    std::complex<double> expected;  // theta_i^-1 theta_j^-1 sum_k c_{i* j}^k d_k theta_k
    std::complex<double> actual;    // S[i][j]
};

std::vector<BalancingViolation> balancingCheck(const FusionRing& r, const ModularDatum& m, const Tolerance& tol = {});

struct CentralizerProfile {
    std::vector<std::vector<bool>> centralizes;
    std::vector<std::size_t> symmetricCenter;
};

CentralizerProfile centralizerProfile(const ModularDatum& m, const Tolerance& tol = {});

// Elements of C_{n_1} x ... x C_{n_k} are indexed in mixed radix, first factor most significant.
struct QuadraticForm {
    std::vector<std::uint64_t> group;
    std::vector<RootOfUnity> values;

    std::size_t order() const { return values.size(); }
    std::vector<std::uint64_t> digits(std::size_t g) const;
    std::size_t index(const std::vector<std::uint64_t>& d) const;
    std::size_t add(std::size_t g, std::size_t h) const;
    std::size_t neg(std::size_t g) const;
    RootOfUnity bicharacter(std::size_t g, std::size_t h) const;

    // q(0) = 1, q(g) = q(-g), b a bicharacter; the first failure is written to why.
    bool valid(std::string* why = nullptr) const;
};

std::size_t groupOrder(const std::vector<std::uint64_t>& factors);
std::vector<QuadraticForm> quadraticForms(const std::vector<std::uint64_t>& factors);

struct FormClass {
    QuadraticForm representative;
    std::size_t orbitSize = 0;
};

// Automorphisms of the group as permutations of element indices.
std::vector<std::vector<std::size_t>> groupAutomorphisms(const std::vector<std::uint64_t>& factors);
std::vector<FormClass> formClasses(const std::vector<std::uint64_t>& factors);
bool formNondegenerate(const QuadraticForm& f);

struct TwistConstraint {
    std::vector<RootOfUnity> allowed;
    std::string description;
    bool admits(const RootOfUnity& theta) const;
};

struct BraidedCase {
    std::uint64_t kappa = 0;
    std::uint64_t dimC = 0;
    TwistConstraint twist;
    std::string tag;
};

std::vector<BraidedCase> braidedNearIntegralCases(std::uint64_t N);

double dimAChiMinus(const NearIntegralReport& rep, const Tolerance& tol = {});

}  // namespace fusion
