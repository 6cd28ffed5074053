#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusion/chartable.hpp"
#include "fusion/ring.hpp"
#include "fusion/spectral.hpp"

namespace fusion {

// R(S, kappa): S spans all indices but rho, rho^2 = kappa rho + sum_{x in S} FPdim(x) x.
struct NearIntegralReport {
    std::vector<std::size_t> subringIndices;
    std::size_t rhoIndex = 0;
    std::uint64_t kappa = 0;
    std::uint64_t N = 0;
    double dPlus = 0;
    double dMinus = 0;
    std::optional<std::uint64_t> dPlusExactInteger;
    std::vector<std::string> categorifiabilityFlags;
    std::vector<std::string> diagnostics;
};

struct GagolaReport {
    std::size_t rhoRow = 0;
    std::size_t column = 0;
    std::uint64_t kappa = 0;
    std::size_t vanishingClasses = 0;
};

std::pair<double, double> rootsDpm(std::uint64_t N, std::uint64_t kappa);

// Exact integer square root when v is a perfect square.
std::optional<std::uint64_t> exactSqrt(std::uint64_t v);

FusionRing constructNearIntegral(const FusionRing& s, std::uint64_t kappa, const Tolerance& tol = {});

// First match scanning rho from the highest index down; absent when no rank n-1 subring exists.
std::optional<NearIntegralReport> detectNearIntegral(const FusionRing& r, const Tolerance& tol = {});
// Every self-dual rho whose complement is a subring.
std::vector<NearIntegralReport> detectAllNearIntegral(const FusionRing& r, const Tolerance& tol = {});

std::pair<Character, Character> distinguishedCharacters(const FusionRing& r, const NearIntegralReport& rep,
                                                        const Tolerance& tol = {});

// phi is indexed like rep.subringIndices; the result is indexed by the full basis.
Character extendCharacter(const FusionRing& r, const NearIntegralReport& rep,
                          const std::vector<std::complex<double>>& phi, const Tolerance& tol = {});

// The subring on rep.subringIndices as a standalone ring.
FusionRing subringOf(const FusionRing& r, const std::vector<std::size_t>& indices);

std::vector<double> nearIntegralCodegrees(const FusionRing& r, const NearIntegralReport& rep,
                                          const SpectralOptions& opt = {});

struct KernelReport {
    std::vector<std::size_t> indices;
    bool isSubring = false;
};
KernelReport characterKernel(const FusionRing& r, const Character& chi, const Tolerance& tol = {});

std::optional<GagolaReport> gagolaAnalyze(const CharacterTable& t, const Tolerance& tol = {});

struct ExtraspecialData {
    std::uint64_t kappa, N, dPlus;
};
ExtraspecialData extraspecialKappa(std::uint64_t p, std::uint64_t n);

}  // namespace fusion
