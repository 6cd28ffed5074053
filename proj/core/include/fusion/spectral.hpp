#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "fusion/ring.hpp"
#include "fusion/tolerance.hpp"

namespace fusion {

struct Character {
    std::vector<std::complex<double>> values;  // values[0] == 1
    double codegree = 0;                       // sum_i |values[i]|^2
    bool isFPdim = false;
};

struct SpectralOptions {
    Tolerance tol;
    std::uint64_t seed = 0;  // mixed with a hash of the ring
    int retries = 8;
};

struct SpectralReport {
    std::vector<double> fpdims;
    double ringFPdim = 0;
    bool commutative = false;
    std::optional<std::vector<double>> codegrees;  // absent for noncommutative rings
    std::vector<std::uint64_t> inductionUnit;
};

// Rounds to the nearest integer when within tol, otherwise returns x unchanged.
double snap(double x, double tol);
bool isNearInteger(double x, double tol);

// Perron eigenvalue of N_i, (N_i)_{jk} = c_{ij}^k.
double fpdimElement(const FusionRing& r, std::size_t i);
std::vector<double> fpdims(const FusionRing& r);
// Normalized Perron vector of sum_j N_j; an independent route to the FPdim vector.
std::vector<double> perronVector(const FusionRing& r);
double ringFPdim(const FusionRing& r);

// Largest |chi_i chi_j - sum_k c_{ij}^k chi_k| / max(1, |chi_i chi_j|).
double multiplicativityError(const FusionRing& r, const std::vector<std::complex<double>>& values);

// All ring homomorphisms to C of a commutative ring; FPdim first, then by codegree descending.
std::vector<Character> characters(const FusionRing& r, const SpectralOptions& opt = {});

// Descending; integer-valued entries snapped.
std::vector<double> formalCodegrees(const FusionRing& r, const SpectralOptions& opt = {});

std::vector<std::uint64_t> inductionUnitProfile(const FusionRing& r);

// FPdim(R)/f for each formal codegree, ascending.
std::vector<double> codegreeObjectDims(const FusionRing& r, const SpectralOptions& opt = {});

SpectralReport spectralReport(const FusionRing& r, const SpectralOptions& opt = {});

}  // namespace fusion
