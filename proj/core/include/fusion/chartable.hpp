#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

// Irreducible characters of a finite group. Column 0 is the identity class.
// Validation moves the trivial character to row 0.
struct CharacterTable {
    std::uint64_t order = 0;
    std::vector<std::uint64_t> classSizes;
    std::vector<std::vector<std::complex<double>>> rows;
    std::vector<std::string> labels;

    std::size_t size() const { return rows.size(); }
    std::uint64_t degree(std::size_t i) const;

    // Checks shape, degrees, class sizes and both orthogonality relations.
    // Throws InputError on failure.
    void validate(double tol = 1e-9);
};

// Class sizes recovered from column orthogonality: |G| / sum_i |chi_i(x)|^2.
std::vector<std::uint64_t> classSizesFromColumns(const std::vector<std::vector<std::complex<double>>>& rows,
                                                 std::uint64_t order, double tol = 1e-9);

FusionRing characterTableToFusionRing(const CharacterTable& t, double tol = 1e-9);

}  // namespace fusion
