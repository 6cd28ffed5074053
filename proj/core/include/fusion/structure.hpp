#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fusion/ring.hpp"
#include "fusion/tolerance.hpp"

namespace fusion {

// Sorted basis indices of a fusion subring; always contains 0.
struct SubringHandle {
    std::vector<std::size_t> indices;
    std::size_t rank() const { return indices.size(); }
    bool contains(std::size_t i) const;
    bool operator==(const SubringHandle& o) const { return indices == o.indices; }
};

struct GradingReport {
    // groupTable[g][h] = g*h; element 0 is the identity.
    std::vector<std::vector<std::size_t>> groupTable;
    std::vector<std::size_t> componentOf;
    SubringHandle adjoint;
    std::size_t order() const { return groupTable.size(); }
};

struct EnumerationOptions {
    std::size_t maxRank = 16;
    std::size_t closureBudget = std::size_t{1} << 16;
    std::optional<std::size_t> maxCount;
};

// Smallest subring containing the given indices.
SubringHandle closure(const FusionRing& r, const std::vector<std::size_t>& generators);
bool isSubring(const FusionRing& r, const std::vector<std::size_t>& indices);

// All fusion subrings sorted by rank, then lexicographically.
std::vector<SubringHandle> enumerateSubrings(const FusionRing& r, const EnumerationOptions& opt = {});

SubringHandle pointedSubring(const FusionRing& r, const Tolerance& tol = {});
SubringHandle adjointSubring(const FusionRing& r);
GradingReport universalGrading(const FusionRing& r);
SubringHandle integralSubring(const FusionRing& r, const Tolerance& tol = {});

}  // namespace fusion
