#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fusion/errors.hpp"

namespace fusion {

using Tensor3 = std::vector<std::vector<std::vector<std::int64_t>>>;

// Fusion ring with basis b_0..b_{n-1}; b_0 is the unit.
// c(i, j, k) is the multiplicity of b_k in b_i * b_j.
class FusionRing {
public:
    using Entry = std::uint64_t;
    using Term = std::pair<std::size_t, Entry>;

    // Validates all axioms exhaustively; renumbers so the unit sits at index 0.
    // Throws AxiomViolation listing every failure.
    static FusionRing make(std::vector<std::string> labels, std::vector<Entry> flat,
                           std::vector<std::size_t> dual);

    // Skips validation. Only for data already checked elsewhere.
    static FusionRing unchecked(std::vector<std::string> labels, std::vector<Entry> flat,
                                std::vector<std::size_t> dual);

    std::size_t rank() const noexcept { return n_; }
    Entry c(std::size_t i, std::size_t j, std::size_t k) const { return t_[(i * n_ + j) * n_ + k]; }
    std::size_t dual(std::size_t i) const { return dual_[i]; }
    const std::vector<std::size_t>& duals() const noexcept { return dual_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<Entry>& flat() const noexcept { return t_; }

    // Nonzero terms of b_i * b_j in increasing k.
    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return sparse_[i * n_ + j]; }

    bool isCommutative() const;
    Tensor3 tensor() const;
    bool operator==(const FusionRing& o) const { return t_ == o.t_ && dual_ == o.dual_; }

private:
    FusionRing(std::vector<std::string> labels, std::vector<Entry> flat, std::vector<std::size_t> dual);

    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Entry> t_;
    std::vector<std::size_t> dual_;
    std::vector<std::vector<Term>> sparse_;
};

// Every axiom failure of the given data, capped at `cap` witnesses; `total` receives the full count.
std::vector<Violation> checkAxioms(std::size_t n, const std::vector<FusionRing::Entry>& flat,
                                   const std::vector<std::size_t>& dual, std::size_t cap,
                                   std::size_t* total = nullptr);

FusionRing newFusionRing(std::vector<std::string> labels, const Tensor3& tensor,
                         std::vector<std::size_t> dual);

std::vector<std::int64_t> fuse(const FusionRing& r, const std::vector<std::int64_t>& x,
                               const std::vector<std::int64_t>& y);

std::vector<std::int64_t> basisVector(const FusionRing& r, std::size_t i);

FusionRing trivialRing();
FusionRing productRing(const FusionRing& a, const FusionRing& b);

// Pointed ring of C_{n_1} x ... x C_{n_k}.
FusionRing groupRing(const std::vector<std::size_t>& cyclicFactors);

// Pointed ring from a Cayley table; table[a][b] = index of a*b.
FusionRing groupRing(const std::vector<std::vector<std::size_t>>& table,
                     std::vector<std::string> labels = {});

}  // namespace fusion
