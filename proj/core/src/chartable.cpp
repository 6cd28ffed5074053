#include "fusion/chartable.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fusion {

using C = std::complex<double>;

std::uint64_t CharacterTable::degree(std::size_t i) const {
    return static_cast<std::uint64_t>(std::llround(rows.at(i).at(0).real()));
}

void CharacterTable::validate(double tol) {
    const std::size_t r = rows.size();
    if (r == 0) throw InputError("character table is empty");
    if (order == 0) throw InputError("group order must be positive");
    for (const auto& row : rows)
        if (row.size() != r) throw InputError("character table must be square");
    if (classSizes.size() != r) throw InputError("classSizes must have one entry per column");
    if (!labels.empty() && labels.size() != r) throw InputError("labels must have one entry per row");
    if (labels.empty())
        for (std::size_t i = 0; i < r; ++i) labels.push_back("chi" + std::to_string(i));

    std::uint64_t classTotal = 0;
    for (auto s : classSizes) {
        if (s == 0) throw InputError("class sizes must be positive");
        classTotal += s;
    }
    if (classTotal != order) throw InputError("class sizes do not sum to the group order");
    if (classSizes[0] != 1) throw InputError("column 0 must be the identity class (size 1)");

    std::uint64_t degSq = 0;
    for (std::size_t i = 0; i < r; ++i) {
        C d = rows[i][0];
        if (std::abs(d.imag()) > tol || d.real() < 1 - tol || std::abs(d.real() - std::round(d.real())) > tol)
            throw InputError("row " + std::to_string(i) + ": column 0 must be a positive integer degree");
        auto k = degree(i);
        degSq += k * k;
    }
    if (degSq != order) throw InputError("sum of squared degrees does not equal the group order");

    std::size_t trivial = r;
    for (std::size_t i = 0; i < r && trivial == r; ++i) {
        bool ok = true;
        for (std::size_t x = 0; x < r && ok; ++x) ok = std::abs(rows[i][x] - C(1)) <= tol;
        if (ok) trivial = i;
    }
    if (trivial == r) throw InputError("no trivial character");
    if (trivial != 0) {
        std::swap(rows[0], rows[trivial]);
        std::swap(labels[0], labels[trivial]);
    }

    const double g = static_cast<double>(order);
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
            C s = 0;
            for (std::size_t i = 0; i < r; ++i) s += rows[i][x] * std::conj(rows[i][y]);
            C want = x == y ? C(g / static_cast<double>(classSizes[x])) : C(0);
            if (std::abs(s - want) > tol * g)
                throw InputError("column orthogonality fails for classes " + std::to_string(x) + "," + std::to_string(y));
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            C s = 0;
            for (std::size_t x = 0; x < r; ++x)
                s += static_cast<double>(classSizes[x]) * rows[i][x] * std::conj(rows[j][x]);
            C want = i == j ? C(g) : C(0);
            if (std::abs(s - want) > tol * g)
                throw InputError("row orthogonality fails for characters " + std::to_string(i) + "," + std::to_string(j));
        }
}

std::vector<std::uint64_t> classSizesFromColumns(const std::vector<std::vector<C>>& rows, std::uint64_t order,
                                                 double tol) {
    std::vector<std::uint64_t> out;
    for (std::size_t x = 0; x < rows.size(); ++x) {
        double s = 0;
        for (const auto& row : rows) s += std::norm(row.at(x));
        double size = static_cast<double>(order) / s;
        if (std::abs(size - std::round(size)) > tol * static_cast<double>(order))
            throw InputError("column " + std::to_string(x) + " gives a non-integral class size");
        out.push_back(static_cast<std::uint64_t>(std::llround(size)));
    }
    return out;
}

FusionRing characterTableToFusionRing(const CharacterTable& table, double tol) {
    CharacterTable t = table;
    t.validate(tol);
    const std::size_t r = t.size();
    const double g = static_cast<double>(t.order);
    std::vector<FusionRing::Entry> flat(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                C s = 0;
                for (std::size_t x = 0; x < r; ++x)
                    s += static_cast<double>(t.classSizes[x]) * t.rows[i][x] * t.rows[j][x] * std::conj(t.rows[k][x]);
                s /= g;
                double m = std::round(s.real());
                if (std::abs(s - C(m)) > tol || m < 0) {
                    std::ostringstream os;
                    os.precision(12);
                    os << "multiplicity of chi_" << k << " in chi_" << i << "*chi_" << j << " is " << s.real()
                       << (s.imag() >= 0 ? "+" : "") << s.imag() << "i";
                    throw NonIntegralMultiplicity(os.str());
                }
                flat[(i * r + j) * r + k] = static_cast<FusionRing::Entry>(m);
            }
    std::vector<std::size_t> dual(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r && dual[i] == r; ++k) {
            bool ok = true;
            for (std::size_t x = 0; x < r && ok; ++x) ok = std::abs(t.rows[k][x] - std::conj(t.rows[i][x])) <= tol;
            if (ok) dual[i] = k;
        }
    for (std::size_t i = 0; i < r; ++i)
        if (dual[i] == r) throw InputError("row " + std::to_string(i) + " has no complex-conjugate row");
    return FusionRing::make(t.labels, std::move(flat), std::move(dual));
}

}  // namespace fusion
