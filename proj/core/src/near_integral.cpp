#include "fusion/near_integral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fusion {

using C = std::complex<double>;
using u128 = unsigned __int128;

std::pair<double, double> rootsDpm(std::uint64_t N, std::uint64_t kappa) {
    if (N == 0) throw InputError("rootsDpm: N must be positive");
    const double k = static_cast<double>(kappa);
    const double disc = std::sqrt(k * k + 4.0 * static_cast<double>(N));
    // dPlus dMinus = -N; dividing avoids cancellation in dMinus.
    const double dPlus = (k + disc) / 2.0;
    return {dPlus, -static_cast<double>(N) / dPlus};
}

std::optional<std::uint64_t> exactSqrt(std::uint64_t v) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (u128(s) * s > v) --s;
    while (u128(s + 1) * (s + 1) <= v) ++s;
    if (u128(s) * s == v) return s;
    return std::nullopt;
}

FusionRing constructNearIntegral(const FusionRing& s, std::uint64_t kappa, const Tolerance& tol) {
    const std::size_t m = s.rank(), n = m + 1;
    std::vector<FusionRing::Entry> d(m);
    auto fp = fpdims(s);
    for (std::size_t x = 0; x < m; ++x) {
        if (!isNearInteger(fp[x], tol.snap * std::max(1.0, fp[x])))
            throw NotIntegral("constructNearIntegral: FPdim of " + s.label(x) + " is not an integer");
        d[x] = static_cast<FusionRing::Entry>(std::llround(fp[x]));
    }
    std::vector<FusionRing::Entry> flat(n * n * n, 0);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> FusionRing::Entry& { return flat[(i * n + j) * n + k]; };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (auto [k, c] : s.product(i, j)) at(i, j, k) = c;
    const std::size_t rho = m;
    for (std::size_t x = 0; x < m; ++x) {
        at(x, rho, rho) = d[x];
        at(rho, x, rho) = d[x];
        at(rho, rho, x) = d[x];
    }
    at(rho, rho, rho) = kappa;
    auto labels = s.labels();
    labels.push_back("rho");
    auto dual = s.duals();
    dual.push_back(rho);
    try {
        return FusionRing::make(std::move(labels), std::move(flat), std::move(dual));
    } catch (const AxiomViolation& e) {
        throw InternalInconsistency(std::string("constructed near-integral ring fails validation: ") + e.what());
    }
}

namespace {

std::optional<NearIntegralReport> candidate(const FusionRing& r, std::size_t rho, const std::vector<double>& fp,
                                            const Tolerance& tol) {
    const std::size_t n = r.rank();
    if (rho == 0 || r.dual(rho) != rho) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == rho) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j != rho && r.c(i, j, rho) != 0) return std::nullopt;
    }
    NearIntegralReport rep;
    rep.rhoIndex = rho;
    u128 N = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (x == rho) continue;
        rep.subringIndices.push_back(x);
        // x rho = c_{x,rho}^rho rho, and FPdim forces that coefficient to be FPdim(x).
        const auto dx = r.c(x, rho, rho);
        for (std::size_t y = 0; y < n; ++y)
            if (y != rho && r.c(x, rho, y) != 0)
                throw InternalInconsistency("x*rho leaves span(rho) although the complement is a subring");
        if (std::abs(fp[x] - static_cast<double>(dx)) > tol.snap * std::max(1.0, fp[x])) {
            std::ostringstream os;
            os << "FPdim(" << r.label(x) << ") = " << fp[x] << " disagrees with c_{x,rho}^rho = " << dx;
            throw InternalInconsistency(os.str());
        }
        N += u128(dx) * dx;
    }
    if (N > UINT64_MAX) throw Overflow("FPdim of the subring exceeds 64 bits");
    rep.N = static_cast<std::uint64_t>(N);
    rep.kappa = r.c(rho, rho, rho);
    auto [dp, dm] = rootsDpm(rep.N, rep.kappa);
    rep.dPlus = dp;
    rep.dMinus = dm;
    u128 disc = u128(rep.kappa) * rep.kappa + 4 * u128(rep.N);
    if (disc <= UINT64_MAX) {
        if (auto s = exactSqrt(static_cast<std::uint64_t>(disc))) rep.dPlusExactInteger = (rep.kappa + *s) / 2;
    }
    if (rep.dPlusExactInteger && !(rep.kappa < rep.N)) rep.categorifiabilityFlags.push_back("kappa-not-below-N");
    if (!rep.dPlusExactInteger) {
        if (rep.kappa % rep.N != 0) rep.categorifiabilityFlags.push_back("N-does-not-divide-kappa");
        if (!r.isCommutative()) rep.categorifiabilityFlags.push_back("noncommutative-with-irrational-FPdim");
    }
    return rep;
}

}  // namespace

std::vector<NearIntegralReport> detectAllNearIntegral(const FusionRing& r, const Tolerance& tol) {
    std::vector<NearIntegralReport> out;
    if (r.rank() < 2) return out;
    auto fp = fpdims(r);
    for (std::size_t rho = r.rank(); rho-- > 1;)
        if (auto rep = candidate(r, rho, fp, tol)) out.push_back(std::move(*rep));
    return out;
}

std::optional<NearIntegralReport> detectNearIntegral(const FusionRing& r, const Tolerance& tol) {
    if (r.rank() < 2) return std::nullopt;
    auto fp = fpdims(r);
    for (std::size_t rho = r.rank(); rho-- > 1;)
        if (auto rep = candidate(r, rho, fp, tol)) return rep;
    return std::nullopt;
}

std::pair<Character, Character> distinguishedCharacters(const FusionRing& r, const NearIntegralReport& rep,
                                                        const Tolerance& tol) {
    const std::size_t n = r.rank();
    Character plus, minus;
    plus.values.assign(n, 0);
    minus.values.assign(n, 0);
    for (auto x : rep.subringIndices) plus.values[x] = minus.values[x] = static_cast<double>(r.c(x, rep.rhoIndex, rep.rhoIndex));
    plus.values[rep.rhoIndex] = rep.dPlus;
    minus.values[rep.rhoIndex] = rep.dMinus;
    for (auto* ch : {&plus, &minus}) {
        double err = multiplicativityError(r, ch->values);
        if (err > tol.arith) {
            std::ostringstream os;
            os << "distinguished character multiplicativity error " << err;
            throw VerificationFailed(os.str());
        }
        for (auto z : ch->values) ch->codegree += std::norm(z);
    }
    plus.isFPdim = true;
    return {plus, minus};
}

Character extendCharacter(const FusionRing& r, const NearIntegralReport& rep, const std::vector<C>& phi,
                          const Tolerance& tol) {
    const auto& S = rep.subringIndices;
    if (phi.size() != S.size()) throw InputError("extendCharacter: phi must have one value per subring element");
    std::vector<std::size_t> pos(r.rank(), r.rank());
    for (std::size_t a = 0; a < S.size(); ++a) pos[S[a]] = a;
    C sum = 0;
    for (std::size_t a = 0; a < S.size(); ++a)
        sum += static_cast<double>(r.c(S[a], rep.rhoIndex, rep.rhoIndex)) * phi[pos[r.dual(S[a])]];
    if (std::abs(sum) > tol.arith * static_cast<double>(rep.N)) {
        std::ostringstream os;
        os << "sum_x FPdim(x) phi(x*) = " << sum.real() << (sum.imag() < 0 ? "" : "+") << sum.imag() << "i, not 0";
        throw ExtensionObstructed(os.str());
    }
    Character out;
    out.values.assign(r.rank(), 0);
    for (std::size_t a = 0; a < S.size(); ++a) out.values[S[a]] = phi[a];
    double err = multiplicativityError(r, out.values);
    if (err > tol.snap) throw VerificationFailed("extended values are not multiplicative; phi is not a character of S");
    for (auto z : out.values) out.codegree += std::norm(z);
    return out;
}

FusionRing subringOf(const FusionRing& r, const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> idx = indices;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.empty() || idx[0] != 0) throw InputError("subring must contain the unit");
    const std::size_t m = idx.size(), n = r.rank();
    std::vector<std::size_t> pos(n, m);
    for (std::size_t a = 0; a < m; ++a) pos.at(idx[a]) = a;
    std::vector<FusionRing::Entry> flat(m * m * m, 0);
    std::vector<std::size_t> dual(m);
    std::vector<std::string> labels(m);
    for (std::size_t a = 0; a < m; ++a) {
        labels[a] = r.label(idx[a]);
        if (pos[r.dual(idx[a])] == m) throw ClosureViolation("index set is not closed under duality");
        dual[a] = pos[r.dual(idx[a])];
        for (std::size_t b = 0; b < m; ++b)
            for (auto [k, c] : r.product(idx[a], idx[b])) {
                if (pos[k] == m) throw ClosureViolation("index set is not closed under fusion");
                flat[(a * m + b) * m + pos[k]] = c;
            }
    }
    return FusionRing::make(std::move(labels), std::move(flat), std::move(dual));
}

std::vector<double> nearIntegralCodegrees(const FusionRing& r, const NearIntegralReport& rep,
                                          const SpectralOptions& opt) {
    FusionRing s = subringOf(r, rep.subringIndices);
    if (!s.isCommutative()) throw NotCommutative("subring S is not commutative");
    auto f = formalCodegrees(s, opt);
    const double N = static_cast<double>(rep.N);
    auto it = std::min_element(f.begin(), f.end(), [&](double a, double b) { return std::abs(a - N) < std::abs(b - N); });
    if (it == f.end() || std::abs(*it - N) > opt.tol.snap * std::max(1.0, N))
        throw InternalInconsistency("FPdim(S) is not among the codegrees of S");
    f.erase(it);
    f.push_back(snap(N + rep.dPlus * rep.dPlus, opt.tol.snap));
    f.push_back(snap(N + rep.dMinus * rep.dMinus, opt.tol.snap));
    std::sort(f.begin(), f.end(), std::greater<>());
    if (r.isCommutative()) {
        auto g = formalCodegrees(r, opt);
        bool same = g.size() == f.size();
        for (std::size_t i = 0; same && i < f.size(); ++i)
            same = std::abs(f[i] - g[i]) <= opt.tol.snap * std::max(1.0, g[i]);
        if (!same) throw VerificationFailed("near-integral codegree formula disagrees with the spectral codegrees");
    }
    return f;
}

KernelReport characterKernel(const FusionRing& r, const Character& chi, const Tolerance& tol) {
    const std::size_t n = r.rank();
    if (chi.values.size() != n) throw InputError("characterKernel: character length does not match rank");
    auto fp = fpdims(r);
    KernelReport k;
    std::vector<char> in(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(chi.values[i] - C(fp[i])) < tol.snap * std::max(1.0, fp[i])) {
            k.indices.push_back(i);
            in[i] = 1;
        }
    bool closed = !k.indices.empty() && in[0];
    for (std::size_t a = 0; closed && a < k.indices.size(); ++a) {
        closed = in[r.dual(k.indices[a])];
        for (std::size_t b = 0; closed && b < k.indices.size(); ++b)
            for (auto [m, c] : r.product(k.indices[a], k.indices[b]))
                if (!in[m]) closed = false;
    }
    k.isSubring = closed;
    return k;
}

std::optional<GagolaReport> gagolaAnalyze(const CharacterTable& table, const Tolerance& tol) {
    CharacterTable t = table;
    t.validate(tol.arith);
    const std::size_t r = t.size();
    for (std::size_t x = 1; x < r; ++x) {
        std::vector<std::size_t> off;
        for (std::size_t i = 0; i < r; ++i)
            if (std::abs(t.rows[i][x] - C(static_cast<double>(t.degree(i)))) > tol.arith) off.push_back(i);
        if (off.size() != 1) continue;
        GagolaReport g;
        g.rhoRow = off[0];
        g.column = x;
        const std::uint64_t deg = t.degree(g.rhoRow);
        if (t.order % deg != 0) throw Inconsistent("degree does not divide the group order");
        const auto k = static_cast<std::int64_t>(2 * deg) - static_cast<std::int64_t>(t.order / deg);
        for (std::size_t y = 0; y < r; ++y)
            if (std::abs(t.rows[g.rhoRow][y]) < tol.arith) ++g.vanishingClasses;
        FusionRing ring = characterTableToFusionRing(t, tol.arith);
        const auto c = ring.c(g.rhoRow, g.rhoRow, g.rhoRow);
        if (k < 0 || static_cast<std::uint64_t>(k) != c) {
            std::ostringstream os;
            os << "2deg - |G|/deg = " << k << " but c_{rho,rho}^rho = " << c;
            throw Inconsistent(os.str());
        }
        g.kappa = static_cast<std::uint64_t>(k);
        return g;
    }
    return std::nullopt;
}

ExtraspecialData extraspecialKappa(std::uint64_t p, std::uint64_t n) {
    bool prime = p >= 3 && p % 2 == 1;
    for (std::uint64_t q = 3; prime && q * q <= p; q += 2) prime = p % q != 0;
    if (!prime) throw InputError("extraspecialKappa: p must be an odd prime");
    if (n == 0) throw InputError("extraspecialKappa: n must be positive");
    u128 pn = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        pn *= p;
        if (pn > UINT32_MAX) throw Overflow("extraspecialKappa: p^n too large");
    }
    const u128 kappa = pn * (p - 2), N = pn * pn * (p - 1), dPlus = pn * (p - 1);
    if (N > UINT64_MAX) throw Overflow("extraspecialKappa: N exceeds 64 bits");
    if (dPlus * dPlus != kappa * dPlus + N) throw InternalInconsistency("d+^2 - kappa d+ - N != 0");
    return {static_cast<std::uint64_t>(kappa), static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(dPlus)};
}

}  // namespace fusion
