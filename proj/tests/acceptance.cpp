// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "fusion/catalog.hpp"
#include "fusion/near_integral.hpp"
#include "fusion/premodular.hpp"
#include "fusion/spectral.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fusion;

namespace {

// Collects the reasons a criterion fails; empty means pass.
struct Check {
    std::vector<std::string> problems;
    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

bool sameMultiset(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close(a[i], b[i], tol)) return false;
    return true;
}

std::string str(const std::vector<double>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

void catalogIntegrity(Check& c) {
    std::ostringstream out, err;
    std::istringstream in;
    int code = cli::run({"catalog", "verify"}, out, err, in);
    c.require(code == 0, "catalog verify exited " + std::to_string(code) + ": " + err.str());
    // Every table-induced ring passes every axiom exactly.
    for (const auto& name : testing::tableNames()) {
        auto r = testing::tableRing(name);
        std::size_t total = 0;
        checkAxioms(r.rank(), r.flat(), r.duals(), 16, &total);
        c.require(total == 0, name + " ring violates an axiom");
    }
}

void codegrees(Check& c) {
    auto s3 = formalCodegrees(testing::tableRing("S3"));
    auto a4 = formalCodegrees(testing::tableRing("A4"));
    c.require(sameMultiset(s3, {6, 3, 2}, 1e-6), "Rep(S3) codegrees " + str(s3));
    c.require(sameMultiset(a4, {12, 4, 3, 3}, 1e-6), "Rep(A4) codegrees " + str(a4));
    for (double f : s3) c.require(f == std::round(f), "Rep(S3) codegree not snapped");
    for (double f : a4) c.require(f == std::round(f), "Rep(A4) codegree not snapped");
}

void detection(Check& c) {
    const std::vector<std::pair<std::string, std::uint64_t>> want{
        {"C2", 0}, {"S3", 1}, {"A4", 2}, {"D4", 0}, {"Q8", 0}, {"F5", 3}, {"PSU(3,2)", 7}, {"Aut(D9)", 3},
        {"C2^3:C4", 0}, {"SmallGroup(32,7)", 0}, {"SmallGroup(32,8)", 0}, {"C8:C2^2", 0}};
    for (const auto& [name, k] : want) {
        auto rep = detectNearIntegral(testing::tableRing(name));
        c.require(rep && rep->kappa == k, name + ": expected kappa " + std::to_string(k));
    }
    auto psu = detectNearIntegral(testing::tableRing("PSU(3,2)"));
    if (!psu) return;
    c.require(close(psu->dPlus, 8, 1e-9) && close(psu->dMinus, -1, 1e-9), "PSU(3,2) roots are not (8,-1)");
    c.require(close(dimAChiMinus(*psu), 8, 1e-9), "PSU(3,2) dim A_chi- is not 8");
}

void roundTrip(Check& c) {
    std::vector<std::pair<std::string, FusionRing>> rings;
    for (auto& [name, r] : testing::catalogRings()) {
        bool integral = true;
        for (double d : fpdims(r)) integral = integral && isNearInteger(d, 1e-9);
        if (integral) rings.emplace_back(name, r);
    }
    c.require(rings.size() >= 12, "too few integral catalog rings");
    for (const auto& [name, s] : rings)
        for (std::uint64_t k = 0; k <= 5; ++k) {
            const std::string tag = name + " kappa=" + std::to_string(k);
            auto r = constructNearIntegral(s, k);
            auto rep = detectNearIntegral(r);
            if (!rep) {
                c.require(false, tag + ": not detected");
                continue;
            }
            std::vector<std::size_t> sIdx(s.rank());
            std::iota(sIdx.begin(), sIdx.end(), 0);
            c.require(rep->subringIndices == sIdx && rep->kappa == k, tag + ": wrong (S, kappa)");
            auto minus = distinguishedCharacters(r, *rep).second;
            auto ker = characterKernel(r, minus);
            c.require(ker.indices == sIdx && ker.isSubring, tag + ": kernel of chi- is not S");
        }
}

void verlinde(Check& c) {
    for (const auto& [name, D] : std::vector<std::pair<std::string, double>>{{"Z(Rep(S3))", 36}, {"Z(Rep(A4))", 144}}) {
        auto m = loadEntry(name).as<ModularDatum>();
        auto v = verlindeFusion(m);
        c.require(close(v.globalDim, D, 1e-9), name + ": global dimension " + std::to_string(v.globalDim));
        auto ring = v.ring;
        c.require(balancingCheck(ring, m).empty(), name + ": balancing violations");
        for (std::size_t i = 0; i < m.rank(); ++i) {
            auto p = m;
            p.T[i] = p.T[i] * RootOfUnity(1, 2);
            c.require(!balancingCheck(ring, p).empty(), name + ": flipping twist " + std::to_string(i) + " went unnoticed");
        }
    }
}

void gauss(Check& c) {
    std::size_t n = 0;
    for (const auto& e : Catalog::builtin().entries()) {
        if (e.kind != EntryKind::ModularDatum) continue;
        auto m = e.as<ModularDatum>();
        m.validate();
        auto [p, q] = gaussSums(m.dims, m.T);
        c.require(std::abs(p * q - m.globalDim()) < 1e-6, e.name + ": tau+ tau- != D");
        ++n;
    }
    c.require(n >= 2, "no modular data in the catalog");
}

void forms(Check& c) {
    c.require(quadraticForms({2}).size() == 4, "C2 form count");
    c.require(quadraticForms({3}).size() == 3, "C3 form count");
    c.require(quadraticForms({9}).size() == 9, "C9 form count");
    c.require(formClasses({9}).size() == 5, "C9 class count");
    c.require(formClasses({3, 3}).size() == 5, "C3^2 class count");
    c.require(formClasses({2}).size() == 4, "C2 class count");
}

void cases(Check& c) {
    auto has = [](std::uint64_t N, std::uint64_t k, std::uint64_t dim, const std::vector<RootOfUnity>& twists) {
        for (const auto& x : braidedNearIntegralCases(N))
            if (x.kappa == k && x.dimC == dim && x.twist.allowed == twists) return true;
        return false;
    };
    c.require(has(8, 2, 24, {RootOfUnity(1, 3), RootOfUnity(2, 3)}), "cases(8) lacks (2, 24, zeta3^(+-1))");
    c.require(has(12, 4, 48, {RootOfUnity(1, 2)}), "cases(12) lacks (4, 48, -1)");
    auto five = braidedNearIntegralCases(5);
    c.require(five.size() == 1 && five[0].kappa == 0, "cases(5) is not just kappa = 0");
}

void extraspecial(Check& c) {
    auto e = extraspecialKappa(3, 1);
    c.require(e.kappa == 3 && e.N == 18 && e.dPlus == 6, "extraspecialKappa(3,1) != (3,18,6)");
    for (std::uint64_t p : {3, 5, 7})
        for (std::uint64_t n : {1, 2}) {
            auto x = extraspecialKappa(p, n);
            c.require(x.dPlus * x.dPlus == x.kappa * x.dPlus + x.N,
                      "quadratic identity fails at p=" + std::to_string(p) + ", n=" + std::to_string(n));
        }
}

void rows(Check& c) {
    std::size_t n = 0;
    for (const auto& e : Catalog::builtin().entries()) {
        if (e.kind != EntryKind::ClassificationRow) continue;
        const auto& row = e.as<ClassificationRow>();
        if (row.isStub()) continue;
        double s = 0;
        for (double d : row.fpdims) s += d * d;
        c.require(std::abs(s - row.fpdimTotal) <= 1e-6, row.name + ": sum of dims^2 " + std::to_string(s) +
                                                             " vs " + std::to_string(row.fpdimTotal));
        ++n;
    }
    c.require(n >= 60, "too few classification rows");
}

void properties(Check& c) {
    auto rings = testing::catalogRings();
    for (const auto& [name, r] : rings) {
        if (!r.isCommutative()) continue;
        auto cs = characters(r);
        for (std::size_t a = 0; a < cs.size(); ++a)
            for (std::size_t b = a + 1; b < cs.size(); ++b) {
                std::complex<double> s = 0;
                for (std::size_t i = 0; i < r.rank(); ++i) s += cs[a].values[i] * std::conj(cs[b].values[i]);
                c.require(std::abs(s) < 1e-6, name + ": characters not orthogonal");
            }
    }

    std::mt19937 gen(20261015);
    std::uniform_int_distribution<std::size_t> pick(0, rings.size() - 1);
    std::size_t pairs = 0;
    while (pairs < 20) {
        const auto& [na, a] = rings[pick(gen)];
        const auto& [nb, b] = rings[pick(gen)];
        if (a.rank() * b.rank() > 64) continue;
        ++pairs;
        auto p = productRing(a, b);
        auto da = fpdims(a), db = fpdims(b), dp = fpdims(p);
        bool ok = close(ringFPdim(p), ringFPdim(a) * ringFPdim(b), 1e-9);
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j) ok = ok && close(dp[i * b.rank() + j], da[i] * db[j], 1e-9);
        c.require(ok, na + " x " + nb + ": FPdim not multiplicative");
    }

    std::size_t small = 0;
    for (const auto& [name, r] : rings) {
        if (r.rank() > 4) continue;
        ++small;
        auto t = oracle::dense(r);
        std::size_t total = 0;
        checkAxioms(r.rank(), r.flat(), r.duals(), 16, &total);
        c.require((total == 0) == (oracle::associative(t) && oracle::associativeByTriples(t)),
                  name + ": oracle disagrees");
    }
    c.require(small > 0, "no rings of rank <= 4");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"catalog integrity", catalogIntegrity},
        {"formal codegrees of Rep(S3) and Rep(A4)", codegrees},
        {"near-integral detection on catalog tables", detection},
        {"construct/detect round trip and kernel of chi-", roundTrip},
        {"Verlinde fusion and balancing of both doubles", verlinde},
        {"Gauss sums tau+ tau- = D", gauss},
        {"quadratic form and class counts", forms},
        {"braided near-integral case table", cases},
        {"extraspecial family", extraspecial},
        {"classification-row consistency", rows},
        {"property suites", properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        const bool pass = c.problems.empty();
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
        if (!pass) {
            std::cout << ": " << c.problems.front();
            if (c.problems.size() > 1) std::cout << " (+" << c.problems.size() - 1 << " more)";
        }
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
