#include <doctest.h>

#include <numeric>

#include "fusion/near_integral.hpp"
#include "fusion/premodular.hpp"
#include "fusion/spectral.hpp"
#include "fusion/structure.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fusion;
using C = std::complex<double>;

namespace {

ModularDatum datum(const std::string& name) { return loadEntry(name).as<ModularDatum>(); }

std::vector<std::string> datumNames() {
    std::vector<std::string> out;
    for (const auto& e : Catalog::builtin().entries())
        if (e.kind == EntryKind::ModularDatum) out.push_back(e.name);
    return out;
}

// Pointed datum of (C_n, q) with q(k) = exp(2 pi i a k^2 / den): S[j][k] = conj b(j,k).
ModularDatum cyclicDatum(std::int64_t n, std::int64_t a, std::int64_t den) {
    ModularDatum m;
    m.S.assign(n, std::vector<C>(n));
    for (std::int64_t k = 0; k < n; ++k) m.T.emplace_back(a * k * k, den);
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t k = 0; k < n; ++k) m.S[j][k] = std::conj((m.T[(j + k) % n] / (m.T[j] * m.T[k])).value());
    return m;
}

QuadraticForm cyclicForm(std::uint64_t n, std::int64_t a, std::int64_t den) {
    QuadraticForm f;
    f.group = {n};
    for (std::uint64_t k = 0; k < n; ++k) f.values.emplace_back(a * static_cast<std::int64_t>(k * k), den);
    return f;
}

std::vector<oracle::Perm> cyclicAutos(int n) {
    std::vector<oracle::Perm> out;
    for (int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) out.push_back(oracle::affine(n, a, 0));
    return out;
}

std::size_t oracleClasses(const oracle::Abelian& G, int den, const std::vector<oracle::Perm>& autos) {
    return oracle::orbitCount(oracle::allForms(G, den), autos);
}

}  // namespace

TEST_CASE("RootOfUnity arithmetic") {
    RootOfUnity a(3, 12);
    CHECK(a.num() == 1);
    CHECK(a.den() == 4);
    CHECK(RootOfUnity(-1, 4) == RootOfUnity(3, 4));
    CHECK((a * a) == RootOfUnity(1, 2));
    CHECK(a.pow(4).isOne());
    CHECK(std::abs(a.value() - C(0, 1)) < 1e-15);
    CHECK(a.inverse() == RootOfUnity(3, 4));
    CHECK_THROWS_AS(RootOfUnity(1, 0), InputError);
}

TEST_CASE("Verlinde fusion of the doubles") {
    auto s3 = verlindeFusion(datum("Z(Rep(S3))"));
    CHECK(s3.ring.rank() == 8);
    CHECK(s3.globalDim == doctest::Approx(36.0).epsilon(1e-9));
    auto d = fpdims(s3.ring);
    std::vector<double> want{1, 1, 2, 2, 2, 2, 3, 3};
    for (std::size_t i = 0; i < 8; ++i) CHECK(d[i] == doctest::Approx(want[i]).epsilon(1e-9));

    auto a4 = verlindeFusion(datum("Z(Rep(A4))"));
    CHECK(a4.ring.rank() == 14);
    CHECK(a4.globalDim == doctest::Approx(144.0).epsilon(1e-9));
}

TEST_CASE("Verlinde of the 1x1 datum is the unit ring") {
    ModularDatum m;
    m.S = {{C(1)}};
    m.T = {RootOfUnity()};
    CHECK(verlindeFusion(m).ring == trivialRing());
}

TEST_CASE("Verlinde agrees with the direct formula and FPdims match dims") {
    for (const auto& name : datumNames()) {
        INFO(name);
        auto m = datum(name);
        auto v = verlindeFusion(m);
        auto N = oracle::verlinde(m.S);
        CHECK(oracle::unitarityDefect(m.S) < 1e-9);
        for (std::size_t i = 0; i < m.rank(); ++i)
            for (std::size_t j = 0; j < m.rank(); ++j)
                for (std::size_t k = 0; k < m.rank(); ++k)
                    CHECK(std::abs(N[i][j][k] - C(static_cast<double>(v.ring.c(i, j, k)))) < 1e-9);
        auto d = fpdims(v.ring);
        for (std::size_t i = 0; i < m.rank(); ++i) CHECK(d[i] == doctest::Approx(std::abs(m.S[0][i])).epsilon(1e-6));
    }
}

TEST_CASE("Verlinde rejects matrices that are not modular data") {
    ModularDatum singular;
    singular.S = {{C(1), C(1)}, {C(1), C(1)}};
    singular.T = {RootOfUnity(), RootOfUnity()};
    CHECK_THROWS_AS(verlindeFusion(singular), SingularSMatrix);

    // Unitary up to scale but with fractional fusion.
    const double s = std::sqrt(2.0);
    ModularDatum frac;
    frac.S = {{C(1), C(s), C(1)}, {C(s), C(0), C(-s)}, {C(1), C(-s), C(1)}};
    frac.T = {RootOfUnity(), RootOfUnity(1, 16), RootOfUnity(1, 2)};
    CHECK_NOTHROW(verlindeFusion(frac));  // Ising S-matrix
    frac.S[1][1] = C(0, 0);
    frac.S[2][2] = C(-1);
    frac.S[0][2] = frac.S[2][0] = C(-1);
    CHECK_THROWS(verlindeFusion(frac));

    // One sign flip in the A4 double breaks modularity.
    auto a4 = datum("Z(Rep(A4))");
    a4.S[4][5] = a4.S[5][4] = a4.S[4][5] * C(-1);
    CHECK_THROWS(verlindeFusion(a4));
}

TEST_CASE("gaussSums") {
    auto [p, m] = gaussSums({1, 1}, {RootOfUnity(), RootOfUnity(1, 4)});
    CHECK(std::abs(p - C(1, 1)) < 1e-12);
    CHECK(std::abs(p * m - C(2)) < 1e-12);

    std::vector<double> dims{1, 1, 2, 2, 2, 2, 3, 3};
    auto [tp, tm] = gaussSums(dims, std::vector<RootOfUnity>(8));
    CHECK(std::abs(tp - C(36)) < 1e-12);
    CHECK(std::abs(tm - C(36)) < 1e-12);

    const double d = (1 + std::sqrt(5.0)) / 2;
    auto [fp, fm] = gaussSums({1, d}, {RootOfUnity(), RootOfUnity(2, 5)});
    CHECK(std::norm(fp) == doctest::Approx(1 + d * d).epsilon(1e-9));
    CHECK_THROWS_AS(gaussSums({1}, {}), InputError);
}

TEST_CASE("tau+ tau- = D for every catalog datum") {
    for (const auto& name : datumNames()) {
        INFO(name);
        auto m = datum(name);
        m.validate();
        auto [p, q] = gaussSums(m.dims, m.T);
        CHECK(std::abs(p * q - C(m.globalDim())) < 1e-6);
    }
}

TEST_CASE("balancing holds on every catalog datum") {
    for (const auto& name : datumNames()) {
        INFO(name);
        auto m = datum(name);
        CHECK(balancingCheck(verlindeFusion(m).ring, m).empty());
    }
    ModularDatum one;
    one.S = {{C(1)}};
    one.T = {RootOfUnity()};
    CHECK(balancingCheck(trivialRing(), one).empty());
}

TEST_CASE("every single twist perturbation breaks balancing") {
    for (const auto& name : {"Z(Rep(S3))", "Z(Rep(A4))"}) {
        INFO(name);
        auto m = datum(name);
        auto ring = verlindeFusion(m).ring;
        for (std::size_t i = 0; i < m.rank(); ++i)
            for (auto z : {RootOfUnity(1, 2), RootOfUnity(1, 3), RootOfUnity(1, 7)}) {
                auto p = m;
                p.T[i] = p.T[i] * z;
                CHECK(balancingCheck(ring, p).size() >= 1);
            }
    }
    auto m = datum("Z(Rep(S3))");
    m.T[3] = RootOfUnity(1, 2);
    CHECK_FALSE(balancingCheck(verlindeFusion(datum("Z(Rep(S3))")).ring, m).empty());
}

TEST_CASE("centralizerProfile") {
    ModularDatum sym;
    sym.S = {{C(1), C(1)}, {C(1), C(1)}};
    sym.T = {RootOfUnity(), RootOfUnity()};
    auto p = centralizerProfile(sym);
    CHECK(p.symmetricCenter == std::vector<std::size_t>{0, 1});
    for (const auto& row : p.centralizes)
        for (bool b : row) CHECK(b);

    CHECK(centralizerProfile(datum("Z(Rep(S3))")).symmetricCenter == std::vector<std::size_t>{0});

    auto c4 = centralizerProfile(cyclicDatum(4, 1, 4));  // q(1) = i, q(2) = 1
    CHECK(c4.symmetricCenter == std::vector<std::size_t>{0, 2});
}

TEST_CASE("symmetric-center candidates are closed under fusion") {
    std::vector<ModularDatum> data;
    for (const auto& name : datumNames()) data.push_back(datum(name));
    data.push_back(cyclicDatum(4, 1, 4));
    data.push_back(cyclicDatum(6, 1, 6));
    data.push_back(cyclicDatum(8, 1, 8));
    for (const auto& m : data) {
        auto prof = centralizerProfile(m);
        // Verlinde needs a nondegenerate S; the C4 and C8 forms above are degenerate, so use the group law.
        FusionRing r = oracle::unitarityDefect(m.S) < 1e-9 ? verlindeFusion(m).ring
                                                           : groupRing(std::vector<std::size_t>{m.rank()});
        CHECK(isSubring(r, prof.symmetricCenter));
    }
}

TEST_CASE("quadratic form counts agree with exhaustive search") {
    CHECK(quadraticForms({2}).size() == 4);
    CHECK(quadraticForms({3}).size() == 3);
    CHECK(quadraticForms({9}).size() == 9);
    for (std::uint64_t p : {3, 5, 7, 11, 13}) CHECK(quadraticForms({p}).size() == p);
    const std::vector<std::vector<int>> groups{{2}, {3}, {4}, {5}, {6}, {8}, {9}, {2, 2}, {3, 3}, {2, 4}};
    for (const auto& g : groups) {
        oracle::Abelian G{g};
        int exponent = std::accumulate(g.begin(), g.end(), 1, [](int a, int b) { return std::lcm(a, b); });
        std::vector<std::uint64_t> f(g.begin(), g.end());
        CHECK(quadraticForms(f).size() == oracle::allForms(G, 2 * exponent).size());
    }
    for (const auto& f : quadraticForms({2})) {
        if (f.values[1].isOne()) continue;
        CHECK(f.values[1].pow(4).isOne());
    }
}

TEST_CASE("every enumerated form is valid") {
    for (const auto& g : std::vector<std::vector<std::uint64_t>>{{4}, {2, 2}, {3, 3}, {2, 6}}) {
        for (const auto& f : quadraticForms(g)) {
            std::string why;
            CHECK_MESSAGE(f.valid(&why), why);
        }
    }
    auto bad = cyclicForm(3, 1, 3);
    bad.values[2] = RootOfUnity();
    CHECK_FALSE(bad.valid());
}

TEST_CASE("formClasses") {
    CHECK(formClasses({9}).size() == 5);
    CHECK(formClasses({3, 3}).size() == 5);
    CHECK(formClasses({2}).size() == 4);
    for (std::uint64_t p : {3, 5, 7, 11}) CHECK(formClasses({p}).size() == 3);
    CHECK_THROWS_AS(formClasses({5, 13}), GroupTooLarge);
}

TEST_CASE("form classes agree with orbit counting under independently built automorphisms") {
    for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 12}) {
        INFO(n);
        CHECK(formClasses({static_cast<std::uint64_t>(n)}).size() ==
              oracleClasses(oracle::Abelian{{n}}, n % 2 ? n : 2 * n, cyclicAutos(n)));
    }
    // GL(2,3) acting on F_3^2, generated by two transvections and a scaling.
    std::vector<oracle::Perm> gl{oracle::affine3(1, 1, 0, 1, 0, 0), oracle::affine3(1, 0, 1, 1, 0, 0),
                                 oracle::affine3(2, 0, 0, 1, 0, 0)};
    CHECK(oracleClasses(oracle::Abelian{{3, 3}}, 3, gl) == 5);
    // C2 x C2: automorphisms are all of S3 on the three nonzero elements.
    std::vector<oracle::Perm> s3{{0, 2, 1, 3}, {0, 1, 3, 2}};
    CHECK(formClasses({2, 2}).size() == oracleClasses(oracle::Abelian{{2, 2}}, 4, s3));
}

TEST_CASE("group automorphism counts") {
    CHECK(groupAutomorphisms({9}).size() == 6);
    CHECK(groupAutomorphisms({3, 3}).size() == 48);
    CHECK(groupAutomorphisms({2, 2}).size() == 6);
    CHECK(groupAutomorphisms({2, 4}).size() == 8);
    CHECK(groupAutomorphisms({2, 2, 2}).size() == 168);
}

TEST_CASE("formNondegenerate") {
    CHECK_FALSE(formNondegenerate(cyclicForm(3, 0, 1)));
    CHECK(formNondegenerate(cyclicForm(2, 1, 4)));
    CHECK(formNondegenerate(cyclicForm(3, 1, 3)));
    CHECK_FALSE(formNondegenerate(cyclicForm(4, 1, 4)));
    CHECK(formNondegenerate(cyclicForm(4, 1, 8)));
}

TEST_CASE("braidedNearIntegralCases") {
    auto has = [](const std::vector<BraidedCase>& cs, std::uint64_t k, std::uint64_t dim, const std::string& tag) {
        return std::any_of(cs.begin(), cs.end(), [&](const BraidedCase& c) { return c.kappa == k && c.dimC == dim && c.tag == tag; });
    };
    auto c8 = braidedNearIntegralCases(8);
    CHECK(has(c8, 2, 24, "case-2"));
    for (const auto& c : c8)
        if (c.tag == "case-2") {
            CHECK(c.twist.admits(RootOfUnity(1, 3)));
            CHECK(c.twist.admits(RootOfUnity(2, 3)));
            CHECK_FALSE(c.twist.admits(RootOfUnity(1, 2)));
        }
    auto c12 = braidedNearIntegralCases(12);
    CHECK(has(c12, 4, 48, "case-3"));
    auto c5 = braidedNearIntegralCases(5);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].kappa == 0);
    CHECK(c5[0].dimC == 10);
    CHECK(c5[0].twist.admits(RootOfUnity(1, 4)));
    CHECK(c5[0].twist.admits(RootOfUnity(3, 16)));
    CHECK_THROWS_AS(braidedNearIntegralCases(0), InputError);
}

TEST_CASE("braided cases are complete against a wide scan") {
    for (std::uint64_t N = 1; N <= 400; ++N) {
        auto cs = braidedNearIntegralCases(N);
        auto again = braidedNearIntegralCases(N);
        REQUIRE(cs.size() == again.size());
        for (std::size_t i = 0; i < cs.size(); ++i) CHECK((cs[i].kappa == again[i].kappa && cs[i].tag == again[i].tag));
        std::size_t want = 1;
        for (std::uint64_t k = 1; k <= 100; ++k) want += (2 * k * k == N) + (3 * k * k == 4 * N);
        CHECK(cs.size() == want);
    }
}

TEST_CASE("dimAChiMinus agrees with its alternative expressions") {
    for (std::uint64_t N : {1, 2, 6, 8, 12, 24})
        for (std::uint64_t k = 0; k <= 9; ++k) {
            NearIntegralReport rep;
            rep.N = N;
            rep.kappa = k;
            std::tie(rep.dPlus, rep.dMinus) = rootsDpm(N, k);
            const double d = dimAChiMinus(rep);
            CHECK(d == doctest::Approx(-rep.dPlus / rep.dMinus).epsilon(1e-9));
            CHECK(d == doctest::Approx((2.0 * N + k * rep.dPlus) / (2.0 * N + k * rep.dMinus)).epsilon(1e-9));
            if (k == 0) CHECK(d == doctest::Approx(1.0));
        }
}
