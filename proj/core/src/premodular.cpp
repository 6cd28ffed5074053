#include "fusion/premodular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace fusion {

using C = std::complex<double>;

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InputError("root of unity denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    auto g = std::gcd(num, den);
    if (num == 0) g = den;
    num_ = num / g;
    den_ = den / g;
}

C RootOfUnity::value() const {
    if (4 * num_ % den_ == 0) {
        static const C quarter[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
        return quarter[4 * num_ / den_];
    }
    double a = 2 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(a), std::sin(a)};
}

RootOfUnity RootOfUnity::inverse() const { return {den_ - num_, den_}; }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
    __int128 v = static_cast<__int128>(num_) * (k % den_);
    return {static_cast<std::int64_t>(v % den_), den_};
}

std::string RootOfUnity::str() const {
    if (num_ == 0) return "1";
    return "zeta(" + std::to_string(den_) + "," + std::to_string(num_) + ")";
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    auto l = std::lcm(a.den_, b.den_);
    return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

double ModularDatum::globalDim() const {
    double s = 0;
    for (double d : dims) s += d * d;
    return s;
}

void ModularDatum::validate(double tol) {
    const std::size_t n = S.size();
    if (n == 0) throw InputError("S-matrix is empty");
    for (const auto& row : S)
        if (row.size() != n) throw InputError("S-matrix must be square");
    if (T.size() != n) throw InputError("T must have one twist per simple object");
    if (!labels.empty() && labels.size() != n) throw InputError("labels must have one entry per simple object");
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i));
    double scale = 0;
    for (const auto& row : S)
        for (auto z : row) scale = std::max(scale, std::abs(z));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(S[i][j] - S[j][i]) > tol * std::max(1.0, scale))
                throw InputError("S-matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (std::abs(S[0][0] - C(1)) > tol) throw InputError("S[0][0] must be 1 (unnormalized convention)");
    if (dims.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(S[0][i].imag()) > tol) throw InputError("row 0 of S must be real");
            dims.push_back(S[0][i].real());
        }
    }
    if (dims.size() != n) throw InputError("dims must have one entry per simple object");
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(S[0][i] - C(dims[i])) > tol * std::max(1.0, std::abs(dims[i])))
            throw InputError("S[0][" + std::to_string(i) + "] differs from dims");
        if (dims[i] == 0) throw InputError("dimensions must be nonzero");
    }
}

VerlindeResult verlindeFusion(const ModularDatum& md, const Tolerance& tol) {
    ModularDatum m = md;
    m.validate(tol.arith);
    const std::size_t n = m.rank();
    const double D = m.globalDim();
    const double rootD = std::sqrt(D);
    std::vector<std::vector<C>> s(n, std::vector<C>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = m.S[i][j] / rootD;

    // Normalized S must be unitary for the formula to invert it.
    double unitErr = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            C acc = 0;
            for (std::size_t t = 0; t < n; ++t) acc += s[i][t] * std::conj(s[j][t]);
            unitErr = std::max(unitErr, std::abs(acc - C(i == j ? 1.0 : 0.0)));
        }
    if (unitErr > tol.snap) {
        std::ostringstream os;
        os << "normalized S-matrix is not unitary (max deviation " << unitErr << ")";
        throw SingularSMatrix(os.str());
    }
    for (std::size_t t = 0; t < n; ++t)
        if (std::abs(s[0][t]) < tol.snap) throw SingularSMatrix("S[0][t] vanishes");

    VerlindeResult out{FusionRing::unchecked({"1"}, {1}, {0}), D, 0};
    std::vector<FusionRing::Entry> flat(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                C v = 0;
                for (std::size_t t = 0; t < n; ++t) v += s[i][t] * s[j][t] * std::conj(s[k][t]) / s[0][t];
                double r = std::round(v.real());
                double err = std::abs(v - C(r));
                out.maxSnapError = std::max(out.maxSnapError, err);
                if (err > tol.snap) {
                    std::ostringstream os;
                    os.precision(12);
                    os << "N_{" << i << "," << j << "}^" << k << " = " << v.real() << (v.imag() < 0 ? "" : "+")
                       << v.imag() << "i";
                    throw NonIntegralFusion(os.str());
                }
                if (r < 0) {
                    std::ostringstream os;
                    os << "N_{" << i << "," << j << "}^" << k << " = " << r;
                    throw NegativeFusion(os.str());
                }
                flat[(i * n + j) * n + k] = static_cast<FusionRing::Entry>(r);
            }
    // Charge conjugation s^2 must be a permutation matrix.
    std::vector<std::size_t> dual(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            C v = 0;
            for (std::size_t t = 0; t < n; ++t) v += s[i][t] * s[t][k];
            if (std::abs(v - C(1)) <= tol.snap) {
                if (dual[i] != n) throw NonIntegralFusion("charge conjugation is not a permutation");
                dual[i] = k;
            } else if (std::abs(v) > tol.snap) {
                throw NonIntegralFusion("charge conjugation is not a permutation");
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        if (dual[i] == n) throw NonIntegralFusion("charge conjugation is not a permutation");
    out.ring = FusionRing::make(m.labels, std::move(flat), std::move(dual));
    return out;
}

std::pair<C, C> gaussSums(const std::vector<double>& dims, const std::vector<RootOfUnity>& T) {
    if (dims.size() != T.size()) throw InputError("gaussSums: dims and T lengths differ");
    C plus = 0, minus = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        double d2 = dims[i] * dims[i];
        plus += d2 * T[i].value();
        minus += d2 * T[i].inverse().value();
    }
    return {plus, minus};
}

std::vector<BalancingViolation> balancingCheck(const FusionRing& r, const ModularDatum& md, const Tolerance& tol) {
    ModularDatum m = md;
    m.validate(tol.arith);
    const std::size_t n = m.rank();
    if (r.rank() != n) throw InputError("balancingCheck: ring rank differs from datum rank");
    const double scale = std::max(1.0, m.globalDim());
    std::vector<BalancingViolation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            C acc = 0;
            for (auto [k, c] : r.product(r.dual(i), j)) acc += static_cast<double>(c) * m.dims[k] * m.T[k].value();
            C expected = m.T[i].inverse().value() * m.T[j].inverse().value() * acc;
            if (std::abs(expected - m.S[i][j]) > tol.arith * scale) out.push_back({i, j, expected, m.S[i][j]});
        }
    return out;
}

CentralizerProfile centralizerProfile(const ModularDatum& md, const Tolerance& tol) {
    ModularDatum m = md;
    m.validate(tol.arith);
    const std::size_t n = m.rank();
    CentralizerProfile p;
    p.centralizes.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        bool all = true;
        for (std::size_t j = 0; j < n; ++j) {
            double dd = m.dims[i] * m.dims[j];
            bool c = std::abs(m.S[i][j] - C(dd)) < tol.arith * std::max(1.0, std::abs(dd));
            p.centralizes[i][j] = c;
            all = all && c;
        }
        if (all) p.symmetricCenter.push_back(i);
    }
    return p;
}

std::size_t groupOrder(const std::vector<std::uint64_t>& factors) {
    std::size_t o = 1;
    for (auto f : factors) {
        if (f == 0) throw InputError("cyclic factor orders must be positive");
        if (__builtin_mul_overflow(o, static_cast<std::size_t>(f), &o)) throw GroupTooLarge("group order overflows");
    }
    return o;
}

std::vector<std::uint64_t> QuadraticForm::digits(std::size_t g) const {
    std::vector<std::uint64_t> d(group.size());
    for (std::size_t f = group.size(); f-- > 0;) {
        d[f] = g % group[f];
        g /= group[f];
    }
    return d;
}

std::size_t QuadraticForm::index(const std::vector<std::uint64_t>& d) const {
    std::size_t g = 0;
    for (std::size_t f = 0; f < group.size(); ++f) g = g * group[f] + d[f] % group[f];
    return g;
}

std::size_t QuadraticForm::add(std::size_t g, std::size_t h) const {
    auto a = digits(g), b = digits(h);
    for (std::size_t f = 0; f < a.size(); ++f) a[f] = (a[f] + b[f]) % group[f];
    return index(a);
}

std::size_t QuadraticForm::neg(std::size_t g) const {
    auto a = digits(g);
    for (std::size_t f = 0; f < a.size(); ++f) a[f] = (group[f] - a[f]) % group[f];
    return index(a);
}

RootOfUnity QuadraticForm::bicharacter(std::size_t g, std::size_t h) const {
    return values[add(g, h)] / values[g] / values[h];
}

bool QuadraticForm::valid(std::string* why) const {
    auto fail = [&](std::string s) {
        if (why) *why = std::move(s);
        return false;
    };
    if (values.size() != groupOrder(group)) return fail("value table size differs from group order");
    if (!values[0].isOne()) return fail("q(0) != 1");
    const std::size_t n = order();
    for (std::size_t g = 0; g < n; ++g)
        if (values[g] != values[neg(g)]) return fail("q(g) != q(-g) at g=" + std::to_string(g));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t g2 = 0; g2 < n; ++g2)
            for (std::size_t h = 0; h < n; ++h)
                if (bicharacter(add(g, g2), h) != bicharacter(g, h) * bicharacter(g2, h))
                    return fail("b is not a bicharacter at (" + std::to_string(g) + "," + std::to_string(g2) + "," +
                                std::to_string(h) + ")");
    return true;
}

std::vector<QuadraticForm> quadraticForms(const std::vector<std::uint64_t>& factors) {
    const std::size_t order = groupOrder(factors);
    const std::size_t k = factors.size();
    // q(e_i) ranges over 2n_i-th roots; cross terms b(e_i, e_j) over gcd(n_i, n_j)-th roots.
    std::vector<std::uint64_t> radix;
    for (auto f : factors) radix.push_back(2 * f);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            pairs.emplace_back(i, j);
            radix.push_back(std::gcd(factors[i], factors[j]));
        }
    std::size_t candidates = 1;
    for (auto r : radix)
        if (__builtin_mul_overflow(candidates, static_cast<std::size_t>(r), &candidates) || candidates > (1u << 22))
            throw GroupTooLarge("too many candidate quadratic forms");
    if (candidates * order * order * order > (std::size_t{1} << 31))
        throw GroupTooLarge("group too large for form enumeration");

    std::vector<QuadraticForm> out;
    std::vector<std::uint64_t> p(radix.size(), 0);
    QuadraticForm q;
    q.group = factors;
    q.values.resize(order);
    for (std::size_t c = 0; c < candidates; ++c) {
        std::size_t rest = c;
        for (std::size_t r = radix.size(); r-- > 0;) {
            p[r] = rest % radix[r];
            rest /= radix[r];
        }
        for (std::size_t g = 0; g < order; ++g) {
            auto d = q.digits(g);
            RootOfUnity v;
            for (std::size_t i = 0; i < k; ++i)
                v = v * RootOfUnity(static_cast<std::int64_t>(p[i] * d[i] % (2 * factors[i]) * d[i] % (2 * factors[i])),
                                    static_cast<std::int64_t>(2 * factors[i]));
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                auto [i, j] = pairs[e];
                auto m = radix[k + e];
                v = v * RootOfUnity(static_cast<std::int64_t>(p[k + e] * (d[i] * d[j] % m) % m), static_cast<std::int64_t>(m));
            }
            q.values[g] = v;
        }
        if (q.valid()) out.push_back(q);
    }
    return out;
}

std::vector<std::vector<std::size_t>> groupAutomorphisms(const std::vector<std::uint64_t>& factors) {
    const std::size_t order = groupOrder(factors);
    if (order > 64) throw GroupTooLarge("automorphism enumeration is limited to |G| <= 64");
    QuadraticForm shape;
    shape.group = factors;
    shape.values.resize(order);
    const std::size_t k = factors.size();
    auto elementOrder = [&](std::size_t g) {
        std::size_t o = 1;
        for (std::size_t h = g; h != 0; h = shape.add(h, g)) ++o;
        return o;
    };
    auto mul = [&](std::size_t g, std::uint64_t m) {
        std::size_t h = 0;
        for (std::uint64_t i = 0; i < m; ++i) h = shape.add(h, g);
        return h;
    };
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> images(k);
    // Image of e_i needs order dividing n_i; the whole map must be injective.
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            std::vector<std::size_t> perm(order);
            std::vector<char> hit(order, 0);
            for (std::size_t g = 0; g < order; ++g) {
                auto d = shape.digits(g);
                std::size_t h = 0;
                for (std::size_t f = 0; f < k; ++f) h = shape.add(h, mul(images[f], d[f]));
                if (hit[h]) return;
                hit[h] = 1;
                perm[g] = h;
            }
            out.push_back(std::move(perm));
            if (out.size() > (1u << 20)) throw GroupTooLarge("automorphism group too large");
            return;
        }
        for (std::size_t g = 0; g < order; ++g)
            if (factors[i] % elementOrder(g) == 0) {
                images[i] = g;
                self(self, i + 1);
            }
    };
    extend(extend, 0);
    return out;
}

std::vector<FormClass> formClasses(const std::vector<std::uint64_t>& factors) {
    auto autos = groupAutomorphisms(factors);
    auto forms = quadraticForms(factors);
    std::map<std::vector<RootOfUnity>, std::size_t> indexOf;
    for (std::size_t i = 0; i < forms.size(); ++i) indexOf[forms[i].values] = i;
    std::vector<char> done(forms.size(), 0);
    std::vector<FormClass> out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> orbit;
        for (const auto& phi : autos) {
            std::vector<RootOfUnity> v(forms[i].order());
            for (std::size_t g = 0; g < v.size(); ++g) v[g] = forms[i].values[phi[g]];
            auto it = indexOf.find(v);
            if (it == indexOf.end()) throw InternalInconsistency("automorphism maps a form outside the enumeration");
            if (!done[it->second]) {
                done[it->second] = 1;
                orbit.push_back(it->second);
            }
        }
        auto rep = *std::min_element(orbit.begin(), orbit.end(),
                                     [&](std::size_t a, std::size_t b) { return forms[a].values < forms[b].values; });
        out.push_back({forms[rep], orbit.size()});
    }
    std::sort(out.begin(), out.end(), [](const FormClass& a, const FormClass& b) {
        return a.representative.values < b.representative.values;
    });
    return out;
}

bool formNondegenerate(const QuadraticForm& f) {
    for (std::size_t g = 1; g < f.order(); ++g) {
        bool trivial = true;
        for (std::size_t h = 0; h < f.order() && trivial; ++h) trivial = f.bicharacter(g, h).isOne();
        if (trivial) return false;
    }
    return true;
}

bool TwistConstraint::admits(const RootOfUnity& theta) const {
    return std::find(allowed.begin(), allowed.end(), theta) != allowed.end();
}

std::vector<BraidedCase> braidedNearIntegralCases(std::uint64_t N) {
    if (N == 0) throw InputError("braidedNearIntegralCases: N must be positive");
    std::vector<BraidedCase> out;
    BraidedCase zero;
    zero.kappa = 0;
    zero.dimC = 2 * N;
    for (std::int64_t k = 0; k < 16; ++k) zero.twist.allowed.emplace_back(k, 16);
    std::sort(zero.twist.allowed.begin(), zero.twist.allowed.end());
    zero.twist.description = "theta_rho = +-zeta(4,1) (Tannakian) or theta_rho^16 = 1 (super-Tannakian)";
    zero.tag = "kappa-zero";
    out.push_back(zero);
    const auto limit = static_cast<std::uint64_t>(std::sqrt(4.0 * static_cast<double>(N) / 3.0)) + 1;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (2 * k * k == N)
            out.push_back({k, 6 * k * k, {{RootOfUnity(1, 3), RootOfUnity(2, 3)}, "theta_rho = zeta(3,1)^(+-1)"}, "case-2"});
        if (3 * k * k == 4 * N)
            out.push_back({k, 3 * k * k, {{RootOfUnity(1, 2)}, "theta_rho = -1"}, "case-3"});
    }
    return out;
}

double dimAChiMinus(const NearIntegralReport& rep, const Tolerance& tol) {
    const double N = static_cast<double>(rep.N), k = static_cast<double>(rep.kappa);
    const double v = 1.0 + (k / N) * rep.dPlus;
    const double viaSums = (2 * N + k * rep.dPlus) / (2 * N + k * rep.dMinus);
    const double viaRoots = -rep.dPlus / rep.dMinus;
    if (std::abs(v - viaSums) > tol.arith * v || std::abs(v - viaRoots) > tol.arith * v)
        throw VerificationFailed("dim(A_chi-) expressions disagree");
    return v;
}

}  // namespace fusion
