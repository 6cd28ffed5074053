#include "fusion/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>

namespace fusion {

using C = std::complex<double>;

double snap(double x, double tol) {
    double r = std::round(x);
    return std::abs(x - r) <= tol ? r : x;
}

bool isNearInteger(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

namespace {

Eigen::MatrixXd fusionMatrix(const FusionRing& r, std::size_t i) {
    const std::size_t n = r.rank();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (auto [k, c] : r.product(i, j)) m(j, k) = static_cast<double>(c);
    return m;
}

// Power iteration on a nonnegative matrix with a positive shift; returns the dominant
// eigenvalue of m and writes its eigenvector, or nullopt when not converged.
std::optional<double> powerIterate(const Eigen::MatrixXd& m, Eigen::VectorXd& x, int maxIter = 20000) {
    x = Eigen::VectorXd::Ones(m.rows());
    x.normalize();
    double lambda = 0;
    for (int it = 0; it < maxIter; ++it) {
        Eigen::VectorXd y = m * x;
        double next = x.dot(y);  // Rayleigh quotient, ||x|| = 1
        double ny = y.norm();
        if (ny == 0) return std::nullopt;
        y /= ny;
        bool done = it > 0 && std::abs(next - lambda) <= 1e-12 * std::max(1.0, std::abs(next));
        x = y;
        lambda = next;
        if (done) {
            double res = (m * x - lambda * x).norm();
            if (res <= 1e-9 * std::max(1.0, std::abs(lambda))) return lambda;
        }
    }
    return std::nullopt;
}

std::uint64_t ringHash(const FusionRing& r) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(r.rank());
    for (auto v : r.flat()) mix(v);
    for (auto d : r.duals()) mix(d);
    return h;
}

}  // namespace

double fpdimElement(const FusionRing& r, std::size_t i) {
    if (i >= r.rank()) throw InputError("fpdimElement: index out of range");
    const std::size_t n = r.rank();
    Eigen::MatrixXd m = fusionMatrix(r, i);
    Eigen::VectorXd x;
    if (auto l = powerIterate(m + Eigen::MatrixXd::Identity(n, n), x)) return *l - 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    double best = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) best = std::max(best, es.eigenvalues()[k].real());
    return best;
}

std::vector<double> fpdims(const FusionRing& r) {
    std::vector<double> d(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i) d[i] = fpdimElement(r, i);
    return d;
}

std::vector<double> perronVector(const FusionRing& r) {
    const std::size_t n = r.rank();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j) m += fusionMatrix(r, j);
    Eigen::VectorXd x;
    if (!powerIterate(m, x)) {
        Eigen::EigenSolver<Eigen::MatrixXd> es(m, true);
        Eigen::Index best = 0;
        for (Eigen::Index k = 1; k < es.eigenvalues().size(); ++k)
            if (es.eigenvalues()[k].real() > es.eigenvalues()[best].real()) best = k;
        x = es.eigenvectors().col(best).real();
    }
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = x[i] / x[0];
    return d;
}

double ringFPdim(const FusionRing& r) {
    double s = 0;
    for (double d : fpdims(r)) s += d * d;
    return s;
}

double multiplicativityError(const FusionRing& r, const std::vector<C>& v) {
    const std::size_t n = r.rank();
    if (v.size() != n) throw InputError("character length does not match rank");
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            C lhs = v[i] * v[j], rhs = 0;
            for (auto [k, c] : r.product(i, j)) rhs += static_cast<double>(c) * v[k];
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    return worst;
}

std::vector<Character> characters(const FusionRing& r, const SpectralOptions& opt) {
    if (!r.isCommutative()) throw NotCommutative("characters require a commutative ring");
    const std::size_t n = r.rank();
    std::vector<Eigen::MatrixXd> N;
    for (std::size_t i = 0; i < n; ++i) N.push_back(fusionMatrix(r, i));
    std::vector<double> d = fpdims(r);

    std::mt19937_64 gen(ringHash(r) ^ opt.seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::string lastFailure = "no attempt made";
    for (int attempt = 0; attempt < std::max(1, opt.retries); ++attempt) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t i = 0; i < n; ++i) a += dist(gen) * N[i];
        Eigen::EigenSolver<Eigen::MatrixXd> es(a, true);
        if (es.info() != Eigen::Success) {
            lastFailure = "eigensolver did not converge";
            continue;
        }
        const auto& ev = es.eigenvalues();
        double scale = std::max(1.0, a.norm());
        bool separated = true;
        for (Eigen::Index p = 0; p < ev.size() && separated; ++p)
            for (Eigen::Index q = p + 1; q < ev.size() && separated; ++q)
                separated = std::abs(ev[p] - ev[q]) >= 1e-8 * scale;
        if (!separated) {
            lastFailure = "eigenvalue collision below 1e-8";
            continue;
        }
        std::vector<Character> out;
        bool ok = true;
        for (Eigen::Index col = 0; col < ev.size() && ok; ++col) {
            Eigen::VectorXcd v = es.eigenvectors().col(col);
            if (std::abs(v[0]) < 1e-10 * v.norm()) {
                ok = false;
                lastFailure = "eigenvector vanishes at the unit";
                break;
            }
            v /= v[0];
            Character ch;
            ch.values.resize(n);
            double vv = v.squaredNorm();
            for (std::size_t i = 0; i < n; ++i) {
                // Rayleigh refinement of the eigenvalue of N_i on v.
                C num = v.dot(N[i].cast<C>() * v);
                ch.values[i] = num / vv;
            }
            ch.values[0] = 1;
            // |chi(b_i)| <= FPdim(b_i), so parts below rounding noise at that scale are exact zeros.
            for (std::size_t i = 0; i < n; ++i) {
                const double eps = 1e-12 * std::max(1.0, d[i]);
                auto& z = ch.values[i];
                z = C(std::abs(z.real()) <= eps ? 0.0 : z.real(), std::abs(z.imag()) <= eps ? 0.0 : z.imag());
            }
            double err = multiplicativityError(r, ch.values);
            if (err > opt.tol.snap) {
                ok = false;
                std::ostringstream os;
                os << "character multiplicativity error " << err;
                lastFailure = os.str();
                break;
            }
            for (const auto& z : ch.values) ch.codegree += std::norm(z);
            bool fp = true;
            for (std::size_t i = 0; i < n && fp; ++i)
                fp = std::abs(ch.values[i] - C(d[i])) <= opt.tol.snap * std::max(1.0, d[i]);
            ch.isFPdim = fp;
            out.push_back(std::move(ch));
        }
        if (!ok) continue;
        auto key = [](const Character& c) {
            std::vector<std::pair<double, double>> k;
            for (auto z : c.values) k.emplace_back(std::round(z.real() * 1e8), std::round(z.imag() * 1e8));
            return k;
        };
        std::sort(out.begin(), out.end(), [&](const Character& x, const Character& y) {
            if (x.isFPdim != y.isFPdim) return x.isFPdim;
            double cx = std::round(x.codegree * 1e8), cy = std::round(y.codegree * 1e8);
            if (cx != cy) return cx > cy;
            return key(x) > key(y);
        });
        if (std::count_if(out.begin(), out.end(), [](const Character& c) { return c.isFPdim; }) != 1) {
            lastFailure = "FPdim character not found exactly once";
            continue;
        }
        return out;
    }
    throw DegenerateSpectrum("simultaneous diagonalization failed after retries: " + lastFailure);
}

std::vector<double> formalCodegrees(const FusionRing& r, const SpectralOptions& opt) {
    std::vector<double> f;
    for (const auto& ch : characters(r, opt)) f.push_back(snap(ch.codegree, opt.tol.snap));
    std::sort(f.begin(), f.end(), std::greater<>());
    return f;
}

std::vector<std::uint64_t> inductionUnitProfile(const FusionRing& r) {
    std::vector<std::uint64_t> out(r.rank(), 0);
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (auto [j, c] : r.product(i, r.dual(i)))
            if (__builtin_add_overflow(out[j], c, &out[j])) throw Overflow("induction profile overflow");
    return out;
}

std::vector<double> codegreeObjectDims(const FusionRing& r, const SpectralOptions& opt) {
    auto f = formalCodegrees(r, opt);
    auto d = fpdims(r);
    auto iu = inductionUnitProfile(r);
    double total = 0;
    for (double x : d) total += x * x;
    std::vector<double> out;
    double lhs = 0;
    for (double x : f) {
        out.push_back(snap(total / x, opt.tol.snap));
        lhs += total / x;
    }
    double rhs = 0;
    for (std::size_t j = 0; j < d.size(); ++j) rhs += static_cast<double>(iu[j]) * d[j];
    if (std::abs(lhs - rhs) > opt.tol.snap * std::max(1.0, rhs))
        throw VerificationFailed("codegree object dimensions do not sum to the induced unit dimension");
    std::sort(out.begin(), out.end());
    return out;
}

SpectralReport spectralReport(const FusionRing& r, const SpectralOptions& opt) {
    SpectralReport rep;
    rep.fpdims = fpdims(r);
    for (double x : rep.fpdims) rep.ringFPdim += x * x;
    rep.commutative = r.isCommutative();
    if (rep.commutative) rep.codegrees = formalCodegrees(r, opt);
    rep.inductionUnit = inductionUnitProfile(r);
    return rep;
}

}  // namespace fusion
