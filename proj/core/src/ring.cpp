#include "fusion/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace fusion {

const char* axiomKindName(AxiomKind k) {
    switch (k) {
        case AxiomKind::Shape: return "shape";
        case AxiomKind::Unit: return "unit";
        case AxiomKind::DualPairing: return "dual-pairing";
        case AxiomKind::Involution: return "involution";
        case AxiomKind::Associativity: return "associativity";
        case AxiomKind::Frobenius: return "frobenius-reciprocity";
    }
    return "unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& v, std::size_t total) {
    std::ostringstream os;
    os << total << " axiom violation(s)";
    std::vector<AxiomKind> seen;
    for (const auto& x : v)
        if (std::find(seen.begin(), seen.end(), x.kind) == seen.end()) seen.push_back(x.kind);
    for (std::size_t i = 0; i < seen.size(); ++i) os << (i ? ", " : ": ") << axiomKindName(seen[i]);
    if (!v.empty()) os << "; first: " << v.front().detail;
    return os.str();
}

std::string idx(std::initializer_list<std::size_t> ids) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto i : ids) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << ')';
    return os.str();
}

using u128 = unsigned __int128;
using Big = boost::multiprecision::cpp_int;

struct Recorder {
    std::vector<Violation>& out;
    std::size_t cap;
    std::size_t total = 0;
    void add(AxiomKind k, std::vector<std::size_t> w, std::string d) {
        ++total;
        if (out.size() < cap) out.push_back({k, std::move(w), std::move(d)});
    }
};

std::vector<std::vector<FusionRing::Term>> buildSparse(std::size_t n, const std::vector<FusionRing::Entry>& t) {
    std::vector<std::vector<FusionRing::Term>> s(n * n);
    for (std::size_t ij = 0; ij < n * n; ++ij)
        for (std::size_t k = 0; k < n; ++k)
            if (auto v = t[ij * n + k]) s[ij].emplace_back(k, v);
    return s;
}

// (b_i b_j) b_k versus b_i (b_j b_k), coefficient by coefficient.
void checkAssociativity(std::size_t n, const std::vector<FusionRing::Entry>& t,
                        const std::vector<std::vector<FusionRing::Term>>& sp, Recorder& rec) {
    std::vector<u128> L(n, 0), R(n, 0);
    std::vector<char> overflow(n, 0), mark(n, 0);
    std::vector<std::size_t> touched;
    auto touch = [&](std::size_t m) {
        if (!mark[m]) {
            mark[m] = 1;
            touched.push_back(m);
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                for (auto m : touched) L[m] = R[m] = 0, overflow[m] = mark[m] = 0;
                touched.clear();
                for (auto [s, a] : sp[i * n + j])
                    for (auto [m, b] : sp[s * n + k]) {
                        touch(m);
                        u128 p = u128(a) * b;
                        if (__builtin_add_overflow(L[m], p, &L[m])) overflow[m] = 1;
                    }
                for (auto [s, a] : sp[j * n + k])
                    for (auto [m, b] : sp[i * n + s]) {
                        touch(m);
                        u128 p = u128(a) * b;
                        if (__builtin_add_overflow(R[m], p, &R[m])) overflow[m] = 1;
                    }
                std::sort(touched.begin(), touched.end());
                for (auto m : touched) {
                    bool equal;
                    if (overflow[m]) {
                        Big l = 0, r = 0;
                        for (std::size_t s = 0; s < n; ++s) {
                            l += Big(t[(i * n + j) * n + s]) * t[(s * n + k) * n + m];
                            r += Big(t[(j * n + k) * n + s]) * t[(i * n + s) * n + m];
                        }
                        equal = l == r;
                    } else {
                        equal = L[m] == R[m];
                    }
                    if (!equal)
                        rec.add(AxiomKind::Associativity, {i, j, k, m},
                                "((b_i b_j) b_k) and (b_i (b_j b_k)) differ at b_m for (i,j,k,m)=" +
                                    idx({i, j, k, m}));
                }
            }
}

}  // namespace

AxiomViolation::AxiomViolation(std::vector<Violation> v, std::size_t total)
    : Error("AxiomViolation", summarize(v, total)), violations_(std::move(v)), total_(total) {}

bool AxiomViolation::has(AxiomKind k) const {
    return std::any_of(violations_.begin(), violations_.end(), [k](const Violation& v) { return v.kind == k; });
}

std::vector<Violation> checkAxioms(std::size_t n, const std::vector<FusionRing::Entry>& t,
                                   const std::vector<std::size_t>& dual, std::size_t cap, std::size_t* total) {
    std::vector<Violation> out;
    Recorder rec{out, cap};
    auto finish = [&]() {
        if (total) *total = rec.total;
        return out;
    };
    if (n == 0 || t.size() != n * n * n || dual.size() != n) {
        rec.add(AxiomKind::Shape, {}, "tensor must be n x n x n and dual of length n, n >= 1");
        return finish();
    }
    for (std::size_t i = 0; i < n; ++i)
        if (dual[i] >= n) {
            rec.add(AxiomKind::Shape, {i}, "dual index out of range at " + idx({i}));
            return finish();
        }

    auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return t[(i * n + j) * n + k]; };

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            FusionRing::Entry want = j == k;
            if (c(0, j, k) != want) rec.add(AxiomKind::Unit, {0, j, k}, "c_{0,j}^k != delta_jk at " + idx({0, j, k}));
            if (c(j, 0, k) != want) rec.add(AxiomKind::Unit, {j, 0, k}, "c_{j,0}^k != delta_jk at " + idx({j, 0, k}));
        }

    if (dual[0] != 0) rec.add(AxiomKind::Involution, {0}, "dual(0) != 0");
    for (std::size_t i = 0; i < n; ++i)
        if (dual[dual[i]] != i) rec.add(AxiomKind::Involution, {i}, "dual(dual(i)) != i at " + idx({i}));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FusionRing::Entry want = j == dual[i];
            if (c(i, j, 0) != want)
                rec.add(AxiomKind::DualPairing, {i, j}, "c_{ij}^0 != [j = dual(i)] at " + idx({i, j}));
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto v = c(i, j, k);
                if (v != c(dual[i], k, j) || v != c(k, dual[j], i))
                    rec.add(AxiomKind::Frobenius, {i, j, k},
                            "c_{ij}^k, c_{i*,k}^j, c_{k,j*}^i disagree at " + idx({i, j, k}));
            }

    checkAssociativity(n, t, buildSparse(n, t), rec);
    return finish();
}

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<Entry> flat, std::vector<std::size_t> dual)
    : n_(dual.size()), labels_(std::move(labels)), t_(std::move(flat)), dual_(std::move(dual)) {
    if (labels_.size() != n_) {
        labels_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (labels_[i].empty()) labels_[i] = "b" + std::to_string(i);
    }
    sparse_ = buildSparse(n_, t_);
}

FusionRing FusionRing::unchecked(std::vector<std::string> labels, std::vector<Entry> flat,
                                 std::vector<std::size_t> dual) {
    return FusionRing(std::move(labels), std::move(flat), std::move(dual));
}

FusionRing FusionRing::make(std::vector<std::string> labels, std::vector<Entry> flat,
                            std::vector<std::size_t> dual) {
    const std::size_t n = dual.size();
    if (n == 0 || flat.size() != n * n * n)
        throw AxiomViolation({{AxiomKind::Shape, {}, "tensor must be n x n x n and dual of length n, n >= 1"}}, 1);
    if (!labels.empty() && labels.size() != n)
        throw AxiomViolation({{AxiomKind::Shape, {}, "labels must have length n"}}, 1);

    // Locate a two-sided unit and move it to index 0.
    auto isUnit = [&](std::size_t u) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Entry want = j == k;
                if (flat[(u * n + j) * n + k] != want || flat[(j * n + u) * n + k] != want) return false;
            }
        return true;
    };
    if (!isUnit(0)) {
        for (std::size_t u = 1; u < n; ++u) {
            if (!isUnit(u)) continue;
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[0], perm[u]);
            std::vector<Entry> g(flat.size());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        g[(i * n + j) * n + k] = flat[(perm[i] * n + perm[j]) * n + perm[k]];
            std::vector<std::size_t> d(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (dual[perm[i]] >= n)
                    throw AxiomViolation({{AxiomKind::Shape, {perm[i]}, "dual index out of range"}}, 1);
                d[i] = perm[dual[perm[i]]];
            }
            if (!labels.empty()) std::swap(labels[0], labels[u]);
            flat = std::move(g);
            dual = std::move(d);
            break;
        }
    }

    std::size_t total = 0;
    auto v = checkAxioms(n, flat, dual, 4096, &total);
    if (total) throw AxiomViolation(std::move(v), total);
    return FusionRing(std::move(labels), std::move(flat), std::move(dual));
}

bool FusionRing::isCommutative() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (c(i, j, k) != c(j, i, k)) return false;
    return true;
}

Tensor3 FusionRing::tensor() const {
    Tensor3 out(n_, std::vector<std::vector<std::int64_t>>(n_, std::vector<std::int64_t>(n_)));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                auto v = c(i, j, k);
                if (v > static_cast<Entry>(INT64_MAX)) throw Overflow("structure constant exceeds int64 range");
                out[i][j][k] = static_cast<std::int64_t>(v);
            }
    return out;
}

FusionRing newFusionRing(std::vector<std::string> labels, const Tensor3& tensor, std::vector<std::size_t> dual) {
    const std::size_t n = tensor.size();
    std::vector<FusionRing::Entry> flat(n * n * n);
    std::vector<Violation> shape;
    for (std::size_t i = 0; i < n; ++i) {
        if (tensor[i].size() != n) {
            shape.push_back({AxiomKind::Shape, {i}, "tensor slice " + idx({i}) + " has wrong length"});
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (tensor[i][j].size() != n) {
                shape.push_back({AxiomKind::Shape, {i, j}, "tensor row " + idx({i, j}) + " has wrong length"});
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                auto v = tensor[i][j][k];
                if (v < 0) shape.push_back({AxiomKind::Shape, {i, j, k}, "negative entry at " + idx({i, j, k})});
                else flat[(i * n + j) * n + k] = static_cast<FusionRing::Entry>(v);
            }
        }
    }
    if (!shape.empty()) {
        auto total = shape.size();
        throw AxiomViolation(std::move(shape), total);
    }
    return FusionRing::make(std::move(labels), std::move(flat), std::move(dual));
}

std::vector<std::int64_t> fuse(const FusionRing& r, const std::vector<std::int64_t>& x,
                               const std::vector<std::int64_t>& y) {
    const std::size_t n = r.rank();
    if (x.size() != n || y.size() != n)
        throw InputError("fuse: vectors must have length " + std::to_string(n));
    std::vector<__int128> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!y[j]) continue;
            __int128 xy = __int128(x[i]) * y[j];
            for (auto [k, c] : r.product(i, j)) {
                __int128 term;
                if (__builtin_mul_overflow(xy, __int128(c), &term) || __builtin_add_overflow(acc[k], term, &acc[k]))
                    throw Overflow("fuse: coefficient overflow");
            }
        }
    }
    std::vector<std::int64_t> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (acc[k] > INT64_MAX || acc[k] < INT64_MIN) throw Overflow("fuse: coefficient exceeds int64 range");
        out[k] = static_cast<std::int64_t>(acc[k]);
    }
    return out;
}

std::vector<std::int64_t> basisVector(const FusionRing& r, std::size_t i) {
    std::vector<std::int64_t> v(r.rank(), 0);
    v.at(i) = 1;
    return v;
}

FusionRing trivialRing() { return FusionRing::make({"1"}, {1}, {0}); }

FusionRing productRing(const FusionRing& a, const FusionRing& b) {
    const std::size_t na = a.rank(), nb = b.rank(), n = na * nb;
    std::vector<FusionRing::Entry> flat(n * n * n, 0);
    std::vector<std::string> labels(n);
    std::vector<std::size_t> dual(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            labels[i * nb + j] = "(" + a.label(i) + "," + b.label(j) + ")";
            dual[i * nb + j] = a.dual(i) * nb + b.dual(j);
        }
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < na; ++k)
            for (auto [m, x] : a.product(i, k))
                for (std::size_t j = 0; j < nb; ++j)
                    for (std::size_t l = 0; l < nb; ++l)
                        for (auto [p, y] : b.product(j, l)) {
                            FusionRing::Entry v;
                            if (__builtin_mul_overflow(x, y, &v)) throw Overflow("product ring structure constant overflow");
                            flat[((i * nb + j) * n + (k * nb + l)) * n + (m * nb + p)] = v;
                        }
    return FusionRing::make(std::move(labels), std::move(flat), std::move(dual));
}

FusionRing groupRing(const std::vector<std::size_t>& factors) {
    std::size_t order = 1;
    for (auto f : factors) {
        if (f == 0) throw InputError("groupRing: cyclic factor orders must be positive");
        order *= f;
    }
    // Mixed-radix coordinates, first factor most significant.
    auto digits = [&](std::size_t g) {
        std::vector<std::size_t> d(factors.size());
        for (std::size_t f = factors.size(); f-- > 0;) {
            d[f] = g % factors[f];
            g /= factors[f];
        }
        return d;
    };
    auto index = [&](const std::vector<std::size_t>& d) {
        std::size_t g = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) g = g * factors[f] + d[f];
        return g;
    };
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < order; ++a) {
        auto da = digits(a);
        if (factors.size() == 1) {
            labels[a] = da[0] == 0 ? "1" : da[0] == 1 ? "g" : "g^" + std::to_string(da[0]);
        } else {
            std::string s = "(";
            for (std::size_t f = 0; f < da.size(); ++f) s += (f ? "," : "") + std::to_string(da[f]);
            labels[a] = s + ")";
        }
        for (std::size_t b = 0; b < order; ++b) {
            auto db = digits(b);
            for (std::size_t f = 0; f < factors.size(); ++f) db[f] = (da[f] + db[f]) % factors[f];
            table[a][b] = index(db);
        }
    }
    if (factors.empty()) labels = {"1"};
    return groupRing(table, std::move(labels));
}

FusionRing groupRing(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw InputError("groupRing: empty table");
    for (const auto& row : table) {
        if (row.size() != n) throw InputError("groupRing: table is not square");
        for (auto v : row)
            if (v >= n) throw InputError("groupRing: table entry out of range");
    }
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
        if (ok) e = a;
    }
    if (e == n) throw InputError("groupRing: table has no identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InputError("groupRing: table is not associative");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inv[a] == n) throw InputError("groupRing: element without inverse");

    std::vector<FusionRing::Entry> flat(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) flat[(a * n + b) * n + table[a][b]] = 1;
    if (labels.empty())
        for (std::size_t a = 0; a < n; ++a) labels.push_back(a == e ? "e" : "g" + std::to_string(a));
    return FusionRing::make(std::move(labels), std::move(flat), std::move(inv));
}

}  // namespace fusion
