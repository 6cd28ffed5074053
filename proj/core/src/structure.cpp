#include "fusion/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "fusion/spectral.hpp"

namespace fusion {

bool SubringHandle::contains(std::size_t i) const { return std::binary_search(indices.begin(), indices.end(), i); }

SubringHandle closure(const FusionRing& r, const std::vector<std::size_t>& generators) {
    const std::size_t n = r.rank();
    std::vector<char> in(n, 0);
    std::vector<std::size_t> members;
    std::deque<std::size_t> work;
    auto add = [&](std::size_t x) {
        if (x >= n) throw InputError("closure: generator index out of range");
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    add(0);
    for (auto g : generators) add(g);
    while (!work.empty()) {
        std::size_t x = work.front();
        work.pop_front();
        members.push_back(x);
        add(r.dual(x));
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            std::size_t y = members[idx];
            for (auto [k, c] : r.product(x, y)) add(k);
            for (auto [k, c] : r.product(y, x)) add(k);
        }
    }
    std::sort(members.begin(), members.end());
    return {members};
}

bool isSubring(const FusionRing& r, const std::vector<std::size_t>& indices) {
    const std::size_t n = r.rank();
    std::vector<char> in(n, 0);
    for (auto i : indices) {
        if (i >= n) return false;
        in[i] = 1;
    }
    if (indices.empty() || !in[0]) return false;
    for (auto a : indices) {
        if (!in[r.dual(a)]) return false;
        for (auto b : indices)
            for (auto [k, c] : r.product(a, b))
                if (!in[k]) return false;
    }
    return true;
}

std::vector<SubringHandle> enumerateSubrings(const FusionRing& r, const EnumerationOptions& opt) {
    const std::size_t n = r.rank();
    if (n > opt.maxRank)
        throw SearchBudgetExceeded("rank " + std::to_string(n) + " exceeds the enumeration limit " +
                                   std::to_string(opt.maxRank));
    std::set<std::vector<std::size_t>> seen;
    std::deque<std::vector<std::size_t>> queue;
    std::size_t closures = 0;
    auto found = [&](std::vector<std::size_t> s) {
        if (seen.insert(s).second) {
            if (opt.maxCount && seen.size() > *opt.maxCount)
                throw SearchBudgetExceeded("more than " + std::to_string(*opt.maxCount) + " subrings");
            queue.push_back(std::move(s));
        }
    };
    found(closure(r, {}).indices);
    while (!queue.empty()) {
        auto h = std::move(queue.front());
        queue.pop_front();
        std::vector<char> in(n, 0);
        for (auto i : h) in[i] = 1;
        for (std::size_t x = 0; x < n; ++x) {
            if (in[x]) continue;
            // x and its dual generate the same closure over h.
            if (r.dual(x) < x && !in[r.dual(x)]) continue;
            if (++closures > opt.closureBudget)
                throw SearchBudgetExceeded("closure budget of " + std::to_string(opt.closureBudget) + " exhausted");
            auto g = h;
            g.push_back(x);
            found(closure(r, g).indices);
        }
    }
    std::vector<SubringHandle> out;
    for (const auto& s : seen) out.push_back({s});
    std::stable_sort(out.begin(), out.end(),
                     [](const SubringHandle& a, const SubringHandle& b) { return a.rank() < b.rank(); });
    return out;
}

SubringHandle pointedSubring(const FusionRing& r, const Tolerance& tol) {
    SubringHandle h;
    auto fp = fpdims(r);
    for (std::size_t i = 0; i < r.rank(); ++i) {
        // b_i is invertible exactly when b_i b_i^* = 1.
        const auto& p = r.product(i, r.dual(i));
        bool invertible = p.size() == 1 && p[0].first == 0 && p[0].second == 1;
        if (invertible != (std::abs(fp[i] - 1.0) <= tol.snap))
            throw InternalInconsistency("FPdim and invertibility disagree at " + r.label(i));
        if (invertible) h.indices.push_back(i);
    }
    if (!isSubring(r, h.indices)) throw ClosureViolation("invertible elements are not fusion-closed");
    return h;
}

SubringHandle adjointSubring(const FusionRing& r) {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (auto [k, c] : r.product(i, r.dual(i))) gens.push_back(k);
    return closure(r, gens);
}

GradingReport universalGrading(const FusionRing& r) {
    const std::size_t n = r.rank();
    GradingReport g;
    g.adjoint = adjointSubring(r);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (auto a : g.adjoint.indices)
        for (std::size_t i = 0; i < n; ++i)
            for (auto [j, c] : r.product(a, i)) unite(i, j);

    // Components numbered by smallest member, so the unit's component is 0.
    g.componentOf.assign(n, n);
    std::vector<std::size_t> rootId(n, n);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto root = find(i);
        if (rootId[root] == n) rootId[root] = count++;
        g.componentOf[i] = rootId[root];
    }
    g.groupTable.assign(count, std::vector<std::size_t>(count, count));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (auto [k, c] : r.product(i, j)) {
                auto& cell = g.groupTable[g.componentOf[i]][g.componentOf[j]];
                if (cell == count) cell = g.componentOf[k];
                else if (cell != g.componentOf[k])
                    throw InternalInconsistency("fusion does not respect the component partition");
            }
    for (std::size_t a = 0; a < count; ++a) {
        if (g.groupTable[0][a] != a || g.groupTable[a][0] != a)
            throw InternalInconsistency("unit component is not the identity");
        for (std::size_t b = 0; b < count; ++b)
            for (std::size_t c = 0; c < count; ++c)
                if (g.groupTable[g.groupTable[a][b]][c] != g.groupTable[a][g.groupTable[b][c]])
                    throw InternalInconsistency("induced component law is not associative");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (g.groupTable[g.componentOf[i]][g.componentOf[r.dual(i)]] != 0)
            throw InternalInconsistency("component of a dual is not the inverse");
    std::vector<std::size_t> trivial;
    for (std::size_t i = 0; i < n; ++i)
        if (g.componentOf[i] == 0) trivial.push_back(i);
    if (trivial != g.adjoint.indices) throw InternalInconsistency("trivial component differs from the adjoint subring");
    return g;
}

SubringHandle integralSubring(const FusionRing& r, const Tolerance& tol) {
    SubringHandle h;
    auto fp = fpdims(r);
    for (std::size_t i = 0; i < r.rank(); ++i)
        if (isNearInteger(fp[i], tol.snap * std::max(1.0, fp[i]))) h.indices.push_back(i);
    if (!isSubring(r, h.indices)) throw ClosureViolation("integer-dimensional elements are not fusion-closed");
    return h;
}

}  // namespace fusion
