#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fusion/catalog.hpp"
#include "fusion/chartable.hpp"
#include "fusion/ring.hpp"

namespace testing {

inline fusion::FusionRing ising() {
    return fusion::newFusionRing({"1", "eps", "sigma"},
                                 {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                  {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                                  {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}},
                                 {0, 1, 2});
}

inline fusion::FusionRing fibonacci() {
    return fusion::newFusionRing({"1", "tau"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, {0, 1});
}

inline fusion::FusionRing tableRing(const std::string& name) {
    return fusion::characterTableToFusionRing(fusion::loadEntry(name).as<fusion::CharacterTable>());
}

inline const std::vector<std::string>& tableNames() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : fusion::Catalog::builtin().entries())
            if (e.kind == fusion::EntryKind::CharacterTable) out.push_back(e.name);
        return out;
    }();
    return names;
}

// Every ring the catalog induces: named rings, character rings, Verlinde rings.
inline std::vector<std::pair<std::string, fusion::FusionRing>> catalogRings() {
    std::vector<std::pair<std::string, fusion::FusionRing>> out;
    for (const auto& e : fusion::Catalog::builtin().entries()) {
        switch (e.kind) {
            case fusion::EntryKind::FusionRing: out.emplace_back(e.name, e.as<fusion::FusionRing>()); break;
            case fusion::EntryKind::CharacterTable:
                out.emplace_back(e.name, fusion::characterTableToFusionRing(e.as<fusion::CharacterTable>()));
                break;
            case fusion::EntryKind::ModularDatum:
                out.emplace_back(e.name, fusion::verlindeFusion(e.as<fusion::ModularDatum>()).ring);
                break;
            default: break;
        }
    }
    return out;
}

inline std::size_t indexOf(const fusion::FusionRing& r, const std::string& label) {
    for (std::size_t i = 0; i < r.rank(); ++i)
        if (r.label(i) == label) return i;
    throw std::out_of_range("no label " + label);
}

}  // namespace testing
