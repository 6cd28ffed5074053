#include "fusion/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fusion/expr.hpp"
#include "fusion/near_integral.hpp"
#include "fusion/spectral.hpp"

namespace fusion {

namespace detail {
// Generated at build time from core/data/*.json.
const std::vector<std::pair<const char*, const char*>>& embeddedData();
}  // namespace detail

namespace {

constexpr struct {
    EntryKind kind;
    const char* name;
} kKindNames[] = {
    {EntryKind::CharacterTable, "characterTable"},
    {EntryKind::FusionRing, "fusionRing"},
    {EntryKind::ModularDatum, "modularDatum"},
    {EntryKind::ClassificationRow, "classificationRow"},
    {EntryKind::GroupList, "groupList"},
};

double realFromJson(const Json& j, const std::string& what) {
    auto z = complexFromJson(j);
    if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real())))
        throw InputError(what + " is not real: " + j.dump());
    return z.real();
}

ClassificationRow rowFromJson(const std::string& name, const Json& p) {
    ClassificationRow row;
    row.name = name;
    row.fpdimTotalExpr = p.at("fpdimTotal");
    row.fpdimTotal = realFromJson(row.fpdimTotalExpr, "fpdimTotal");
    if (p.contains("fpdims"))
        for (const auto& d : p.at("fpdims")) {
            row.fpdimExprs.push_back(d);
            row.fpdims.push_back(realFromJson(d, "fpdim"));
        }
    row.centerName = p.value("centerName", "");
    row.count = p.value("count", std::uint64_t{0});
    row.countUnproven = p.value("countUnproven", false);
    if (p.contains("erratum")) {
        const auto& e = p.at("erratum");
        row.erratum = Erratum{e.at("field").get<std::string>(), e.at("printed"), e.value("reason", "")};
        if (row.erratum->field != "fpdimTotal" && row.erratum->field != "fpdims")
            throw InputError("erratum field must be fpdimTotal or fpdims");
    }
    return row;
}

GroupList groupsFromJson(const Json& p) {
    GroupList g;
    for (const auto& x : p.at("groups"))
        g.groups.push_back({x.at("name").get<std::string>(), x.at("order").get<std::uint64_t>(),
                            x.at("classes").get<std::size_t>(), x.at("nu").get<std::size_t>()});
    return g;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::string num(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

void checkTable(const CatalogEntry& e, EntryCheck& out, const Tolerance& tol) {
    const auto& t = e.as<CharacterTable>();
    auto ring = characterTableToFusionRing(t, tol.arith);
    std::size_t total = 0;
    checkAxioms(ring.rank(), ring.flat(), ring.duals(), 1, &total);
    if (total) out.messages.push_back("induced ring violates " + std::to_string(total) + " axiom instances");
    if (!near(ringFPdim(ring), double(t.order), tol.snap))
        out.messages.push_back("FPdim of induced ring " + num(ringFPdim(ring)) + " differs from |G|");
    if (!e.expect.contains("kappa")) return;
    auto kappa = e.expect.at("kappa").get<std::uint64_t>();
    auto g = gagolaAnalyze(t, tol);
    if (!g) out.messages.push_back("no Gagola character found");
    else if (g->kappa != kappa)
        out.messages.push_back("Gagola kappa " + std::to_string(g->kappa) + ", expected " + std::to_string(kappa));
    auto d = detectNearIntegral(ring, tol);
    if (!d) out.messages.push_back("induced ring is not near-integral");
    else if (d->kappa != kappa)
        out.messages.push_back("detected kappa " + std::to_string(d->kappa) + ", expected " + std::to_string(kappa));
}

void checkRing(const CatalogEntry& e, EntryCheck& out, const Tolerance& tol) {
    const auto& r = e.as<FusionRing>();
    std::size_t total = 0;
    checkAxioms(r.rank(), r.flat(), r.duals(), 1, &total);
    if (total) out.messages.push_back("violates " + std::to_string(total) + " axiom instances");
    if (e.expect.contains("fpdimTotal")) {
        double want = realFromJson(e.expect.at("fpdimTotal"), "fpdimTotal");
        if (!near(ringFPdim(r), want, tol.snap))
            out.messages.push_back("FPdim " + num(ringFPdim(r)) + ", expected " + num(want));
    }
}

void checkDatum(const CatalogEntry& e, EntryCheck& out, const Tolerance& tol) {
    const auto& m = e.as<ModularDatum>();
    auto v = verlindeFusion(m, tol);
    std::size_t total = 0;
    checkAxioms(v.ring.rank(), v.ring.flat(), v.ring.duals(), 1, &total);
    if (total) out.messages.push_back("Verlinde ring violates " + std::to_string(total) + " axiom instances");
    if (e.expect.contains("globalDim")) {
        double want = realFromJson(e.expect.at("globalDim"), "globalDim");
        if (!near(v.globalDim, want, tol.snap))
            out.messages.push_back("global dimension " + num(v.globalDim) + ", expected " + num(want));
    }
    auto bad = balancingCheck(v.ring, m, tol);
    if (!bad.empty()) out.messages.push_back(std::to_string(bad.size()) + " balancing violations");
    auto [tp, tm] = gaussSums(m.dims, m.T);
    auto prod = tp * tm;
    if (std::abs(prod - std::complex<double>(v.globalDim)) > tol.snap * std::max(1.0, v.globalDim))
        out.messages.push_back("Gauss sum product " + num(prod.real()) + " differs from the global dimension");
}

void checkRow(const CatalogEntry& e, EntryCheck& out, const Tolerance& tol) {
    const auto& row = e.as<ClassificationRow>();
    if (row.isStub()) {
        out.skipped = true;
        out.messages.push_back("listed by reference only");
        return;
    }
    if (row.residual() > tol.snap)
        out.messages.push_back("sum of squared dims differs from the total by " + num(row.residual()));
    if (row.erratum) {
        // The printed value must genuinely disagree, otherwise the correction is spurious.
        double printedResidual;
        if (row.erratum->field == "fpdimTotal") {
            printedResidual = std::abs(realFromJson(row.erratum->printed, "printed total") - row.fpdimTotal);
        } else {
            double s = 0;
            for (const auto& d : row.erratum->printed) s += std::pow(realFromJson(d, "printed dim"), 2);
            printedResidual = std::abs(s - row.fpdimTotal);
        }
        if (printedResidual <= tol.snap) out.messages.push_back("erratum does not change the value");
    }
}

void checkGroups(const CatalogEntry& e, EntryCheck& out) {
    for (const auto& g : e.as<GroupList>().groups) {
        if (g.order == 0 || g.classes == 0 || g.classes > g.order)
            out.messages.push_back(g.name + ": inconsistent order/class count");
        if (g.nu == 0) out.messages.push_back(g.name + ": the identity is always central of order <= 2");
        if (g.order % 2 == 1 && g.nu != 1) out.messages.push_back(g.name + ": odd order admits only nu = e");
    }
}

}  // namespace

const char* entryKindName(EntryKind k) {
    for (const auto& kn : kKindNames)
        if (kn.kind == k) return kn.name;
    return "?";
}

EntryKind entryKindFromName(const std::string& s) {
    for (const auto& kn : kKindNames)
        if (s == kn.name) return kn.kind;
    throw InputError("unknown entry kind '" + s + "'");
}

double ClassificationRow::residual() const {
    double s = 0;
    for (double d : fpdims) s += d * d;
    return std::abs(s - fpdimTotal);
}

CatalogEntry parseEntry(const Json& raw, const std::string& source) {
    try {
        CatalogEntry e;
        e.name = raw.at("name").get<std::string>();
        e.kind = entryKindFromName(raw.at("kind").get<std::string>());
        e.provenance = raw.value("provenance", "");
        e.note = raw.value("note", "");
        e.source = source;
        e.expect = raw.value("expect", Json::object());
        e.raw = raw;
        const Json& p = raw.at("payload");
        switch (e.kind) {
            case EntryKind::CharacterTable: e.payload = tableFromJson(p); break;
            case EntryKind::FusionRing: e.payload = ringFromJson(p); break;
            case EntryKind::ModularDatum: e.payload = datumFromJson(p); break;
            case EntryKind::ClassificationRow: e.payload = rowFromJson(e.name, p); break;
            case EntryKind::GroupList: e.payload = groupsFromJson(p); break;
        }
        return e;
    } catch (const Json::exception& ex) {
        throw InputError(std::string("catalog entry: ") + ex.what());
    }
}

const Catalog& Catalog::builtin() {
    static const Catalog c = [] {
        Catalog out;
        for (const auto& [file, text] : detail::embeddedData()) out.addJson(Json::parse(text), file);
        return out;
    }();
    return c;
}

void Catalog::addDirectory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw InputError("catalog directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::exception& ex) {
            throw InputError(f.string() + ": " + ex.what());
        }
        addJson(doc, f.string());
    }
}

void Catalog::addJson(const Json& doc, const std::string& source) {
    if (doc.is_array())
        for (const auto& e : doc) add(parseEntry(e, source));
    else
        add(parseEntry(doc, source));
}

void Catalog::add(CatalogEntry e) {
    if (index_.count(e.name)) throw InputError("duplicate catalog entry '" + e.name + "' in " + e.source);
    index_[e.name] = entries_.size();
    entries_.push_back(std::move(e));
}

const CatalogEntry& Catalog::get(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownEntry("no catalog entry named '" + name + "'");
    return entries_[it->second];
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

std::vector<std::string> listCatalog() { return Catalog::builtin().names(); }

CatalogEntry loadEntry(const std::string& name) { return Catalog::builtin().get(name); }

std::size_t CatalogReport::failures() const {
    return std::count_if(entries.begin(), entries.end(), [](const EntryCheck& c) { return !c.pass; });
}

EntryCheck verifyEntry(const Json& raw, const Tolerance& tol) {
    EntryCheck out;
    out.name = raw.is_object() ? raw.value("name", "?") : "?";
    out.kind = raw.is_object() ? raw.value("kind", "?") : "?";
    try {
        auto e = parseEntry(raw);
        switch (e.kind) {
            case EntryKind::CharacterTable: checkTable(e, out, tol); break;
            case EntryKind::FusionRing: checkRing(e, out, tol); break;
            case EntryKind::ModularDatum: checkDatum(e, out, tol); break;
            case EntryKind::ClassificationRow: checkRow(e, out, tol); break;
            case EntryKind::GroupList: checkGroups(e, out); break;
        }
    } catch (const std::exception& ex) {
        out.messages.push_back(ex.what());
    }
    out.pass = out.skipped ? true : out.messages.empty();
    return out;
}

CatalogReport verifyCatalog(const Catalog& c, const Tolerance& tol) {
    CatalogReport rep;
    for (const auto& e : c.entries()) {
        auto check = verifyEntry(e.raw, tol);
        // Groups with a stored table must agree with it on order and class count.
        if (e.kind == EntryKind::GroupList)
            for (const auto& g : e.as<GroupList>().groups) {
                if (!c.contains(g.name) || c.get(g.name).kind != EntryKind::CharacterTable) continue;
                const auto& t = c.get(g.name).as<CharacterTable>();
                if (t.order != g.order || t.size() != g.classes) {
                    check.messages.push_back(g.name + ": disagrees with its stored character table");
                    check.pass = false;
                }
            }
        rep.entries.push_back(std::move(check));
    }
    return rep;
}

}  // namespace fusion
