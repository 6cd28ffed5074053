#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fusion/chartable.hpp"
#include "fusion/io.hpp"
#include "fusion/premodular.hpp"
#include "fusion/ring.hpp"
#include "fusion/tolerance.hpp"

namespace fusion {

enum class EntryKind { CharacterTable, FusionRing, ModularDatum, ClassificationRow, GroupList };

const char* entryKindName(EntryKind k);
EntryKind entryKindFromName(const std::string& s);

// A printed value known to be wrong, kept beside the corrected one.
struct Erratum {
    std::string field;  // "fpdimTotal" or "fpdims"
    Json printed;
    std::string reason;
};

struct ClassificationRow {
    std::string name;
    Json fpdimTotalExpr;
    double fpdimTotal = 0;
    std::vector<Json> fpdimExprs;
    std::vector<double> fpdims;  // empty for rows given only by reference
    std::string centerName;
    std::uint64_t count = 0;
    bool countUnproven = false;
    std::optional<Erratum> erratum;

    bool isStub() const { return fpdims.empty(); }
    // |sum fpdims^2 - fpdimTotal|
    double residual() const;
};

struct GroupInfo {
    std::string name;
    std::uint64_t order = 0;
    std::size_t classes = 0;
    std::size_t nu = 0;  // central elements of order <= 2
};

struct GroupList {
    std::vector<GroupInfo> groups;
};

using Payload = std::variant<CharacterTable, FusionRing, ModularDatum, ClassificationRow, GroupList>;

struct CatalogEntry {
    std::string name;
    EntryKind kind = EntryKind::FusionRing;
    std::string provenance;
    std::string note;
    std::string source;  // "builtin" or the file it was read from
    Json expect;         // expected invariants, checked by verifyEntry
    Json raw;            // the entry exactly as stored
    Payload payload;

    template <class T>
    const T& as() const {
        return std::get<T>(payload);
    }
};

// Parses and validates one stored entry; throws InputError on any failure.
CatalogEntry parseEntry(const Json& raw, const std::string& source = "builtin");

class Catalog {
public:
    // Embedded data, parsed once.
    static const Catalog& builtin();

    // Adds every entry in every *.json file of dir (each file holds an entry or an array of entries).
    void addDirectory(const std::filesystem::path& dir);
    void addJson(const Json& doc, const std::string& source);
    void add(CatalogEntry e);

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    // Throws UnknownEntry.
    const CatalogEntry& get(const std::string& name) const;
    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    std::vector<std::string> names() const;

private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t> index_;
};

std::vector<std::string> listCatalog();
CatalogEntry loadEntry(const std::string& name);

struct EntryCheck {
    std::string name;
    std::string kind;
    bool pass = false;
    bool skipped = false;
    std::vector<std::string> messages;
};

struct CatalogReport {
    std::vector<EntryCheck> entries;
    std::size_t failures() const;
    bool pass() const { return failures() == 0; }
};

// Re-parses raw and runs the full check for its kind. Never throws; failures are report content.
EntryCheck verifyEntry(const Json& raw, const Tolerance& tol = {});
CatalogReport verifyCatalog(const Catalog& c = Catalog::builtin(), const Tolerance& tol = {});

}  // namespace fusion
