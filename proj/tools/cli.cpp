#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fusion/catalog.hpp"
#include "fusion/expr.hpp"
#include "fusion/io.hpp"
#include "fusion/near_integral.hpp"
#include "fusion/premodular.hpp"
#include "fusion/spectral.hpp"
#include "fusion/structure.hpp"

namespace fusion::cli {

namespace {

std::string fmtNum(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(x));
    return buf;
}

std::string fmtComplex(std::complex<double> z) {
    double re = round12(z.real()), im = round12(z.imag());
    if (std::abs(im) <= 1e-12 * std::max(1.0, std::abs(re))) return fmtNum(re);
    std::string s = fmtNum(re);
    s += im < 0 ? " - " : " + ";
    return s + fmtNum(std::abs(im)) + "i";
}

template <class T, class F>
std::string joined(const std::vector<T>& v, F f, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + f(v[i]);
    return s;
}

Json roundedArray(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(round12(x));
    return a;
}

struct Settings {
    Tolerance tol;
    std::uint64_t seed = 0;
    bool json = false;
    std::optional<std::string> catalogDir;
};

// Raised for inputs that resolve but are of the wrong kind.
struct WrongKind : InputError {
    using InputError::InputError;
};

class Context {
public:
    Context(const Settings& s, std::istream& in) : s_(s), in_(in) {}

    const Catalog& catalog() {
        if (!s_.catalogDir) return Catalog::builtin();
        if (!user_) {
            user_ = Catalog::builtin();
            user_->addDirectory(*s_.catalogDir);
        }
        return *user_;
    }

    // A catalog entry or a bare payload read from a file or stdin.
    CatalogEntry resolve(const std::string& ref) {
        if (ref.rfind("catalog:", 0) == 0) return catalog().get(ref.substr(8));
        Json doc;
        try {
            if (ref == "-") {
                doc = Json::parse(in_);
            } else {
                std::ifstream f(ref);
                if (!f) throw InputError("cannot open '" + ref + "'");
                doc = Json::parse(f);
            }
        } catch (const Json::exception& e) {
            throw InputError(ref + ": " + e.what());
        }
        if (doc.is_object() && doc.contains("kind") && doc.contains("payload")) return parseEntry(doc, ref);
        Json wrapped{{"name", ref}, {"payload", doc}};
        if (doc.is_object() && doc.contains("tensor")) wrapped["kind"] = "fusionRing";
        else if (doc.is_object() && doc.contains("rows")) wrapped["kind"] = "characterTable";
        else if (doc.is_object() && doc.contains("S")) wrapped["kind"] = "modularDatum";
        else throw InputError(ref + ": not a ring ({tensor}), character table ({rows}) or modular datum ({S, T})");
        return parseEntry(wrapped, ref);
    }

    // Rings come directly, from a character table, or from a modular datum via Verlinde.
    FusionRing ring(const std::string& ref) {
        auto e = resolve(ref);
        switch (e.kind) {
            case EntryKind::FusionRing: return e.as<FusionRing>();
            case EntryKind::CharacterTable: return characterTableToFusionRing(e.as<CharacterTable>(), s_.tol.arith);
            case EntryKind::ModularDatum: return verlindeFusion(e.as<ModularDatum>(), s_.tol).ring;
            default: throw WrongKind(ref + " is a " + entryKindName(e.kind) + ", not a fusion ring");
        }
    }

    ModularDatum datum(const std::string& ref) {
        auto e = resolve(ref);
        if (e.kind != EntryKind::ModularDatum) throw WrongKind(ref + " is not a modular datum");
        return e.as<ModularDatum>();
    }

    CharacterTable table(const std::string& ref) {
        auto e = resolve(ref);
        if (e.kind != EntryKind::CharacterTable) throw WrongKind(ref + " is not a character table");
        return e.as<CharacterTable>();
    }

    const Settings& settings() const { return s_; }
    SpectralOptions spectral() const { return {s_.tol, s_.seed, 8}; }

private:
    const Settings& s_;
    std::istream& in_;
    std::optional<Catalog> user_;
};

// Command output: one JSON document, plus its text rendering.
struct Report {
    Json doc = Json::object();
    std::ostringstream text;
    int code = Pass;
};

std::string ringProducts(const FusionRing& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = i; j < r.rank(); ++j) {
            os << r.label(i) << " * " << r.label(j) << " = ";
            const auto& p = r.product(i, j);
            for (std::size_t t = 0; t < p.size(); ++t) {
                if (t) os << " + ";
                if (p[t].second != 1) os << p[t].second << " ";
                os << r.label(p[t].first);
            }
            os << "\n";
        }
    return os.str();
}

void cmdVerify(Context& ctx, const std::string& ref, Report& rep) {
    std::optional<FusionRing> ring;
    std::vector<Violation> violations;
    std::size_t total = 0;
    try {
        ring = ctx.ring(ref);
    } catch (const AxiomViolation& v) {
        violations = v.violations();
        total = v.total();
    }
    if (ring) violations = checkAxioms(ring->rank(), ring->flat(), ring->duals(), 4096, &total);
    rep.doc["valid"] = total == 0;
    rep.doc["violationCount"] = total;
    Json vs = Json::array();
    for (const auto& v : violations)
        vs.push_back(Json{{"axiom", axiomKindName(v.kind)}, {"witness", v.witness}, {"detail", v.detail}});
    rep.doc["violations"] = vs;
    if (ring) rep.doc["rank"] = ring->rank();
    if (total == 0) {
        rep.text << "valid fusion ring of rank " << ring->rank() << "\n";
    } else {
        rep.text << total << " axiom violation(s)\n";
        for (const auto& v : violations)
            rep.text << "  " << axiomKindName(v.kind) << " ["
                     << joined(v.witness, [](std::size_t x) { return std::to_string(x); }) << "] " << v.detail
                     << "\n";
        rep.code = ViolationFound;
    }
}

void cmdFpdim(Context& ctx, const std::string& ref, Report& rep) {
    auto r = ctx.ring(ref);
    auto fp = fpdims(r);
    rep.doc["labels"] = r.labels();
    rep.doc["fpdims"] = roundedArray(fp);
    rep.doc["ringFPdim"] = round12(ringFPdim(r));
    for (std::size_t i = 0; i < r.rank(); ++i) rep.text << "FPdim(" << r.label(i) << ") = " << fmtNum(fp[i]) << "\n";
    rep.text << "FPdim(R) = " << fmtNum(ringFPdim(r)) << "\n";
}

void cmdChars(Context& ctx, const std::string& ref, Report& rep) {
    auto r = ctx.ring(ref);
    auto chars = characters(r, ctx.spectral());
    Json cs = Json::array();
    for (const auto& c : chars) {
        Json vals = Json::array();
        for (auto z : c.values) vals.push_back(complexToJson(z));
        cs.push_back(Json{{"values", vals}, {"codegree", round12(c.codegree)}, {"isFPdim", c.isFPdim}});
        rep.text << "[" << joined(c.values, fmtComplex) << "]  codegree " << fmtNum(c.codegree)
                 << (c.isFPdim ? "  (FPdim)" : "") << "\n";
    }
    rep.doc["labels"] = r.labels();
    rep.doc["characters"] = cs;
}

void cmdCodegrees(Context& ctx, const std::string& ref, Report& rep) {
    auto r = ctx.ring(ref);
    auto cg = formalCodegrees(r, ctx.spectral());
    auto dims = codegreeObjectDims(r, ctx.spectral());
    auto unit = inductionUnitProfile(r);
    rep.doc["codegrees"] = roundedArray(cg);
    rep.doc["objectDims"] = roundedArray(dims);
    rep.doc["inductionUnit"] = unit;
    rep.text << "formal codegrees: " << joined(cg, fmtNum) << "\n";
    rep.text << "induction-of-unit dims: " << joined(dims, fmtNum) << "\n";
    rep.text << "induction-of-unit profile: "
             << joined(unit, [](std::uint64_t x) { return std::to_string(x); }) << "\n";
}

void cmdDetect(Context& ctx, const std::string& ref, Report& rep) {
    auto r = ctx.ring(ref);
    auto d = detectNearIntegral(r, ctx.settings().tol);
    rep.doc["found"] = d.has_value();
    if (!d) {
        rep.text << "not near-integral\n";
        return;
    }
    auto labelsOf = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::string> out;
        for (auto i : idx) out.push_back(r.label(i));
        return out;
    };
    rep.doc["kappa"] = d->kappa;
    rep.doc["N"] = d->N;
    rep.doc["rho"] = r.label(d->rhoIndex);
    rep.doc["subring"] = labelsOf(d->subringIndices);
    rep.doc["dPlus"] = round12(d->dPlus);
    rep.doc["dMinus"] = round12(d->dMinus);
    rep.doc["dPlusExactInteger"] = d->dPlusExactInteger ? Json(*d->dPlusExactInteger) : Json(nullptr);
    rep.doc["flags"] = d->categorifiabilityFlags;
    rep.doc["dimAChiMinus"] = round12(dimAChiMinus(*d, ctx.settings().tol));
    rep.text << "near-integral R(S, kappa) with rho = " << r.label(d->rhoIndex) << "\n";
    rep.text << "kappa = " << d->kappa << ", N = " << d->N << "\n";
    rep.text << "d+ = " << fmtNum(d->dPlus) << ", d- = " << fmtNum(d->dMinus) << "\n";
    rep.text << "dim A_chi- = " << fmtNum(dimAChiMinus(*d, ctx.settings().tol)) << "\n";
    rep.text << "S = {" << joined(labelsOf(d->subringIndices), [](const std::string& s) { return s; }) << "}\n";
    if (r.isCommutative()) {
        auto cg = nearIntegralCodegrees(r, *d, ctx.spectral());
        rep.doc["codegrees"] = roundedArray(cg);
        rep.text << "formal codegrees: " << joined(cg, fmtNum) << "\n";
    }
    for (const auto& f : d->categorifiabilityFlags) rep.text << "flag: " << f << "\n";
}

void cmdConstruct(Context& ctx, const std::string& ref, std::uint64_t kappa, Report& rep) {
    auto s = ctx.ring(ref);
    auto r = constructNearIntegral(s, kappa, ctx.settings().tol);
    rep.doc = ringToJson(r);
    rep.text << "R(S, " << kappa << ") of rank " << r.rank() << "\n" << ringProducts(r);
}

void cmdVerlinde(Context& ctx, const std::string& ref, Report& rep) {
    auto m = ctx.datum(ref);
    auto v = verlindeFusion(m, ctx.settings().tol);
    rep.doc["ring"] = ringToJson(v.ring);
    rep.doc["globalDim"] = round12(v.globalDim);
    rep.doc["rank"] = v.ring.rank();
    rep.text << "rank " << v.ring.rank() << ", global dimension " << fmtNum(v.globalDim) << "\n"
             << ringProducts(v.ring);
}

void cmdBalance(Context& ctx, const std::string& ringRef, const std::string& datumRef, Report& rep) {
    auto r = ctx.ring(ringRef);
    auto m = ctx.datum(datumRef);
    auto bad = balancingCheck(r, m, ctx.settings().tol);
    Json vs = Json::array();
    for (const auto& b : bad)
        vs.push_back(Json{{"i", b.i}, {"j", b.j}, {"expected", complexToJson(b.expected)},
                          {"actual", complexToJson(b.actual)}});
    rep.doc["balanced"] = bad.empty();
    rep.doc["violations"] = vs;
    if (bad.empty()) {
        rep.text << "balancing equation holds for all " << r.rank() * r.rank() << " pairs\n";
        return;
    }
    rep.code = ViolationFound;
    rep.text << bad.size() << " balancing violation(s)\n";
    for (const auto& b : bad)
        rep.text << "  S[" << b.i << "][" << b.j << "] = " << fmtComplex(b.actual) << ", expected "
                 << fmtComplex(b.expected) << "\n";
}

// Subring lattice as a tree from the full ring down through maximal proper subrings.
// A subring reached a second time is printed once more without its children.
void cmdSubrings(Context& ctx, const std::string& ref, Report& rep) {
    auto r = ctx.ring(ref);
    auto subs = enumerateSubrings(r);
    auto setOf = [&](const SubringHandle& h) {
        std::string s = "{";
        for (std::size_t a = 0; a < h.indices.size(); ++a) s += (a ? ", " : "") + r.label(h.indices[a]);
        return s + "}";
    };
    auto contains = [](const SubringHandle& big, const SubringHandle& small) {
        return std::includes(big.indices.begin(), big.indices.end(), small.indices.begin(), small.indices.end());
    };
    const std::size_t m = subs.size();
    std::vector<std::vector<std::size_t>> below(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || !contains(subs[a], subs[b]) || subs[a].rank() == subs[b].rank()) continue;
            bool maximal = true;
            for (std::size_t c = 0; maximal && c < m; ++c)
                if (c != a && c != b && subs[c].rank() != subs[a].rank() && subs[c].rank() != subs[b].rank() &&
                    contains(subs[a], subs[c]) && contains(subs[c], subs[b]))
                    maximal = false;
            if (maximal) below[a].push_back(b);
        }
    std::vector<char> shown(m, 0);
    auto walk = [&](auto&& self, std::size_t node, int depth) -> void {
        rep.text << std::string(2 * depth, ' ') << setOf(subs[node]);
        if (shown[node] && !below[node].empty()) {
            rep.text << " ...\n";
            return;
        }
        rep.text << "\n";
        shown[node] = 1;
        for (auto b : below[node]) self(self, b, depth + 1);
    };
    auto grading = universalGrading(r);
    auto pointed = pointedSubring(r, ctx.settings().tol);
    auto integral = integralSubring(r, ctx.settings().tol);
    auto labelsOf = [&](const SubringHandle& h) {
        std::vector<std::string> out;
        for (auto i : h.indices) out.push_back(r.label(i));
        return out;
    };
    Json lattice = Json::array();
    for (std::size_t a = 0; a < m; ++a)
        lattice.push_back(Json{{"elements", labelsOf(subs[a])}, {"maximalSubrings", below[a]}});
    rep.doc["subrings"] = lattice;
    rep.doc["pointed"] = labelsOf(pointed);
    rep.doc["adjoint"] = labelsOf(grading.adjoint);
    rep.doc["integral"] = labelsOf(integral);
    rep.doc["gradingOrder"] = grading.order();
    Json comp = Json::object();
    for (std::size_t i = 0; i < r.rank(); ++i) comp[r.label(i)] = grading.componentOf[i];
    rep.doc["gradingComponent"] = comp;

    rep.text << m << " subring(s)\n";
    walk(walk, m - 1, 0);
    rep.text << "pointed: " << setOf(pointed) << "\n";
    rep.text << "adjoint: " << setOf(grading.adjoint) << "\n";
    rep.text << "integral: " << setOf(integral) << "\n";
    rep.text << "universal grading group of order " << grading.order() << "\n";
}

Json formJson(const QuadraticForm& q, const std::string& valueKey = "values") {
    Json j = formToJson(q);
    j["nondegenerate"] = formNondegenerate(q);
    if (valueKey != "values") {
        j[valueKey] = j["values"];
        j.erase("values");
    }
    return j;
}

std::string formText(const QuadraticForm& q) {
    return "[" + joined(q.values, [](const RootOfUnity& r) { return r.str(); }) + "]" +
           (formNondegenerate(q) ? "  nondegenerate" : "");
}

void cmdQforms(const std::string& spec, bool classes, Report& rep) {
    auto factors = parseGroupSpec(spec);
    rep.doc["group"] = factors;
    if (classes) {
        auto cls = formClasses(factors);
        Json a = Json::array();
        for (const auto& c : cls) {
            Json j = formJson(c.representative);
            j["orbitSize"] = c.orbitSize;
            a.push_back(j);
            rep.text << formText(c.representative) << "  orbit " << c.orbitSize << "\n";
        }
        rep.doc["classes"] = a;
        rep.doc["count"] = cls.size();
        rep.text << cls.size() << " classes of quadratic forms on " << spec << "\n";
        return;
    }
    auto forms = quadraticForms(factors);
    Json a = Json::array();
    for (const auto& q : forms) {
        a.push_back(formJson(q));
        rep.text << formText(q) << "\n";
    }
    rep.doc["forms"] = a;
    rep.doc["count"] = forms.size();
    rep.text << forms.size() << " quadratic forms on " << spec << "\n";
}

void cmdGagola(Context& ctx, const std::string& ref, Report& rep) {
    auto t = ctx.table(ref);
    auto g = gagolaAnalyze(t, ctx.settings().tol);
    rep.doc["found"] = g.has_value();
    if (!g) {
        rep.text << "no Gagola character\n";
        return;
    }
    rep.doc["rhoRow"] = g->rhoRow;
    rep.doc["column"] = g->column;
    rep.doc["kappa"] = g->kappa;
    rep.doc["degree"] = t.degree(g->rhoRow);
    rep.doc["vanishingClasses"] = g->vanishingClasses;
    rep.text << "Gagola character in row " << g->rhoRow << " (degree " << t.degree(g->rhoRow)
             << "), nonzero off the identity only on class " << g->column << "\n";
    rep.text << "kappa = " << g->kappa << "\n";
}

void cmdCases(std::uint64_t N, Report& rep) {
    auto cases = braidedNearIntegralCases(N);
    Json a = Json::array();
    for (const auto& c : cases) {
        Json allowed = Json::array();
        for (const auto& t : c.twist.allowed) allowed.push_back(rootToJson(t));
        a.push_back(Json{{"kappa", c.kappa}, {"dimC", c.dimC}, {"tag", c.tag}, {"twists", allowed},
                         {"constraint", c.twist.description}});
        rep.text << c.tag << ": kappa = " << c.kappa << ", dim = " << c.dimC << ", " << c.twist.description << "\n";
    }
    rep.doc["N"] = N;
    rep.doc["cases"] = a;
}

void cmdCatalogList(Context& ctx, Report& rep) {
    Json a = Json::array();
    for (const auto& e : ctx.catalog().entries()) {
        a.push_back(Json{{"name", e.name}, {"kind", entryKindName(e.kind)}, {"provenance", e.provenance}});
        rep.text << e.name << "\t" << entryKindName(e.kind) << "\n";
    }
    rep.doc["entries"] = a;
}

void cmdCatalogVerify(Context& ctx, Report& rep) {
    auto report = verifyCatalog(ctx.catalog(), ctx.settings().tol);
    Json a = Json::array();
    for (const auto& c : report.entries) {
        a.push_back(Json{{"name", c.name}, {"kind", c.kind}, {"pass", c.pass}, {"skipped", c.skipped},
                         {"messages", c.messages}});
        rep.text << (c.skipped ? "SKIP " : c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.messages.empty()) rep.text << "  (" << joined(c.messages, [](const std::string& s) { return s; }, "; ") << ")";
        rep.text << "\n";
    }
    rep.doc["entries"] = a;
    rep.doc["failures"] = report.failures();
    rep.doc["pass"] = report.pass();
    rep.text << report.entries.size() << " entries, " << report.failures() << " failure(s)\n";
    if (!report.pass()) rep.code = ViolationFound;
}

void cmdCatalogShow(Context& ctx, const std::string& name, Report& rep) {
    const auto& e = ctx.catalog().get(name);
    rep.doc = e.raw;
    rep.text << e.raw.dump(1) << "\n";
}

int exitCodeFor(const std::exception& e) {
    if (dynamic_cast<const AxiomViolation*>(&e) || dynamic_cast<const NonIntegralFusion*>(&e) ||
        dynamic_cast<const NegativeFusion*>(&e) || dynamic_cast<const NonIntegralMultiplicity*>(&e) ||
        dynamic_cast<const Inconsistent*>(&e) || dynamic_cast<const VerificationFailed*>(&e) ||
        dynamic_cast<const InternalInconsistency*>(&e) || dynamic_cast<const ExtensionObstructed*>(&e))
        return ViolationFound;
    return InputFailure;
}

}  // namespace

std::vector<std::uint64_t> parseGroupSpec(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    auto bad = [&] { return InputError("group spec '" + spec + "' must look like C9, C3xC3 or C2^2xC4"); };
    if (s.empty()) throw bad();
    while (pos < s.size()) {
        if (s[pos] != 'C' && s[pos] != 'Z') throw bad();
        ++pos;
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) throw bad();
        std::uint64_t n = std::stoull(s.substr(pos, end - pos));
        pos = end;
        std::uint64_t times = 1;
        if (pos < s.size() && s[pos] == '^') {
            end = ++pos;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            if (end == pos) throw bad();
            times = std::stoull(s.substr(pos, end - pos));
            pos = end;
        }
        if (n == 0 || times == 0 || times > 64) throw bad();
        for (std::uint64_t t = 0; t < times; ++t) out.push_back(n);
        if (pos < s.size()) {
            if (s[pos] != 'x' && s[pos] != '*') throw bad();
            if (++pos == s.size()) throw bad();
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Fusion ring toolkit: axioms, spectra, near-integral rings, premodular data"};
    app.name("fusion");
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    if (const char* env = std::getenv("FUSION_TOLERANCE")) {
        char* end = nullptr;
        double t = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(t > 0)) {
            err << "error: FUSION_TOLERANCE must be a positive number\n";
            return UsageError;
        }
        settings.tol.snap = t;
    }
    std::string format = "text";
    std::string catalogDir;
    app.add_option("--tolerance", settings.tol.snap, "Snapping and comparison tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", settings.seed, "Seed for randomized diagonalization");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--catalog-dir", catalogDir, "Directory of additional catalog entries")->check(CLI::ExistingDirectory);

    std::string ringRef, datumRef, group;
    std::uint64_t kappa = 0, N = 0;
    bool classes = false;
    auto* verify = app.add_subcommand("verify", "Check every fusion ring axiom");
    verify->add_option("ring", ringRef)->required();
    auto* fpdim = app.add_subcommand("fpdim", "Frobenius-Perron dimensions");
    fpdim->add_option("ring", ringRef)->required();
    auto* chars = app.add_subcommand("chars", "Characters of a commutative ring");
    chars->add_option("ring", ringRef)->required();
    auto* codegrees = app.add_subcommand("codegrees", "Formal codegrees");
    codegrees->add_option("ring", ringRef)->required();
    auto* detect = app.add_subcommand("detect", "Detect a near-integral structure R(S, kappa)");
    detect->add_option("ring", ringRef)->required();
    auto* construct = app.add_subcommand("construct", "Build R(S, kappa) from an integral ring S");
    construct->add_option("--subring", ringRef, "The ring S")->required();
    construct->add_option("--kappa", kappa, "Multiplicity of rho in rho^2")->required();
    auto* verlinde = app.add_subcommand("verlinde", "Fusion rules of modular data");
    verlinde->add_option("datum", datumRef)->required();
    auto* balance = app.add_subcommand("balance", "Check the balancing equation");
    balance->add_option("ring", ringRef)->required();
    balance->add_option("datum", datumRef)->required();
    auto* qforms = app.add_subcommand("qforms", "Quadratic forms on a finite abelian group");
    qforms->add_option("group", group, "e.g. C9 or C3xC3")->required();
    qforms->add_flag("--classes", classes, "Count up to automorphism");
    auto* gagola = app.add_subcommand("gagola", "Find a Gagola character in a character table");
    gagola->add_option("table", ringRef)->required();
    auto* cases = app.add_subcommand("cases", "Braided near-integral cases for |S| = N");
    cases->add_option("--N", N)->required()->check(CLI::PositiveNumber);
    auto* subrings = app.add_subcommand("subrings", "Subring lattice, grading and distinguished subrings");
    subrings->add_option("ring", ringRef)->required();
    auto* catalog = app.add_subcommand("catalog", "Built-in data");
    catalog->require_subcommand(1);
    auto* catList = catalog->add_subcommand("list", "List entries");
    auto* catVerify = catalog->add_subcommand("verify", "Verify every entry");
    std::string showName;
    auto* catShow = catalog->add_subcommand("show", "Print one entry");
    catShow->add_option("name", showName)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Pass : UsageError;
    }
    settings.json = format == "json";
    if (!catalogDir.empty()) settings.catalogDir = catalogDir;
    settings.tol.arith = std::min(settings.tol.arith, settings.tol.snap);

    Context ctx(settings, in);
    Report rep;
    try {
        if (*verify) cmdVerify(ctx, ringRef, rep);
        else if (*fpdim) cmdFpdim(ctx, ringRef, rep);
        else if (*chars) cmdChars(ctx, ringRef, rep);
        else if (*codegrees) cmdCodegrees(ctx, ringRef, rep);
        else if (*detect) cmdDetect(ctx, ringRef, rep);
        else if (*construct) cmdConstruct(ctx, ringRef, kappa, rep);
        else if (*verlinde) cmdVerlinde(ctx, datumRef, rep);
        else if (*balance) cmdBalance(ctx, ringRef, datumRef, rep);
        else if (*qforms) cmdQforms(group, classes, rep);
        else if (*gagola) cmdGagola(ctx, ringRef, rep);
        else if (*cases) cmdCases(N, rep);
        else if (*subrings) cmdSubrings(ctx, ringRef, rep);
        else if (*catList) cmdCatalogList(ctx, rep);
        else if (*catVerify) cmdCatalogVerify(ctx, rep);
        else if (*catShow) cmdCatalogShow(ctx, showName, rep);
    } catch (const std::exception& e) {
        int code = exitCodeFor(e);
        if (settings.json) {
            Json j{{"error", e.what()}, {"exitCode", code}};
            if (const auto* fe = dynamic_cast<const Error*>(&e)) j["kind"] = fe->kind();
            out << j.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return code;
    }
    if (settings.json) out << rep.doc.dump(2) << "\n";
    else out << rep.text.str();
    return rep.code;
}

}  // namespace fusion::cli
