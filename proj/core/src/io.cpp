#include "fusion/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fusion/expr.hpp"

namespace fusion {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

std::vector<std::string> labelsFrom(const Json& j) {
    std::vector<std::string> out;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) out.push_back(l.get<std::string>());
    return out;
}

}  // namespace

std::complex<double> complexFromJson(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return evalExpression(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw InputError("complex value must be a number, [re, im] or an expression string, got " + j.dump());
}

double round12(double x) {
    if (x == 0 || !std::isfinite(x)) return x == 0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

Json complexToJson(std::complex<double> z) {
    double re = round12(z.real()), im = round12(z.imag());
    if (std::abs(im) <= 1e-12 * std::max(1.0, std::abs(re))) return re;
    return Json::array({re, im});
}

FusionRing ringFromJson(const Json& j) {
    return guarded("ring", [&] {
        Tensor3 t = j.at("tensor").get<Tensor3>();
        auto dual = j.at("dual").get<std::vector<std::size_t>>();
        return newFusionRing(labelsFrom(j), t, dual);
    });
}

Json ringToJson(const FusionRing& r) {
    return Json{{"labels", r.labels()}, {"tensor", r.tensor()}, {"dual", r.duals()}};
}

CharacterTable tableFromJson(const Json& j) {
    return guarded("character table", [&] {
        CharacterTable t;
        t.order = j.at("order").get<std::uint64_t>();
        for (const auto& row : j.at("rows")) {
            std::vector<std::complex<double>> r;
            for (const auto& v : row) r.push_back(complexFromJson(v));
            t.rows.push_back(std::move(r));
        }
        if (j.contains("classSizes")) t.classSizes = j.at("classSizes").get<std::vector<std::uint64_t>>();
        else t.classSizes = classSizesFromColumns(t.rows, t.order);
        t.labels = labelsFrom(j);
        t.validate();
        return t;
    });
}

Json tableToJson(const CharacterTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::array();
        for (auto z : row) r.push_back(Json::array({round12(z.real()), round12(z.imag())}));
        rows.push_back(r);
    }
    return Json{{"order", t.order}, {"classSizes", t.classSizes}, {"rows", rows}, {"labels", t.labels}};
}

RootOfUnity rootFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("twist must be [num, den], got " + j.dump());
    return guarded("twist", [&] { return RootOfUnity(j[0].get<std::int64_t>(), j[1].get<std::int64_t>()); });
}

Json rootToJson(const RootOfUnity& r) { return Json::array({r.num(), r.den()}); }

ModularDatum datumFromJson(const Json& j) {
    return guarded("modular datum", [&] {
        ModularDatum m;
        for (const auto& row : j.at("S")) {
            std::vector<std::complex<double>> r;
            for (const auto& v : row) r.push_back(complexFromJson(v));
            m.S.push_back(std::move(r));
        }
        for (const auto& t : j.at("T")) m.T.push_back(rootFromJson(t));
        if (j.contains("dims"))
            for (const auto& d : j.at("dims")) {
                auto z = complexFromJson(d);
                if (std::abs(z.imag()) > 1e-12) throw InputError("dims must be real");
                m.dims.push_back(z.real());
            }
        m.labels = labelsFrom(j);
        m.validate();
        return m;
    });
}

Json datumToJson(const ModularDatum& m) {
    Json S = Json::array();
    for (const auto& row : m.S) {
        Json r = Json::array();
        for (auto z : row) r.push_back(Json::array({round12(z.real()), round12(z.imag())}));
        S.push_back(r);
    }
    Json T = Json::array();
    for (const auto& t : m.T) T.push_back(rootToJson(t));
    Json dims = Json::array();
    for (double d : m.dims) dims.push_back(round12(d));
    return Json{{"S", S}, {"T", T}, {"dims", dims}, {"labels", m.labels}};
}

Json formToJson(const QuadraticForm& q) {
    Json values = Json::array();
    for (std::size_t g = 0; g < q.order(); ++g)
        values.push_back(Json{{"element", q.digits(g)}, {"value", rootToJson(q.values[g])}});
    return Json{{"factors", q.group}, {"values", values}};
}

}  // namespace fusion
