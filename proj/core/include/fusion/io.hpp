#pragma once

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

#include "fusion/chartable.hpp"
#include "fusion/premodular.hpp"
#include "fusion/ring.hpp"

namespace fusion {

using Json = nlohmann::json;

// Number, [re, im] pair, or expression string such as "2*zeta(3,1)+1".
std::complex<double> complexFromJson(const Json& j);
Json complexToJson(std::complex<double> z);

// 12 significant digits, negative zero folded to zero.
double round12(double x);

// {labels, tensor, dual}; tensor[i][j][k] = c_{ij}^k.
FusionRing ringFromJson(const Json& j);
Json ringToJson(const FusionRing& r);

// {order, classSizes, rows, labels?}
CharacterTable tableFromJson(const Json& j);
Json tableToJson(const CharacterTable& t);

// {S, T: [[num, den], ...], dims?, labels?}
ModularDatum datumFromJson(const Json& j);
Json datumToJson(const ModularDatum& m);

RootOfUnity rootFromJson(const Json& j);
Json rootToJson(const RootOfUnity& r);

Json formToJson(const QuadraticForm& q);

}  // namespace fusion
