#pragma once

#include <complex>
#include <string>

namespace fusion {

// Evaluates an exact-value expression to a complex double.
//   numbers, i, pi, + - * / ^, parentheses
//   zeta(n,k) = exp(2 pi i k/n), sqrt, sin, cos, csc, sec, qint(n,m) = [n]_m
// Throws InputError on malformed text.
std::complex<double> evalExpression(const std::string& text);

// [n]_m = sin(n pi/m)/sin(pi/m); requires 1 <= n < m.
double quantumInteger(long n, long m);

}  // namespace fusion
