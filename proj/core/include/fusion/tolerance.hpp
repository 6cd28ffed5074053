#pragma once

namespace fusion {

struct Tolerance {
    double arith = 1e-9;  // comparisons of computed reals
    double snap = 1e-6;   // integer snapping of eigenvalue-derived quantities
};

}  // namespace fusion
