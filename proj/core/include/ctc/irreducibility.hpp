#pragma once

#include "ctc/polynomial.hpp"
#include "ctc/weights.hpp"

namespace ctc {

enum class Irreducibility { kIrreducible, kReducible, kUnknown };

const char* to_string(Irreducibility v);

// Verdict over the algebraically closed coefficient field for a non-constant
// w-homogeneous polynomial. Decides exactly:
//   - polynomials with a monomial factor or with at most two effective
//     variables (quasi-homogeneous binary-form analysis),
//   - polynomials of degree one in some variable (content criterion),
//   - homogeneous quadratic forms (rank),
//   - homogeneous cubic forms in at most four variables (Hessian pairing),
// and returns kUnknown otherwise. Errors on constant or non-homogeneous
// input.
Irreducibility irreducibility_over_closure(const Polynomial& f,
                                           const WeightVector& w);

}  // namespace ctc
