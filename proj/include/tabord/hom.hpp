#pragma once

#include "tabord/linalg.hpp"
#include "tabord/nilpotent.hpp"

namespace tabord {

// Linear system parametrizing Hom_Λ(S, T).  A homomorphism is determined by
// the images x_j = f(b_j) ∈ T, one per component of S; the unknowns are the
// coordinates of x_1, x_2, ... in order.  The system starts with the
// relations t^{S_j} x_j = 0 and accepts further linear conditions.
class HomSystem {
public:
    HomSystem(const NilpotentModule& source, const NilpotentModule& target);

    int unknowns() const { return unknowns_; }

    // Matrix (dim T × unknowns) sending the unknowns to f(v).
    Matrix evaluate(const Vec& v) const;

    // f(v) = 0.
    void require_zero(const Vec& v);

    // f(v) lies in the subspace annihilated by every row of ann.
    void require_in(const Vec& v, const Matrix& ann);

    // Dimension of the solution space.
    int dimension() const;

    // A basis of the solution space, each as a vector of unknowns.
    Matrix solutions() const;

private:
    NilpotentModule source_;
    NilpotentModule target_;
    int unknowns_;
    Matrix constraints_;
};

} // namespace tabord
