#pragma once

#include "dbx/poly.hpp"

#include <optional>

namespace dbx {

/// Polynomial vector field a(x,y) d/dx + b(x,y) d/dy of degree
/// d = max(deg a, deg b).
struct VectorField {
    Poly a;
    Poly b;
    unsigned d = 0;

    bool operator==(const VectorField&) const = default;
};

/// Throws math_error on the zero field.
VectorField make_vector_field(Poly a, Poly b);

/// X^k(f); X(f) = a df/dx + b df/dy.
Poly derive(const VectorField& X, const Poly& f, unsigned k = 1);

/// da/dx + db/dy.
Poly divergence(const VectorField& X);

/// Behaviour of the top-degree homogeneous parts at the line at infinity.
/// The line is invariant iff x*b_d - y*a_d != 0; otherwise a_d = h*x and
/// b_d = h*y for a homogeneous h of degree d-1.
struct InfinityData {
    bool invariant = true;
    std::optional<Poly> h;
    Poly a_d;
    Poly b_d;
};

InfinityData infinity_data(const VectorField& X);

} // namespace dbx
