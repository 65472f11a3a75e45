#include "dbx/vfield.hpp"

#include <algorithm>

namespace dbx {

VectorField make_vector_field(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero())
        throw math_error("zero vector field");
    unsigned d = static_cast<unsigned>(std::max(a.degree(), b.degree()));
    return {std::move(a), std::move(b), d};
}

Poly derive(const VectorField& X, const Poly& f, unsigned k) {
    Poly r = f;
    for (unsigned i = 0; i < k; ++i)
        r = X.a * derivative(r, Var::x) + X.b * derivative(r, Var::y);
    return r;
}

Poly divergence(const VectorField& X) {
    return derivative(X.a, Var::x) + derivative(X.b, Var::y);
}

InfinityData infinity_data(const VectorField& X) {
    InfinityData data;
    data.a_d = homogeneous_part(X.a, X.d);
    data.b_d = homogeneous_part(X.b, X.d);
    Poly tangency = Poly::var(Var::x) * data.b_d - Poly::var(Var::y) * data.a_d;
    data.invariant = !tangency.is_zero();
    if (!data.invariant) {
        // x*b_d = y*a_d with (a_d, b_d) != 0 forces a_d = h*x, b_d = h*y.
        const Poly& nonzero = data.a_d.is_zero() ? data.b_d : data.a_d;
        Var v = data.a_d.is_zero() ? Var::y : Var::x;
        data.h = *exact_divide(nonzero, Poly::var(v));
    }
    return data;
}

} // namespace dbx
