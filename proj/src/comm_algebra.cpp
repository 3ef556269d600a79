#include "hlr/comm_algebra.hpp"

#include "hlr/errors.hpp"

namespace hlr {

CommAlgebraPtr make_comm_algebra(std::size_t dim, Bilinear mul, Matrix phi,
                                 std::optional<Vec> unit) {
    if (mul.dim_left() != dim || mul.dim_right() != dim || mul.dim_out() != dim)
        throw ShapeError("comm algebra: product tensor shape mismatch");
    if (phi.rows() != dim || phi.cols() != dim)
        throw ShapeError("comm algebra: phi shape mismatch");
    if (unit && unit->size() != dim) throw ShapeError("comm algebra: unit length mismatch");
    auto a = std::make_shared<CommAlgebra>();
    a->dim = dim;
    a->mul = std::move(mul);
    a->phi = std::move(phi);
    a->unit = std::move(unit);
    return a;
}

CommAlgebraPtr rational_base() {
    Bilinear mul(1, 1, 1);
    mul.at(0, 0, 0) = 1;
    return make_comm_algebra(1, mul, Matrix::identity(1), Vec{Rational(1)});
}

ValidationReport validate_comm_algebra(const CommAlgebra& a) {
    ValidationReport rep;
    const std::size_t n = a.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = a.mul.eval_basis(i, j);
            Vec rhs = a.mul.eval_basis(j, i);
            if (lhs != rhs) rep.add("comm", {i, j}, lhs, rhs, "fg != gf");
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.mul.eval(a.mul.eval_basis(i, j), unit_vec(n, k));
                Vec rhs = a.mul.eval(unit_vec(n, i), a.mul.eval_basis(j, k));
                if (lhs != rhs) rep.add("assoc", {i, j, k}, lhs, rhs, "(fg)h != f(gh)");
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = a.phi.apply(a.mul.eval_basis(i, j));
            Vec rhs = a.mul.eval(a.phi.apply(unit_vec(n, i)), a.phi.apply(unit_vec(n, j)));
            if (lhs != rhs) rep.add("phi-morphism", {i, j}, lhs, rhs, "phi(fg) != phi(f)phi(g)");
        }
    if (a.unit) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec lhs = a.mul.eval(*a.unit, unit_vec(n, i));
            Vec rhs = unit_vec(n, i);
            if (lhs != rhs) rep.add("unit", {i}, lhs, rhs, "1*f != f");
        }
        Vec phi_unit = a.phi.apply(*a.unit);
        if (phi_unit != *a.unit) rep.add("phi-unit", {}, phi_unit, *a.unit, "phi(1) != 1");
    }
    return rep;
}

ValidationReport is_phi_derivation(const Matrix& delta, const CommAlgebra& a) {
    if (delta.rows() != a.dim || delta.cols() != a.dim)
        throw ShapeError("is_phi_derivation: delta shape mismatch");
    ValidationReport rep;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec f = unit_vec(a.dim, i), g = unit_vec(a.dim, j);
            Vec lhs = delta.apply(a.mul.eval(f, g));
            Vec rhs = add(a.mul.eval(a.phi.apply(f), delta.apply(g)),
                          a.mul.eval(a.phi.apply(g), delta.apply(f)));
            if (lhs != rhs)
                rep.add("phi-derivation", {i, j}, lhs, rhs,
                        "delta(fg) != phi(f)delta(g) + phi(g)delta(f)");
        }
    return rep;
}

}  // namespace hlr
