#include "hlr/subspace.hpp"

#include "hlr/errors.hpp"

namespace hlr {

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(ambient, 0);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const Matrix& columns) {
    if (columns.rows() != ambient) throw ShapeError("span: column length != ambient dim");
    // Vectors as rows, reduce, keep nonzero rows, transpose back.
    Matrix rows = columns.transpose();
    auto pivots = rref_in_place(rows);
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(ambient, pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t i = 0; i < ambient; ++i) s.basis_.at(i, r) = rows.at(r, i);
    return s;
}

Subspace Subspace::span_vectors(std::size_t ambient, const std::vector<Vec>& vectors) {
    Matrix m(ambient, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != ambient) throw ShapeError("span: vector length != ambient dim");
        m.set_col(j, vectors[j]);
    }
    return span(ambient, m);
}

bool Subspace::contains(const Vec& v) const { return coords_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.col(j))) return false;
    return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
    if (v.size() != ambient_) throw ShapeError("coords_of: length mismatch");
    return solve(basis_, v);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw ShapeError("sum: ambient mismatch");
    return span(ambient_, basis_.hstack(other.basis_));
}

Subspace nullspace(const Matrix& a) { return Subspace::span(a.cols(), kernel_basis(a)); }

ClosureResult closure(const Subspace& seed, const std::vector<Matrix>& unary,
                      const std::vector<std::pair<const Bilinear*, SeedSide>>& binary) {
    const std::size_t n = seed.ambient_dim();
    for (const auto& u : unary)
        if (u.rows() != n || u.cols() != n) throw ShapeError("closure: unary map shape mismatch");
    for (const auto& [t, side] : binary) {
        if (t->dim_out() != n) throw ShapeError("closure: bilinear output dim mismatch");
        if (side == SeedSide::Left && t->dim_left() != n)
            throw ShapeError("closure: bilinear left dim mismatch");
        if (side == SeedSide::Right && t->dim_right() != n)
            throw ShapeError("closure: bilinear right dim mismatch");
    }

    ClosureResult res{seed, 0};
    for (;;) {
        std::vector<Vec> next;
        const Matrix& b = res.space.basis();
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Vec v = b.col(c);
            for (const auto& u : unary) next.push_back(u.apply(v));
            for (const auto& [t, side] : binary) {
                if (side == SeedSide::Left) {
                    for (std::size_t j = 0; j < t->dim_right(); ++j)
                        next.push_back(t->eval(v, unit_vec(t->dim_right(), j)));
                } else {
                    for (std::size_t i = 0; i < t->dim_left(); ++i)
                        next.push_back(t->eval(unit_vec(t->dim_left(), i), v));
                }
            }
        }
        Subspace grown = res.space;
        for (const auto& v : next)
            if (!grown.contains(v)) grown = grown.sum(Subspace::span_vectors(n, {v}));
        if (grown.dim() == res.space.dim()) break;
        res.space = grown;
        ++res.rounds;
    }
    return res;
}

QuotientStructure::QuotientStructure(const Subspace& sub) : sub_(sub) {
    const std::size_t n = sub.ambient_dim();
    const std::size_t k = sub.dim();
    const Matrix& b = sub.basis();
    // Pivot row of each basis column (first nonzero entry, value 1).
    std::vector<std::size_t> pivot(k);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t p = 0;
        while (p < n && b.at(p, j) == 0) ++p;
        pivot[j] = p;
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) free_rows.push_back(i);

    const std::size_t q = n - k;
    projection_ = Matrix(q, n);
    section_ = Matrix(n, q);
    // Canonical representative of x zeroes the pivot coordinates; the free
    // coordinates of the representative are the quotient coordinates.
    for (std::size_t a = 0; a < q; ++a) {
        projection_.at(a, free_rows[a]) = 1;
        for (std::size_t j = 0; j < k; ++j) projection_.at(a, pivot[j]) -= b.at(free_rows[a], j);
        section_.at(free_rows[a], a) = 1;
    }
}

std::optional<Matrix> QuotientStructure::induced_endo(const Matrix& f) const {
    if (f.rows() != ambient_dim() || f.cols() != ambient_dim())
        throw ShapeError("induced_endo: shape mismatch");
    if (!(projection_ * f * sub_.basis()).is_zero()) return std::nullopt;
    return projection_ * f * section_;
}

std::optional<Matrix> QuotientStructure::induced_out(const Matrix& f) const {
    if (f.cols() != ambient_dim()) throw ShapeError("induced_out: shape mismatch");
    if (!(f * sub_.basis()).is_zero()) return std::nullopt;
    return f * section_;
}

Matrix QuotientStructure::compose_into(const Matrix& g) const {
    if (g.rows() != ambient_dim()) throw ShapeError("compose_into: shape mismatch");
    return projection_ * g;
}

std::optional<Bilinear> QuotientStructure::induce(const Bilinear& t, const QuotientStructure* left,
                                                  const QuotientStructure* right,
                                                  const QuotientStructure* out) {
    if (!out) throw ShapeError("induce: output quotient required");
    // Each quotiented input leg must map the subspace into the output kernel
    // against everything on the other leg.
    if (left) {
        const Matrix& b = left->sub_.basis();
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Vec v = b.col(c);
            for (std::size_t j = 0; j < t.dim_right(); ++j)
                if (!is_zero_vec(out->projection_.apply(t.eval(v, unit_vec(t.dim_right(), j)))))
                    return std::nullopt;
        }
    }
    if (right) {
        const Matrix& b = right->sub_.basis();
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Vec v = b.col(c);
            for (std::size_t i = 0; i < t.dim_left(); ++i)
                if (!is_zero_vec(out->projection_.apply(t.eval(unit_vec(t.dim_left(), i), v))))
                    return std::nullopt;
        }
    }
    std::size_t dl = left ? left->dim() : t.dim_left();
    std::size_t dr = right ? right->dim() : t.dim_right();
    return Bilinear::from_fn(dl, dr, out->dim(), [&](std::size_t i, std::size_t j) {
        Vec u = left ? left->section_.col(i) : unit_vec(t.dim_left(), i);
        Vec v = right ? right->section_.col(j) : unit_vec(t.dim_right(), j);
        return out->projection_.apply(t.eval(u, v));
    });
}

std::optional<Matrix> restrict_endo(const Matrix& f, const Subspace& sub) {
    const Matrix& b = sub.basis();
    Matrix r(sub.dim(), sub.dim());
    for (std::size_t j = 0; j < sub.dim(); ++j) {
        auto c = sub.coords_of(f.apply(b.col(j)));
        if (!c) return std::nullopt;
        r.set_col(j, *c);
    }
    return r;
}

std::optional<Bilinear> restrict_bilinear(const Bilinear& t, const Subspace* left,
                                          const Subspace* right, const Subspace& out) {
    std::size_t dl = left ? left->dim() : t.dim_left();
    std::size_t dr = right ? right->dim() : t.dim_right();
    Bilinear r(dl, dr, out.dim());
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dr; ++j) {
            Vec u = left ? left->basis().col(i) : unit_vec(t.dim_left(), i);
            Vec v = right ? right->basis().col(j) : unit_vec(t.dim_right(), j);
            auto c = out.coords_of(t.eval(u, v));
            if (!c) return std::nullopt;
            for (std::size_t k = 0; k < out.dim(); ++k) r.at(k, i, j) = (*c)[k];
        }
    return r;
}

}  // namespace hlr
