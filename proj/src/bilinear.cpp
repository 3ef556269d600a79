#include "hlr/bilinear.hpp"

#include "hlr/errors.hpp"

namespace hlr {

Bilinear Bilinear::from_fn(std::size_t dl, std::size_t dr, std::size_t dk,
                           const std::function<Vec(std::size_t, std::size_t)>& f) {
    Bilinear b(dl, dr, dk);
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dr; ++j) {
            Vec out = f(i, j);
            if (out.size() != dk) throw ShapeError("from_fn: output length mismatch");
            for (std::size_t k = 0; k < dk; ++k) b.at(k, i, j) = out[k];
        }
    return b;
}

Vec Bilinear::eval(const Vec& u, const Vec& v) const {
    if (u.size() != dl_ || v.size() != dr_) throw ShapeError("bilinear eval shape mismatch");
    Vec out(dk_, Rational(0));
    for (std::size_t i = 0; i < dl_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dr_; ++j) {
            if (v[j] == 0) continue;
            Rational uv = u[i] * v[j];
            for (std::size_t k = 0; k < dk_; ++k) {
                const Rational& c = at(k, i, j);
                if (c != 0) out[k] += c * uv;
            }
        }
    }
    return out;
}

Vec Bilinear::eval_basis(std::size_t i, std::size_t j) const {
    Vec out(dk_);
    for (std::size_t k = 0; k < dk_; ++k) out[k] = at(k, i, j);
    return out;
}

Matrix Bilinear::left_slice(const Vec& x) const {
    if (x.size() != dl_) throw ShapeError("left_slice shape mismatch");
    Matrix m(dk_, dr_);
    for (std::size_t i = 0; i < dl_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < dk_; ++k)
            for (std::size_t j = 0; j < dr_; ++j) m.at(k, j) += x[i] * at(k, i, j);
    }
    return m;
}

Matrix Bilinear::right_slice(const Vec& y) const {
    if (y.size() != dr_) throw ShapeError("right_slice shape mismatch");
    Matrix m(dk_, dl_);
    for (std::size_t j = 0; j < dr_; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < dk_; ++k)
            for (std::size_t i = 0; i < dl_; ++i) m.at(k, i) += y[j] * at(k, i, j);
    }
    return m;
}

bool Bilinear::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

}  // namespace hlr
