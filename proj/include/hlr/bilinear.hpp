#pragma once

#include "hlr/matrix.hpp"
#include "hlr/rational.hpp"

#include <functional>

namespace hlr {

/// Bilinear map as a 3-index coefficient tensor:
///   (e_i, e_j) |-> sum_k c[k][i][j] e_k.
class Bilinear {
  public:
    Bilinear() = default;
    Bilinear(std::size_t dim_left, std::size_t dim_right, std::size_t dim_out)
        : dl_(dim_left), dr_(dim_right), dk_(dim_out),
          coeffs_(dim_left * dim_right * dim_out, Rational(0)) {}

    static Bilinear zero(std::size_t dl, std::size_t dr, std::size_t dk) {
        return Bilinear(dl, dr, dk);
    }
    /// Builds the tensor by evaluating f on every basis pair.
    static Bilinear from_fn(std::size_t dl, std::size_t dr, std::size_t dk,
                            const std::function<Vec(std::size_t, std::size_t)>& f);

    std::size_t dim_left() const { return dl_; }
    std::size_t dim_right() const { return dr_; }
    std::size_t dim_out() const { return dk_; }

    Rational& at(std::size_t k, std::size_t i, std::size_t j) {
        return coeffs_[(k * dl_ + i) * dr_ + j];
    }
    const Rational& at(std::size_t k, std::size_t i, std::size_t j) const {
        return coeffs_[(k * dl_ + i) * dr_ + j];
    }

    Vec eval(const Vec& u, const Vec& v) const;
    Vec eval_basis(std::size_t i, std::size_t j) const;
    /// Matrix of v |-> eval(x, v).
    Matrix left_slice(const Vec& x) const;
    /// Matrix of u |-> eval(u, y).
    Matrix right_slice(const Vec& y) const;

    bool is_zero() const;
    bool operator==(const Bilinear& rhs) const = default;

    const std::vector<Rational>& raw() const { return coeffs_; }
    std::vector<Rational>& raw() { return coeffs_; }

  private:
    std::size_t dl_ = 0, dr_ = 0, dk_ = 0;
    std::vector<Rational> coeffs_;
};

}  // namespace hlr
