#pragma once

#include "hlr/bilinear.hpp"
#include "hlr/matrix.hpp"
#include "hlr/report.hpp"

#include <memory>
#include <optional>

namespace hlr {

/// Commutative associative algebra (A, phi) by structure constants, with an
/// algebra endomorphism phi and an optional unit.
struct CommAlgebra {
    std::size_t dim = 0;
    Bilinear mul;   // A (x) A -> A
    Matrix phi;     // A -> A
    std::optional<Vec> unit;

    /// Matrix of multiplication by the element v.
    Matrix mul_by(const Vec& v) const { return mul.left_slice(v); }

    bool operator==(const CommAlgebra& rhs) const = default;
};

using CommAlgebraPtr = std::shared_ptr<const CommAlgebra>;

CommAlgebraPtr make_comm_algebra(std::size_t dim, Bilinear mul, Matrix phi,
                                 std::optional<Vec> unit = std::nullopt);

/// The rationals as a unital algebra with phi = id.
CommAlgebraPtr rational_base();

/// Checks commutativity, associativity, that phi is an algebra morphism,
/// and the unit laws when a unit is present.
ValidationReport validate_comm_algebra(const CommAlgebra& a);

/// Checks delta(fg) = phi(f) delta(g) + phi(g) delta(f) on all basis pairs.
ValidationReport is_phi_derivation(const Matrix& delta, const CommAlgebra& a);

}  // namespace hlr
