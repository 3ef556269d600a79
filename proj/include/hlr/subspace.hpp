#pragma once

#include "hlr/bilinear.hpp"
#include "hlr/matrix.hpp"

#include <optional>
#include <vector>

namespace hlr {

/// Subspace of Q^n in canonical form: basis columns are the reduced column
/// echelon form of any spanning set (each column has leading entry 1 at its
/// pivot row, pivots strictly increasing, other columns vanish at pivot
/// rows). Equal spans compare entry-wise equal.
class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    /// Canonicalizes the span of the given columns.
    static Subspace span(std::size_t ambient, const Matrix& columns);
    static Subspace span_vectors(std::size_t ambient, const std::vector<Vec>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the canonical basis; absent when v is outside.
    std::optional<Vec> coords_of(const Vec& v) const;

    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const = default;

  private:
    std::size_t ambient_ = 0;
    Matrix basis_;  // ambient x dim
};

/// Kernel of A as a canonical Subspace of Q^cols.
Subspace nullspace(const Matrix& a);

/// Smallest subspace containing `seed`, invariant under every unary map and
/// absorbing under every bilinear map (seed entries on the flagged side,
/// swept against the full standard basis on the other side). Terminates in
/// at most ambient-dim growth rounds; `rounds` reports them.
enum class SeedSide { Left, Right };

struct ClosureResult {
    Subspace space;
    std::size_t rounds = 0;
};

ClosureResult closure(const Subspace& seed, const std::vector<Matrix>& unary,
                      const std::vector<std::pair<const Bilinear*, SeedSide>>& binary);

/// Exact coordinates on Q^n / S: projection has kernel exactly S, and
/// projection * section = identity on the quotient.
class QuotientStructure {
  public:
    QuotientStructure() = default;
    explicit QuotientStructure(const Subspace& sub);

    std::size_t ambient_dim() const { return sub_.ambient_dim(); }
    std::size_t dim() const { return projection_.rows(); }
    const Subspace& subspace() const { return sub_; }
    const Matrix& projection() const { return projection_; }
    const Matrix& section() const { return section_; }

    /// Induced map on the quotient of an endomorphism f of the ambient
    /// space; absent unless f(S) is contained in S.
    std::optional<Matrix> induced_endo(const Matrix& f) const;
    /// Induced map out of the quotient for f: ambient -> W; absent unless
    /// f(S) = 0.
    std::optional<Matrix> induced_out(const Matrix& f) const;
    /// Map into the quotient from W through g: W -> ambient.
    Matrix compose_into(const Matrix& g) const;

    /// Induced bilinear map with any subset of legs passing through this
    /// quotient (null = untouched leg). Well-definedness requires the tensor
    /// to carry S into S on every quotiented input leg.
    static std::optional<Bilinear> induce(const Bilinear& t, const QuotientStructure* left,
                                          const QuotientStructure* right,
                                          const QuotientStructure* out);

  private:
    Subspace sub_;
    Matrix projection_;  // q x n
    Matrix section_;     // n x q
};

/// Structure restriction helpers for a canonical subspace basis B.
/// Coordinates of f(B e_j) in B; absent when the image leaves the subspace.
std::optional<Matrix> restrict_endo(const Matrix& f, const Subspace& sub);
/// Restriction of a bilinear map along subspaces on each leg (null = full
/// space on that leg). Absent when outputs leave the output subspace.
std::optional<Bilinear> restrict_bilinear(const Bilinear& t, const Subspace* left,
                                          const Subspace* right, const Subspace& out);

}  // namespace hlr
