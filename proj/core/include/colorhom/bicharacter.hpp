#pragma once

#include <vector>

#include "colorhom/grading.hpp"
#include "colorhom/report.hpp"
#include "colorhom/scalar.hpp"

namespace colorhom {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// A bicharacter stored on generator pairs: entry(i, j) = eps(g_i, g_j).
/// Evaluation extends biadditively, so eps(a + b, c) = eps(a, c) eps(b, c)
/// and eps(a, b + c) = eps(a, b) eps(a, c) hold by construction.
/// Skew-symmetry and torsion consistency are checked by
/// validate_bicharacter().
class Bicharacter {
public:
    /// Throws InputError unless the matrix is square of size
    /// group.generator_count() and every entry lies in `field`.
    Bicharacter(GradingGroup group, const CyclotomicField& field, ScalarMatrix generator_matrix);

    /// eps == 1 on the given group.
    static Bicharacter trivial(GradingGroup group, const CyclotomicField& field);
    /// The trivial group with the trivial bicharacter.
    static Bicharacter trivial(const CyclotomicField& field) { return trivial(GradingGroup::trivial(), field); }
    /// Z_2 with eps(1, 1) = -1.
    static Bicharacter super_sign(const CyclotomicField& field);

    const GradingGroup& group() const noexcept { return group_; }
    const CyclotomicField& field() const noexcept { return *field_; }
    const ScalarMatrix& generator_matrix() const noexcept { return matrix_; }
    const Scalar& entry(std::size_t i, std::size_t j) const { return matrix_.at(i).at(j); }

    /// prod_{i,j} entry(i,j)^(a_i b_j).
    Scalar operator()(const GroupElement& a, const GroupElement& b) const;

    /// True when every entry is 1.
    bool is_identically_one() const;

    friend bool operator==(const Bicharacter& a, const Bicharacter& b)
    {
        return a.field_ == b.field_ && a.group_ == b.group_ && a.matrix_ == b.matrix_;
    }

private:
    GradingGroup group_;
    const CyclotomicField* field_;
    ScalarMatrix matrix_;
};

/// Checks entry(i,j) entry(j,i) = 1 on every generator pair and, for a
/// generator i of finite order m, entry(i,j)^m = entry(j,i)^m = 1.
/// Violations carry the generator pair and the defect as a one-entry vector.
CheckReport validate_bicharacter(const Bicharacter& eps);

/// Validates a raw matrix. Shape errors and zero entries are reported as a
/// failed precondition rather than thrown.
CheckReport validate_bicharacter(const ScalarMatrix& matrix, const GradingGroup& group,
                                 const CyclotomicField& field);

} // namespace colorhom
