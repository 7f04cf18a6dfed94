#include "colorhom/bicharacter.hpp"

#include "colorhom/error.hpp"

namespace colorhom {

namespace {

std::string shape_problem(const ScalarMatrix& m, const GradingGroup& group, const CyclotomicField& field)
{
    const std::size_t n = group.generator_count();
    if (m.size() != n) {
        return "bicharacter has " + std::to_string(m.size()) + " rows, expected " + std::to_string(n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) {
            return "bicharacter row " + std::to_string(i) + " has " + std::to_string(m[i].size()) +
                   " entries, expected " + std::to_string(n);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (&m[i][j].field() != &field) {
                return "bicharacter entry (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") is not in Q(zeta_" + std::to_string(field.order()) + ")";
            }
        }
    }
    return {};
}

Vector scalar_defect(const Scalar& s)
{
    Vector v;
    v.add(0, s);
    return v;
}

} // namespace

Bicharacter::Bicharacter(GradingGroup group, const CyclotomicField& field, ScalarMatrix generator_matrix)
    : group_(std::move(group)), field_(&field), matrix_(std::move(generator_matrix))
{
    if (auto problem = shape_problem(matrix_, group_, field); !problem.empty()) {
        throw InputError(problem);
    }
}

Bicharacter Bicharacter::trivial(GradingGroup group, const CyclotomicField& field)
{
    const std::size_t n = group.generator_count();
    ScalarMatrix m(n, std::vector<Scalar>(n, Scalar(field, 1)));
    return Bicharacter(std::move(group), field, std::move(m));
}

Bicharacter Bicharacter::super_sign(const CyclotomicField& field)
{
    return Bicharacter(GradingGroup::cyclic(2), field, {{Scalar(field, -1)}});
}

Scalar Bicharacter::operator()(const GroupElement& a, const GroupElement& b) const
{
    const std::size_t n = group_.generator_count();
    if (a.size() != n || b.size() != n) {
        throw InputError("group element length mismatch in bicharacter evaluation");
    }
    Scalar r(*field_, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] != 0) {
                r *= matrix_[i][j].pow(a[i] * b[j]);
            }
        }
    }
    return r;
}

bool Bicharacter::is_identically_one() const
{
    for (const auto& row : matrix_) {
        for (const auto& e : row) {
            if (!e.is_one()) {
                return false;
            }
        }
    }
    return true;
}

CheckReport validate_bicharacter(const Bicharacter& eps)
{
    return validate_bicharacter(eps.generator_matrix(), eps.group(), eps.field());
}

CheckReport validate_bicharacter(const ScalarMatrix& m, const GradingGroup& group, const CyclotomicField& field)
{
    if (auto problem = shape_problem(m, group, field); !problem.empty()) {
        CheckReport r;
        r.identity = "bicharacter";
        r.precondition_failure = problem;
        return r;
    }
    const std::size_t n = group.generator_count();
    std::vector<Violation> found;
    const Scalar one(field, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j].is_zero()) {
                found.push_back({{i, j}, scalar_defect(m[i][j]), "zero entry"});
                continue;
            }
            if (i <= j) {
                const Scalar d = m[i][j] * m[j][i] - one;
                if (!d.is_zero()) {
                    found.push_back({{i, j}, scalar_defect(d), "entry(i,j) * entry(j,i) != 1"});
                }
            }
            for (std::size_t pass = 0; pass < (i == j ? 1u : 2u); ++pass) {
                const std::size_t g = pass == 0 ? i : j;
                auto order = group.generator_order(g);
                if (!order) {
                    continue;
                }
                const Scalar d = m[i][j].pow(*order) - one;
                if (!d.is_zero()) {
                    found.push_back({{i, j}, scalar_defect(d), "entry^" + std::to_string(*order) + " != 1"});
                }
            }
        }
    }
    return CheckReport::leaf("bicharacter", std::move(found));
}

} // namespace colorhom
