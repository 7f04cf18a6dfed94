#include "colorhom/graded_space.hpp"

#include <set>

#include "colorhom/error.hpp"

namespace colorhom {

GradedSpace::GradedSpace(const CyclotomicField& field, GradingGroup group, std::vector<BasisElement> basis)
    : field_(&field), group_(std::move(group)), basis_(std::move(basis))
{
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& b = basis_[i];
        if (b.name.empty()) {
            throw InputError("basis element " + std::to_string(i) + " has an empty name");
        }
        if (!seen.insert(b.name).second) {
            throw InputError("duplicate basis name \"" + b.name + "\"");
        }
        if (!group_.contains(b.degree)) {
            throw InputError("degree " + b.degree.to_string() + " of basis element \"" + b.name +
                             "\" is not a canonical element of " + group_.to_string());
        }
    }
}

GradedSpace GradedSpace::ungraded(const CyclotomicField& field, std::size_t dim, GradingGroup group)
{
    std::vector<BasisElement> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back({"e" + std::to_string(i), group.zero()});
    }
    return GradedSpace(field, std::move(group), std::move(basis));
}

std::optional<std::size_t> GradedSpace::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

GradedSpace GradedSpace::extended(BasisElement extra) const
{
    auto basis = basis_;
    basis.push_back(std::move(extra));
    return GradedSpace(*field_, group_, std::move(basis));
}

} // namespace colorhom
