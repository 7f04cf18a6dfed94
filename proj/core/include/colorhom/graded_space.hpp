#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colorhom/grading.hpp"
#include "colorhom/scalar.hpp"

namespace colorhom {

struct BasisElement {
    std::string name;
    GroupElement degree;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A finite-dimensional G-graded space with a homogeneous ordered basis.
class GradedSpace {
public:
    /// Throws InputError on duplicate or empty names and on degrees that
    /// are not canonical elements of `group`.
    GradedSpace(const CyclotomicField& field, GradingGroup group, std::vector<BasisElement> basis);

    /// Basis e0, e1, ... all of degree zero.
    static GradedSpace ungraded(const CyclotomicField& field, std::size_t dim, GradingGroup group = {});

    std::size_t dim() const noexcept { return basis_.size(); }
    const CyclotomicField& field() const noexcept { return *field_; }
    const GradingGroup& group() const noexcept { return group_; }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    const std::string& name(std::size_t i) const { return basis_.at(i).name; }
    const GroupElement& degree(std::size_t i) const { return basis_.at(i).degree; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// This space followed by one extra basis element.
    GradedSpace extended(BasisElement extra) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b)
    {
        return a.field_ == b.field_ && a.group_ == b.group_ && a.basis_ == b.basis_;
    }

private:
    const CyclotomicField* field_;
    GradingGroup group_;
    std::vector<BasisElement> basis_;
};

} // namespace colorhom
