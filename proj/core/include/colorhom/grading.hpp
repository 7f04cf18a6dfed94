#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace colorhom {

/// An element of Z^r x Z_m1 x ... x Z_mk in canonical form (torsion
/// coordinates reduced into [0, m_i)). Obtain instances from GradingGroup.
class GroupElement {
public:
    GroupElement() = default;

    std::span<const long long> coordinates() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    long long operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.coords_ <=> b.coords_; }

    std::string to_string() const;

private:
    friend class GradingGroup;
    explicit GroupElement(std::vector<long long> coords) : coords_(std::move(coords)) {}

    std::vector<long long> coords_;
};

/// A finitely generated abelian group Z^r x Z_m1 x ... x Z_mk. Generator i
/// is the i-th unit vector; the free generators come first.
class GradingGroup {
public:
    /// The trivial group (no generators): every element is the empty tuple.
    GradingGroup() = default;
    /// Throws InputError if some torsion order is below 2.
    GradingGroup(std::size_t free_rank, std::vector<long long> torsion_orders);

    static GradingGroup trivial() { return {}; }
    static GradingGroup cyclic(long long order) { return GradingGroup(0, {order}); }

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<long long>& torsion_orders() const noexcept { return torsion_; }
    std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }
    bool is_trivial() const noexcept { return generator_count() == 0; }
    /// nullopt for free generators.
    std::optional<long long> generator_order(std::size_t i) const;

    /// Canonicalizes `coords`; throws InputError on a length mismatch.
    GroupElement element(std::vector<long long> coords) const;
    GroupElement zero() const;
    GroupElement generator(std::size_t i) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    /// True when `a` has the right length and is already canonical.
    bool contains(const GroupElement& a) const noexcept;

    /// Every element of a finite group in lexicographic order. Throws
    /// InputError when the group has free rank.
    std::vector<GroupElement> elements() const;

    friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<long long> torsion_;
};

} // namespace colorhom
