#include "colorhom/grading.hpp"

#include "colorhom/error.hpp"

namespace colorhom {

namespace {

long long reduce_mod(long long v, long long m)
{
    long long r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

std::string GroupElement::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i != 0) {
            s += ", ";
        }
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

GradingGroup::GradingGroup(std::size_t free_rank, std::vector<long long> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders))
{
    for (long long m : torsion_) {
        if (m < 2) {
            throw InputError("torsion orders must be at least 2, got " + std::to_string(m));
        }
    }
}

std::optional<long long> GradingGroup::generator_order(std::size_t i) const
{
    if (i < free_rank_) {
        return std::nullopt;
    }
    return torsion_.at(i - free_rank_);
}

GroupElement GradingGroup::element(std::vector<long long> coords) const
{
    if (coords.size() != generator_count()) {
        throw InputError("group element " + GroupElement(coords).to_string() + " needs " +
                         std::to_string(generator_count()) + " coordinates");
    }
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        auto& c = coords[free_rank_ + i];
        c = reduce_mod(c, torsion_[i]);
    }
    return GroupElement(std::move(coords));
}

GroupElement GradingGroup::zero() const
{
    return GroupElement(std::vector<long long>(generator_count(), 0));
}

GroupElement GradingGroup::generator(std::size_t i) const
{
    std::vector<long long> c(generator_count(), 0);
    c.at(i) = 1;
    return element(std::move(c));
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const
{
    if (a.size() != generator_count() || b.size() != generator_count()) {
        throw InputError("group element length mismatch");
    }
    std::vector<long long> c(generator_count());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return element(std::move(c));
}

GroupElement GradingGroup::negate(const GroupElement& a) const
{
    std::vector<long long> c(a.coordinates().begin(), a.coordinates().end());
    for (auto& v : c) {
        v = -v;
    }
    return element(std::move(c));
}

bool GradingGroup::contains(const GroupElement& a) const noexcept
{
    if (a.size() != generator_count()) {
        return false;
    }
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        const long long c = a[free_rank_ + i];
        if (c < 0 || c >= torsion_[i]) {
            return false;
        }
    }
    return true;
}

std::vector<GroupElement> GradingGroup::elements() const
{
    if (free_rank_ != 0) {
        throw InputError("cannot enumerate a group with free rank");
    }
    std::vector<GroupElement> out;
    std::vector<long long> c(torsion_.size(), 0);
    while (true) {
        out.push_back(GroupElement(c));
        std::size_t i = c.size();
        while (i > 0) {
            --i;
            if (++c[i] < torsion_[i]) {
                break;
            }
            c[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (c.empty()) {
            return out;
        }
    }
}

std::string GradingGroup::to_string() const
{
    if (is_trivial()) {
        return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < free_rank_; ++i) {
        s += s.empty() ? "Z" : " x Z";
    }
    for (long long m : torsion_) {
        s += (s.empty() ? "Z_" : " x Z_") + std::to_string(m);
    }
    return s;
}

} // namespace colorhom
