#include "colorhom/vector.hpp"

namespace colorhom {

Vector Vector::basis(std::size_t index, const CyclotomicField& field)
{
    Vector v;
    v.coeffs_.emplace(index, Scalar(field, 1));
    return v;
}

const Scalar* Vector::find(std::size_t index) const
{
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? nullptr : &it->second;
}

std::size_t Vector::extent() const noexcept
{
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first + 1;
}

void Vector::add(std::size_t index, const Scalar& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

void Vector::add_scaled(const Vector& v, const Scalar& factor)
{
    if (factor.is_zero()) {
        return;
    }
    for (const auto& [i, c] : v.coeffs_) {
        add(i, c * factor);
    }
}

Vector& Vector::operator+=(const Vector& rhs)
{
    for (const auto& [i, c] : rhs.coeffs_) {
        add(i, c);
    }
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs)
{
    for (const auto& [i, c] : rhs.coeffs_) {
        add(i, -c);
    }
    return *this;
}

Vector Vector::operator-() const
{
    Vector r;
    for (const auto& [i, c] : coeffs_) {
        r.coeffs_.emplace_hint(r.coeffs_.end(), i, -c);
    }
    return r;
}

Vector Vector::scaled(const Scalar& factor) const
{
    Vector r;
    if (factor.is_zero()) {
        return r;
    }
    for (const auto& [i, c] : coeffs_) {
        r.coeffs_.emplace_hint(r.coeffs_.end(), i, c * factor);
    }
    return r;
}

std::string Vector::to_string(const std::string& prefix) const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        const std::string name = prefix + std::to_string(i);
        std::string term;
        if (c.is_rational()) {
            const Rational& q = c.coefficients()[0];
            const bool neg = q < 0;
            const Rational mag = neg ? Rational(-q) : q;
            if (!first) {
                s += neg ? " - " : " + ";
            } else if (neg) {
                s += "-";
            }
            term = mag == 1 ? name : rational_to_string(mag) + "*" + name;
        } else {
            if (!first) {
                s += " + ";
            }
            term = c.to_string() + "*" + name;
        }
        s += term;
        first = false;
    }
    return s;
}

} // namespace colorhom
