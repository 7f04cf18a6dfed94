#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "colorhom/scalar.hpp"

namespace colorhom {

/// A sparse coordinate vector: basis index -> nonzero Scalar. Zero
/// coefficients are never stored, so the zero vector is the empty map and
/// structural equality is mathematical equality.
class Vector {
public:
    using Storage = std::map<std::size_t, Scalar>;
    using const_iterator = Storage::const_iterator;

    Vector() = default;

    static Vector basis(std::size_t index, const CyclotomicField& field);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t support_size() const noexcept { return coeffs_.size(); }
    const Scalar* find(std::size_t index) const;
    /// Largest stored index plus one; zero for the zero vector.
    std::size_t extent() const noexcept;

    void add(std::size_t index, const Scalar& coeff);
    void add_scaled(const Vector& v, const Scalar& factor);

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector operator-() const;
    Vector scaled(const Scalar& factor) const;

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, const Vector& v) { return v.scaled(s); }

    const_iterator begin() const noexcept { return coeffs_.begin(); }
    const_iterator end() const noexcept { return coeffs_.end(); }

    friend bool operator==(const Vector&, const Vector&) = default;

    /// "0" or e.g. "2*e1 - e2" with the given basis prefix.
    std::string to_string(const std::string& prefix = "e") const;

private:
    Storage coeffs_;
};

} // namespace colorhom
