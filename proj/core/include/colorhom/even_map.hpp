#pragma once

#include <cstddef>
#include <vector>

#include "colorhom/bicharacter.hpp"
#include "colorhom/vector.hpp"

namespace colorhom {

/// A linear map between coordinate spaces, stored by columns: column j is
/// the image of e_j. Entry (i, j) is the coefficient of e_i in f(e_j).
/// Twisting maps are square; morphisms between bundles may be rectangular.
class EvenMap {
public:
    /// The zero map K^cols -> K^rows.
    EvenMap(const CyclotomicField& field, std::size_t rows, std::size_t cols);

    static EvenMap identity(const CyclotomicField& field, std::size_t dim);
    static EvenMap diagonal(const CyclotomicField& field, const std::vector<Scalar>& entries);
    /// Row-major matrix; every row must have the same length. A matrix with
    /// no rows is the 0 x 0 map.
    static EvenMap from_rows(const CyclotomicField& field, const ScalarMatrix& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    bool is_square() const noexcept { return rows_ == columns_.size(); }
    const CyclotomicField& field() const noexcept { return *field_; }

    const Vector& column(std::size_t j) const { return columns_.at(j); }
    Scalar entry(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& value);

    Vector operator()(const Vector& v) const;
    /// this o g.
    EvenMap compose(const EvenMap& g) const;
    /// Square maps only; power(0) is the identity.
    EvenMap power(unsigned n) const;
    /// Block-diagonal sum [this, 0; 0, g].
    EvenMap direct_sum(const EvenMap& g) const;
    EvenMap scaled(const Scalar& k) const;
    bool is_identity() const;

    ScalarMatrix to_rows() const;

    friend bool operator==(const EvenMap& a, const EvenMap& b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    const CyclotomicField* field_;
    std::size_t rows_;
    std::vector<Vector> columns_;
};

} // namespace colorhom
