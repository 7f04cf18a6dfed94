#include "colorhom/even_map.hpp"

#include "colorhom/error.hpp"

namespace colorhom {

EvenMap::EvenMap(const CyclotomicField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), columns_(cols)
{
}

EvenMap EvenMap::identity(const CyclotomicField& field, std::size_t dim)
{
    EvenMap f(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        f.columns_[j] = Vector::basis(j, field);
    }
    return f;
}

EvenMap EvenMap::diagonal(const CyclotomicField& field, const std::vector<Scalar>& entries)
{
    EvenMap f(field, entries.size(), entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) {
        f.set(j, j, entries[j]);
    }
    return f;
}

EvenMap EvenMap::from_rows(const CyclotomicField& field, const ScalarMatrix& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    EvenMap f(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw InputError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            f.set(i, j, rows[i][j]);
        }
    }
    return f;
}

Scalar EvenMap::entry(std::size_t i, std::size_t j) const
{
    if (i >= rows_) {
        throw InputError("row index out of range");
    }
    const Scalar* c = columns_.at(j).find(i);
    return c ? *c : Scalar(*field_, 0);
}

void EvenMap::set(std::size_t i, std::size_t j, const Scalar& value)
{
    if (i >= rows_ || j >= columns_.size()) {
        throw InputError("matrix index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    if (&value.field() != field_) {
        throw InputError("matrix entry in the wrong field");
    }
    Vector& col = columns_[j];
    if (const Scalar* c = col.find(i)) {
        col.add(i, -*c);
    }
    col.add(i, value);
}

Vector EvenMap::operator()(const Vector& v) const
{
    Vector out;
    for (const auto& [j, c] : v) {
        out.add_scaled(columns_.at(j), c);
    }
    return out;
}

EvenMap EvenMap::compose(const EvenMap& g) const
{
    if (g.rows_ != cols()) {
        throw InputError("cannot compose " + std::to_string(rows_) + "x" + std::to_string(cols()) + " with " +
                         std::to_string(g.rows_) + "x" + std::to_string(g.cols()));
    }
    EvenMap r(*field_, rows_, g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        r.columns_[j] = (*this)(g.columns_[j]);
    }
    return r;
}

EvenMap EvenMap::power(unsigned n) const
{
    if (!is_square()) {
        throw InputError("power of a non-square map");
    }
    EvenMap result = identity(*field_, rows_);
    EvenMap base = *this;
    while (n != 0) {
        if (n & 1U) {
            result = result.compose(base);
        }
        n >>= 1U;
        if (n != 0) {
            base = base.compose(base);
        }
    }
    return result;
}

EvenMap EvenMap::direct_sum(const EvenMap& g) const
{
    EvenMap r(*field_, rows_ + g.rows_, cols() + g.cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        r.columns_[j] = columns_[j];
    }
    for (std::size_t j = 0; j < g.cols(); ++j) {
        Vector shifted;
        for (const auto& [i, c] : g.columns_[j]) {
            shifted.add(i + rows_, c);
        }
        r.columns_[cols() + j] = std::move(shifted);
    }
    return r;
}

EvenMap EvenMap::scaled(const Scalar& k) const
{
    EvenMap r(*field_, rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        r.columns_[j] = columns_[j].scaled(k);
    }
    return r;
}

bool EvenMap::is_identity() const
{
    return *this == identity(*field_, rows_);
}

ScalarMatrix EvenMap::to_rows() const
{
    ScalarMatrix m(rows_, std::vector<Scalar>(cols(), Scalar(*field_, 0)));
    for (std::size_t j = 0; j < cols(); ++j) {
        for (const auto& [i, c] : columns_[j]) {
            m[i][j] = c;
        }
    }
    return m;
}

} // namespace colorhom
