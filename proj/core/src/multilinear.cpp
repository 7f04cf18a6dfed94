#include "colorhom/multilinear.hpp"

#include <limits>

#include "colorhom/error.hpp"

namespace colorhom {

namespace {

const Vector& empty_vector()
{
    static const Vector zero;
    return zero;
}

} // namespace

MultilinearMap::MultilinearMap(const CyclotomicField& field, std::vector<std::size_t> slot_dims, std::size_t out_dim)
    : field_(&field), slot_dims_(std::move(slot_dims)), out_dim_(out_dim)
{
    if (slot_dims_.empty()) {
        throw InputError("multilinear map needs arity at least 1");
    }
    // Keys are mixed-radix flat indices; keep the product inside 64 bits.
    long double total = 1;
    for (std::size_t d : slot_dims_) {
        total *= static_cast<long double>(d == 0 ? 1 : d);
    }
    if (total > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2)) {
        throw InputError("multilinear map domain too large");
    }
}

MultilinearMap MultilinearMap::internal(const CyclotomicField& field, std::size_t arity, std::size_t dim)
{
    return MultilinearMap(field, std::vector<std::size_t>(arity, dim), dim);
}

std::uint64_t MultilinearMap::encode(std::span<const std::size_t> tuple) const
{
    if (tuple.size() != slot_dims_.size()) {
        throw InputError("arity mismatch: expected " + std::to_string(slot_dims_.size()) + " arguments, got " +
                         std::to_string(tuple.size()));
    }
    std::uint64_t key = 0;
    for (std::size_t s = 0; s < tuple.size(); ++s) {
        if (tuple[s] >= slot_dims_[s]) {
            throw InputError("argument index " + std::to_string(tuple[s]) + " out of range in slot " +
                             std::to_string(s) + " (size " + std::to_string(slot_dims_[s]) + ")");
        }
        key = key * slot_dims_[s] + tuple[s];
    }
    return key;
}

void MultilinearMap::decode(std::uint64_t key, Tuple& out) const
{
    for (std::size_t s = slot_dims_.size(); s-- > 0;) {
        out[s] = static_cast<std::size_t>(key % slot_dims_[s]);
        key /= slot_dims_[s];
    }
}

const Vector& MultilinearMap::at(std::span<const std::size_t> tuple) const
{
    auto it = table_.find(encode(tuple));
    return it == table_.end() ? empty_vector() : it->second;
}

void MultilinearMap::set(std::span<const std::size_t> tuple, Vector value)
{
    const auto key = encode(tuple);
    if (value.extent() > out_dim_) {
        throw InputError("output index " + std::to_string(value.extent() - 1) + " out of range (dimension " +
                         std::to_string(out_dim_) + ")");
    }
    for (const auto& [i, c] : value) {
        if (&c.field() != field_) {
            throw InputError("structure constant in the wrong field");
        }
    }
    if (value.is_zero()) {
        table_.erase(key);
    } else {
        table_[key] = std::move(value);
    }
}

void MultilinearMap::add(std::span<const std::size_t> tuple, std::size_t out, const Scalar& coeff)
{
    const auto key = encode(tuple);
    if (out >= out_dim_) {
        throw InputError("output index " + std::to_string(out) + " out of range (dimension " +
                         std::to_string(out_dim_) + ")");
    }
    if (&coeff.field() != field_) {
        throw InputError("structure constant in the wrong field");
    }
    auto& v = table_[key];
    v.add(out, coeff);
    if (v.is_zero()) {
        table_.erase(key);
    }
}

void MultilinearMap::eval_into(std::span<const Vector> args, std::size_t slot, Tuple& tuple, const Scalar& coeff,
                               Vector& out) const
{
    if (slot == args.size()) {
        auto it = table_.find(encode(tuple));
        if (it != table_.end()) {
            out.add_scaled(it->second, coeff);
        }
        return;
    }
    for (const auto& [i, c] : args[slot]) {
        tuple[slot] = i;
        eval_into(args, slot + 1, tuple, coeff * c, out);
    }
}

Vector MultilinearMap::operator()(std::span<const Vector> args) const
{
    if (args.size() != arity()) {
        throw InputError("arity mismatch: expected " + std::to_string(arity()) + " arguments, got " +
                         std::to_string(args.size()));
    }
    Vector out;
    if (table_.empty()) {
        return out;
    }
    Tuple tuple(arity());
    eval_into(args, 0, tuple, Scalar(*field_, 1), out);
    return out;
}

Vector MultilinearMap::operator()(const Vector& a, const Vector& b) const
{
    if (arity() != 2) {
        throw InputError("arity mismatch: expected " + std::to_string(arity()) + " arguments, got 2");
    }
    Vector out;
    if (table_.empty()) {
        return out;
    }
    for (const auto& [i, ca] : a) {
        for (const auto& [j, cb] : b) {
            const std::size_t t[2] = {i, j};
            auto it = table_.find(encode(t));
            if (it != table_.end()) {
                out.add_scaled(it->second, ca * cb);
            }
        }
    }
    return out;
}

Vector MultilinearMap::operator()(const Vector& a, const Vector& b, const Vector& c) const
{
    const Vector args[3] = {a, b, c};
    return (*this)(std::span<const Vector>(args, 3));
}

} // namespace colorhom
