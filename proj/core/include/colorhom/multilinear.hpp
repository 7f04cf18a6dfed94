#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "colorhom/vector.hpp"

namespace colorhom {

/// A k-ary multilinear map given by structure constants on basis tuples.
///
/// Slot s ranges over a basis of size slot_dims()[s]; outputs live in a
/// space of dimension out_dim(). Internal operations have every slot equal
/// to out_dim(); module actions mix algebra and module slots. Only nonzero
/// outputs are stored.
class MultilinearMap {
public:
    using Tuple = std::vector<std::size_t>;

    MultilinearMap(const CyclotomicField& field, std::vector<std::size_t> slot_dims, std::size_t out_dim);
    /// The zero k-ary operation on a space of dimension `dim`.
    static MultilinearMap internal(const CyclotomicField& field, std::size_t arity, std::size_t dim);

    std::size_t arity() const noexcept { return slot_dims_.size(); }
    const std::vector<std::size_t>& slot_dims() const noexcept { return slot_dims_; }
    std::size_t out_dim() const noexcept { return out_dim_; }
    const CyclotomicField& field() const noexcept { return *field_; }
    std::size_t entry_count() const noexcept { return table_.size(); }
    bool is_zero() const noexcept { return table_.empty(); }

    /// Output on a basis tuple; a reference to an empty vector when unset.
    /// Throws InputError on arity mismatch or out-of-range indices.
    const Vector& at(std::span<const std::size_t> tuple) const;
    const Vector& at(std::initializer_list<std::size_t> tuple) const
    {
        return at(std::span<const std::size_t>(tuple.begin(), tuple.size()));
    }

    /// Replaces the output on `tuple`. Throws InputError when an output index
    /// is out of range.
    void set(std::span<const std::size_t> tuple, Vector value);
    void set(std::initializer_list<std::size_t> tuple, Vector value)
    {
        set(std::span<const std::size_t>(tuple.begin(), tuple.size()), std::move(value));
    }
    /// Adds coeff * e_out to the output on `tuple`.
    void add(std::span<const std::size_t> tuple, std::size_t out, const Scalar& coeff);
    void add(std::initializer_list<std::size_t> tuple, std::size_t out, const Scalar& coeff)
    {
        add(std::span<const std::size_t>(tuple.begin(), tuple.size()), out, coeff);
    }

    /// Multilinear extension to arbitrary vectors.
    Vector operator()(std::span<const Vector> args) const;
    Vector operator()(const Vector& a, const Vector& b) const;
    Vector operator()(const Vector& a, const Vector& b, const Vector& c) const;

    /// Visits nonzero entries in lexicographic tuple order.
    template <class F>
    void for_each(F&& f) const
    {
        Tuple t(arity());
        for (const auto& [key, value] : table_) {
            decode(key, t);
            f(static_cast<const Tuple&>(t), value);
        }
    }

    friend bool operator==(const MultilinearMap& a, const MultilinearMap& b)
    {
        return a.field_ == b.field_ && a.slot_dims_ == b.slot_dims_ && a.out_dim_ == b.out_dim_ &&
               a.table_ == b.table_;
    }

private:
    std::uint64_t encode(std::span<const std::size_t> tuple) const;
    void decode(std::uint64_t key, Tuple& out) const;
    void eval_into(std::span<const Vector> args, std::size_t slot, Tuple& tuple, const Scalar& coeff,
                   Vector& out) const;

    const CyclotomicField* field_;
    std::vector<std::size_t> slot_dims_;
    std::size_t out_dim_;
    std::map<std::uint64_t, Vector> table_;
};

} // namespace colorhom
