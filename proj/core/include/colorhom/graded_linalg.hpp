#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "colorhom/bicharacter.hpp"
#include "colorhom/even_map.hpp"
#include "colorhom/graded_space.hpp"
#include "colorhom/multilinear.hpp"
#include "colorhom/report.hpp"

namespace colorhom {

/// Returns the defect on one basis tuple; the zero vector means "holds".
using TupleProbe = std::function<Vector(std::span<const std::size_t>)>;

/// Evaluates `probe` on every tuple of the box dims[0] x ... x dims[k-1]
/// and collects the nonzero defects in lexicographic order. The box is cut
/// into contiguous chunks, one per worker, so the result does not depend on
/// `jobs`. An exception thrown by a worker is rethrown here.
std::vector<Violation> scan_tuples(std::span<const std::size_t> dims, unsigned jobs, const TupleProbe& probe);

/// eps on pairs of basis indices, evaluated once from the basis degrees.
class EpsTable {
public:
    EpsTable(const Bicharacter& eps, const std::vector<GroupElement>& degrees);
    explicit EpsTable(const Bicharacter& eps, const GradedSpace& space);

    const Scalar& operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    std::size_t size() const noexcept { return n_; }

private:
    std::size_t n_;
    std::vector<Scalar> table_;
};

/// Every stored output of f on inputs of degrees a_1, ..., a_k must only
/// involve basis elements of degree a_1 + ... + a_k.
CheckReport check_evenness(const MultilinearMap& f, std::span<const GradedSpace* const> slots,
                           const GradedSpace& out);
CheckReport check_evenness(const MultilinearMap& f, const GradedSpace& space);
/// Entry (i, j) nonzero requires degree(i) == degree(j).
CheckReport check_evenness(const EvenMap& f, const GradedSpace& from, const GradedSpace& to);
CheckReport check_evenness(const EvenMap& f, const GradedSpace& space);

/// f^n; n = 0 gives the identity.
EvenMap endo_power(const EvenMap& f, unsigned n);

struct NamedOp {
    std::string name;
    const MultilinearMap* op;
};

/// f(op(e_i1, ..., e_ik)) = op(f e_i1, ..., f e_ik) for every op and basis
/// tuple. One part per op, named "endomorphism.<name>".
CheckReport is_endomorphism(const EvenMap& f, const std::vector<NamedOp>& ops, unsigned jobs = 1);

/// f: A -> B with f(op_A(...)) = op_B(f ..., ...) for corresponding ops, and
/// f o alpha_A = alpha_B o f when both twisting maps are given.
CheckReport check_morphism(const EvenMap& f, const std::vector<NamedOp>& source_ops,
                           const std::vector<NamedOp>& target_ops, const EvenMap* source_alpha,
                           const EvenMap* target_alpha, unsigned jobs = 1);

/// [x, y] = mu(x, y) - eps(x, y) mu(y, x) as a new table.
MultilinearMap commutator_map(const MultilinearMap& mu, const Bicharacter& eps, const GradedSpace& space);

using TrilinearExpr = std::function<Vector(std::size_t, std::size_t, std::size_t)>;
/// expr(x, y, z) + expr(y, z, x) + expr(z, x, y).
Vector cyclic_sum(const TrilinearExpr& expr, std::size_t x, std::size_t y, std::size_t z);

/// f o op.
MultilinearMap post_compose(const EvenMap& f, const MultilinearMap& op);
/// op with f applied to slot `slot` first.
MultilinearMap pre_compose(const MultilinearMap& op, std::size_t slot, const EvenMap& f);
MultilinearMap scaled(const MultilinearMap& op, const Scalar& k);
/// op(x, y) -> op(y, x) for binary ops.
MultilinearMap swapped(const MultilinearMap& op);

} // namespace colorhom
