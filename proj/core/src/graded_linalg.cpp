#include "colorhom/graded_linalg.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "colorhom/error.hpp"

namespace colorhom {

namespace {

void scan_range(std::span<const std::size_t> dims, std::size_t begin, std::size_t end, const TupleProbe& probe,
                std::vector<Violation>& out)
{
    std::vector<std::size_t> t(dims.size());
    std::size_t rest = begin;
    for (std::size_t s = dims.size(); s-- > 0;) {
        t[s] = rest % dims[s];
        rest /= dims[s];
    }
    for (std::size_t flat = begin; flat < end; ++flat) {
        Vector defect = probe(t);
        if (!defect.is_zero()) {
            out.push_back({t, std::move(defect), {}});
        }
        for (std::size_t s = dims.size(); s-- > 0;) {
            if (++t[s] < dims[s]) {
                break;
            }
            t[s] = 0;
        }
    }
}

GroupElement degree_sum(const GradingGroup& g, std::span<const GradedSpace* const> slots,
                        std::span<const std::size_t> tuple)
{
    GroupElement d = g.zero();
    for (std::size_t s = 0; s < tuple.size(); ++s) {
        d = g.add(d, slots[s]->degree(tuple[s]));
    }
    return d;
}

std::vector<Vector> images(const EvenMap& f)
{
    std::vector<Vector> cols;
    cols.reserve(f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j) {
        cols.push_back(f.column(j));
    }
    return cols;
}

Vector apply_op_to_images(const MultilinearMap& op, const std::vector<Vector>& cols, std::span<const std::size_t> t)
{
    std::vector<Vector> args;
    args.reserve(t.size());
    for (std::size_t i : t) {
        args.push_back(cols[i]);
    }
    return op(args);
}

} // namespace

std::vector<Violation> scan_tuples(std::span<const std::size_t> dims, unsigned jobs, const TupleProbe& probe)
{
    std::size_t total = 1;
    for (std::size_t d : dims) {
        total *= d;
    }
    std::vector<Violation> out;
    if (total == 0) {
        return out;
    }
    const std::size_t workers = std::clamp<std::size_t>(jobs == 0 ? 1 : jobs, 1, total);
    if (workers == 1) {
        scan_range(dims, 0, total, probe, out);
        return out;
    }
    const std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::vector<Violation>> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(total, w * chunk);
        const std::size_t end = std::min(total, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                scan_range(dims, begin, end, probe, partial[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (auto& p : partial) {
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return out;
}

EpsTable::EpsTable(const Bicharacter& eps, const std::vector<GroupElement>& degrees) : n_(degrees.size())
{
    table_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            table_.push_back(eps(degrees[i], degrees[j]));
        }
    }
}

EpsTable::EpsTable(const Bicharacter& eps, const GradedSpace& space)
    : EpsTable(eps, [&] {
          std::vector<GroupElement> d;
          for (const auto& b : space.basis()) {
              d.push_back(b.degree);
          }
          return d;
      }())
{
}

CheckReport check_evenness(const MultilinearMap& f, std::span<const GradedSpace* const> slots, const GradedSpace& out)
{
    if (slots.size() != f.arity()) {
        throw InputError("evenness check: slot count does not match arity");
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (slots[s]->dim() != f.slot_dims()[s]) {
            throw InputError("evenness check: slot " + std::to_string(s) + " dimension mismatch");
        }
    }
    if (out.dim() != f.out_dim()) {
        throw InputError("evenness check: output dimension mismatch");
    }
    std::vector<Violation> found;
    f.for_each([&](const MultilinearMap::Tuple& t, const Vector& value) {
        const GroupElement d = degree_sum(out.group(), slots, t);
        Vector bad;
        for (const auto& [i, c] : value) {
            if (out.degree(i) != d) {
                bad.add(i, c);
            }
        }
        if (!bad.is_zero()) {
            found.push_back({t, std::move(bad), "output outside degree " + d.to_string()});
        }
    });
    return CheckReport::leaf("evenness", std::move(found));
}

CheckReport check_evenness(const MultilinearMap& f, const GradedSpace& space)
{
    std::vector<const GradedSpace*> slots(f.arity(), &space);
    return check_evenness(f, slots, space);
}

CheckReport check_evenness(const EvenMap& f, const GradedSpace& from, const GradedSpace& to)
{
    if (f.cols() != from.dim() || f.rows() != to.dim()) {
        throw InputError("evenness check: map shape does not match the spaces");
    }
    std::vector<Violation> found;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        for (const auto& [i, c] : f.column(j)) {
            if (to.degree(i) != from.degree(j)) {
                Vector bad;
                bad.add(i, c);
                found.push_back({{i, j}, std::move(bad), "entry links degrees " + to.degree(i).to_string() +
                                                            " and " + from.degree(j).to_string()});
            }
        }
    }
    return CheckReport::leaf("evenness", std::move(found));
}

CheckReport check_evenness(const EvenMap& f, const GradedSpace& space)
{
    return check_evenness(f, space, space);
}

EvenMap endo_power(const EvenMap& f, unsigned n)
{
    return f.power(n);
}

CheckReport is_endomorphism(const EvenMap& f, const std::vector<NamedOp>& ops, unsigned jobs)
{
    if (!f.is_square()) {
        throw InputError("endomorphism check needs a square map");
    }
    const auto cols = images(f);
    std::vector<CheckReport> parts;
    for (const auto& [name, op] : ops) {
        if (op->out_dim() != f.rows() ||
            std::any_of(op->slot_dims().begin(), op->slot_dims().end(), [&](std::size_t d) { return d != f.rows(); })) {
            throw InputError("endomorphism check: operation \"" + name + "\" does not act on the map's space");
        }
        auto found = scan_tuples(op->slot_dims(), jobs, [&](std::span<const std::size_t> t) {
            return f(op->at(t)) - apply_op_to_images(*op, cols, t);
        });
        parts.push_back(CheckReport::leaf("endomorphism." + name, std::move(found)));
    }
    return CheckReport::composite("endomorphism", std::move(parts));
}

CheckReport check_morphism(const EvenMap& f, const std::vector<NamedOp>& source_ops,
                           const std::vector<NamedOp>& target_ops, const EvenMap* source_alpha,
                           const EvenMap* target_alpha, unsigned jobs)
{
    if (source_ops.size() != target_ops.size()) {
        throw InputError("morphism check: the two structures have different operations");
    }
    const auto cols = images(f);
    std::vector<CheckReport> parts;
    for (std::size_t k = 0; k < source_ops.size(); ++k) {
        const auto& src = *source_ops[k].op;
        const auto& dst = *target_ops[k].op;
        if (src.arity() != dst.arity() || src.out_dim() != f.cols() || dst.out_dim() != f.rows()) {
            throw InputError("morphism check: operation \"" + source_ops[k].name + "\" does not match");
        }
        auto found = scan_tuples(src.slot_dims(), jobs, [&](std::span<const std::size_t> t) {
            return f(src.at(t)) - apply_op_to_images(dst, cols, t);
        });
        parts.push_back(CheckReport::leaf("morphism." + source_ops[k].name, std::move(found)));
    }
    if (source_alpha && target_alpha) {
        std::vector<Violation> found;
        for (std::size_t j = 0; j < f.cols(); ++j) {
            Vector d = f(source_alpha->column(j)) - (*target_alpha)(f.column(j));
            if (!d.is_zero()) {
                found.push_back({{j}, std::move(d), "f o alpha != alpha o f"});
            }
        }
        parts.push_back(CheckReport::leaf("morphism.alpha", std::move(found)));
    }
    return CheckReport::composite("morphism", std::move(parts));
}

MultilinearMap commutator_map(const MultilinearMap& mu, const Bicharacter& eps, const GradedSpace& space)
{
    const EpsTable e(eps, space);
    MultilinearMap out(mu.field(), mu.slot_dims(), mu.out_dim());
    mu.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) {
        const std::size_t x = t[0];
        const std::size_t y = t[1];
        const Scalar minus_e = -e(y, x);
        for (const auto& [i, c] : v) {
            out.add({x, y}, i, c);
            out.add({y, x}, i, minus_e * c);
        }
    });
    return out;
}

Vector cyclic_sum(const TrilinearExpr& expr, std::size_t x, std::size_t y, std::size_t z)
{
    Vector s = expr(x, y, z);
    s += expr(y, z, x);
    s += expr(z, x, y);
    return s;
}

MultilinearMap post_compose(const EvenMap& f, const MultilinearMap& op)
{
    if (f.cols() != op.out_dim()) {
        throw InputError("post-composition shape mismatch");
    }
    MultilinearMap out(op.field(), op.slot_dims(), f.rows());
    op.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) { out.set(t, f(v)); });
    return out;
}

MultilinearMap pre_compose(const MultilinearMap& op, std::size_t slot, const EvenMap& f)
{
    if (slot >= op.arity() || f.rows() != op.slot_dims()[slot]) {
        throw InputError("pre-composition shape mismatch");
    }
    auto dims = op.slot_dims();
    dims[slot] = f.cols();
    MultilinearMap out(op.field(), dims, op.out_dim());
    std::vector<Vector> args(op.arity());
    auto found = scan_tuples(dims, 1, [&](std::span<const std::size_t> t) {
        for (std::size_t s = 0; s < t.size(); ++s) {
            args[s] = s == slot ? f.column(t[s]) : Vector::basis(t[s], op.field());
        }
        return op(args);
    });
    for (auto& v : found) {
        out.set(v.tuple, std::move(v.defect));
    }
    return out;
}

MultilinearMap scaled(const MultilinearMap& op, const Scalar& k)
{
    MultilinearMap out(op.field(), op.slot_dims(), op.out_dim());
    op.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) { out.set(t, v.scaled(k)); });
    return out;
}

MultilinearMap swapped(const MultilinearMap& op)
{
    if (op.arity() != 2) {
        throw InputError("swap needs a binary operation");
    }
    MultilinearMap out(op.field(), {op.slot_dims()[1], op.slot_dims()[0]}, op.out_dim());
    op.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) { out.set({t[1], t[0]}, v); });
    return out;
}

} // namespace colorhom
