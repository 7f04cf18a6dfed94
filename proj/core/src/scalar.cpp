#include "colorhom/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "colorhom/error.hpp"

namespace colorhom {

namespace {

using IntPoly = std::vector<long long>;

void trim(IntPoly& p)
{
    while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
    }
}

// Quotient of num by a monic divisor; the remainder must vanish.
IntPoly exact_divide(IntPoly num, const IntPoly& den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() - 1 < dn) {
        throw std::logic_error("cyclotomic division: degree underflow");
    }
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dn; --i) {
        const long long c = num[i];
        quot[i - dn] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= dn; ++j) {
                num[i - dn + j] -= c * den[j];
            }
        }
        if (i == dn) {
            break;
        }
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
    }
    trim(quot);
    return quot;
}

const IntPoly& cyclotomic_memo(unsigned n, std::map<unsigned, IntPoly>& memo)
{
    if (auto it = memo.find(n); it != memo.end()) {
        return it->second;
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = exact_divide(std::move(p), cyclotomic_memo(d, memo));
        }
    }
    return memo.emplace(n, std::move(p)).first->second;
}

struct FieldRegistry {
    std::mutex mutex;
    std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
};

FieldRegistry& registry()
{
    static FieldRegistry r;
    return r;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(unsigned order)
{
    if (order == 0) {
        throw InputError("cyclotomic order must be positive");
    }
    std::map<unsigned, IntPoly> memo;
    return cyclotomic_memo(order, memo);
}

CyclotomicField::CyclotomicField(unsigned order) : order_(order), phi_(cyclotomic_polynomial(order))
{
    const std::size_t d = degree();
    if (d < 2) {
        return;
    }
    // zeta^d = -(phi_0 + phi_1 zeta + ... + phi_{d-1} zeta^{d-1})
    IntPoly current(d);
    for (std::size_t i = 0; i < d; ++i) {
        current[i] = -phi_[i];
    }
    reductions_.push_back(current);
    for (std::size_t k = d + 1; k <= 2 * d - 2; ++k) {
        IntPoly next(d, 0);
        const long long top = current[d - 1];
        for (std::size_t i = 1; i < d; ++i) {
            next[i] = current[i - 1];
        }
        for (std::size_t i = 0; i < d; ++i) {
            next[i] += top * reductions_.front()[i];
        }
        reductions_.push_back(next);
        current = std::move(next);
    }
}

const CyclotomicField& CyclotomicField::get(unsigned order)
{
    if (order == 0 || order > kMaxOrder) {
        throw InputError("cyclotomic order must lie in [1, " + std::to_string(kMaxOrder) + "], got " +
                         std::to_string(order));
    }
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.fields[order];
    if (!slot) {
        slot.reset(new CyclotomicField(order));
    }
    return *slot;
}

const std::vector<long long>& CyclotomicField::power_reduction(std::size_t k) const
{
    return reductions_.at(k - degree());
}

// ---------------------------------------------------------------------------

Scalar::Scalar() : field_(&CyclotomicField::rationals()), coeffs_(1) {}

Scalar::Scalar(const CyclotomicField& field, long long value) : field_(&field), coeffs_(field.degree())
{
    coeffs_[0] = Rational(static_cast<long>(value));
}

Scalar::Scalar(const CyclotomicField& field, Rational value) : field_(&field), coeffs_(field.degree())
{
    value.canonicalize();
    coeffs_[0] = std::move(value);
}

Scalar Scalar::from_coefficients(const CyclotomicField& field, std::vector<Rational> coefficients)
{
    if (coefficients.size() != field.degree()) {
        throw InputError("Q(zeta_" + std::to_string(field.order()) + ") scalars need " +
                         std::to_string(field.degree()) + " coefficients, got " +
                         std::to_string(coefficients.size()));
    }
    Scalar s(field, 0);
    for (auto& c : coefficients) {
        c.canonicalize();
    }
    s.coeffs_ = std::move(coefficients);
    return s;
}

Scalar Scalar::zeta(const CyclotomicField& field, long long k)
{
    const long long n = field.order();
    long long e = k % n;
    if (e < 0) {
        e += n;
    }
    Scalar x(field, 0);
    if (field.degree() >= 2) {
        x.coeffs_[1] = 1;
    } else {
        x.coeffs_[0] = Rational(static_cast<long>(-field.minimal_polynomial()[0]));
    }
    return x.pow(e);
}

bool Scalar::is_zero() const noexcept
{
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool Scalar::is_one() const noexcept
{
    if (coeffs_[0] != 1) {
        return false;
    }
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

bool Scalar::is_rational() const noexcept
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

void Scalar::require_same_field(const Scalar& other) const
{
    if (field_ != other.field_) {
        throw InputError("scalar field mismatch: Q(zeta_" + std::to_string(field_->order()) + ") vs Q(zeta_" +
                         std::to_string(other.field_->order()) + ")");
    }
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    require_same_field(rhs);
    const std::size_t d = coeffs_.size();
    if (d == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] != 0) {
                prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    for (std::size_t k = d; k < prod.size(); ++k) {
        if (prod[k] == 0) {
            continue;
        }
        const auto& red = field_->power_reduction(k);
        for (std::size_t i = 0; i < d; ++i) {
            if (red[i] != 0) {
                prod[i] += prod[k] * Rational(static_cast<long>(red[i]));
            }
        }
    }
    prod.resize(d);
    coeffs_ = std::move(prod);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw ArithmeticError("division by zero");
    }
    const std::size_t d = coeffs_.size();
    if (d == 1) {
        Scalar r(*this);
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    // Solve (this * v) = 1. Column j of the system is this * zeta^j.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    Scalar col(*this);
    const Scalar x = zeta(*field_, 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            m[i][j] = col.coeffs_[i];
        }
        col *= x;
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && m[p][c] == 0) {
            ++p;
        }
        if (p == d) {
            throw std::logic_error("singular multiplication matrix in a field");
        }
        std::swap(m[p], m[c]);
        const Rational inv = 1 / m[c][c];
        for (std::size_t k = c; k <= d; ++k) {
            m[c][k] *= inv;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r != c && m[r][c] != 0) {
                const Rational f = m[r][c];
                for (std::size_t k = c; k <= d; ++k) {
                    m[r][k] -= f * m[c][k];
                }
            }
        }
    }
    Scalar r(*field_, 0);
    for (std::size_t i = 0; i < d; ++i) {
        r.coeffs_[i] = m[i][d];
    }
    return r;
}

Scalar Scalar::pow(long long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Scalar result(*field_, 1);
    Scalar base(*this);
    auto e = static_cast<unsigned long long>(exponent);
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::vector<std::string> Scalar::coefficient_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(rational_to_string(c));
    }
    return out;
}

std::string Scalar::to_string() const
{
    if (coeffs_.size() == 1) {
        return rational_to_string(coeffs_[0]);
    }
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i != 0) {
            s += ", ";
        }
        s += rational_to_string(coeffs_[i]);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    auto all_digits = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    Rational q;
    q.get_num().set_str(std::string(num), 10);
    if (slash != std::string_view::npos) {
        q.get_den().set_str(std::string(den), 10);
        if (q.get_den() == 0) {
            throw InputError("zero denominator in \"" + std::string(text) + "\"");
        }
    } else {
        q.get_den() = 1;
    }
    q.canonicalize();
    if (negative) {
        q = -q;
    }
    return q;
}

std::string rational_to_string(const Rational& q)
{
    return q.get_str(10);
}

Scalar parse_scalar(const CyclotomicField& field, std::string_view text)
{
    return Scalar(field, parse_rational(text));
}

Scalar parse_scalar(const CyclotomicField& field, std::span<const std::string> coefficients)
{
    std::vector<Rational> qs;
    qs.reserve(coefficients.size());
    for (const auto& c : coefficients) {
        qs.push_back(parse_rational(c));
    }
    return Scalar::from_coefficients(field, std::move(qs));
}

} // namespace colorhom
