#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace colorhom {

using Rational = mpq_class;

/// The cyclotomic field Q(zeta_N). Order 1 is the rationals.
///
/// Instances are interned: `get(N)` always returns the same object, so two
/// scalars belong to the same field exactly when their descriptors compare
/// equal by address. Descriptors are never destroyed and are safe to read
/// from any thread.
class CyclotomicField {
public:
    static constexpr unsigned kMaxOrder = 4096;

    /// Throws InputError for N = 0 or N > kMaxOrder.
    static const CyclotomicField& get(unsigned order);
    static const CyclotomicField& rationals() { return get(1); }

    unsigned order() const noexcept { return order_; }
    /// Euler phi of the order; the number of coefficients of every scalar.
    std::size_t degree() const noexcept { return phi_.size() - 1; }
    /// Coefficients of Phi_N, lowest power first. Monic, length degree() + 1.
    const std::vector<long long>& minimal_polynomial() const noexcept { return phi_; }

    /// zeta^k reduced modulo Phi_N, for degree() <= k <= 2 * degree() - 2.
    const std::vector<long long>& power_reduction(std::size_t k) const;

    CyclotomicField(const CyclotomicField&) = delete;
    CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
    explicit CyclotomicField(unsigned order);

    unsigned order_;
    std::vector<long long> phi_;
    std::vector<std::vector<long long>> reductions_;
};

/// Phi_N computed by exact division of x^N - 1 by Phi_d over the proper
/// divisors d of N. Lowest power first.
std::vector<long long> cyclotomic_polynomial(unsigned order);

/// An exact element of Q(zeta_N), stored as the coefficients of
/// 1, zeta, ..., zeta^(phi(N)-1). Every rational is kept canonical.
class Scalar {
public:
    /// The rational zero.
    Scalar();
    Scalar(const CyclotomicField& field, long long value);
    Scalar(const CyclotomicField& field, Rational value);

    /// zeta_N^k; negative k allowed.
    static Scalar zeta(const CyclotomicField& field, long long k = 1);
    /// Throws InputError unless `coefficients.size() == field.degree()`.
    static Scalar from_coefficients(const CyclotomicField& field, std::vector<Rational> coefficients);

    const CyclotomicField& field() const noexcept { return *field_; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Throws ArithmeticError on zero.
    Scalar inverse() const;
    /// Exponent 0 gives 1; negative exponents go through inverse().
    Scalar pow(long long exponent) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "p/q" or "p" per coefficient.
    std::vector<std::string> coefficient_strings() const;
    /// "p/q" for rationals, "[c0, c1, ...]" otherwise.
    std::string to_string() const;

private:
    void require_same_field(const Scalar& other) const;

    const CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

/// Parses "p", "-p", "p/q". Throws InputError on anything else, including a
/// zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

/// Parses one scalar string as a rational element of `field`.
Scalar parse_scalar(const CyclotomicField& field, std::string_view text);
/// Parses a coefficient list; its length must equal field.degree().
Scalar parse_scalar(const CyclotomicField& field, std::span<const std::string> coefficients);

} // namespace colorhom
