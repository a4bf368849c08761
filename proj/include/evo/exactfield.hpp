#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "evo/error.hpp"

namespace evo {

enum class FieldKind { Rationals, GaussianRationals, PrimeField };

class FieldDescriptor {
public:
    static FieldDescriptor rationals();
    static FieldDescriptor gaussian_rationals();
    // Rejects 2 and composite moduli with DomainError.
    static FieldDescriptor prime_field(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool has_i() const noexcept { return has_i_; }
    bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }

    // "Q", "Qi" or "GF <p>", the spelling used in algebra files.
    std::string name() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    FieldDescriptor(FieldKind kind, std::uint64_t modulus, bool has_i)
        : kind_(kind), modulus_(modulus), has_i_(has_i) {}

    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t modulus_ = 0;
    bool has_i_ = false;
};

// Parses "Q", "Qi", "GF <p>", "GF<p>" or "GF:<p>".
FieldDescriptor parse_field(std::string_view text);

enum class Ordering { Less, Equal, Greater };

class FieldElement {
public:
    // The rational zero; prefer FieldElement::zero(field).
    FieldElement() = default;

    static FieldElement zero(const FieldDescriptor& field);
    static FieldElement one(const FieldDescriptor& field);
    static FieldElement from_int(const FieldDescriptor& field, long value);
    static FieldElement from_rational(const FieldDescriptor& field, const mpq_class& value);
    static FieldElement from_parts(const FieldDescriptor& field, const mpq_class& re, const mpq_class& im);
    // The square root of -1 chosen by sqrt_if_square; FieldLacksI when absent.
    static FieldElement imaginary_unit(const FieldDescriptor& field);

    const FieldDescriptor& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // Rational and Gaussian parts; for prime fields re() holds the residue.
    mpq_class re() const;
    mpq_class im() const;
    std::uint64_t residue() const noexcept { return residue_; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long exponent) const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    void require_same_field(const FieldElement& other) const;

    FieldDescriptor field_ = FieldDescriptor::rationals();
    mpq_class re_;
    mpq_class im_;
    std::uint64_t residue_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement parse_element(std::string_view text, const FieldDescriptor& field);
FieldElement arith(const FieldElement& a, ArithOp op, const FieldElement& b);

// Rationals by value, Gaussian rationals by (re, im), residues by 0..p-1.
Ordering total_order(const FieldElement& a, const FieldElement& b);

struct TotalOrderLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const {
        return total_order(a, b) == Ordering::Less;
    }
};

// The principal square root: the root whose leading nonzero component is
// positive (for F_p: a residue in 1..(p-1)/2). Empty when a is not a square.
std::optional<FieldElement> sqrt_if_square(const FieldElement& a);

// Some r with r^k = a, or empty. Prime fields use Tonelli-Shanks for k = 2,
// unique roots when gcd(k, p-1) = 1 and exhaustive search for p < 2^20.
// Odd roots in Q(i) are exact: the unique candidate M/d is located numerically
// and then checked.
std::optional<FieldElement> root_if_exists(const FieldElement& a, int k);

// Every r with r^k = a that the strategies above can reach, sorted by total_order.
std::vector<FieldElement> all_roots(const FieldElement& a, int k);

// Throwing variants used by witness construction.
FieldElement require_sqrt(const FieldElement& a);
FieldElement require_root(const FieldElement& a, int k);

}  // namespace evo
