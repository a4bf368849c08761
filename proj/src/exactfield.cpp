#include "evo/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace evo {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
    mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

// Tonelli-Shanks; assumes a is a nonzero quadratic residue.
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1;
    std::uint64_t s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

std::optional<mpq_class> rational_root(const mpq_class& a, int k) {
    if (a < 0 && k % 2 == 0) return std::nullopt;
    mpz_class num = abs(a.get_num());
    mpz_class den = a.get_den();
    mpz_class rn;
    mpz_class rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    if (a < 0) r = -r;
    return r;
}

// Solves (x + yi)^2 = a + bi over Q.
std::optional<std::pair<mpq_class, mpq_class>> gaussian_sqrt(const mpq_class& a, const mpq_class& b) {
    if (b == 0) {
        if (a >= 0) {
            auto r = rational_root(a, 2);
            if (!r) return std::nullopt;
            return std::make_pair(*r, mpq_class(0));
        }
        auto r = rational_root(-a, 2);
        if (!r) return std::nullopt;
        return std::make_pair(mpq_class(0), *r);
    }
    auto norm_root = rational_root(a * a + b * b, 2);
    if (!norm_root) return std::nullopt;
    mpq_class x2 = (a + *norm_root) / 2;
    auto x = rational_root(x2, 2);
    if (!x || *x == 0) return std::nullopt;
    mpq_class y = b / (2 * *x);
    if (*x * *x - y * y != a) return std::nullopt;
    return std::make_pair(*x, y);
}

// Gaussian integers as (re, im) pairs.
using GaussInt = std::pair<mpz_class, mpz_class>;

GaussInt gauss_mul(const GaussInt& a, const GaussInt& b) {
    return {a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
}

GaussInt gauss_pow(GaussInt base, int k) {
    GaussInt out{1, 0};
    for (int t = 0; t < k; ++t) out = gauss_mul(out, base);
    return out;
}

// The root of (re + im i)^k = a for odd k inside Q(i), unique because 1 is the
// only odd-order root of unity there. With d the common denominator, the root
// is M/d for a Gaussian integer M with M^k = a d^k; M is located by Newton's
// method on each complex root and accepted only after an exact check.
std::optional<std::pair<mpq_class, mpq_class>> gaussian_odd_root(const mpq_class& re, const mpq_class& im, int k) {
    mpz_class d = lcm(mpz_class(re.get_den()), mpz_class(im.get_den()));
    mpz_class dk = 1;
    for (int t = 0; t < k; ++t) dk *= d;
    mpq_class gr = re * dk, gi = im * dk;
    GaussInt g{gr.get_num(), gi.get_num()};
    std::size_t bits = std::max(mpz_sizeinbase(g.first.get_mpz_t(), 2), mpz_sizeinbase(g.second.get_mpz_t(), 2));
    mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(bits / static_cast<std::size_t>(k) + 128);

    long shift = static_cast<long>(bits) - 60;
    mpf_class scaled_re(g.first, prec), scaled_im(g.second, prec);
    if (shift > 0) {
        mpf_div_2exp(scaled_re.get_mpf_t(), scaled_re.get_mpf_t(), static_cast<mp_bitcnt_t>(shift));
        mpf_div_2exp(scaled_im.get_mpf_t(), scaled_im.get_mpf_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        shift = 0;
    }
    long double x = scaled_re.get_d(), y = scaled_im.get_d();
    long double log2_mag = (std::log2(std::hypot(x, y)) + static_cast<long double>(shift)) / k;
    long double theta = std::atan2(y, x);
    long double whole = std::floor(log2_mag);
    const long double pi = std::acos(-1.0L);

    for (int j = 0; j < k; ++j) {
        long double angle = (theta + 2 * pi * j) / k;
        long double m = std::exp2(log2_mag - whole);
        mpf_class zr(static_cast<double>(m * std::cos(angle)), prec), zi(static_cast<double>(m * std::sin(angle)), prec);
        if (whole >= 0) {
            mpf_mul_2exp(zr.get_mpf_t(), zr.get_mpf_t(), static_cast<mp_bitcnt_t>(whole));
            mpf_mul_2exp(zi.get_mpf_t(), zi.get_mpf_t(), static_cast<mp_bitcnt_t>(whole));
        }
        mpf_class ar(g.first, prec), ai(g.second, prec);
        for (int it = 0; it < 200; ++it) {
            // z <- z - (z^k - a) / (k z^(k-1))
            mpf_class pr(1, prec), pi_(0, prec);
            for (int t = 0; t < k - 1; ++t) {
                mpf_class nr = pr * zr - pi_ * zi;
                mpf_class ni = pr * zi + pi_ * zr;
                pr = nr;
                pi_ = ni;
            }
            mpf_class fr = pr * zr - pi_ * zi - ar;
            mpf_class fi = pr * zi + pi_ * zr - ai;
            mpf_class dr = pr * k, di = pi_ * k;
            mpf_class den = dr * dr + di * di;
            if (den == 0) break;
            mpf_class qr = (fr * dr + fi * di) / den;
            mpf_class qi = (fi * dr - fr * di) / den;
            zr -= qr;
            zi -= qi;
            if (abs(qr) + abs(qi) < mpf_class(1e-6, prec)) break;
        }
        mpf_class half(0.5, prec);
        mpf_class rr = floor(zr + half), ri = floor(zi + half);
        GaussInt root{mpz_class(rr), mpz_class(ri)};
        if (gauss_pow(root, k) == g) {
            mpq_class out_re(root.first, d), out_im(root.second, d);
            out_re.canonicalize();
            out_im.canonicalize();
            return std::make_pair(out_re, out_im);
        }
    }
    return std::nullopt;
}

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!is_digits(digits)) raise(ErrorCode::SyntaxError, "malformed number '" + std::string(whole) + "'");
    mpz_class value(std::string(digits), 10);
    return negative ? mpz_class(-value) : value;
}

mpq_class parse_rational(std::string_view text, std::string_view whole) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return mpq_class(parse_integer(text, whole));
    mpz_class num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) raise(ErrorCode::SyntaxError, "malformed denominator in '" + std::string(whole) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) raise(ErrorCode::DomainError, "zero denominator in '" + std::string(whole) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string trim(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

// Principal root: leading nonzero component positive.
bool is_principal(const FieldElement& r) {
    switch (r.field().kind()) {
        case FieldKind::Rationals:
            return r.re() >= 0;
        case FieldKind::GaussianRationals:
            return r.re() != 0 ? r.re() > 0 : r.im() >= 0;
        case FieldKind::PrimeField:
            return r.residue() <= (r.field().modulus() - 1) / 2;
    }
    return true;
}

}  // namespace

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::SpecMismatch: return "SpecMismatch";
        case ErrorCode::SqrtUnavailable: return "SqrtUnavailable";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::UnsupportedDim: return "UnsupportedDim";
        case ErrorCode::FieldLacksI: return "FieldLacksI";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::Singular: return "Singular";
    }
    return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

FieldDescriptor FieldDescriptor::rationals() { return {FieldKind::Rationals, 0, false}; }

FieldDescriptor FieldDescriptor::gaussian_rationals() { return {FieldKind::GaussianRationals, 0, true}; }

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
    if (p == 2) raise(ErrorCode::DomainError, "characteristic 2 is not supported");
    if (p >= (1ULL << 32U) || !is_prime(p)) raise(ErrorCode::DomainError, "modulus " + std::to_string(p) + " is not an odd prime below 2^32");
    return {FieldKind::PrimeField, p, p % 4 == 1};
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::GaussianRationals: return "Qi";
        case FieldKind::PrimeField: return "GF " + std::to_string(modulus_);
    }
    return "?";
}

FieldDescriptor parse_field(std::string_view text) {
    std::string t = trim(text);
    if (t == "Q") return FieldDescriptor::rationals();
    if (t == "Qi" || t == "Q(i)") return FieldDescriptor::gaussian_rationals();
    if (t.rfind("GF", 0) == 0) {
        std::string rest = t.substr(2);
        if (!rest.empty() && rest.front() == ':') rest.erase(0, 1);
        if (!is_digits(rest) || rest.size() > 12) raise(ErrorCode::SyntaxError, "bad field modulus in '" + std::string(text) + "'");
        return FieldDescriptor::prime_field(std::stoull(rest));
    }
    raise(ErrorCode::SyntaxError, "unknown field '" + std::string(text) + "' (expected Q, Qi or GF <p>)");
}

FieldElement FieldElement::zero(const FieldDescriptor& field) {
    FieldElement e;
    e.field_ = field;
    return e;
}

FieldElement FieldElement::one(const FieldDescriptor& field) { return from_int(field, 1); }

FieldElement FieldElement::from_int(const FieldDescriptor& field, long value) {
    return from_rational(field, mpq_class(value));
}

FieldElement FieldElement::from_rational(const FieldDescriptor& field, const mpq_class& value) {
    FieldElement e = zero(field);
    if (field.is_prime_field()) {
        std::uint64_t p = field.modulus();
        std::uint64_t num = reduce_mpz(value.get_num(), p);
        std::uint64_t den = reduce_mpz(value.get_den(), p);
        if (den == 0) raise(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
        e.residue_ = mul_mod(num, pow_mod(den, p - 2, p), p);
    } else {
        e.re_ = value;
        e.re_.canonicalize();
    }
    return e;
}

FieldElement FieldElement::from_parts(const FieldDescriptor& field, const mpq_class& re, const mpq_class& im) {
    if (im == 0) return from_rational(field, re);
    if (!field.has_i()) raise(ErrorCode::DomainError, "field " + field.name() + " has no square root of -1");
    if (field.is_prime_field()) return from_rational(field, re) + from_rational(field, im) * imaginary_unit(field);
    FieldElement e = zero(field);
    e.re_ = re;
    e.im_ = im;
    e.re_.canonicalize();
    e.im_.canonicalize();
    return e;
}

FieldElement FieldElement::imaginary_unit(const FieldDescriptor& field) {
    if (!field.has_i()) raise(ErrorCode::FieldLacksI, "field " + field.name() + " has no square root of -1");
    if (field.kind() == FieldKind::GaussianRationals) {
        FieldElement e = zero(field);
        e.im_ = 1;
        return e;
    }
    return *sqrt_if_square(from_int(field, -1));
}

bool FieldElement::is_zero() const {
    if (field_.is_prime_field()) return residue_ == 0;
    return re_ == 0 && im_ == 0;
}

bool FieldElement::is_one() const {
    if (field_.is_prime_field()) return residue_ == 1;
    return re_ == 1 && im_ == 0;
}

mpq_class FieldElement::re() const {
    if (field_.is_prime_field()) return mpq_class(static_cast<unsigned long>(residue_));
    return re_;
}

mpq_class FieldElement::im() const { return im_; }

void FieldElement::require_same_field(const FieldElement& other) const {
    if (!(field_ == other.field_)) {
        raise(ErrorCode::MixedFields, "operands over " + field_.name() + " and " + other.field_.name());
    }
}

FieldElement FieldElement::operator-() const {
    FieldElement e = *this;
    if (field_.is_prime_field()) {
        e.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
    } else {
        e.re_ = -re_;
        e.im_ = -im_;
    }
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
    FieldElement e = *this;
    if (field_.is_prime_field()) {
        e.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
    } else {
        mpq_class norm = re_ * re_ + im_ * im_;
        e.re_ = re_ / norm;
        e.im_ = -im_ / norm;
    }
    return e;
}

FieldElement FieldElement::pow(long exponent) const {
    FieldElement base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    FieldElement result = one(field_);
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        residue_ = (residue_ + rhs.residue_) % field_.modulus();
    } else {
        re_ += rhs.re_;
        im_ += rhs.im_;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        residue_ = mul_mod(residue_, rhs.residue_, field_.modulus());
    } else if (field_.kind() == FieldKind::Rationals) {
        re_ *= rhs.re_;
    } else {
        mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
        mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
        re_ = re;
        im_ = im;
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.field_.is_prime_field()) return a.residue_ == b.residue_;
    return a.re_ == b.re_ && a.im_ == b.im_;
}

std::string FieldElement::to_string() const {
    if (field_.is_prime_field()) return std::to_string(residue_);
    if (im_ == 0) return re_.get_str();
    std::string out;
    if (re_ != 0) out = re_.get_str();
    if (im_ == 1) {
        out += re_ != 0 ? "+i" : "i";
    } else if (im_ == -1) {
        out += "-i";
    } else {
        if (im_ > 0 && re_ != 0) out += "+";
        out += im_.get_str() + "*i";
    }
    return out;
}

FieldElement parse_element(std::string_view text, const FieldDescriptor& field) {
    std::string t = trim(text);
    if (t.empty()) raise(ErrorCode::SyntaxError, "empty literal");
    bool imaginary = t.find('i') != std::string::npos;
    if (field.is_prime_field()) {
        if (imaginary) {
            raise(ErrorCode::SyntaxError, "'" + t + "': prime-field entries are residue literals; write the residue whose square is -1 instead of i");
        }
        return FieldElement::from_rational(field, mpq_class(parse_integer(t, t)));
    }
    if (!imaginary) return FieldElement::from_rational(field, parse_rational(t, t));
    if (t.back() != 'i' || t.find('i') != t.size() - 1) raise(ErrorCode::SyntaxError, "malformed literal '" + t + "'");
    if (!field.has_i()) raise(ErrorCode::DomainError, "'" + t + "' uses i but field " + field.name() + " has no square root of -1");
    std::string body = t.substr(0, t.size() - 1);
    if (!body.empty() && body.back() == '*') {
        body.pop_back();
        if (body.empty() || body.back() == '+' || body.back() == '-') raise(ErrorCode::SyntaxError, "malformed literal '" + t + "'");
    }
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string real_text = split == std::string::npos ? std::string() : body.substr(0, split);
    std::string coef_text = split == std::string::npos ? body : body.substr(split);
    mpq_class re = real_text.empty() ? mpq_class(0) : parse_rational(real_text, t);
    mpq_class im;
    if (coef_text.empty() || coef_text == "+") {
        im = 1;
    } else if (coef_text == "-") {
        im = -1;
    } else {
        im = parse_rational(coef_text, t);
    }
    return FieldElement::from_parts(field, re, im);
}

FieldElement arith(const FieldElement& a, ArithOp op, const FieldElement& b) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    return a;
}

Ordering total_order(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) raise(ErrorCode::MixedFields, "cannot order elements of different fields");
    auto cmp = [](const auto& x, const auto& y) {
        if (x < y) return Ordering::Less;
        if (y < x) return Ordering::Greater;
        return Ordering::Equal;
    };
    if (a.field().is_prime_field()) return cmp(a.residue(), b.residue());
    Ordering first = cmp(a.re(), b.re());
    if (first != Ordering::Equal) return first;
    return cmp(a.im(), b.im());
}

std::optional<FieldElement> sqrt_if_square(const FieldElement& a) {
    const FieldDescriptor& field = a.field();
    if (a.is_zero()) return a;
    std::optional<FieldElement> root;
    switch (field.kind()) {
        case FieldKind::Rationals: {
            auto r = rational_root(a.re(), 2);
            if (r) root = FieldElement::from_rational(field, *r);
            break;
        }
        case FieldKind::GaussianRationals: {
            auto r = gaussian_sqrt(a.re(), a.im());
            if (r) root = FieldElement::from_parts(field, r->first, r->second);
            break;
        }
        case FieldKind::PrimeField: {
            std::uint64_t p = field.modulus();
            if (pow_mod(a.residue(), (p - 1) / 2, p) != 1) return std::nullopt;
            root = FieldElement::from_int(field, static_cast<long>(tonelli_shanks(a.residue(), p)));
            break;
        }
    }
    if (!root) return std::nullopt;
    if (!is_principal(*root)) root = -*root;
    return root;
}

std::vector<FieldElement> all_roots(const FieldElement& a, int k) {
    if (k < 1) raise(ErrorCode::DomainError, "root index must be positive");
    const FieldDescriptor& field = a.field();
    std::vector<FieldElement> roots;
    if (k == 1 || a.is_zero()) {
        roots.push_back(a);
        return roots;
    }
    if (field.is_prime_field()) {
        std::uint64_t p = field.modulus();
        if (p < (1ULL << 20U)) {
            for (std::uint64_t r = 1; r < p; ++r) {
                if (pow_mod(r, static_cast<std::uint64_t>(k), p) == a.residue()) roots.push_back(FieldElement::from_int(field, static_cast<long>(r)));
            }
            return roots;
        }
        if (std::gcd(static_cast<std::uint64_t>(k), p - 1) == 1) {
            mpz_class inv;
            mpz_class kk(k);
            mpz_class order(static_cast<unsigned long>(p - 1));
            mpz_invert(inv.get_mpz_t(), kk.get_mpz_t(), order.get_mpz_t());
            roots.push_back(FieldElement::from_int(field, static_cast<long>(pow_mod(a.residue(), inv.get_ui(), p))));
            return roots;
        }
    }
    if (k % 2 == 0) {
        auto s = sqrt_if_square(a);
        if (!s) return roots;
        for (const FieldElement& base : {*s, -*s}) {
            for (const FieldElement& r : all_roots(base, k / 2)) roots.push_back(r);
        }
    } else if (!field.is_prime_field()) {
        if (!field.has_i()) {
            if (auto r = rational_root(a.re(), k)) roots.push_back(FieldElement::from_rational(field, *r));
        } else if (auto r = gaussian_odd_root(a.re(), a.im(), k)) {
            roots.push_back(FieldElement::from_parts(field, r->first, r->second));
        }
    }
    std::sort(roots.begin(), roots.end(), TotalOrderLess{});
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<FieldElement> root_if_exists(const FieldElement& a, int k) {
    if (k == 2) return sqrt_if_square(a);
    auto roots = all_roots(a, k);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

FieldElement require_sqrt(const FieldElement& a) {
    auto r = sqrt_if_square(a);
    if (!r) raise(ErrorCode::SqrtUnavailable, a.to_string() + " has no square root in " + a.field().name());
    return *r;
}

FieldElement require_root(const FieldElement& a, int k) {
    auto r = root_if_exists(a, k);
    if (!r) raise(ErrorCode::SqrtUnavailable, a.to_string() + " has no root of order " + std::to_string(k) + " in " + a.field().name());
    return *r;
}

}  // namespace evo
