#pragma once

#include "legseq/ff.hpp"

#include <span>
#include <string>
#include <vector>

namespace legseq::ff {

/// A polynomial over F_p stored as ascending coefficients with no trailing
/// zeros. The zero polynomial has an empty coefficient list and degree -1.
class Poly {
public:
    explicit Poly(PrimeModulus modulus) : modulus_(modulus) {}
    Poly(PrimeModulus modulus, std::vector<residue> coeffs);

    /// Reduces arbitrary signed integers mod p.
    static Poly from_integers(PrimeModulus modulus, std::span<const std::int64_t> coeffs);
    static Poly constant(PrimeModulus modulus, residue c);
    /// The monomial c*x^e.
    static Poly monomial(PrimeModulus modulus, residue c, std::size_t e);

    [[nodiscard]] const PrimeModulus& modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::uint64_t p() const noexcept { return modulus_.value(); }
    [[nodiscard]] const std::vector<residue>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    [[nodiscard]] residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    [[nodiscard]] residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Horner evaluation at x (reduced mod p).
    [[nodiscard]] residue eval(residue x) const noexcept;

    /// Human readable form, descending powers, e.g. "x^2 + 3*x + 1".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize();

    PrimeModulus modulus_;
    std::vector<residue> coeffs_;
};

[[nodiscard]] Poly add(const Poly& a, const Poly& b);
[[nodiscard]] Poly sub(const Poly& a, const Poly& b);
[[nodiscard]] Poly mul(const Poly& a, const Poly& b);
[[nodiscard]] Poly scale(const Poly& a, residue c);

struct DivMod {
    Poly quotient;
    Poly remainder;
};
/// Euclidean division; throws on a zero divisor.
[[nodiscard]] DivMod divmod(const Poly& a, const Poly& b);
[[nodiscard]] Poly mod(const Poly& a, const Poly& b);
[[nodiscard]] Poly monic(const Poly& a);
/// Monic gcd. gcd(a, 0) = monic(a); gcd(0, 0) = 0.
[[nodiscard]] Poly gcd(const Poly& a, const Poly& b);

/// f(x + t), by repeated synthetic division (O(deg^2)).
[[nodiscard]] Poly shift(const Poly& f, residue t);
[[nodiscard]] Poly derivative(const Poly& f);

/// True iff gcd(f, f') is constant. Requires 1 <= deg f < p.
[[nodiscard]] bool is_squarefree(const Poly& f);

} // namespace legseq::ff
