#pragma once

#include "legseq/poly.hpp"
#include "legseq/sequence.hpp"

#include <set>

namespace legseq {

/// Three polynomials over a shared field, each of degree at least 1.
struct PolyTriple {
    ff::Poly f, g, h;

    PolyTriple(ff::Poly f_, ff::Poly g_, ff::Poly h_);

    [[nodiscard]] const ff::PrimeModulus& modulus() const noexcept { return f.modulus(); }
    /// Largest of the three degrees.
    [[nodiscard]] int k() const noexcept;
};

/// A non-empty set of quadratic non-residues modulo p (checked on construction).
class QnrSet {
public:
    QnrSet(ff::PrimeModulus p, std::set<ff::residue> elements);

    [[nodiscard]] const std::set<ff::residue>& elements() const noexcept { return elements_; }
    [[nodiscard]] const ff::PrimeModulus& modulus() const noexcept { return p_; }

private:
    ff::PrimeModulus p_;
    std::set<ff::residue> elements_;
};

/// e_n = (f(n)/p), or +1 where p | f(n); n = 1..p.
[[nodiscard]] BinarySequence construct_single(const ff::Poly& f);

/// Three-polynomial filter, n = 1..p:
///   p | f(n)g(n)          -> +1   (checked first)
///   (h(n)/p) in {0, +1}   -> (f(n)/p)
///   (h(n)/p) = -1         -> (g(n)/p)
[[nodiscard]] BinarySequence construct_triple(const PolyTriple& t);

/// (1/2)(1 + (h/p))(f/p) + (1/2)(1 - (h/p))(g/p) at n. Defined only when
/// p does not divide f(n)g(n)h(n); throws otherwise.
[[nodiscard]] int closed_form_element(const PolyTriple& t, std::uint64_t n);

/// e_n = f_n where h_n = +1, g_n where h_n = -1.
[[nodiscard]] BinarySequence construct_combined(const BinarySequence& f, const BinarySequence& g,
                                                const BinarySequence& h);

/// f = prod_{n in A}(x^2 - n), likewise g from B and h from C.
[[nodiscard]] PolyTriple build_theorem2_polys(const QnrSet& a, const QnrSet& b, const QnrSet& c);

/// First (p+1)/2 elements of a length-p sequence.
[[nodiscard]] BinarySequence truncate_half(const BinarySequence& seq);

} // namespace legseq
