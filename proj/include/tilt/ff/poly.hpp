#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tilt/ff/matrix.hpp"

namespace tilt::ff {

// Dense univariate polynomial over F_p, coefficients low degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(std::vector<Elem> coeffs, std::uint32_t p);
    static Poly monomial(std::size_t deg, Elem c, std::uint32_t p);
    static Poly constant(Elem c, std::uint32_t p) { return monomial(0, c, p); }

    std::uint32_t p() const { return p_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem s) const;
    Poly monic() const;
    Poly derivative() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Elem> c_;
    std::uint32_t p_ = 0;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& m);
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

// Characteristic polynomial det(xI - m) via reduction to Hessenberg form.
Poly charpoly(const Matrix& m);

// q(m) for a square matrix m.
Matrix evaluate(const Poly& q, const Matrix& m);

// Product of the distinct monic irreducible factors. Empty optional when f' = 0
// (f is a p-th power, only possible when deg f >= p).
std::optional<Poly> squarefree_part(const Poly& f);

// For squarefree s: a monic proper factor, or nullopt when s is irreducible.
std::optional<Poly> proper_factor(const Poly& s, std::mt19937_64& rng);

}  // namespace tilt::ff
