#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tilt::ff {

using Elem = std::uint32_t;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

// Arithmetic in F_p for an odd prime p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);
    // Skips the primality check; for p already validated elsewhere.
    static PrimeField unchecked(std::uint32_t p) { return PrimeField(p, 0); }

    std::uint32_t p() const { return p_; }

    Elem reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    PrimeField(std::uint32_t p, int) : p_(p) {}
    std::uint32_t p_;
};

}  // namespace tilt::ff
