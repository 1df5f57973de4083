#include "tilt/ff/field.hpp"

namespace tilt::ff {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
        throw FieldError("characteristic must be an odd prime below 2^31, got " + std::to_string(p));
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1 % p_;
    Elem b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Elem PrimeField::inv(Elem a) const {
    if (a % p_ == 0) throw FieldError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

}  // namespace tilt::ff
