#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modlie {

using Scalar = std::uint32_t;

/// Prime field GF(p) for 2 <= p <= 251. Elements are canonical residues
/// 0..p-1 stored as Scalar; all operations reduce eagerly.
class PrimeField {
public:
    explicit PrimeField(Scalar p) : p_(p) {
        if (!is_prime(p) || p > 251)
            throw std::invalid_argument("PrimeField: modulus must be prime and <= 251, got " +
                                        std::to_string(p));
    }

    Scalar modulus() const { return p_; }

    Scalar reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Scalar>(r);
    }

    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }

    /// a^e by square-and-multiply; 0^0 = 1.
    Scalar pow(Scalar a, std::uint32_t e) const {
        Scalar r = 1, base = a % p_;
        while (e) {
            if (e & 1u) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse via a^(p-2).
    Scalar inv(Scalar a) const {
        if (a == 0) throw std::invalid_argument("PrimeField::inv: zero is not invertible");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(Scalar n) {
        if (n < 2) return false;
        for (Scalar d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    Scalar p_;
};

} // namespace modlie
