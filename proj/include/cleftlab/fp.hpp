#pragma once

#include <cstdint>
#include <string>

#include "cleftlab/errors.hpp"

namespace cleftlab {

inline bool is_supported_prime(unsigned p) { return p == 2 || p == 3 || p == 5 || p == 7; }

/// Residue modulo a small prime. The modulus travels with the value so that
/// mixed-field arithmetic is caught immediately instead of corrupting data.
class Fp {
  public:
    Fp() : v_(0), p_(2) {}
    Fp(int64_t v, unsigned p) : p_(static_cast<uint8_t>(p)) {
        if (!is_supported_prime(p)) throw invariant_error("unsupported field F_" + std::to_string(p));
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<uint8_t>(r);
    }

    unsigned value() const { return v_; }
    unsigned prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const { return Fp(int64_t(v_) + o.check(p_).v_, p_); }
    Fp operator-(Fp o) const { return Fp(int64_t(v_) - o.check(p_).v_, p_); }
    Fp operator*(Fp o) const { return Fp(int64_t(v_) * o.check(p_).v_, p_); }
    Fp operator-() const { return Fp(-int64_t(v_), p_); }

    Fp inverse() const {
        if (v_ == 0) throw invariant_error("inverse of 0 in F_" + std::to_string(p_));
        for (unsigned x = 1; x < p_; ++x)
            if ((x * v_) % p_ == 1) return Fp(x, p_);
        throw invariant_error("no inverse found; modulus not prime?");
    }
    Fp operator/(Fp o) const { return *this * o.inverse(); }

    bool operator==(const Fp& o) const = default;

  private:
    const Fp& check(uint8_t p) const {
        if (p_ != p) throw invariant_error("mixed fields in scalar arithmetic");
        return *this;
    }
    uint8_t v_;
    uint8_t p_;
};

/// Tables used by the hot loops in matrix.cpp; scalar values stay as raw
/// uint8_t there and come back through Fp only at the API boundary.
inline uint8_t fp_add(uint8_t a, uint8_t b, unsigned p) { return static_cast<uint8_t>((a + b) % p); }
inline uint8_t fp_sub(uint8_t a, uint8_t b, unsigned p) { return static_cast<uint8_t>((a + p - b) % p); }
inline uint8_t fp_mul(uint8_t a, uint8_t b, unsigned p) { return static_cast<uint8_t>((a * b) % p); }
inline uint8_t fp_neg(uint8_t a, unsigned p) { return static_cast<uint8_t>((p - a) % p); }
inline uint8_t fp_inv(uint8_t a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
        if ((x * a) % p == 1) return static_cast<uint8_t>(x);
    throw invariant_error("fp_inv(0)");
}

}  // namespace cleftlab
