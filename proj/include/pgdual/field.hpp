#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "pgdual/errors.hpp"

namespace pgdual {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// A residue in the prime field GF(q). Values are immutable; operations on
/// elements of different fields are rejected.
class FieldElement {
public:
    FieldElement(std::uint32_t value, std::uint32_t modulus) : value_(value), q_(modulus) {
        if (!is_prime(modulus)) {
            throw usage_error("field modulus " + std::to_string(modulus) + " is not prime");
        }
        if (value >= modulus) {
            throw usage_error("residue " + std::to_string(value) + " out of range for GF(" +
                              std::to_string(modulus) + ")");
        }
    }

    static FieldElement from_int(std::int64_t v, std::uint32_t modulus) {
        if (!is_prime(modulus)) {
            throw usage_error("field modulus " + std::to_string(modulus) + " is not prime");
        }
        std::int64_t m = static_cast<std::int64_t>(modulus);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return FieldElement(static_cast<std::uint32_t>(r), modulus);
    }

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return q_; }

    FieldElement operator+(const FieldElement& b) const {
        check_same_field(b);
        return FieldElement((value_ + b.value_) % q_, q_);
    }

    FieldElement operator*(const FieldElement& b) const {
        check_same_field(b);
        std::uint64_t p = static_cast<std::uint64_t>(value_) * b.value_;
        return FieldElement(static_cast<std::uint32_t>(p % q_), q_);
    }

    FieldElement operator-() const { return FieldElement(value_ == 0 ? 0 : q_ - value_, q_); }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    FieldElement inverse() const {
        if (value_ == 0) throw domain_error("zero has no multiplicative inverse");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = q_, new_r = value_;
        while (new_r != 0) {
            std::int64_t quot = r / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            r = std::exchange(new_r, r - quot * new_r);
        }
        if (t < 0) t += q_;
        return FieldElement(static_cast<std::uint32_t>(t), q_);
    }

    bool operator==(const FieldElement& b) const { return value_ == b.value_ && q_ == b.q_; }
    bool operator!=(const FieldElement& b) const { return !(*this == b); }

private:
    void check_same_field(const FieldElement& b) const {
        if (q_ != b.q_) {
            throw usage_error("mixed moduli: GF(" + std::to_string(q_) + ") vs GF(" +
                              std::to_string(b.q_) + ")");
        }
    }

    std::uint32_t value_;
    std::uint32_t q_;
};

enum class FieldOp { add, mul, neg, inv };

/// Single entry point used by the CLI-facing layers; the operators above are
/// the ergonomic form.
inline FieldElement ff_arith(FieldOp op, const FieldElement& a,
                             const std::optional<FieldElement>& b = std::nullopt) {
    switch (op) {
        case FieldOp::add:
            if (!b) throw usage_error("add requires two operands");
            return a + *b;
        case FieldOp::mul:
            if (!b) throw usage_error("mul requires two operands");
            return a * *b;
        case FieldOp::neg:
            if (b) throw usage_error("neg takes one operand");
            return -a;
        case FieldOp::inv:
            if (b) throw usage_error("inv takes one operand");
            return a.inverse();
    }
    throw usage_error("unknown field operation");
}

}  // namespace pgdual
