#pragma once

#include <gmpxx.h>

#include <string>

namespace schur {

// Coefficient domain: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(long p);  // throws if p is not prime

    long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string name() const;  // "Q" or "F<p>"

private:
    explicit Field(long p) : p_(p) {}
    long p_;
};

// Exact scalar in a fixed field. All arithmetic is exact; mixing fields
// throws. Prime-field values are kept as canonical residues in [0, p).
class Scalar {
public:
    Scalar() : Scalar(Field::rationals()) {}
    explicit Scalar(Field f) : field_(f) {}

    static Scalar from_int(long v, Field f);
    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_int(1, f); }
    static Scalar from_rational(const mpq_class& q);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;  // "-2", "1/3", residues as "0".."p-1"

private:
    void require_same_field(const Scalar& o) const;

    Field field_;
    mpq_class q_;  // characteristic 0 value
    long r_ = 0;   // characteristic p residue
};

}  // namespace schur
