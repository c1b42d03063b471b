#include "schur/field.hpp"

#include <stdexcept>

namespace schur {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// residue of v mod p in [0, p)
long reduce_mod(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

// inverse of a mod p by extended Euclid; a in [1, p)
long inverse_mod(long a, long p) {
    long old_r = a, r = p;
    long old_t = 1, t = 0;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    return reduce_mod(old_t, p);
}

}  // namespace

Field Field::prime(long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    }
    if (p > (1L << 31)) {
        throw std::invalid_argument("Field::prime: characteristic too large");
    }
    return Field(p);
}

std::string Field::name() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(long v, Field f) {
    Scalar x(f);
    if (f.is_rational()) {
        x.q_ = v;
    } else {
        x.r_ = reduce_mod(v, f.characteristic());
    }
    return x;
}

Scalar Scalar::from_rational(const mpq_class& q) {
    Scalar x(Field::rationals());
    x.q_ = q;
    x.q_.canonicalize();
    return x;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_) {
        throw std::invalid_argument("Scalar: mixed fields " + field_.name() + " and " +
                                    o.field_.name());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar x(field_);
    if (field_.is_rational()) {
        x.q_ = q_ + o.q_;
    } else {
        x.r_ = reduce_mod(r_ + o.r_, field_.characteristic());
    }
    return x;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    Scalar x(field_);
    if (field_.is_rational()) {
        x.q_ = q_ - o.q_;
    } else {
        x.r_ = reduce_mod(r_ - o.r_, field_.characteristic());
    }
    return x;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar x(field_);
    if (field_.is_rational()) {
        x.q_ = q_ * o.q_;
    } else {
        x.r_ = reduce_mod(r_ * o.r_, field_.characteristic());
    }
    return x;
}

Scalar Scalar::operator-() const {
    Scalar x(field_);
    if (field_.is_rational()) {
        x.q_ = -q_;
    } else {
        x.r_ = reduce_mod(-r_, field_.characteristic());
    }
    return x;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Scalar::inverse: zero has no inverse");
    }
    Scalar x(field_);
    if (field_.is_rational()) {
        x.q_ = 1 / q_;
    } else {
        x.r_ = inverse_mod(r_, field_.characteristic());
    }
    return x;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace schur
