#pragma once

#include <string>
#include <vector>

#include "schur/perm.hpp"

namespace schur {

// Composition of r with n parts: a dense tuple of non-negative integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<unsigned> parts);

    unsigned length() const { return static_cast<unsigned>(parts_.size()); }  // n
    unsigned total() const { return total_; }                                 // r
    unsigned operator[](std::size_t i) const { return parts_[i]; }            // 0-based
    const std::vector<unsigned>& parts() const { return parts_; }

    Composition operator+(const Composition& o) const;  // componentwise

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "(1,0,1,0)"

private:
    std::vector<unsigned> parts_;
    unsigned total_ = 0;
};

// All compositions of r with n parts, lexicographically descending:
// (r,0,...,0) first, (0,...,0,r) last.
std::vector<Composition> enumerate_compositions(unsigned n, unsigned r);

// (1,...,1,0,...,0) with r ones and n-r zeros.
Composition omega(unsigned n, unsigned r);

// Place permutation: tau . (a_1,...,a_n) = (a_{tau^-1(1)},...,a_{tau^-1(n)}).
// A left action.
Composition act(const Perm& tau, const Composition& alpha);

// 0/1 indicator composition of a subset A of {1..n}.
Composition indicator_weight(const std::vector<unsigned>& A, unsigned n);

// Tuple of weights attached to an ordered block tuple; when the blocks
// partition {1..rs} the tuple sums to omega(n, rs).
using WeightTuple = std::vector<Composition>;

WeightTuple indicator_weights(const std::vector<std::vector<unsigned>>& blocks, unsigned n);

bool sums_to(const WeightTuple& wt, const Composition& target);

std::string weight_tuple_str(const WeightTuple& wt);

}  // namespace schur
