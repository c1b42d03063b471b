#pragma once

#include <string>
#include <vector>

#include "schur/field.hpp"

namespace schur {

// Permutation of {1..n}. Composition is right to left throughout:
// (p * q)(j) = p(q(j)).
class Perm {
public:
    Perm() = default;  // degree 0
    static Perm identity(unsigned n);
    static Perm from_one_line(const std::vector<unsigned>& images);  // images[j-1] = p(j)
    static Perm transposition(unsigned a, unsigned b, unsigned n);

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    unsigned operator()(unsigned j) const;          // 1-based point image
    std::vector<unsigned> one_line() const;         // [p(1), ..., p(n)]

    Perm operator*(const Perm& q) const;            // p after q
    Perm inverse() const;
    bool is_identity() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const;            // lexicographic on one-line form

    std::string str() const;                        // "[2,3,1]"

private:
    std::vector<unsigned> img_;  // 0-based: img_[j] = p(j+1) - 1
};

int sign(const Perm& p);  // +-1, by inversion parity
Scalar sign_scalar(const Perm& p, Field f);

// Descending k-cycle (k, k-1, ..., 1) in Sym(n): sends k to k-1, ...,
// 2 to 1 and 1 back to k, fixing everything above k.
Perm descending_cycle(unsigned k, unsigned n);

// sigma[i]: copy of sigma in Sym(r) acting on block i of {1..rs},
// sending (i-1)r+j to (i-1)r+sigma(j) and fixing everything else.
Perm embed_block(const Perm& sigma, unsigned i, unsigned s);

// tau^[r]: block-permuting copy of tau in Sym(s), sending (i-1)r+j to
// (tau(i)-1)r+j.
Perm embed_outer(const Perm& tau, unsigned r);

// Same permutation viewed in Sym(n), fixing points above its degree.
Perm embed_degree(const Perm& p, unsigned n);

// Adjacent transpositions (1 2), (2 3), ..., (n-1 n).
std::vector<Perm> coxeter_generators(unsigned n);

// All of Sym(n) in lexicographic one-line order; n! capped at 40320.
std::vector<Perm> all_perms(unsigned n);

// An ordered partition of {1..rs} into s blocks of size r, together with
// the canonical representative of its coset of the block subgroup
// Sym(r)[1] x ... x Sym(r)[s]: the permutation listing each block in
// increasing order.
class BlockCosetRep {
public:
    BlockCosetRep(Perm rep, std::vector<std::vector<unsigned>> blocks, unsigned r, unsigned s);

    const Perm& rep() const { return rep_; }
    const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
    unsigned block_size() const { return r_; }   // r
    unsigned block_count() const { return s_; }  // s

    bool operator==(const BlockCosetRep& o) const { return rep_ == o.rep_; }

private:
    Perm rep_;
    std::vector<std::vector<unsigned>> blocks_;
    unsigned r_, s_;
};

// Canonical representative of the coset determined by an ordered block
// tuple; throws if the blocks do not partition {1..rs} into r-sets.
BlockCosetRep canonical_rep(const std::vector<std::vector<unsigned>>& blocks);

// All (rs)!/(r!)^s canonical coset representatives, in lexicographic
// order of their one-line form.
std::vector<BlockCosetRep> enumerate_coset_reps(unsigned r, unsigned s);

// The permutation agreeing with t on the positions of block i, extended
// order-preservingly: j maps to t((i-1)r+j) for j <= r, and {r+1..rs}
// maps increasingly onto the complement of block i. Only the values on
// {1..r} matter downstream; the extension is fixed for reproducibility.
Perm transporter(const BlockCosetRep& t, unsigned i);

// u = rep * block_parts[0][1] * ... * block_parts[s-1][s], the unique
// factorization of u across the block-subgroup cosets.
struct BlockFactorization {
    BlockCosetRep rep;
    std::vector<Perm> block_parts;  // degree r each
};

BlockFactorization factorize(const Perm& u, unsigned r, unsigned s);

}  // namespace schur
