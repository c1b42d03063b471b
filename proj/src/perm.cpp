#include "schur/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schur {

Perm Perm::identity(unsigned n) {
    Perm p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0u);
    return p;
}

Perm Perm::from_one_line(const std::vector<unsigned>& images) {
    const unsigned n = static_cast<unsigned>(images.size());
    std::vector<bool> seen(n, false);
    Perm p;
    p.img_.reserve(n);
    for (unsigned v : images) {
        if (v < 1 || v > n || seen[v - 1]) {
            throw std::invalid_argument("Perm::from_one_line: not a bijection of {1..n}");
        }
        seen[v - 1] = true;
        p.img_.push_back(v - 1);
    }
    return p;
}

Perm Perm::transposition(unsigned a, unsigned b, unsigned n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) {
        throw std::invalid_argument("Perm::transposition: bad points");
    }
    Perm p = identity(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

unsigned Perm::operator()(unsigned j) const {
    if (j < 1 || j > degree()) throw std::out_of_range("Perm: point out of range");
    return img_[j - 1] + 1;
}

std::vector<unsigned> Perm::one_line() const {
    std::vector<unsigned> v(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) v[j] = img_[j] + 1;
    return v;
}

Perm Perm::operator*(const Perm& q) const {
    if (degree() != q.degree()) {
        throw std::invalid_argument("Perm::operator*: degree mismatch");
    }
    Perm p;
    p.img_.resize(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) p.img_[j] = img_[q.img_[j]];
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img_.resize(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) p.img_[img_[j]] = static_cast<unsigned>(j);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t j = 0; j < img_.size(); ++j) {
        if (img_[j] != j) return false;
    }
    return true;
}

bool Perm::operator<(const Perm& o) const {
    return img_ < o.img_;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t j = 0; j < img_.size(); ++j) os << (j ? "," : "") << img_[j] + 1;
    os << "]";
    return os.str();
}

int sign(const Perm& p) {
    const auto v = p.one_line();
    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] > v[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Scalar sign_scalar(const Perm& p, Field f) {
    return Scalar::from_int(sign(p), f);
}

Perm descending_cycle(unsigned k, unsigned n) {
    if (k > n) throw std::invalid_argument("descending_cycle: k exceeds degree");
    std::vector<unsigned> images(n);
    for (unsigned j = 1; j <= n; ++j) images[j - 1] = j;
    if (k >= 2) {
        images[0] = k;
        for (unsigned j = 2; j <= k; ++j) images[j - 1] = j - 1;
    }
    return Perm::from_one_line(images);
}

Perm embed_block(const Perm& sigma, unsigned i, unsigned s) {
    if (i < 1 || i > s) throw std::out_of_range("embed_block: block index out of range");
    const unsigned r = sigma.degree();
    std::vector<unsigned> images(r * s);
    for (unsigned j = 1; j <= r * s; ++j) images[j - 1] = j;
    for (unsigned j = 1; j <= r; ++j) images[(i - 1) * r + j - 1] = (i - 1) * r + sigma(j);
    return Perm::from_one_line(images);
}

Perm embed_outer(const Perm& tau, unsigned r) {
    const unsigned s = tau.degree();
    std::vector<unsigned> images(r * s);
    for (unsigned i = 1; i <= s; ++i) {
        for (unsigned j = 1; j <= r; ++j) {
            images[(i - 1) * r + j - 1] = (tau(i) - 1) * r + j;
        }
    }
    return Perm::from_one_line(images);
}

Perm embed_degree(const Perm& p, unsigned n) {
    if (n < p.degree()) throw std::invalid_argument("embed_degree: target degree too small");
    std::vector<unsigned> images = p.one_line();
    for (unsigned j = p.degree() + 1; j <= n; ++j) images.push_back(j);
    return Perm::from_one_line(images);
}

std::vector<Perm> coxeter_generators(unsigned n) {
    std::vector<Perm> gens;
    for (unsigned i = 1; i + 1 <= n; ++i) gens.push_back(Perm::transposition(i, i + 1, n));
    return gens;
}

std::vector<Perm> all_perms(unsigned n) {
    if (n > 8) throw std::invalid_argument("all_perms: degree capped at 8 (8! = 40320)");
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 1u);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

BlockCosetRep::BlockCosetRep(Perm rep, std::vector<std::vector<unsigned>> blocks, unsigned r,
                             unsigned s)
    : rep_(std::move(rep)), blocks_(std::move(blocks)), r_(r), s_(s) {}

BlockCosetRep canonical_rep(const std::vector<std::vector<unsigned>>& blocks) {
    const unsigned s = static_cast<unsigned>(blocks.size());
    if (s == 0) throw std::invalid_argument("canonical_rep: no blocks");
    const unsigned r = static_cast<unsigned>(blocks[0].size());
    const unsigned n = r * s;

    std::vector<bool> seen(n, false);
    std::vector<std::vector<unsigned>> sorted_blocks;
    sorted_blocks.reserve(s);
    for (const auto& block : blocks) {
        if (block.size() != r) {
            throw std::invalid_argument("canonical_rep: blocks of unequal size");
        }
        for (unsigned v : block) {
            if (v < 1 || v > n || seen[v - 1]) {
                throw std::invalid_argument("canonical_rep: blocks do not partition {1..rs}");
            }
            seen[v - 1] = true;
        }
        auto sorted = block;
        std::sort(sorted.begin(), sorted.end());
        sorted_blocks.push_back(std::move(sorted));
    }

    std::vector<unsigned> images;
    images.reserve(n);
    for (const auto& block : sorted_blocks) {
        images.insert(images.end(), block.begin(), block.end());
    }
    return BlockCosetRep(Perm::from_one_line(images), std::move(sorted_blocks), r, s);
}

namespace {

// Ordered tuples of r-blocks: pick the next block as an r-subset of the
// remaining points (index combinations in lexicographic order), recurse.
void enumerate_blocks(const std::vector<unsigned>& remaining, unsigned r,
                      std::vector<std::vector<unsigned>>& acc,
                      std::vector<BlockCosetRep>& out) {
    if (remaining.empty()) {
        out.push_back(canonical_rep(acc));
        return;
    }
    const std::size_t m = remaining.size();
    std::vector<std::size_t> sel(r);
    std::iota(sel.begin(), sel.end(), 0u);
    while (true) {
        std::vector<unsigned> block, rest;
        std::size_t k = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (k < r && sel[k] == i) {
                block.push_back(remaining[i]);
                ++k;
            } else {
                rest.push_back(remaining[i]);
            }
        }
        acc.push_back(std::move(block));
        enumerate_blocks(rest, r, acc, out);
        acc.pop_back();

        long pos = static_cast<long>(r) - 1;
        while (pos >= 0 && sel[pos] == m - r + static_cast<std::size_t>(pos)) --pos;
        if (pos < 0) break;
        ++sel[pos];
        for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < r; ++i) {
            sel[i] = sel[i - 1] + 1;
        }
    }
}

}  // namespace

std::vector<BlockCosetRep> enumerate_coset_reps(unsigned r, unsigned s) {
    if (r == 0 || s == 0) throw std::invalid_argument("enumerate_coset_reps: r, s >= 1");
    const unsigned n = r * s;
    if (n > 12) throw std::invalid_argument("enumerate_coset_reps: rs capped at 12");

    std::vector<unsigned> points(n);
    std::iota(points.begin(), points.end(), 1u);
    std::vector<std::vector<unsigned>> acc;
    std::vector<BlockCosetRep> out;
    enumerate_blocks(points, r, acc, out);
    std::sort(out.begin(), out.end(),
              [](const BlockCosetRep& a, const BlockCosetRep& b) { return a.rep() < b.rep(); });
    return out;
}

Perm transporter(const BlockCosetRep& t, unsigned i) {
    const unsigned r = t.block_size();
    const unsigned s = t.block_count();
    const unsigned n = r * s;
    if (i < 1 || i > s) throw std::out_of_range("transporter: block index out of range");

    std::vector<unsigned> images;
    images.reserve(n);
    std::vector<bool> used(n, false);
    for (unsigned j = 1; j <= r; ++j) {
        const unsigned v = t.rep()((i - 1) * r + j);
        images.push_back(v);
        used[v - 1] = true;
    }
    for (unsigned v = 1; v <= n; ++v) {
        if (!used[v - 1]) images.push_back(v);
    }
    return Perm::from_one_line(images);
}

BlockFactorization factorize(const Perm& u, unsigned r, unsigned s) {
    if (u.degree() != r * s) throw std::invalid_argument("factorize: degree must be rs");

    std::vector<std::vector<unsigned>> blocks(s);
    for (unsigned i = 1; i <= s; ++i) {
        for (unsigned j = 1; j <= r; ++j) blocks[i - 1].push_back(u((i - 1) * r + j));
    }
    BlockCosetRep rep = canonical_rep(blocks);

    // rep^{-1} * u stabilizes each block of positions, giving the block parts
    const Perm v = rep.rep().inverse() * u;
    std::vector<Perm> parts;
    parts.reserve(s);
    for (unsigned i = 1; i <= s; ++i) {
        std::vector<unsigned> images(r);
        for (unsigned j = 1; j <= r; ++j) images[j - 1] = v((i - 1) * r + j) - (i - 1) * r;
        parts.push_back(Perm::from_one_line(images));
    }
    return BlockFactorization{std::move(rep), std::move(parts)};
}

}  // namespace schur
