#include "schur/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schur {

Composition::Composition(std::vector<unsigned> parts)
    : parts_(std::move(parts)), total_(std::accumulate(parts_.begin(), parts_.end(), 0u)) {}

Composition Composition::operator+(const Composition& o) const {
    if (length() != o.length()) {
        throw std::invalid_argument("Composition::operator+: length mismatch");
    }
    std::vector<unsigned> sum(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) sum[i] = parts_[i] + o.parts_[i];
    return Composition(std::move(sum));
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

namespace {

void compositions_rec(unsigned remaining, unsigned slot, std::vector<unsigned>& parts,
                      std::vector<Composition>& out) {
    if (slot + 1 == parts.size()) {
        parts[slot] = remaining;
        out.emplace_back(parts);
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        parts[slot] = v;
        compositions_rec(remaining - v, slot + 1, parts, out);
    }
}

}  // namespace

std::vector<Composition> enumerate_compositions(unsigned n, unsigned r) {
    if (n == 0) throw std::invalid_argument("enumerate_compositions: n >= 1");
    std::vector<unsigned> parts(n, 0u);
    std::vector<Composition> out;
    compositions_rec(r, 0, parts, out);
    return out;
}

Composition omega(unsigned n, unsigned r) {
    if (n < r) throw std::invalid_argument("omega: requires n >= r");
    std::vector<unsigned> parts(n, 0u);
    for (unsigned i = 0; i < r; ++i) parts[i] = 1;
    return Composition(std::move(parts));
}

Composition act(const Perm& tau, const Composition& alpha) {
    if (tau.degree() != alpha.length()) {
        throw std::invalid_argument("act: permutation degree does not match composition length");
    }
    const Perm inv = tau.inverse();
    std::vector<unsigned> parts(alpha.length());
    for (unsigned i = 1; i <= alpha.length(); ++i) parts[i - 1] = alpha[inv(i) - 1];
    return Composition(std::move(parts));
}

Composition indicator_weight(const std::vector<unsigned>& A, unsigned n) {
    std::vector<unsigned> parts(n, 0u);
    for (unsigned v : A) {
        if (v < 1 || v > n) throw std::out_of_range("indicator_weight: index out of range");
        if (parts[v - 1] != 0) throw std::invalid_argument("indicator_weight: repeated index");
        parts[v - 1] = 1;
    }
    return Composition(std::move(parts));
}

WeightTuple indicator_weights(const std::vector<std::vector<unsigned>>& blocks, unsigned n) {
    WeightTuple wt;
    wt.reserve(blocks.size());
    for (const auto& block : blocks) wt.push_back(indicator_weight(block, n));
    return wt;
}

bool sums_to(const WeightTuple& wt, const Composition& target) {
    if (wt.empty()) return target.total() == 0;
    Composition sum = wt[0];
    for (std::size_t i = 1; i < wt.size(); ++i) sum = sum + wt[i];
    return sum == target;
}

std::string weight_tuple_str(const WeightTuple& wt) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < wt.size(); ++i) os << (i ? ", " : "") << wt[i].str();
    os << ")";
    return os.str();
}

}  // namespace schur
