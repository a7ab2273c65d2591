#include "wigloc/multi_index.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wigloc {

BigInt multi_factorial(const MultiIndex& mu) {
    BigInt f = 1;
    for (int m : mu) {
        if (m < 0) throw std::invalid_argument("multi-index entry must be non-negative");
        f *= factorial(static_cast<unsigned>(m));
    }
    return f;
}

std::string format_multi_index(const MultiIndex& mu) {
    std::ostringstream os;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (j) os << '-';
        os << mu[j];
    }
    return os.str();
}

MultiIndex parse_multi_index(const std::string& text, char sep) {
    MultiIndex mu;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, sep)) {
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size() || v < 0)
            throw std::invalid_argument("bad multi-index component: " + piece);
        mu.push_back(v);
    }
    if (mu.empty()) throw std::invalid_argument("empty multi-index");
    return mu;
}

namespace {

void enumerate(int n, int pos, int remaining, bool exact, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (pos == n) {
        if (!exact || remaining == 0) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        enumerate(n, pos + 1, remaining - v, exact, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(int n, int max_order) {
    if (n < 1 || max_order < 0) throw std::invalid_argument("bad enumeration bounds");
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    enumerate(n, 0, max_order, false, cur, out);
    return out;
}

std::vector<MultiIndex> multi_indices_of_order(int n, int total) {
    if (n < 1 || total < 0) throw std::invalid_argument("bad enumeration bounds");
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    enumerate(n, 0, total, true, cur, out);
    return out;
}

HermiteSuperposition::HermiteSuperposition(std::vector<HermiteTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("superposition needs at least one term");
    const std::size_t n = terms_[0].mu.size();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mu.size() != n)
            throw std::invalid_argument("superposition mixes dimensions");
        for (std::size_t j = 0; j < i; ++j)
            if (terms_[i].mu == terms_[j].mu)
                throw std::invalid_argument("duplicate multi-index in superposition");
    }
}

std::size_t HermiteSuperposition::dim() const {
    return terms_.empty() ? 0 : terms_[0].mu.size();
}

double HermiteSuperposition::norm_sq() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::norm(t.coeff);
    return s;
}

void HermiteSuperposition::normalize() {
    const double n2 = norm_sq();
    if (n2 <= 0.0) throw std::domain_error("cannot normalize the zero state");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& t : terms_) t.coeff *= inv;
}

}  // namespace wigloc
