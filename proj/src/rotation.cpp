#include "wigloc/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace wigloc {

namespace {

// Coefficient rows of the physicists' Hermite polynomials up to kmax:
// Hb_0 = 1, Hb_1 = 2x, Hb_{k+1} = 2x Hb_k - 2k Hb_{k-1}.  Integer-valued;
// the leading coefficient of Hb_k is 2^k, which is what makes the
// eigenbasis elimination triangular.
std::vector<std::vector<Rational>> hermite_rows(int kmax) {
    std::vector<std::vector<Rational>> rows(kmax + 1);
    rows[0] = {Rational(1)};
    if (kmax >= 1) rows[1] = {Rational(0), Rational(2)};
    for (int k = 1; k < kmax; ++k) {
        std::vector<Rational> next(k + 2, Rational(0));
        for (std::size_t m = 0; m < rows[k].size(); ++m) next[m + 1] = 2 * rows[k][m];
        for (std::size_t m = 0; m < rows[k - 1].size(); ++m) next[m] -= 2 * k * rows[k - 1][m];
        rows[k + 1] = std::move(next);
    }
    return rows;
}

// Product polynomial of one Hermite row per coordinate, as a table.
std::map<MultiIndex, QSqrt2> product_table(const MultiIndex& mu,
                                           const std::vector<std::vector<Rational>>& rows) {
    std::map<MultiIndex, QSqrt2> table;
    table[MultiIndex(mu.size(), 0)] = QSqrt2{Rational(1)};
    for (std::size_t j = 0; j < mu.size(); ++j) {
        const auto& row = rows[mu[j]];
        std::map<MultiIndex, QSqrt2> next;
        for (const auto& [e, c] : table) {
            for (std::size_t m = 0; m < row.size(); ++m) {
                if (row[m] == 0) continue;
                MultiIndex e2 = e;
                e2[j] += static_cast<int>(m);
                auto [it, fresh] = next.try_emplace(std::move(e2), QSqrt2{});
                it->second += c * QSqrt2{row[m]};
            }
        }
        table = std::move(next);
    }
    return table;
}

// 1 / sqrt(2)^m as an exact field element.
QSqrt2 inv_sqrt2_pow(int m) {
    BigInt half_pow = BigInt(1) << (m / 2);
    if (m % 2 == 0) return QSqrt2{Rational(1, half_pow)};
    return QSqrt2{Rational(0), Rational(1, half_pow * 2)};
}

void drop_zeros(std::map<MultiIndex, QSqrt2>& table) {
    for (auto it = table.begin(); it != table.end();)
        it = it->second.is_zero() ? table.erase(it) : std::next(it);
}

}  // namespace

GaussHermitePoly hermite_to_poly(const MultiIndex& mu) {
    if (mu.empty()) throw std::invalid_argument("hermite_to_poly: empty multi-index");
    const int lambda = order(mu);
    if (lambda > 30) throw std::out_of_range("hermite_to_poly: total degree above 30");
    int kmax = 0;
    for (int m : mu) kmax = std::max(kmax, m);

    GaussHermitePoly f;
    f.n = static_cast<int>(mu.size());
    f.lambda = lambda;
    f.coeffs = product_table(mu, hermite_rows(kmax));
    // Gaussian-weighted norm of the table polynomial: 2^lambda mu!.
    f.norm_sq = Rational(BigInt(1) << lambda) * Rational(multi_factorial(mu));
    return f;
}

GaussHermitePoly apply_rotation(const GaussHermitePoly& f, const PlaneRotation& rot) {
    if (rot.a < 0 || rot.b <= rot.a || rot.b >= f.n)
        throw std::invalid_argument("apply_rotation: bad axis pair");
    if (rot.theta != kQuarterTurn)
        throw std::invalid_argument(
            "apply_rotation: exact path handles the quarter turn only; "
            "use apply_rotation_numeric for other angles");

    GaussHermitePoly g;
    g.n = f.n;
    g.lambda = f.lambda;
    g.norm_sq = f.norm_sq;  // orthogonal substitution, Gaussian invariant

    // x_a <- (x_a + x_b)/sqrt2, x_b <- (x_a - x_b)/sqrt2.  Expand the two
    // binomials; the 1/sqrt2 powers stay exact in Q(sqrt2).
    for (const auto& [e, c] : f.coeffs) {
        const int ea = e[rot.a], eb = e[rot.b];
        const QSqrt2 root_scale = inv_sqrt2_pow(ea + eb);
        for (int i = 0; i <= ea; ++i) {
            for (int l = 0; l <= eb; ++l) {
                Rational w = Rational(binomial(ea, i) * binomial(eb, l));
                if ((eb - l) % 2 != 0) w = -w;
                MultiIndex e2 = e;
                e2[rot.a] = i + l;
                e2[rot.b] = ea + eb - i - l;
                auto [it, fresh] = g.coeffs.try_emplace(std::move(e2), QSqrt2{});
                it->second += c * root_scale * QSqrt2{w};
            }
        }
    }
    drop_zeros(g.coeffs);
    return g;
}

QSqrt2 HermiteExpansion::amp_sq_total() const {
    QSqrt2 total;
    for (const auto& t : terms) total += t.amp_sq;
    return total;
}

const ExpansionTerm* HermiteExpansion::find(const MultiIndex& nu) const {
    for (const auto& t : terms)
        if (t.nu == nu) return &t;
    return nullptr;
}

HermiteExpansion poly_to_hermite(const GaussHermitePoly& f) {
    const int lambda = f.lambda;
    int kmax = lambda;
    const auto rows = hermite_rows(kmax);
    const Rational lead{BigInt(1) << lambda};  // leading coefficient 2^lambda

    HermiteExpansion expansion;
    expansion.lambda = lambda;

    // Each top-degree monomial x^nu occurs in exactly one basis polynomial,
    // with coefficient 2^lambda: read d_nu off, then insist the subtraction
    // annihilates everything else.
    std::map<MultiIndex, QSqrt2> residual = f.coeffs;
    for (const MultiIndex& nu : multi_indices_of_order(f.n, lambda)) {
        QSqrt2 d;
        if (auto it = residual.find(nu); it != residual.end()) d = it->second;
        d *= QSqrt2{Rational(1) / lead};
        if (!d.is_zero()) {
            for (const auto& [e, c] : product_table(nu, rows)) {
                auto [it, fresh] = residual.try_emplace(e, QSqrt2{});
                it->second -= d * c;
            }
        }
        const Rational ratio = Rational(BigInt(1) << lambda) * Rational(multi_factorial(nu)) / f.norm_sq;
        ExpansionTerm term;
        term.nu = nu;
        term.d = d;
        term.amp_sq = d * d * QSqrt2{ratio};
        term.c = d.to_double() * std::sqrt(to_double(ratio));
        expansion.terms.push_back(std::move(term));
    }
    drop_zeros(residual);
    if (!residual.empty())
        throw std::logic_error(
            "poly_to_hermite: nonzero residual -- input is not in a single eigenspace");
    return expansion;
}

NumericPoly to_numeric(const GaussHermitePoly& f) {
    NumericPoly g;
    g.n = f.n;
    g.lambda = f.lambda;
    g.norm_sq = to_double(f.norm_sq);
    for (const auto& [e, c] : f.coeffs) g.coeffs[e] = c.to_double();
    return g;
}

NumericPoly apply_rotation_numeric(const NumericPoly& f, const PlaneRotation& rot) {
    if (rot.a < 0 || rot.b <= rot.a || rot.b >= f.n)
        throw std::invalid_argument("apply_rotation_numeric: bad axis pair");
    const double co = std::cos(rot.theta), si = std::sin(rot.theta);

    NumericPoly g;
    g.n = f.n;
    g.lambda = f.lambda;
    g.norm_sq = f.norm_sq;
    // x_a <- co x_a + si x_b, x_b <- si x_a - co x_b.
    for (const auto& [e, c] : f.coeffs) {
        const int ea = e[rot.a], eb = e[rot.b];
        for (int i = 0; i <= ea; ++i) {
            for (int l = 0; l <= eb; ++l) {
                double w = c * to_double(Rational(binomial(ea, i))) *
                           to_double(Rational(binomial(eb, l))) * std::pow(co, i) *
                           std::pow(si, ea - i) * std::pow(si, l) * std::pow(-co, eb - l);
                MultiIndex e2 = e;
                e2[rot.a] = i + l;
                e2[rot.b] = ea + eb - i - l;
                g.coeffs[e2] += w;
            }
        }
    }
    return g;
}

NumericExpansion poly_to_hermite_numeric(const NumericPoly& f) {
    const auto rows = hermite_rows(f.lambda);
    const double lead = std::ldexp(1.0, f.lambda);

    std::map<MultiIndex, double> residual = f.coeffs;
    NumericExpansion expansion;
    for (const MultiIndex& nu : multi_indices_of_order(f.n, f.lambda)) {
        double d = 0.0;
        if (auto it = residual.find(nu); it != residual.end()) d = it->second;
        d /= lead;
        if (d != 0.0) {
            for (const auto& [e, c] : product_table(nu, rows)) residual[e] -= d * c.to_double();
        }
        const double ratio =
            std::ldexp(1.0, f.lambda) * to_double(Rational(multi_factorial(nu))) / f.norm_sq;
        expansion.terms.emplace_back(nu, d * std::sqrt(ratio));
    }
    for (const auto& [e, c] : residual) expansion.residual = std::max(expansion.residual, std::abs(c));
    return expansion;
}

std::vector<ChainStep> maximizer_chain(const MultiIndex& start, const MultiIndex& target) {
    if (start.size() != target.size())
        throw std::invalid_argument("maximizer_chain: dimension mismatch");
    if (order(start) != order(target))
        throw std::invalid_argument("maximizer_chain: endpoint degrees differ");

    std::vector<ChainStep> chain;
    if (start == target) return chain;
    const int n = static_cast<int>(start.size());
    MultiIndex cur = start;

    auto take_step = [&chain, &cur](int axis, MultiIndex landing) {
        const PlaneRotation rot{0, axis, kQuarterTurn};
        const HermiteExpansion exp = poly_to_hermite(apply_rotation(hermite_to_poly(cur), rot));
        const ExpansionTerm* term = exp.find(landing);
        if (term == nullptr || term->d.is_zero())
            throw std::logic_error("maximizer_chain: landing coefficient vanished");
        chain.push_back(ChainStep{rot, landing, term->c});
        cur = std::move(landing);
    };

    // Phase one: fold every excited coordinate into coordinate 0.
    for (int i = 1; i < n; ++i) {
        if (cur[i] == 0) continue;
        MultiIndex landing = cur;
        landing[0] += landing[i];
        landing[i] = 0;
        if (landing == cur) continue;
        take_step(i, std::move(landing));
    }
    // Phase two: deal coordinate 0 back out to the target profile.
    for (int i = 1; i < n; ++i) {
        if (target[i] == 0) continue;
        MultiIndex landing = cur;
        landing[0] -= target[i];
        landing[i] = target[i];
        if (landing == cur) continue;
        take_step(i, std::move(landing));
    }
    if (cur != target) throw std::logic_error("maximizer_chain: did not reach the target");
    return chain;
}

InvarianceReport verify_rotation_invariance(const MultiIndex& mu, const PlaneRotation& rot,
                                            const BallSpec& ball) {
    if (static_cast<int>(mu.size()) != ball.n)
        throw std::invalid_argument("verify_rotation_invariance: dimension mismatch");

    InvarianceReport report;
    report.direct = ball_integral_diagonal(mu, ball).value;

    double rotated = 0.0;
    if (rot.theta == kQuarterTurn) {
        const HermiteExpansion exp = poly_to_hermite(apply_rotation(hermite_to_poly(mu), rot));
        for (const auto& t : exp.terms) {
            if (t.amp_sq.is_zero()) continue;
            rotated += t.amp_sq.to_double() * ball_integral_diagonal(t.nu, ball).value;
        }
    } else {
        const NumericExpansion exp = poly_to_hermite_numeric(
            apply_rotation_numeric(to_numeric(hermite_to_poly(mu)), rot));
        for (const auto& [nu, c] : exp.terms) {
            if (c == 0.0) continue;
            rotated += c * c * ball_integral_diagonal(nu, ball).value;
        }
    }
    report.rotated = rotated;
    report.residual = std::abs(report.rotated - report.direct);
    report.pass = report.residual <= 1e-12;
    return report;
}

}  // namespace wigloc
