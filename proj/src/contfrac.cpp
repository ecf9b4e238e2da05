#include "siegelab/contfrac.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "siegelab/csv.hpp"

namespace siegelab::contfrac {

namespace {

// Bit length of a positive big integer.
unsigned long bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.backend().data(), 2);
}

// Value of the purely periodic tail t = [b_1, ..., b_k, b_1, ...] in (0,1),
// the positive root of q_{k-1} t^2 + (q_k - p_{k-1}) t - p_k = 0 where
// p_i/q_i are the convergents of the period block.
BigFloat periodic_tail_value(const std::vector<BigInt>& period) {
    BigInt p_prev = 1, q_prev = 0;  // (p_{-1}, q_{-1})
    BigInt p = 0, q = 1;            // (p_0, q_0)
    for (const BigInt& b : period) {
        BigInt p_next = b * p + p_prev;
        BigInt q_next = b * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
    }
    // t = (p t + p_prev) / (q t + q_prev)
    const BigFloat a = BigFloat(q_prev);
    const BigFloat b = BigFloat(q) - BigFloat(p_prev);
    const BigFloat c = -BigFloat(p);
    if (a == 0) return -c / b;
    const BigFloat disc = sqrt(b * b - 4 * a * c);
    return (-b + disc) / (2 * a);
}

// Finite continued fraction of `prefix` closed with tail value t in [0, 1):
// (p_N + p_{N-1} t) / (q_N + q_{N-1} t).
BigFloat evaluate(const std::vector<BigInt>& prefix, const BigFloat& tail) {
    BigInt p_prev = 1, q_prev = 0;
    BigInt p = 0, q = 1;
    for (const BigInt& a : prefix) {
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
    }
    return (BigFloat(p) + BigFloat(p_prev) * tail) /
           (BigFloat(q) + BigFloat(q_prev) * tail);
}

} // namespace

RotationNumber RotationNumber::from_value(const BigFloat& x, std::size_t n_terms) {
    if (!(x > 0 && x < 1))
        throw RationalInput("expand: input must lie strictly inside (0,1)");
    const unsigned long prec = precision_bits();
    RotationNumber r;
    r.value_ = x;
    BigFloat rem = x;
    BigInt q_prev = 0, q = 1;
    for (std::size_t k = 0; k < n_terms; ++k) {
        if (rem == 0)
            throw RationalInput("expand: remainder hit zero (rational input)");
        BigFloat inv = 1 / rem;
        BigFloat fl = floor(inv);
        BigInt a = static_cast<BigInt>(fl);
        if (a < 1) throw PrecisionExhausted("expand: Gauss step produced a < 1");
        rem = inv - fl;
        BigInt q_next = a * q + q_prev;
        q_prev = q; q = q_next;
        // The precondition asks for precision >= 4x the bits consumed so far;
        // bits consumed after k steps is about log2(q_k q_{k+1}).
        if (4 * (bit_length(q) + bit_length(q_prev)) >= prec)
            throw PrecisionExhausted("expand: working precision exhausted after " +
                                     std::to_string(k + 1) + " terms");
        r.prefix_.push_back(std::move(a));
    }
    return r;
}

RotationNumber RotationNumber::from_coeffs(std::vector<BigInt> prefix,
                                           std::vector<BigInt> period) {
    for (const BigInt& a : prefix)
        if (a < 1) throw InsufficientCoefficients("coefficients must be >= 1");
    for (const BigInt& b : period)
        if (b < 1) throw InsufficientCoefficients("period entries must be >= 1");
    RotationNumber r;
    BigFloat tail = period.empty() ? BigFloat(0) : periodic_tail_value(period);
    r.value_ = evaluate(prefix, tail);
    r.prefix_ = std::move(prefix);
    r.period_ = std::move(period);
    return r;
}

RotationNumber RotationNumber::golden() {
    return from_coeffs({}, {BigInt(1)});
}

bool RotationNumber::has_term(std::size_t n) const {
    if (n == 0) return false;
    return n <= prefix_.size() || !period_.empty();
}

const BigInt& RotationNumber::term(std::size_t n) const {
    if (!has_term(n))
        throw InsufficientCoefficients("coefficient a_" + std::to_string(n) +
                                       " is not determined");
    if (n <= prefix_.size()) return prefix_[n - 1];
    return period_[(n - 1 - prefix_.size()) % period_.size()];
}

std::vector<Convergent> RotationNumber::convergents(std::size_t n) const {
    if (n > 0 && !has_term(n))
        throw InsufficientCoefficients("need " + std::to_string(n) + " coefficients");
    std::vector<Convergent> out;
    out.reserve(n);
    BigInt p_prev = 1, q_prev = 0;
    BigInt p = 0, q = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        const BigInt& a = term(k);
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
        out.push_back({p, q});
    }
    return out;
}

Convergent RotationNumber::convergent(std::size_t n) const {
    auto all = convergents(n);
    if (all.empty()) return {BigInt(0), BigInt(1)};
    return all.back();
}

RotationNumber expand(const BigFloat& x, std::size_t n_terms) {
    return RotationNumber::from_value(x, n_terms);
}

ArithClassReport classify(const RotationNumber& r, double C, const BigInt& bound,
                          std::size_t depth) {
    if (depth > 0 && !r.has_term(depth))
        throw InsufficientCoefficients("classify: depth exceeds stored coefficients");
    ArithClassReport rep;
    rep.depth = depth;
    BigInt sup = 0;
    double david = 0.0;
    for (std::size_t n = 1; n <= depth; ++n) {
        const BigInt& a = r.term(n);
        if (a > sup) sup = a;
        const double la = static_cast<double>(log(BigFloat(a)));
        david = std::max(david, la / std::sqrt(static_cast<double>(n)));
    }
    if (depth > 0) rep.bounded_by = sup;
    rep.david_constant = david;
    rep.in_theta_c = david <= C;
    rep.within_bound = depth > 0 && sup <= bound;
    if (depth >= 2 && r.has_term(depth))
        rep.brjuno_partial = brjuno_partial(r, depth - 1);
    return rep;
}

RotationNumber truncate_bounded(const RotationNumber& r, std::size_t N) {
    if (N > 0 && !r.has_term(N))
        throw InsufficientCoefficients("truncate_bounded: fewer than N coefficients");
    std::vector<BigInt> prefix;
    prefix.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) prefix.push_back(r.term(n));
    return RotationNumber::from_coeffs(std::move(prefix), {BigInt(1)});
}

double brjuno_partial(const RotationNumber& r, std::size_t N) {
    if (N == 0) return 0.0;
    auto conv = r.convergents(N + 1);
    BigFloat sum = 0;
    for (std::size_t n = 1; n <= N; ++n)
        sum += log(BigFloat(conv[n].q)) / BigFloat(conv[n - 1].q);
    return static_cast<double>(sum);
}

void write_csv(std::ostream& os, const RotationNumber& r, std::size_t N) {
    auto conv = r.convergents(N + 1);
    csv::Writer w(os, {"n", "a_n", "p_n", "q_n", "log_a_over_sqrt_n", "brjuno_partial"});
    BigFloat brjuno = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        brjuno += log(BigFloat(conv[n].q)) / BigFloat(conv[n - 1].q);
        const double la = static_cast<double>(log(BigFloat(r.term(n))));
        w.row()
            .field(n)
            .field(r.term(n).str())
            .field(conv[n - 1].p.str())
            .field(conv[n - 1].q.str())
            .field(la / std::sqrt(static_cast<double>(n)))
            .field(static_cast<double>(brjuno));
    }
}

} // namespace siegelab::contfrac
