#include "hypcode/code.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hypcode {

namespace {

constexpr long long kEnumGuard = 1LL << 22;

long long checked_pow(long long base, int e, long long limit) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        v *= base;
        if (v > limit) return limit + 1;
    }
    return v;
}

} // namespace

std::vector<Exponent> enumerate_points(int q, int m) {
    long long n = checked_pow(q, m, kEnumGuard);
    if (n > kEnumGuard) throw std::invalid_argument("q^m too large to enumerate points");
    std::vector<Exponent> points((size_t)n, Exponent(m, 0));
    for (long long idx = 0; idx < n; ++idx) {
        long long t = idx;
        for (int c = m - 1; c >= 0; --c) { points[idx][c] = (int)(t % q); t /= q; }
    }
    return points;
}

EvaluationCode::EvaluationCode(FieldPtr field, ExponentSet exponents)
    : field_(std::move(field)), exponents_(std::move(exponents)) {
    if (!field_) throw std::invalid_argument("null field");
    if (exponents_.q != field_->q()) throw std::invalid_argument("exponent set q does not match field");
    const int q = field_->q();
    const int m = exponents_.m;
    points_ = enumerate_points(q, m);
    const long long n = (long long)points_.size();

    const int k = exponents_.size();
    gen_ = Mat(k, (int)n);
    for (int r = 0; r < k; ++r) {
        const Exponent& e = exponents_.members[r];
        for (int j = 0; j < (int)n; ++j) {
            int v = 1;
            for (int c = 0; c < m; ++c) v = field_->mul(v, field_->pow(points_[j][c], e[c]));
            gen_.at(r, j) = v;
        }
    }
    fb_ = exponents_.empty() ? 0 : hypcode::footprint_bound(exponents_);
}

void EvaluationCode::ensure_solver() const {
    if (solver_ready_) return;
    const int k = this->k();

    // Distinct reduced monomials are independent as functions, so the rank
    // check is an internal sanity assertion, not an expected failure path.
    {
        Mat copy = gen_;
        info_cols_ = rref_in_place(*field_, copy);
    }
    if ((int)info_cols_.size() != k) throw std::logic_error("generator rank below k");

    // Invert G restricted to the information columns (transposed), so that
    // coefficient candidates come from one matrix-vector product.
    Mat aug(k, 2 * k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) aug.at(r, c) = gen_.at(c, info_cols_[r]);
        aug.at(r, k + r) = 1;
    }
    std::vector<int> piv = rref_in_place(*field_, aug);
    if ((int)piv.size() != k) throw std::logic_error("information set not invertible");
    inv_ = Mat(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) inv_.at(r, c) = aug.at(r, k + c);
    solver_ready_ = true;
}

Word EvaluationCode::encode(const SparsePolynomial& message) const {
    Word w(n(), 0);
    for (const auto& [e, c] : message.terms()) {
        auto it = std::lower_bound(exponents_.members.begin(), exponents_.members.end(), e);
        if (it == exponents_.members.end() || *it != e)
            throw std::invalid_argument("message support outside the exponent set");
        int row = (int)(it - exponents_.members.begin());
        for (int j = 0; j < n(); ++j) w[j] = field_->add(w[j], field_->mul(c, gen_.at(row, j)));
    }
    return w;
}

Word EvaluationCode::eval(const SparsePolynomial& f) const {
    Word w(n(), 0);
    for (int j = 0; j < n(); ++j) w[j] = f.eval(*field_, points_[j]);
    return w;
}

std::optional<SparsePolynomial> EvaluationCode::try_interpolate(const Word& w) const {
    if ((int)w.size() != n()) throw std::invalid_argument("word length mismatch");
    SparsePolynomial out(m());
    if (k() == 0) {
        for (int v : w)
            if (v != 0) return std::nullopt;
        return out;
    }
    ensure_solver();
    std::vector<int> wj(k());
    for (int i = 0; i < k(); ++i) wj[i] = w[info_cols_[i]];
    std::vector<int> x = mat_vec_mul(*field_, inv_, wj);
    // The information set pins the only possible coefficients; the word is
    // a codeword exactly when they reproduce every coordinate.
    for (int j = 0; j < n(); ++j) {
        int acc = 0;
        for (int r = 0; r < k(); ++r) acc = field_->add(acc, field_->mul(x[r], gen_.at(r, j)));
        if (acc != w[j]) return std::nullopt;
    }
    for (int r = 0; r < k(); ++r)
        if (x[r] != 0) out.set_coeff(exponents_.members[r], x[r]);
    return out;
}

SparsePolynomial EvaluationCode::interpolate_exact(const Word& w) const {
    auto p = try_interpolate(w);
    if (!p) throw std::runtime_error("word is not in the code");
    return *p;
}

Word schur(const Field& f, const Word& u, const Word& v) {
    if (u.size() != v.size()) throw std::invalid_argument("schur: length mismatch");
    Word out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = f.mul(u[i], v[i]);
    return out;
}

Word schur_power(const Field& f, const Word& u, long long j) {
    if (j < 0) throw std::invalid_argument("schur_power: negative exponent");
    Word out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = f.pow(u[i], j);
    return out;
}

int hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

int hamming_weight(const Word& a) {
    int w = 0;
    for (int v : a) w += (v != 0);
    return w;
}

namespace {

// Shared odometer over all q^k messages in lex order of the coefficient
// vector. visit(weight_or_dist) is called once per message after the
// incremental update; the walk starts at the zero message (not visited).
template <typename Visit>
void walk_messages(const EvaluationCode& code, Word& w, int& tracked,
                   const Word* ref, Visit visit) {
    const Field& f = code.field();
    const int q = f.q();
    const int k = code.k();
    const Mat& g = code.generator();

    std::vector<std::vector<int>> supp(k);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < code.n(); ++j)
            if (g.at(r, j) != 0) supp[r].push_back(j);

    std::vector<int> digits(k, 0);
    auto bump = [&](int row, int from, int to) {
        int delta = f.sub(to, from);
        for (int j : supp[row]) {
            int before = w[j];
            int after = f.add(before, f.mul(delta, g.at(row, j)));
            if (ref) {
                tracked -= (before != (*ref)[j]);
                tracked += (after != (*ref)[j]);
            } else {
                tracked -= (before != 0);
                tracked += (after != 0);
            }
            w[j] = after;
        }
    };

    while (true) {
        int i = k - 1;
        while (i >= 0 && digits[i] == q - 1) {
            bump(i, q - 1, 0);
            digits[i] = 0;
            --i;
        }
        if (i < 0) break; // wrapped all the way around: back at the zero message
        bump(i, digits[i], digits[i] + 1);
        ++digits[i];
        visit(digits);
    }
}

void check_enum_guard(const EvaluationCode& code) {
    if (checked_pow(code.field().q(), code.k(), kEnumGuard) > kEnumGuard)
        throw std::invalid_argument("q^k exceeds the brute-force guard");
}

} // namespace

long long min_weight_bruteforce(const EvaluationCode& code) {
    if (code.k() == 0) throw std::invalid_argument("zero code has no nonzero codewords");
    check_enum_guard(code);
    Word w(code.n(), 0);
    int wt = 0;
    long long best = code.n() + 1;
    walk_messages(code, w, wt, nullptr, [&](const std::vector<int>&) {
        if (wt < best) best = wt;
    });
    return best;
}

NearestResult nearest_codeword(const EvaluationCode& code, const Word& y) {
    if ((int)y.size() != code.n()) throw std::invalid_argument("word length mismatch");
    NearestResult best;
    best.codeword.assign(code.n(), 0);
    best.message = SparsePolynomial(code.m());
    best.distance = hamming_weight(y);
    if (code.k() == 0) return best;
    check_enum_guard(code);

    Word w(code.n(), 0);
    int dist = best.distance;
    walk_messages(code, w, dist, &y, [&](const std::vector<int>& digits) {
        // Strict improvement only: the lex-first message among ties wins
        // because the walk enumerates coefficient vectors in lex order.
        if (dist < best.distance) {
            best.distance = dist;
            best.codeword = w;
            SparsePolynomial msg(code.m());
            for (int r = 0; r < code.k(); ++r)
                if (digits[r] != 0) msg.set_coeff(code.exponents().members[r], digits[r]);
            best.message = msg;
        }
    });
    return best;
}

std::pair<Word, std::vector<int>> corrupt(const Field& f, const Word& y, int t,
                                          unsigned long long seed) {
    const int n = (int)y.size();
    if (t < 0 || t > n) throw std::invalid_argument("error count outside [0, n]");
    std::mt19937_64 g(seed);
    std::set<int> pos;
    while ((int)pos.size() < t) pos.insert((int)(g() % n));
    Word w = y;
    for (int p : pos) {
        int delta = 1 + (int)(g() % (f.q() - 1));
        w[p] = f.add(w[p], delta);
    }
    return {w, std::vector<int>(pos.begin(), pos.end())};
}

} // namespace hypcode
