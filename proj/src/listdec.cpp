#include "hypcode/listdec.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "hypcode/linalg.hpp"

namespace hypcode {

namespace {

constexpr long long kSpaceGuard = 1LL << 22;
constexpr long long kSystemGuard = 1LL << 24;

long long space_size(int q, int m) {
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= q;
        if (n > kSpaceGuard) throw std::invalid_argument("q^m is too large");
    }
    return n;
}

} // namespace

ListPlan plan(int q, int m, long long d, int r, LMode mode) {
    if (q < 2 || m < 1) throw std::invalid_argument("plan: need q >= 2 and m >= 1");
    if (r < 1) throw std::invalid_argument("plan: radius must be at least 1");
    long long n = space_size(q, m);
    if (d < 1 || d > n) throw std::invalid_argument("plan: need 1 <= d <= q^m");

    ListPlan pl;
    pl.q = q;
    pl.m = m;
    pl.d = d;
    pl.r = r;
    pl.mode = mode;
    pl.n = n;
    pl.t = -1;
    for (int i = 0;; ++i) {
        ExponentSet li = l_set(q, m, d, r, i, mode);
        if (li.empty()) break;
        pl.unknowns += li.size();
        pl.levels.push_back(std::move(li));
        if (pl.unknowns > n) {
            pl.feasible = true;
            pl.t = i;
            break;
        }
    }
    return pl;
}

int max_radius(int q, int m, long long d, LMode mode) {
    // Feasibility is monotone in r, and the level-zero set empties once
    // r + 1 exceeds q^m, so the scan always terminates.
    int best = 0;
    for (int r = 1;; ++r) {
        if (!plan(q, m, d, r, mode).feasible) return best;
        best = r;
    }
}

double sufficient_radius_bound_m2(int q, long long d) {
    if (d <= q || d > (long long)q * q)
        throw std::invalid_argument("sufficient_radius_bound_m2: need q < d <= q^2");
    long long a = ((long long)q * q - d) / q;
    double b = (double)q - (double)d / (double)(q - a);
    return (double)a - b + 1.0;
}

int YPolynomial::degree() const {
    for (int i = (int)coeff.size() - 1; i >= 0; --i)
        if (!coeff[i].is_zero()) return i;
    return -1;
}

YPolynomial interpolate(const FieldPtr& field, const ListPlan& pl, const Word& y) {
    if (!pl.feasible) throw std::invalid_argument("interpolate: plan is infeasible");
    if (!field || field->q() != pl.q)
        throw std::invalid_argument("interpolate: field does not match the plan");
    if ((long long)y.size() != pl.n)
        throw std::invalid_argument("interpolate: word length mismatch");
    if (pl.n * pl.unknowns > kSystemGuard)
        throw std::invalid_argument("interpolate: system too large");

    const Field& f = *field;
    int n = (int)pl.n;
    auto points = enumerate_points(pl.q, pl.m);

    std::vector<Word> ypow((size_t)pl.t + 1);
    ypow[0] = Word(n, 1);
    for (int i = 1; i <= pl.t; ++i) ypow[i] = schur(f, ypow[i - 1], y);

    Mat a;
    a.rows = n;
    a.cols = (int)pl.unknowns;
    a.a.assign((size_t)a.rows * a.cols, 0);
    int col = 0;
    for (int i = 0; i <= pl.t; ++i) {
        for (const Exponent& e : pl.levels[i].members) {
            for (int j = 0; j < n; ++j) {
                int mono = 1;
                for (int c = 0; c < pl.m; ++c)
                    mono = f.mul(mono, f.pow(points[j][c], e[c]));
                a.at(j, col) = f.mul(mono, ypow[i][j]);
            }
            ++col;
        }
    }

    auto x = kernel_vector(f, std::move(a));
    if (!x) throw std::logic_error("interpolate: no kernel vector found");

    YPolynomial qp;
    qp.coeff.assign((size_t)pl.t + 1, SparsePolynomial(pl.m));
    col = 0;
    for (int i = 0; i <= pl.t; ++i)
        for (const Exponent& e : pl.levels[i].members)
            qp.coeff[i].set_coeff(e, (*x)[col++]);
    return qp;
}

namespace {

// The root search works on a dense ladder of Y-coefficients.
using Ladder = std::vector<SparsePolynomial>;

int ladder_degree(const Ladder& lad) {
    for (int i = (int)lad.size() - 1; i >= 0; --i)
        if (!lad[i].is_zero()) return i;
    return -1;
}

// Smallest exponent of variable v across every term of every coefficient.
int min_var_power(const Ladder& lad, int v) {
    int best = INT_MAX;
    for (const auto& p : lad)
        for (const auto& [e, c] : p.terms()) best = std::min(best, e[v]);
    return best == INT_MAX ? 0 : best;
}

SparsePolynomial raise_var(const SparsePolynomial& p, int v, int amount) {
    if (amount == 0) return p;
    SparsePolynomial out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponent e2 = e;
        e2[v] += amount;
        out.set_coeff(e2, c);
    }
    return out;
}

Ladder divide_out_var(const Ladder& lad, int v, int amount) {
    Ladder out;
    out.reserve(lad.size());
    for (const auto& p : lad) {
        SparsePolynomial r(p.vars());
        for (const auto& [e, c] : p.terms()) {
            Exponent e2 = e;
            e2[v] -= amount;
            r.set_coeff(e2, c);
        }
        out.push_back(std::move(r));
    }
    return out;
}

Ladder specialize_var_zero(const Ladder& lad, int v) {
    Ladder out;
    out.reserve(lad.size());
    for (const auto& p : lad) {
        SparsePolynomial r(p.vars());
        for (const auto& [e, c] : p.terms())
            if (e[v] == 0) r.set_coeff(e, c);
        out.push_back(std::move(r));
    }
    return out;
}

// Q(gamma + X_v Y): coefficient i of the result is
// X_v^i * sum_{j >= i} C(j, i) Q_j gamma^(j-i), with the binomial taken mod p
// and read as a prime-subfield element.
Ladder shift_ladder(const Field& f, const Ladder& lad, const SparsePolynomial& gamma,
                    int v) {
    int t = ladder_degree(lad);
    int m = gamma.vars();
    std::vector<std::vector<int>> ch((size_t)t + 1, std::vector<int>((size_t)t + 1, 0));
    for (int j = 0; j <= t; ++j) {
        ch[j][0] = 1;
        for (int i = 1; i <= j; ++i)
            ch[j][i] = (ch[j - 1][i - 1] + ch[j - 1][i]) % f.p();
    }
    std::vector<SparsePolynomial> gp((size_t)t + 1, SparsePolynomial(m));
    gp[0].set_coeff(Exponent(m, 0), 1);
    for (int j = 1; j <= t; ++j) gp[j] = poly_mul(f, gp[j - 1], gamma);

    Ladder out((size_t)t + 1, SparsePolynomial(m));
    for (int i = 0; i <= t; ++i) {
        SparsePolynomial acc(m);
        for (int j = i; j <= t; ++j) {
            if (ch[j][i] == 0) continue;
            acc = poly_add(f, acc, poly_scale(f, poly_mul(f, lad[j], gp[j - i]), ch[j][i]));
        }
        out[i] = raise_var(acc, v, i);
    }
    return out;
}

// Horner evaluation of the ladder at Y = g, in the plain polynomial ring.
SparsePolynomial ladder_at(const Field& f, const Ladder& lad, const SparsePolynomial& g) {
    SparsePolynomial acc(g.vars());
    for (int i = ladder_degree(lad); i >= 0; --i)
        acc = poly_add(f, poly_mul(f, acc, g), lad[i]);
    return acc;
}

// All ring roots of the nonzero ladder that involve only variables 0..v,
// use X_v to degree at most budget, and lower variables to degree at most
// q-1. Digits of X_v are chosen low power first.
std::vector<SparsePolynomial> ring_roots(const Field& f, Ladder lad, int v, int budget,
                                         int m) {
    std::vector<SparsePolynomial> out;
    if (v < 0) {
        // Only constant coefficients remain; scan the field.
        int t = ladder_degree(lad);
        Exponent zero(m, 0);
        std::vector<int> cs((size_t)t + 1);
        for (int i = 0; i <= t; ++i) cs[i] = lad[i].coeff(zero);
        for (int g = 0; g < f.q(); ++g) {
            int acc = 0;
            for (int i = t; i >= 0; --i) acc = f.add(f.mul(acc, g), cs[i]);
            if (acc == 0) {
                SparsePolynomial root(m);
                root.set_coeff(zero, g);
                out.push_back(std::move(root));
            }
        }
        return out;
    }

    // Dividing out a common X_v power keeps the specialization nonzero and
    // changes no roots.
    int strip = min_var_power(lad, v);
    if (strip > 0) lad = divide_out_var(lad, v, strip);
    if (ladder_degree(lad) == 0) return out;

    Ladder spec = specialize_var_zero(lad, v);
    auto digits = ring_roots(f, std::move(spec), v - 1, f.q() - 1, m);
    for (const auto& g : digits) {
        if (budget == 0) {
            if (ladder_at(f, lad, g).is_zero()) out.push_back(g);
            continue;
        }
        Ladder shifted = shift_ladder(f, lad, g, v);
        for (auto& rest : ring_roots(f, std::move(shifted), v, budget - 1, m))
            out.push_back(poly_add(f, g, raise_var(rest, v, 1)));
    }
    return out;
}

// Invert the q x q Vandermonde matrix on the field's own element order.
std::vector<std::vector<int>> vandermonde_inverse(const Field& f) {
    int q = f.q();
    Mat aug;
    aug.rows = q;
    aug.cols = 2 * q;
    aug.a.assign((size_t)q * 2 * q, 0);
    for (int r = 0; r < q; ++r) {
        for (int c = 0; c < q; ++c) aug.at(r, c) = f.pow(r, c);
        aug.at(r, q + r) = 1;
    }
    auto pivots = rref_in_place(f, aug);
    if ((int)pivots.size() != q)
        throw std::logic_error("vandermonde_inverse: matrix is singular");
    std::vector<std::vector<int>> inv((size_t)q, std::vector<int>((size_t)q, 0));
    for (int r = 0; r < q; ++r)
        for (int c = 0; c < q; ++c) inv[r][c] = aug.at(r, q + c);
    return inv;
}

// The unique polynomial with every variable degree <= q-1 taking the given
// values on the full point grid, via one inverse Vandermonde pass per axis.
SparsePolynomial box_poly_from_values(const Field& f, const Word& values, int m) {
    int q = f.q();
    long long n = (long long)values.size();
    auto inv = vandermonde_inverse(f);

    std::vector<int> data(values.begin(), values.end());
    std::vector<int> slice((size_t)q, 0);
    long long stride = n;
    for (int c = 0; c < m; ++c) {
        stride /= q;
        for (long long base = 0; base < n; ++base) {
            if ((base / stride) % q != 0) continue;
            for (int dg = 0; dg < q; ++dg) slice[dg] = data[base + dg * stride];
            for (int i = 0; i < q; ++i) {
                int acc = 0;
                for (int j = 0; j < q; ++j) acc = f.add(acc, f.mul(inv[i][j], slice[j]));
                data[base + i * stride] = acc;
            }
        }
    }

    SparsePolynomial out(m);
    for (long long idx = 0; idx < n; ++idx) {
        if (data[idx] == 0) continue;
        Exponent e(m, 0);
        long long rem = idx;
        for (int c = m - 1; c >= 0; --c) {
            e[c] = (int)(rem % q);
            rem /= q;
        }
        out.set_coeff(e, data[idx]);
    }
    return out;
}

// Substitute Y = g and fold exponents after every Horner step; zero result
// means g is a root in the evaluation sense.
bool folded_value_is_zero(const Field& f, const Ladder& lad, const SparsePolynomial& g) {
    SparsePolynomial acc(g.vars());
    for (int i = ladder_degree(lad); i >= 0; --i)
        acc = poly_add(f, poly_mul_reduced(f, acc, g), lad[i]);
    return poly_reduce(f, acc).is_zero();
}

} // namespace

std::vector<SparsePolynomial> roots_in_y(const Field& f, const YPolynomial& q, int m) {
    int t = q.degree();
    if (t < 0) throw std::invalid_argument("roots_in_y: zero polynomial");
    std::vector<SparsePolynomial> cands;
    if (t == 0) return cands;

    Ladder lad(q.coeff.begin(), q.coeff.begin() + t + 1);
    bool fast_path_done = false;
    if (t == 1) {
        // Pointwise: each grid point pins the root's value unless the leading
        // coefficient vanishes there too.
        auto points = enumerate_points(f.q(), m);
        int n = (int)points.size();
        Word vals(n, 0);
        bool contradiction = false;
        bool any_free = false;
        for (int j = 0; j < n && !contradiction; ++j) {
            int w1 = lad[1].eval(f, points[j]);
            int w0 = lad[0].eval(f, points[j]);
            if (w1 == 0) {
                if (w0 != 0) contradiction = true;
                any_free = true;
            } else {
                vals[j] = f.div(f.neg(w0), w1);
            }
        }
        if (contradiction) return {};
        if (!any_free) {
            cands.push_back(box_poly_from_values(f, vals, m));
            fast_path_done = true;
        }
        // Free positions leave several solutions; fall through to the
        // digit recursion for those.
    }
    if (!fast_path_done) cands = ring_roots(f, lad, m - 1, f.q() - 1, m);

    std::vector<SparsePolynomial> out;
    std::set<std::string> seen;
    for (auto& g : cands) {
        if (!folded_value_is_zero(f, lad, g)) continue;
        if (seen.insert(g.to_string()).second) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [](const SparsePolynomial& a, const SparsePolynomial& b) {
                  return a.terms() < b.terms();
              });
    return out;
}

std::vector<ListEntry> list_decode_with_plan(const EvaluationCode& code,
                                             const ListPlan& pl, const Word& y) {
    if (!pl.feasible) throw std::invalid_argument("list_decode: plan is infeasible");
    if (code.field().q() != pl.q || code.m() != pl.m)
        throw std::invalid_argument("list_decode: code does not match the plan");
    if ((long long)code.n() != pl.n || (long long)y.size() != pl.n)
        throw std::invalid_argument("list_decode: word length mismatch");

    YPolynomial qp = interpolate(code.field_ptr(), pl, y);
    auto roots = roots_in_y(code.field(), qp, pl.m);

    std::vector<ListEntry> out;
    for (auto& g : roots) {
        bool inside = true;
        for (const auto& [e, c] : g.terms())
            if (!code.exponents().contains(e)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        Word cw = code.encode(g);
        int dist = hamming_distance(cw, y);
        if (dist > pl.r) continue;
        ListEntry entry;
        entry.codeword = std::move(cw);
        entry.message = std::move(g);
        entry.distance = dist;
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(), [](const ListEntry& a, const ListEntry& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.codeword < b.codeword;
    });
    return out;
}

std::vector<ListEntry> list_decode(const EvaluationCode& code, long long d,
                                   const Word& y, int r, LMode mode) {
    ListPlan pl = plan(code.field().q(), code.m(), d, r, mode);
    if (!pl.feasible)
        throw std::invalid_argument("list_decode: radius " + std::to_string(r) +
                                    " is infeasible for this code");
    return list_decode_with_plan(code, pl, y);
}

int unique_radius_via_welch(int q, int m, long long d) {
    long long n = space_size(q, m);
    if (d < 1 || d > n) throw std::invalid_argument("welch: need 1 <= d <= q^m");
    int best = 0;
    for (int r = 1; r + 1 <= n; ++r) {
        long long da = r + 1;
        long long db = std::max(1LL, n + r - d);
        long long count = build_hyp_set(q, m, da).size();
        if (db <= n) count += build_hyp_set(q, m, db).size();
        if (count <= n) break;
        best = r;
    }
    return best;
}

} // namespace hypcode
