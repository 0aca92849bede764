#include "hypcode/decoders.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hypcode/linalg.hpp"

namespace hypcode {

namespace {

constexpr long long kEnumGuard = 1LL << 22;

long long clamped_pow(long long base, int e, long long limit) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        v *= base;
        if (v > limit) return limit + 1;
    }
    return v;
}

} // namespace

// ---------------------------------------------------------------------------
// one-variable decoder

RSDecoder::RSDecoder(FieldPtr field, int s)
    : field_(std::move(field)),
      s_(s),
      code_(field_, build_rm_set(field_ ? field_->q() : 2, 1, s)) {
    if (s < 0 || s > field_->q() - 1) throw std::invalid_argument("degree bound outside [0, q-1]");
}

std::optional<DecodeResult> RSDecoder::decode(const Word& y) const {
    const Field& f = *field_;
    const int q = f.q();
    if ((int)y.size() != q) throw std::invalid_argument("word length must be q");

    // Power-sum syndromes over every evaluation point (zero included, with
    // 0^0 = 1): S_j = sum_a y_a a^j vanishes on codewords for j <= q-2-s,
    // and those q-1-s functionals cut out exactly the code.
    const int num_syn = q - 1 - s_;
    std::vector<int> syn(num_syn, 0);
    for (int j = 0; j < num_syn; ++j) {
        int acc = 0;
        for (int a = 0; a < q; ++a) acc = f.add(acc, f.mul(y[a], f.pow(a, j)));
        syn[j] = acc;
    }

    auto finish = [&](const Word& w, int errs) -> std::optional<DecodeResult> {
        auto msg = code_.try_interpolate(w);
        if (!msg) return std::nullopt;
        DecodeResult res;
        res.codeword = w;
        res.message = *msg;
        res.errors_corrected = errs;
        return res;
    };

    if (std::all_of(syn.begin(), syn.end(), [](int v) { return v == 0; }))
        return finish(y, 0);

    // Berlekamp-Massey: shortest LFSR generating the syndrome sequence.
    std::vector<int> C{1}, B{1};
    int L = 0, shift = 1, b = 1;
    for (int n = 0; n < num_syn; ++n) {
        int delta = syn[n];
        for (int i = 1; i <= L && i < (int)C.size(); ++i)
            delta = f.add(delta, f.mul(C[i], syn[n - i]));
        if (delta == 0) {
            ++shift;
            continue;
        }
        std::vector<int> T = C;
        int coef = f.div(delta, b);
        if ((int)C.size() < (int)B.size() + shift) C.resize(B.size() + shift, 0);
        for (size_t i = 0; i < B.size(); ++i)
            C[i + shift] = f.sub(C[i + shift], f.mul(coef, B[i]));
        if (2 * L <= n) {
            L = n + 1 - L;
            B = T;
            b = delta;
            shift = 1;
        } else {
            ++shift;
        }
    }
    if (L > t()) return std::nullopt;
    C.resize(L + 1, 0);

    // sigma(x) = x^L C(1/x) has the error positions, as field elements, for
    // roots. A trailing zero coefficient of C makes 0 a root, which is how
    // an error at the zero point shows up.
    std::vector<int> err_pos;
    for (int a = 0; a < q; ++a) {
        int acc = C[0];
        for (int i = 1; i <= L; ++i) acc = f.add(f.mul(acc, a), C[i]);
        if (acc == 0) err_pos.push_back(a);
    }
    if ((int)err_pos.size() != L) return std::nullopt;

    // Error values from the first L syndromes: S_j = sum_l e_l pos_l^j.
    Mat system(L, L + 1);
    for (int j = 0; j < L; ++j) {
        for (int l = 0; l < L; ++l) system.at(j, l) = f.pow(err_pos[l], j);
        system.at(j, L) = syn[j];
    }
    std::vector<int> piv = rref_in_place(f, system);
    if ((int)piv.size() != L) return std::nullopt;
    for (size_t i = 0; i < piv.size(); ++i)
        if (piv[i] == L) return std::nullopt;

    Word w = y;
    for (int l = 0; l < L; ++l) w[err_pos[l]] = f.sub(w[err_pos[l]], system.at(l, L));
    return finish(w, hamming_distance(y, w));
}

// ---------------------------------------------------------------------------
// bounded-distance oracles

namespace {

class ExhaustiveDecoder final : public BoundedDecoder {
public:
    ExhaustiveDecoder(CodePtr code, int radius) : code_(std::move(code)), radius_(radius) {
        if (radius_ < 0) throw std::invalid_argument("negative radius");
        if (clamped_pow(code_->field().q(), code_->k(), kEnumGuard) > kEnumGuard)
            throw std::invalid_argument("q^k exceeds the brute-force guard");
    }
    const EvaluationCode& code() const override { return *code_; }
    int radius() const override { return radius_; }
    std::optional<DecodeResult> decode(const Word& y) const override {
        NearestResult nr = nearest_codeword(*code_, y);
        if (nr.distance > radius_) return std::nullopt;
        DecodeResult res;
        res.codeword = std::move(nr.codeword);
        res.message = std::move(nr.message);
        res.errors_corrected = nr.distance;
        return res;
    }

private:
    CodePtr code_;
    int radius_;
};

std::string pack_syndrome(const std::vector<int>& s) {
    std::string key(s.size() * 4, '\0');
    for (size_t i = 0; i < s.size(); ++i) {
        unsigned v = (unsigned)s[i];
        key[4 * i] = (char)(v & 0xff);
        key[4 * i + 1] = (char)((v >> 8) & 0xff);
        key[4 * i + 2] = (char)((v >> 16) & 0xff);
        key[4 * i + 3] = (char)((v >> 24) & 0xff);
    }
    return key;
}

class SyndromeDecoder final : public BoundedDecoder {
public:
    SyndromeDecoder(CodePtr code, int radius) : code_(std::move(code)), radius_(radius) {
        if (radius_ < 0) throw std::invalid_argument("negative radius");
        build_parity_check();
        build_table();
    }
    const EvaluationCode& code() const override { return *code_; }
    int radius() const override { return radius_; }

    std::optional<DecodeResult> decode(const Word& y) const override {
        const Field& f = code_->field();
        if ((int)y.size() != code_->n()) throw std::invalid_argument("word length mismatch");
        std::vector<int> syn = mat_vec_mul(f, h_, y);
        auto it = table_.find(pack_syndrome(syn));
        if (it == table_.end()) return std::nullopt;
        Word w = y;
        for (auto [pos, val] : it->second) w[pos] = f.sub(w[pos], val);
        auto msg = code_->try_interpolate(w);
        if (!msg) throw std::logic_error("syndrome table produced a non-codeword");
        DecodeResult res;
        res.codeword = std::move(w);
        res.message = *msg;
        res.errors_corrected = (int)it->second.size();
        return res;
    }

private:
    using Pattern = std::vector<std::pair<int, int>>; // (position, value)

    void build_parity_check() {
        const Field& f = code_->field();
        const int n = code_->n();
        const int k = code_->k();
        Mat g = code_->generator();
        std::vector<int> pivots = rref_in_place(f, g);
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots) is_pivot[c] = true;
        h_ = Mat(n - k, n);
        int row = 0;
        for (int c = 0; c < n; ++c) {
            if (is_pivot[c]) continue;
            h_.at(row, c) = 1;
            for (size_t i = 0; i < pivots.size(); ++i)
                h_.at(row, pivots[i]) = f.neg(g.at((int)i, c));
            ++row;
        }
    }

    // All error patterns of weight <= radius, keyed by syndrome. Any key
    // collision proves two patterns differ by a codeword, i.e. the radius
    // is past the unique-decoding range for this code; refuse rather than
    // pick a winner silently.
    void build_table() {
        const Field& f = code_->field();
        const int n = code_->n();
        const int q = f.q();
        long long entries = 1; // weight-0 pattern
        {
            // count sum_{w<=r} C(n,w)(q-1)^w before allocating
            long long c = 1;
            for (int w = 1; w <= radius_; ++w) {
                c = c * (n - w + 1) / w;
                long long add = c;
                for (int i = 0; i < w; ++i) {
                    add *= (q - 1);
                    if (add > kEnumGuard) break;
                }
                entries += add;
                if (entries > kEnumGuard)
                    throw std::invalid_argument("syndrome table exceeds the size guard");
            }
        }
        table_.reserve((size_t)entries * 2);
        table_.emplace(pack_syndrome(std::vector<int>(h_.rows, 0)), Pattern{});

        std::vector<int> positions, values, syn(h_.rows, 0);
        for (int w = 1; w <= radius_; ++w) {
            positions.assign(w, 0);
            for (int i = 0; i < w; ++i) positions[i] = i;
            if (w > n) break;
            while (true) {
                enumerate_values(positions, values, syn);
                // next support combination
                int i = w - 1;
                while (i >= 0 && positions[i] == n - w + i) --i;
                if (i < 0) break;
                ++positions[i];
                for (int j = i + 1; j < w; ++j) positions[j] = positions[j - 1] + 1;
            }
        }
    }

    void enumerate_values(const std::vector<int>& positions, std::vector<int>& values,
                          std::vector<int>& syn) {
        const Field& f = code_->field();
        const int q = f.q();
        const int w = (int)positions.size();
        values.assign(w, 1);
        std::fill(syn.begin(), syn.end(), 0);
        for (int i = 0; i < w; ++i) add_column(syn, positions[i], 0, 1);
        while (true) {
            Pattern pat(w);
            for (int i = 0; i < w; ++i) pat[i] = {positions[i], values[i]};
            auto [it, fresh] = table_.emplace(pack_syndrome(syn), std::move(pat));
            if (!fresh)
                throw std::logic_error("syndrome collision: radius exceeds unique decoding");
            int i = w - 1;
            while (i >= 0 && values[i] == q - 1) {
                add_column(syn, positions[i], q - 1, 1);
                values[i] = 1;
                --i;
            }
            if (i < 0) break;
            add_column(syn, positions[i], values[i], values[i] + 1);
            ++values[i];
        }
    }

    void add_column(std::vector<int>& syn, int pos, int from, int to) {
        const Field& f = code_->field();
        int delta = f.sub(to, from);
        for (int r = 0; r < h_.rows; ++r)
            syn[r] = f.add(syn[r], f.mul(delta, h_.at(r, pos)));
    }

    CodePtr code_;
    int radius_;
    Mat h_;
    std::unordered_map<std::string, Pattern> table_;
};

long long syndrome_table_size(int n, int q, int radius) {
    long long entries = 1, c = 1;
    for (int w = 1; w <= radius && w <= n; ++w) {
        c = c * (n - w + 1) / w;
        long long add = c;
        for (int i = 0; i < w; ++i) {
            add *= (q - 1);
            if (add > kEnumGuard) return kEnumGuard + 1;
        }
        entries += add;
        if (entries > kEnumGuard) return kEnumGuard + 1;
    }
    return entries;
}

} // namespace

std::unique_ptr<BoundedDecoder> make_exhaustive_decoder(CodePtr code, int radius) {
    return std::make_unique<ExhaustiveDecoder>(std::move(code), radius);
}

std::unique_ptr<BoundedDecoder> make_syndrome_decoder(CodePtr code, int radius) {
    return std::make_unique<SyndromeDecoder>(std::move(code), radius);
}

std::unique_ptr<BoundedDecoder> make_bounded_decoder(CodePtr code, int radius) {
    if (syndrome_table_size(code->n(), code->field().q(), radius) <= kEnumGuard)
        return make_syndrome_decoder(std::move(code), radius);
    if (clamped_pow(code->field().q(), code->k(), kEnumGuard) <= kEnumGuard)
        return make_exhaustive_decoder(std::move(code), radius);
    throw std::invalid_argument("code too large for any desk-scale decoder");
}

// ---------------------------------------------------------------------------
// supercode and coset decoding

std::optional<DecodeResult> decode_supercode(const EvaluationCode& inner,
                                             const BoundedDecoder& outer,
                                             const Word& y) {
    if (inner.field().q() != outer.code().field().q() || inner.n() != outer.code().n())
        throw std::invalid_argument("inner and outer codes live on different spaces");
    if (!is_subset(inner.exponents(), outer.code().exponents()))
        throw std::invalid_argument("inner exponent set not contained in the outer one");
    auto res = outer.decode(y);
    if (!res) return std::nullopt;
    auto msg = inner.try_interpolate(res->codeword);
    if (!msg) return std::nullopt;
    DecodeResult out;
    out.codeword = std::move(res->codeword);
    out.message = *msg;
    out.errors_corrected = res->errors_corrected;
    out.oracle_calls["dec_outer"] = 1;
    return out;
}

std::optional<DecodeResult> decode_coset(const BoundedDecoder& dec_a,
                                         const EvaluationCode& b,
                                         const Word& y,
                                         bool reverse_order) {
    const EvaluationCode& a = dec_a.code();
    const Field& f = b.field();
    if (a.field().q() != f.q() || a.n() != b.n())
        throw std::invalid_argument("codes live on different spaces");
    if (!is_subset(a.exponents(), b.exponents()))
        throw std::invalid_argument("decoder code is not a subcode");
    if ((int)y.size() != b.n()) throw std::invalid_argument("word length mismatch");

    const int t_b = (int)((b.footprint_bound() - 1) / 2);
    if (dec_a.radius() < t_b)
        throw std::invalid_argument("subcode decoder radius below the coset radius");

    std::vector<Exponent> diff;
    std::set_difference(b.exponents().members.begin(), b.exponents().members.end(),
                        a.exponents().members.begin(), a.exponents().members.end(),
                        std::back_inserter(diff));
    const int q = f.q();
    const int dsz = (int)diff.size();
    if (clamped_pow(q, dsz, kEnumGuard) > kEnumGuard)
        throw std::invalid_argument("coset candidate space too large to iterate");

    // Evaluation rows of the extra monomials, for incremental shifting.
    std::vector<Word> rows(dsz);
    for (int i = 0; i < dsz; ++i) {
        SparsePolynomial mono(b.m());
        mono.set_coeff(diff[i], 1);
        rows[i] = b.eval(mono);
    }

    // Walk candidate coefficient vectors in lexicographic order, first
    // exponent most significant (or the exact reverse), keeping
    // shifted = y - ev(f) current.
    std::vector<int> digits(dsz, reverse_order ? q - 1 : 0);
    Word shifted = y;
    for (int i = 0; i < dsz && reverse_order; ++i)
        for (int j = 0; j < b.n(); ++j)
            shifted[j] = f.sub(shifted[j], f.mul(q - 1, rows[i][j]));

    long long calls = 0;
    auto attempt = [&]() -> std::optional<DecodeResult> {
        ++calls;
        auto r = dec_a.decode(shifted);
        if (!r) return std::nullopt;
        Word cw(b.n());
        for (int j = 0; j < b.n(); ++j)
            cw[j] = f.add(r->codeword[j], f.sub(y[j], shifted[j]));
        int dist = hamming_distance(y, cw);
        if (dist > t_b) return std::nullopt;
        SparsePolynomial fpoly(b.m());
        for (int i = 0; i < dsz; ++i)
            if (digits[i] != 0) fpoly.set_coeff(diff[i], digits[i]);
        DecodeResult out;
        out.codeword = std::move(cw);
        out.message = poly_add(f, r->message, fpoly);
        out.errors_corrected = dist;
        out.oracle_calls["dec_A"] = calls;
        return out;
    };

    auto shift_digit = [&](int i, int from, int to) {
        int delta = f.sub(to, from);
        for (int j = 0; j < b.n(); ++j)
            shifted[j] = f.sub(shifted[j], f.mul(delta, rows[i][j]));
        digits[i] = to;
    };

    while (true) {
        if (auto res = attempt()) return res;
        int i = dsz - 1;
        if (!reverse_order) {
            while (i >= 0 && digits[i] == q - 1) { shift_digit(i, q - 1, 0); --i; }
            if (i < 0) return std::nullopt;
            shift_digit(i, digits[i], digits[i] + 1);
        } else {
            while (i >= 0 && digits[i] == 0) { shift_digit(i, 0, q - 1); --i; }
            if (i < 0) return std::nullopt;
            shift_digit(i, digits[i], digits[i] - 1);
        }
    }
}

std::optional<DecodeResult> decode_intermediate_m2(FieldPtr field, long long d,
                                                   const Word& y) {
    const int q = field->q();
    ExponentSet h = build_hyp_set(q, 2, d);
    if (h.empty()) throw std::invalid_argument("empty code: d exceeds q^2");
    int s = smallest_rm_containing_hyp(q, 2, d);
    if (s == 0) throw std::invalid_argument("degenerate code of constants");
    ExponentSet r_set = build_rm_set(q, 2, s - 1);

    // The search space is H with the one-lower weighted-degree set as the
    // base: candidates live on H minus R, the base decoder works in C_R,
    // and acceptance runs at the union code's radius min(t_R, t_H).
    ExponentSet u;
    u.q = q;
    u.m = 2;
    u.tag = "CUSTOM";
    std::set_union(r_set.members.begin(), r_set.members.end(),
                   h.members.begin(), h.members.end(),
                   std::back_inserter(u.members));
    EvaluationCode union_code(field, u);
    long long t_u = (union_code.footprint_bound() - 1) / 2;

    auto dec_r = make_bounded_decoder(make_code(field, r_set), (int)t_u);
    auto res = decode_coset(*dec_r, union_code, y);
    if (!res) return std::nullopt;
    for (const auto& [e, c] : res->message.terms())
        if (!h.contains(e)) return std::nullopt;
    return res;
}

// ---------------------------------------------------------------------------
// tensor-product decoder

long long cube_decode_radius(int q, int s, int m) {
    long long t_rs = (q - s - 1) / 2;
    long long v = 1;
    for (int i = 0; i < m; ++i) v *= (t_rs + 1);
    return v - 1;
}

long long cube_rs_call_count(int q, int s, int m) {
    long long calls = 1; // f(1)
    long long cols = 1;  // (s+1)^{level-1} column words joining at each level
    for (int level = 2; level <= m; ++level) {
        cols *= (s + 1);
        calls = (long long)q * calls + cols;
    }
    return calls;
}

namespace {

// Decode one block of length q^m against the m-variable cube structure.
// Never shortcuts: the full recursion schedule runs so the decoder's call
// count is a function of (q, s, m) alone.
std::optional<SparsePolynomial> cube_rec(const RSDecoder& rs, int s, int m,
                                         const Word& y, long long& calls) {
    const Field& f = rs.code().field();
    const int q = f.q();
    if (m == 1) {
        ++calls;
        auto r = rs.decode(y);
        if (!r) return std::nullopt;
        return r->message;
    }

    const long long block = (long long)y.size() / q;
    std::vector<std::optional<SparsePolynomial>> subs(q);
    for (int bnum = 0; bnum < q; ++bnum) {
        Word sub(y.begin() + bnum * block, y.begin() + (bnum + 1) * block);
        subs[bnum] = cube_rec(rs, s, m - 1, sub, calls);
    }

    // One length-q word per coefficient position of the (m-1)-variable
    // message: entry b is that coefficient in block b's message, garbage
    // where the block failed. Those are the errors the column stage fixes.
    SparsePolynomial out(m);
    bool ok = true;
    Exponent e(m - 1, 0);
    while (true) {
        Word col(q, 0);
        for (int bnum = 0; bnum < q; ++bnum)
            if (subs[bnum]) col[bnum] = subs[bnum]->coeff(e);
        ++calls;
        auto rc = rs.decode(col);
        if (!rc) {
            ok = false;
        } else if (ok) {
            for (const auto& [de, c] : rc->message.terms()) {
                Exponent full(m, 0);
                full[0] = de[0];
                for (int i = 0; i < m - 1; ++i) full[i + 1] = e[i];
                out.set_coeff(full, c);
            }
        }
        int i = m - 2;
        while (i >= 0 && e[i] == s) { e[i] = 0; --i; }
        if (i < 0) break;
        ++e[i];
    }
    if (!ok) return std::nullopt;
    return out;
}

} // namespace

std::optional<DecodeResult> decode_cube(FieldPtr field, int s, int m, const Word& y) {
    const int q = field->q();
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (s < 0 || s > q - 1) throw std::invalid_argument("degree bound outside [0, q-1]");
    long long n = clamped_pow(q, m, kEnumGuard);
    if (n > kEnumGuard) throw std::invalid_argument("q^m too large");
    if ((long long)y.size() != n) throw std::invalid_argument("word length mismatch");

    RSDecoder rs(field, s);
    long long calls = 0;
    auto msg = cube_rec(rs, s, m, y, calls);
    if (!msg) return std::nullopt;

    EvaluationCode cube(field, build_cube_set(q, m, s));
    Word cw = cube.encode(*msg);
    int dist = hamming_distance(y, cw);
    if (dist > cube_decode_radius(q, s, m)) return std::nullopt;
    DecodeResult res;
    res.codeword = std::move(cw);
    res.message = *msg;
    res.errors_corrected = dist;
    res.oracle_calls["rs"] = calls;
    return res;
}

} // namespace hypcode
