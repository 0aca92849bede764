#include "hypcode/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypcode {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), used only while constructing the field:
// coefficient vectors, constant term first, no trailing-zero trimming needed
// beyond what deg() does.

int deg(const std::vector<int>& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a mod b over GF(p), b monic-normalizable (leading coefficient inverted).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = deg(b);
    int lead_inv = 0;
    for (int x = 1; x < p; ++x)
        if (b[db] * x % p == 1) { lead_inv = x; break; }
    for (int i = deg(a); i >= db; --i) {
        if (a[i] == 0) continue;
        int f = a[i] * lead_inv % p;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
    }
    a.resize(std::max(db, 1));
    return a;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(c), mod, p);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& f, int p) {
    int df = deg(f);
    for (int dd = 1; 2 * dd <= df; ++dd) {
        // enumerate monic divisors of degree dd by base-p odometer over the
        // lower dd coefficients
        std::vector<int> div(dd + 1, 0);
        div[dd] = 1;
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            long long t = idx;
            for (int i = 0; i < dd; ++i) { div[i] = (int)(t % p); t /= p; }
            if (deg(poly_mod(f, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> canonical_modulus(int p, int k) {
    if (k == 1) return {0, 1}; // x; never consulted by prime-field arithmetic
    // Scan monic degree-k polynomials in lexicographic order of
    // (c_0, c_1, ..., c_{k-1}) and keep the first irreducible one.
    std::vector<int> f(k + 1, 0);
    f[k] = 1;
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        // digits of idx, most significant into c_0, so that incrementing idx
        // walks the constant-term-first lexicographic order
        long long t = idx;
        for (int i = k - 1; i >= 0; --i) { f[i] = (int)(t % p); t /= p; }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found; unreachable");
}

} // namespace

Field::Field(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > (1 << 20)) throw std::invalid_argument("field size exceeds the 2^20 guard");
    }
    q_ = (int)q;
    modulus_ = canonical_modulus(p, k);

    // Multiplication tables via a generator of the unit group. A candidate g
    // is a generator exactly when its order is q-1, which the power walk
    // below detects by returning to 1 only after q-1 steps.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    bool found = (q_ == 2);
    if (q_ == 2) { exp_[0] = 1; log_[1] = 0; }
    for (int g = 2; g < q_ && !found; ++g) {
        int x = 1;
        int steps = 0;
        do {
            x = mul_poly(x, g);
            ++steps;
        } while (x != 1 && steps < q_);
        if (steps == q_ - 1) {
            x = 1;
            for (int i = 0; i < q_ - 1; ++i) {
                exp_[i] = x;
                log_[x] = i;
                x = mul_poly(x, g);
            }
            found = true;
        }
    }
    if (!found) throw std::logic_error("no generator found; unreachable");

    if (q_ <= 1024) {
        add_table_.assign((size_t)q_ * q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                add_table_[(size_t)a * q_ + b] = add_digits(a, b);
    }
}

int Field::add_digits(int a, int b) const {
    if (k_ == 1) return (a + b) % p_;
    int r = 0, base = 1;
    while (a > 0 || b > 0) {
        r += (a % p_ + b % p_) % p_ * base;
        a /= p_;
        b /= p_;
        base *= p_;
    }
    return r;
}

int Field::mul_poly(int a, int b) const {
    if (k_ == 1) return a * b % p_;
    // expand both indices to coefficient vectors, multiply, reduce
    std::vector<int> va(k_), vb(k_);
    for (int i = 0; i < k_; ++i) { va[i] = a % p_; a /= p_; }
    for (int i = 0; i < k_; ++i) { vb[i] = b % p_; b /= p_; }
    std::vector<int> c(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (va[i] == 0) continue;
        for (int j = 0; j < k_; ++j)
            c[i + j] = (c[i + j] + va[i] * vb[j]) % p_;
    }
    c = poly_mod(std::move(c), modulus_, p_);
    int r = 0, base = 1;
    for (int i = 0; i < (int)c.size() && i < k_; ++i) {
        r += c[i] * base;
        base *= p_;
    }
    return r;
}

void Field::check_element(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("element index out of range");
}

int Field::add(int a, int b) const {
    check_element(a);
    check_element(b);
    if (!add_table_.empty()) return add_table_[(size_t)a * q_ + b];
    return add_digits(a, b);
}

int Field::neg(int a) const {
    check_element(a);
    if (k_ == 1) return (p_ - a) % p_;
    int r = 0, base = 1;
    for (int i = 0; i < k_; ++i) {
        r += (p_ - a % p_) % p_ * base;
        a /= p_;
        base *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    int e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

int Field::inv(int a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("inversion of the zero element");
    int e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
}

int Field::div(int a, int b) const { return mul(a, inv(b)); }

int Field::pow(int a, long long e) const {
    check_element(a);
    if (e < 0) throw std::invalid_argument("negative exponent");
    int r = 1;
    int base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<int> Field::elements() const {
    std::vector<int> v(q_);
    for (int i = 0; i < q_; ++i) v[i] = i;
    return v;
}

std::string Field::spec_line() const {
    std::ostringstream os;
    os << "GF p=" << p_ << " k=" << k_ << " mod=";
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

Field Field::parse_spec_line(const std::string& line) {
    std::istringstream is(line);
    std::string tag, pf, kf, mf;
    is >> tag >> pf >> kf >> mf;
    if (tag != "GF" || pf.rfind("p=", 0) != 0 || kf.rfind("k=", 0) != 0 ||
        mf.rfind("mod=", 0) != 0)
        throw std::invalid_argument("malformed field spec line: " + line);
    int p = std::stoi(pf.substr(2));
    int k = std::stoi(kf.substr(2));
    Field f(p, k);
    // the modulus in the line must match the canonical one; anything else
    // would silently change element encodings
    std::string mods = mf.substr(4);
    std::vector<int> given;
    std::istringstream ms(mods);
    std::string piece;
    while (std::getline(ms, piece, ',')) given.push_back(std::stoi(piece));
    if (given != f.modulus())
        throw std::invalid_argument("field spec carries a non-canonical modulus");
    return f;
}

FieldPtr make_field(int p, int k) { return std::make_shared<const Field>(p, k); }

FieldPtr make_field_q(int q) {
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p != 0) continue;
        int k = 0;
        long long t = q;
        while (t % p == 0) { t /= p; ++k; }
        if (t != 1) break;
        return make_field(p, k);
    }
    throw std::invalid_argument("field size is not a prime power");
}

} // namespace hypcode
