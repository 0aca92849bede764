// Acceptance checks for the whole toolkit, one numbered criterion per line.
// Runs standalone:  acceptance [--only N]
// Exit status is nonzero when any executed criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypcode/code.hpp"
#include "hypcode/decoders.hpp"
#include "hypcode/field.hpp"
#include "hypcode/lattice.hpp"
#include "hypcode/listdec.hpp"

using namespace hypcode;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome ok(std::string d) { return {true, std::move(d)}; }
Outcome bad(std::string d) { return {false, std::move(d)}; }

SparsePolynomial random_message(std::mt19937_64& gen, const EvaluationCode& code) {
    SparsePolynomial msg(code.m());
    for (const auto& e : code.exponents().members)
        msg.set_coeff(e, (int)(gen() % (unsigned long long)code.field().q()));
    return msg;
}

// 1. Hyperbolicity thresholds at q=9, m=2.
Outcome criterion1() {
    for (int s = 0; s < 16; ++s) {
        bool got = rm_is_hyperbolic(9, 2, s);
        bool want = (s <= 4 || s >= 14);
        if (got != want)
            return bad("s=" + std::to_string(s) + " classified " +
                       (got ? "hyperbolic" : "not hyperbolic"));
    }
    return ok("all 16 thresholds match");
}

// 2. Degree brackets around hyperbolic sets, re-verified set-wise.
Outcome criterion2() {
    struct Fix { int q, m; long long d; int largest, smallest; };
    // largest -1 means unpinned, set checks only
    const Fix fixes[] = {
        {9, 2, 27, 6, 7},
        {9, 2, 9, 8, 12},
        {11, 2, 32, 8, 10},
        {32, 2, 225, 24, 34},
        {27, 3, 37, -1, 70},
    };
    for (const auto& fx : fixes) {
        std::string where = "(" + std::to_string(fx.q) + "," + std::to_string(fx.m) +
                            "," + std::to_string(fx.d) + ")";
        int lg = largest_rm_inside_hyp(fx.q, fx.m, fx.d);
        int sm = smallest_rm_containing_hyp(fx.q, fx.m, fx.d);
        if (fx.largest >= 0 && lg != fx.largest)
            return bad(where + " largest degree " + std::to_string(lg));
        if (sm != fx.smallest)
            return bad(where + " smallest degree " + std::to_string(sm));
        ExponentSet hyp = build_hyp_set(fx.q, fx.m, fx.d);
        if (!is_subset(build_rm_set(fx.q, fx.m, lg), hyp))
            return bad(where + " lower degree set not inside");
        if (!is_subset(hyp, build_rm_set(fx.q, fx.m, sm)))
            return bad(where + " upper degree set not containing");
        if (lg + 1 <= fx.m * (fx.q - 1) &&
            is_subset(build_rm_set(fx.q, fx.m, lg + 1), hyp))
            return bad(where + " lower bracket not tight");
        if (sm >= 1 && is_subset(hyp, build_rm_set(fx.q, fx.m, sm - 1)))
            return bad(where + " upper bracket not tight");
    }
    return ok("5 bracket pairs exact, inclusions and tightness verified set-wise");
}

// 3. Brute-force minimum weight equals the footprint bound on every small
//    family code.
Outcome criterion3() {
    int checked = 0;
    for (int q : {2, 3, 4, 5}) {
        auto field = make_field_q(q);
        for (int m : {1, 2}) {
            std::vector<ExponentSet> sets;
            for (int s = 0; s <= m * (q - 1); ++s) sets.push_back(build_rm_set(q, m, s));
            long long qm = 1;
            for (int i = 0; i < m; ++i) qm *= q;
            for (long long d = 1; d <= qm; ++d) sets.push_back(build_hyp_set(q, m, d));
            for (int s = 0; s <= q - 1; ++s) sets.push_back(build_cube_set(q, m, s));
            for (auto& set : sets) {
                if (set.size() * std::log2((double)q) > 18.0 + 1e-9) continue;
                EvaluationCode code(field, std::move(set));
                long long mw = min_weight_bruteforce(code);
                if (mw != code.footprint_bound())
                    return bad(code.exponents().tag + " at q=" + std::to_string(q) +
                               " m=" + std::to_string(m) + ": weight " +
                               std::to_string(mw) + " vs bound " +
                               std::to_string(code.footprint_bound()));
                ++checked;
            }
        }
    }
    return ok(std::to_string(checked) + " codes, minimum weight == footprint bound");
}

// 4. Recursive box decoder at its full radius, with pinned call counts.
Outcome criterion4() {
    {
        auto field = make_field_q(8);
        if (cube_decode_radius(8, 3, 2) != 8) return bad("q=8 radius wrong");
        EvaluationCode code(field, build_cube_set(8, 2, 3));
        std::mt19937_64 gen(7001);
        for (int trial = 0; trial < 500; ++trial) {
            SparsePolynomial msg = random_message(gen, code);
            Word w = code.encode(msg);
            auto [y, pos] = corrupt(*field, w, 8, 900000ULL + trial);
            auto res = decode_cube(field, 3, 2, y);
            if (!res || res->codeword != w)
                return bad("q=8 trial " + std::to_string(trial) + " not corrected");
            if (res->oracle_calls.at("rs") != 12)
                return bad("q=8 trial " + std::to_string(trial) + " made " +
                           std::to_string(res->oracle_calls.at("rs")) + " calls");
        }
    }
    {
        auto field = make_field_q(32);
        if (cube_decode_radius(32, 24, 2) != 15) return bad("q=32 radius wrong");
        EvaluationCode code(field, build_cube_set(32, 2, 24));
        std::mt19937_64 gen(7002);
        for (int trial = 0; trial < 50; ++trial) {
            SparsePolynomial msg = random_message(gen, code);
            Word w = code.encode(msg);
            auto [y, pos] = corrupt(*field, w, 15, 910000ULL + trial);
            auto res = decode_cube(field, 24, 2, y);
            if (!res || res->codeword != w)
                return bad("q=32 trial " + std::to_string(trial) + " not corrected");
            if (res->oracle_calls.at("rs") != 57)
                return bad("q=32 trial " + std::to_string(trial) + " made " +
                           std::to_string(res->oracle_calls.at("rs")) + " calls");
        }
    }
    return ok("500 trials at q=8 (12 calls each) and 50 at q=32 (57 calls each)");
}

// 5. Coset decoding is order-independent across every pattern within radius.
Outcome criterion5() {
    auto field = make_field_q(4);
    CodePtr a = make_code(field, build_rm_set(4, 2, 2));
    EvaluationCode b(field, build_hyp_set(4, 2, 6));
    if (b.footprint_bound() != 6) return bad("outer bound moved");
    auto dec_a = make_bounded_decoder(a, 2);
    std::mt19937_64 gen(5001);
    Word w = b.encode(random_message(gen, b));
    long long patterns = 0;
    auto run = [&](const Word& y) -> Outcome {
        for (bool rev : {false, true}) {
            auto res = decode_coset(*dec_a, b, y, rev);
            if (!res || res->codeword != w)
                return bad("pattern " + std::to_string(patterns) +
                           (rev ? " (reversed)" : "") + " missed");
        }
        ++patterns;
        return ok("");
    };
    Outcome r = run(w);
    if (!r.pass) return r;
    for (int p = 0; p < 16; ++p)
        for (int d1 = 1; d1 <= 3; ++d1) {
            Word y = w;
            y[p] = field->add(y[p], d1);
            r = run(y);
            if (!r.pass) return r;
        }
    for (int p1 = 0; p1 < 16; ++p1)
        for (int p2 = p1 + 1; p2 < 16; ++p2)
            for (int d1 = 1; d1 <= 3; ++d1)
                for (int d2 = 1; d2 <= 3; ++d2) {
                    Word y = w;
                    y[p1] = field->add(y[p1], d1);
                    y[p2] = field->add(y[p2], d2);
                    r = run(y);
                    if (!r.pass) return r;
                }
    return ok(std::to_string(patterns) + " patterns up to weight 2, both orders agree");
}

// 6. Supercode decoding corrects 2 errors at q=9.
Outcome criterion6() {
    auto field = make_field_q(9);
    EvaluationCode inner(field, build_hyp_set(9, 2, 9));
    CodePtr outer = make_code(field, build_rm_set(9, 2, 12));
    if (rm_min_distance(9, 2, 12) != 5) return bad("outer distance moved");
    auto dec = make_bounded_decoder(outer, 2);
    std::mt19937_64 gen(6001);
    for (int trial = 0; trial < 200; ++trial) {
        SparsePolynomial msg = random_message(gen, inner);
        Word w = inner.encode(msg);
        int e = (int)(gen() % 3);
        auto [y, pos] = corrupt(*field, w, e, 600000ULL + trial);
        auto res = decode_supercode(inner, *dec, y);
        if (!res || res->codeword != w || !(res->message == msg) ||
            res->errors_corrected != e)
            return bad("trial " + std::to_string(trial) + " at weight " +
                       std::to_string(e));
    }
    return ok("200 trials up to weight 2 all corrected");
}

// 7. Interpolation plan at q=16, d=81. The radius 9 half expects the planner
//    to refuse, and the planner does not: the level sizes at r=9 sum to 268
//    over 256 points, so the plan comes back feasible. Left red on purpose
//    rather than weakening the check.
Outcome criterion7() {
    ListPlan pl = plan(16, 2, 81, 8);
    if (!pl.feasible || pl.t != 1 || pl.levels.size() != 2)
        return bad("r=8 plan shape wrong");
    if (!(pl.levels[0].members == build_hyp_set(16, 2, 9).members))
        return bad("r=8 level 0 set wrong");
    if (!(pl.levels[1].members == build_cube_set(16, 2, 5).members))
        return bad("r=8 level 1 set wrong");
    if (pl.unknowns != 272 || pl.n != 256) return bad("r=8 count wrong");
    if (!l_set(16, 2, 81, 8, 2, LMode::strict).empty()) return bad("r=8 level 2 not empty");
    ListPlan r9 = plan(16, 2, 81, 9);
    if (r9.feasible)
        return bad("r=9 expected infeasible, planner finds Y-degree " +
                   std::to_string(r9.t) + " with " + std::to_string(r9.unknowns) +
                   " unknowns over " + std::to_string(r9.n) + " points");
    return ok("r=8 plan exact and r=9 infeasible");
}

// 8. List output equals the exhaustive radius ball at q=4, d=9.
Outcome criterion8() {
    auto field = make_field_q(4);
    EvaluationCode code(field, build_hyp_set(4, 2, 9));
    std::vector<Word> all;
    {
        std::vector<int> digits(code.k(), 0);
        while (true) {
            SparsePolynomial msg(2);
            for (int i = 0; i < code.k(); ++i)
                msg.set_coeff(code.exponents().members[i], digits[i]);
            all.push_back(code.encode(msg));
            int j = code.k() - 1;
            while (j >= 0 && digits[j] == 3) { digits[j] = 0; --j; }
            if (j < 0) break;
            ++digits[j];
        }
    }
    if (max_radius(4, 2, 9) != 2) return bad("feasible radius range moved");
    long long words = 0;
    for (int r = 1; r <= 2; ++r) {
        ListPlan pl = plan(4, 2, 9, r);
        std::mt19937_64 gen(8000 + r);
        for (int i = 0; i < 1000; ++i) {
            Word y(16);
            if (i < 500) {
                for (auto& v : y) v = (int)(gen() % 4);
            } else {
                Word w = code.encode(random_message(gen, code));
                int e = (int)(gen() % (unsigned)(r + 1));
                y = corrupt(*field, w, e, (unsigned long long)r * 100000 + i).first;
            }
            auto entries = list_decode_with_plan(code, pl, y);
            std::set<Word> got;
            for (const auto& en : entries) {
                if (hamming_distance(en.codeword, y) != en.distance ||
                    en.distance > r || code.encode(en.message) != en.codeword)
                    return bad("r=" + std::to_string(r) + " word " +
                               std::to_string(i) + " bad entry");
                got.insert(en.codeword);
            }
            std::set<Word> want;
            for (const auto& c : all)
                if (hamming_distance(c, y) <= r) want.insert(c);
            if (got != want)
                return bad("r=" + std::to_string(r) + " word " + std::to_string(i) +
                           " list has " + std::to_string(got.size()) + " codewords, ball has " +
                           std::to_string(want.size()));
            ++words;
        }
    }
    return ok(std::to_string(words) + " received words match the exhaustive ball");
}

// 9. Radius 8 at q=16, d=81 always returns exactly the transmitted word.
Outcome criterion9() {
    auto field = make_field_q(16);
    EvaluationCode code(field, build_hyp_set(16, 2, 81));
    ListPlan pl = plan(16, 2, 81, 8);
    std::mt19937_64 gen(9001);
    for (int trial = 0; trial < 100; ++trial) {
        SparsePolynomial msg = random_message(gen, code);
        Word w = code.encode(msg);
        auto [y, pos] = corrupt(*field, w, 8, 901000ULL + trial);
        auto entries = list_decode_with_plan(code, pl, y);
        if (entries.size() != 1 || entries[0].codeword != w)
            return bad("trial " + std::to_string(trial) + " list size " +
                       std::to_string(entries.size()));
    }
    return ok("100 trials, list is always exactly the transmitted word");
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strncmp(argv[i], "--only=", 7) == 0) {
            only = std::atoi(argv[i] + 7);
        } else {
            std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > 10) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }

    Outcome (*runners[])() = {criterion1, criterion2, criterion3, criterion4,
                              criterion5, criterion6, criterion7, criterion8,
                              criterion9};
    int failures = 0;
    double total = 0.0;
    bool ran_all = (only == 0 || only == 10);
    for (int i = 1; i <= 9; ++i) {
        if (!ran_all && i != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = runners[i - 1]();
        } catch (const std::exception& ex) {
            out = bad(std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
        total += secs;
        std::printf("criterion %d: %s (%.2fs) %s\n", i, out.pass ? "PASS" : "FAIL",
                    secs, out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (ran_all) {
        bool p10 = total < 1200.0;
        std::printf("criterion 10: %s (%.2fs) one binary, full suite wall time %.1fs of the 1200s budget\n",
                    p10 ? "PASS" : "FAIL", 0.0, total);
        if (!p10) ++failures;
    }
    if (failures)
        std::printf("%d of %s criteria failed\n", failures, ran_all ? "10" : "the requested");
    return failures ? 1 : 0;
}
