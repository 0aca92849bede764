// Command line front end: parameter reports, containment brackets, set
// export, encode/corrupt/decode round trips, list decoding, and the repro
// fixture suite.
//
// Exit codes: 0 success, 1 decode failure, 2 usage error, 3 repro mismatch.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypcode/code.hpp"
#include "hypcode/decoders.hpp"
#include "hypcode/io.hpp"
#include "hypcode/listdec.hpp"

using namespace hypcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDecodeFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitReproMismatch = 3;

// Space of exact minimum distance computation in cmd_params.
constexpr long long kDeltaGuard = 1LL << 18;

struct CodeOptions {
    std::string family; // rm, hyp, cube
    int q = 0;
    int p = 0;
    int k = 1;
    int m = 0;
    long long d = -1;
    int s = -1;
};

FieldPtr open_field(const CodeOptions& o) {
    if (o.q > 0) return make_field_q(o.q);
    if (o.p > 0) return make_field(o.p, o.k);
    throw std::invalid_argument("give a field with --q or with --p and --k");
}

ExponentSet family_set(const CodeOptions& o, int q) {
    if (o.m < 1) throw std::invalid_argument("--m is required");
    if (o.family == "rm") {
        if (o.s < 0) throw std::invalid_argument("family rm needs --s");
        return build_rm_set(q, o.m, o.s);
    }
    if (o.family == "hyp") {
        if (o.d < 1) throw std::invalid_argument("family hyp needs --d");
        return build_hyp_set(q, o.m, o.d);
    }
    if (o.family == "cube") {
        if (o.s < 0) throw std::invalid_argument("family cube needs --s");
        return build_cube_set(q, o.m, o.s);
    }
    throw std::invalid_argument("unknown family '" + o.family + "' (want rm, hyp, or cube)");
}

std::string word_to_line(const Word& w) {
    std::ostringstream os;
    write_word(os, w);
    std::string s = os.str();
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

void add_code_options(CLI::App* cmd, CodeOptions& o, bool with_family) {
    if (with_family)
        cmd->add_option("family", o.family, "code family: rm, hyp, or cube")->required();
    cmd->add_option("--q", o.q, "field size (prime power)");
    cmd->add_option("--p", o.p, "field characteristic");
    cmd->add_option("--k", o.k, "extension degree over the prime field");
    cmd->add_option("--m", o.m, "number of variables");
    cmd->add_option("--d", o.d, "design distance (hyp family)");
    cmd->add_option("--s", o.s, "degree parameter (rm and cube families)");
}

int cmd_params(const CodeOptions& o, const std::string& in_path) {
    FieldPtr field;
    ExponentSet set;
    if (!in_path.empty()) {
        set = load_set(in_path);
        field = make_field_q(set.q);
    } else {
        field = open_field(o);
        set = family_set(o, field->q());
    }
    EvaluationCode code(field, set);
    std::cout << "q=" << field->q() << " m=" << code.m() << " tag=" << set.tag << "\n";
    std::cout << "n=" << code.n() << "\n";
    std::cout << "k=" << code.k() << "\n";
    std::cout << "FB=" << code.footprint_bound() << "\n";
    double log_words = code.k() * std::log2((double)field->q());
    if (code.k() > 0 && log_words <= std::log2((double)kDeltaGuard) + 1e-9) {
        std::cout << "delta=" << min_weight_bruteforce(code) << "\n";
    } else {
        std::cout << "delta>=" << code.footprint_bound() << " (bound)\n";
    }
    return kExitOk;
}

int cmd_bounds(int q, int m, long long d) {
    int inside = largest_rm_inside_hyp(q, m, d);
    int outside = smallest_rm_containing_hyp(q, m, d);
    auto cube = cube_hyp_bounds(q, m, d);
    std::cout << "largest rm inside: s=" << inside
              << (rm_is_hyperbolic(q, m, inside) ? " (hyperbolic)" : " (not hyperbolic)")
              << "\n";
    std::cout << "smallest rm containing: s=" << outside
              << (rm_is_hyperbolic(q, m, outside) ? " (hyperbolic)" : " (not hyperbolic)")
              << "\n";
    std::cout << "largest cube inside: s=" << cube.first << "\n";
    std::cout << "smallest cube containing: s=" << cube.second << "\n";
    return kExitOk;
}

int cmd_export_set(const CodeOptions& o, const std::string& out_path) {
    FieldPtr field = open_field(o);
    ExponentSet set = family_set(o, field->q());
    if (out_path.empty()) {
        write_set(std::cout, set);
    } else {
        save_set(out_path, set);
        std::cout << "wrote " << set.size() << " exponents to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_make_word(const CodeOptions& o, int errors, unsigned long long seed,
                  const std::string& out_path) {
    if (errors < 0) throw std::invalid_argument("--r must be nonnegative");
    FieldPtr field = open_field(o);
    ExponentSet set = family_set(o, field->q());
    EvaluationCode code(field, set);

    std::mt19937_64 gen(seed);
    SparsePolynomial msg(o.m);
    for (const Exponent& e : set.members)
        msg.set_coeff(e, (int)(gen() % (unsigned long long)field->q()));
    Word clean = code.encode(msg);
    auto [noisy, positions] = corrupt(*field, clean, errors, seed + 1);

    std::cout << "message: " << msg.to_string() << "\n";
    std::cout << "codeword: " << word_to_line(clean) << "\n";
    std::cout << "errors at:";
    for (int p : positions) std::cout << " " << p;
    std::cout << "\n";
    if (out_path.empty()) {
        std::cout << "received: " << word_to_line(noisy) << "\n";
    } else {
        save_word(out_path, noisy);
        std::cout << "wrote received word to " << out_path << "\n";
    }
    return kExitOk;
}

int report_decode(const std::optional<DecodeResult>& r, const std::string& out_path) {
    if (!r) {
        std::cout << "decode failed\n";
        return kExitDecodeFail;
    }
    std::cout << "message: " << r->message.to_string() << "\n";
    std::cout << "codeword: " << word_to_line(r->codeword) << "\n";
    std::cout << "errors corrected: " << r->errors_corrected << "\n";
    for (const auto& [name, count] : r->oracle_calls)
        std::cout << "calls " << name << ": " << count << "\n";
    if (!out_path.empty()) save_word(out_path, r->codeword);
    return kExitOk;
}

int cmd_decode(const CodeOptions& o, const std::string& via, const std::string& in_path,
               const std::string& out_path) {
    FieldPtr field = open_field(o);
    Word y = load_word(in_path);

    if (via == "cube") {
        if (o.s < 0 || o.m < 1) throw std::invalid_argument("cube decoding needs --s and --m");
        return report_decode(decode_cube(field, o.s, o.m, y), out_path);
    }
    if (via == "intermediate") {
        if (o.d < 1) throw std::invalid_argument("intermediate decoding needs --d");
        return report_decode(decode_intermediate_m2(field, o.d, y), out_path);
    }
    if (via == "supercode") {
        if (o.d < 1 || o.m < 1)
            throw std::invalid_argument("supercode decoding needs --d and --m");
        int q = field->q();
        ExponentSet h = build_hyp_set(q, o.m, o.d);
        EvaluationCode inner(field, h);
        int s = smallest_rm_containing_hyp(q, o.m, o.d);
        long long delta = rm_min_distance(q, o.m, s);
        auto outer_code = make_code(field, build_rm_set(q, o.m, s));
        auto outer = make_bounded_decoder(outer_code, (int)((delta - 1) / 2));
        return report_decode(decode_supercode(inner, *outer, y), out_path);
    }
    if (via == "coset") {
        if (o.d < 1 || o.m < 1) throw std::invalid_argument("coset decoding needs --d and --m");
        int q = field->q();
        ExponentSet h = build_hyp_set(q, o.m, o.d);
        EvaluationCode outer(field, h);
        int t_b = (int)((outer.footprint_bound() - 1) / 2);
        int s = largest_rm_inside_hyp(q, o.m, o.d);
        auto inner_code = make_code(field, build_rm_set(q, o.m, s));
        auto dec_a = make_bounded_decoder(inner_code, t_b);
        return report_decode(decode_coset(*dec_a, outer, y), out_path);
    }
    if (via == "nearest") {
        ExponentSet set = family_set(o, field->q());
        EvaluationCode code(field, set);
        NearestResult r = nearest_codeword(code, y);
        std::cout << "message: " << r.message.to_string() << "\n";
        std::cout << "codeword: " << word_to_line(r.codeword) << "\n";
        std::cout << "distance: " << r.distance << "\n";
        if (!out_path.empty()) save_word(out_path, r.codeword);
        return kExitOk;
    }
    throw std::invalid_argument("unknown --via '" + via +
                                "' (want supercode, coset, intermediate, cube, or nearest)");
}

int cmd_list_decode(int q, int m, long long d, int r, const std::string& mode_name,
                    const std::string& in_path) {
    LMode mode;
    if (mode_name == "strict")
        mode = LMode::strict;
    else if (mode_name == "reduced")
        mode = LMode::reduced;
    else
        throw std::invalid_argument("unknown --mode '" + mode_name + "'");

    ListPlan pl = plan(q, m, d, r, mode);
    std::cout << "plan: " << (pl.feasible ? "feasible" : "infeasible");
    if (pl.feasible) std::cout << " t=" << pl.t;
    std::cout << " unknowns=" << pl.unknowns << " n=" << pl.n << " levels=";
    for (size_t i = 0; i < pl.levels.size(); ++i)
        std::cout << (i ? "," : "") << pl.levels[i].size();
    std::cout << "\n";
    if (!pl.feasible) throw std::invalid_argument("radius " + std::to_string(r) +
                                                  " is infeasible at this distance");

    FieldPtr field = make_field_q(q);
    EvaluationCode code(field, build_hyp_set(q, m, d));
    Word y = load_word(in_path);
    auto entries = list_decode_with_plan(code, pl, y);
    std::cout << "entries: " << entries.size() << "\n";
    for (size_t i = 0; i < entries.size(); ++i) {
        std::cout << i << ": distance=" << entries[i].distance
                  << " message=" << entries[i].message.to_string()
                  << " codeword=" << word_to_line(entries[i].codeword) << "\n";
    }
    return entries.empty() ? kExitDecodeFail : kExitOk;
}

// ---------------------------------------------------------------------------
// repro: frozen fixtures for every worked numeric example. Each quantity is
// recomputed from the library and diffed against the stored value.

struct ReproCheck {
    std::string name;
    long long expected;
    long long got;
};

using ReproRunner = std::vector<ReproCheck> (*)();

long long set_difference_size(const ExponentSet& a, const ExponentSet& b) {
    long long count = 0;
    for (const Exponent& e : a.members)
        if (!b.contains(e)) ++count;
    return count;
}

std::vector<ReproCheck> repro_q9_thresholds() {
    // Hyperbolicity of RM_9(s,2) holds exactly for s <= 4 and s >= 14,
    // over the whole domain 0 <= s < 16.
    long long low = -1, high = -1, all_match = 1;
    for (int s = 0; s <= 15; ++s) {
        bool got = rm_is_hyperbolic(9, 2, s);
        bool want = (s <= 4) || (s >= 14);
        if (got != want) all_match = 0;
        if (got && s <= 8) low = s;
        if (got && s > 8 && high < 0) high = s;
    }
    return {{"largest hyperbolic s below the gap", 4, low},
            {"smallest hyperbolic s above the gap", 14, high},
            {"classification matches on 0..15", 1, all_match}};
}

std::vector<ReproCheck> repro_q9_brackets() {
    return {{"largest rm inside d=27", 6, largest_rm_inside_hyp(9, 2, 27)},
            {"smallest rm containing d=27", 7, smallest_rm_containing_hyp(9, 2, 27)},
            {"largest rm inside d=9", 8, largest_rm_inside_hyp(9, 2, 9)},
            {"smallest rm containing d=9", 12, smallest_rm_containing_hyp(9, 2, 9)}};
}

std::vector<ReproCheck> repro_q27_containment() {
    return {{"smallest rm containing (q=27,m=3,d=37)", 70,
             smallest_rm_containing_hyp(27, 3, 37)}};
}

std::vector<ReproCheck> repro_q11_intermediate() {
    ExponentSet h = build_hyp_set(11, 2, 32);
    ExponentSet r9 = build_rm_set(11, 2, 9);
    ExponentSet r8 = build_rm_set(11, 2, 8);
    ExponentSet u = h;
    for (const Exponent& e : r9.members)
        if (!u.contains(e)) u.members.push_back(e);
    std::sort(u.members.begin(), u.members.end());
    u.tag = "CUSTOM";

    long long t_super = (rm_min_distance(11, 2, 10) - 1) / 2;
    long long t_coset = (footprint_bound(h) - 1) / 2;
    long long t_inter = (footprint_bound(u) - 1) / 2;
    return {{"largest rm inside", 8, largest_rm_inside_hyp(11, 2, 32)},
            {"smallest rm containing", 10, smallest_rm_containing_hyp(11, 2, 32)},
            {"exponents outside rm s=9", 5, set_difference_size(h, r9)},
            {"exponents outside rm s=8", 11, set_difference_size(h, r8)},
            {"supercode errors corrected", 5, t_super},
            {"coset errors corrected", 15, t_coset},
            {"intermediate errors corrected", 10, t_inter}};
}

std::vector<ReproCheck> repro_q32_cube() {
    ExponentSet h = build_hyp_set(32, 2, 225);
    ExponentSet r24 = build_rm_set(32, 2, 24);

    long long t_rm = (rm_min_distance(32, 2, 34) - 1) / 2;
    long long t_h = (footprint_bound(h) - 1) / 2; // floor((225-1)/2) = 112

    // One real decode at full scale to pin the call counter.
    auto field = make_field_q(32);
    EvaluationCode cube(field, build_cube_set(32, 2, 24));
    std::mt19937_64 gen(424242);
    SparsePolynomial msg(2);
    for (const Exponent& e : cube.exponents().members)
        msg.set_coeff(e, (int)(gen() % 32));
    Word clean = cube.encode(msg);
    auto [noisy, positions] = corrupt(*field, clean, 15, 424243);
    auto dec = decode_cube(field, 24, 2, noisy);
    long long rs_calls = dec ? dec->oracle_calls.at("rs") : -1;
    long long recovered = (dec && dec->codeword == clean) ? 1 : 0;

    return {{"largest rm inside", 24, largest_rm_inside_hyp(32, 2, 225)},
            {"smallest rm containing", 34, smallest_rm_containing_hyp(32, 2, 225)},
            {"rm errors corrected", 14, t_rm},
            {"unique decoding errors", 112, t_h}, // (225-1)/2
            {"exponents outside rm s=24", 157, set_difference_size(h, r24)},
            {"cube decoder radius", 15, cube_decode_radius(32, 24, 2)},
            {"rs calls in one decode", 57, rs_calls},
            {"15 errors recovered", 1, recovered}};
}

std::vector<ReproCheck> repro_q16_lset() {
    ListPlan pl = plan(16, 2, 81, 8, LMode::strict);
    long long l0_is_hyp9 = 0, l1_is_cube5 = 0;
    if (pl.levels.size() == 2) {
        l0_is_hyp9 = pl.levels[0].members == build_hyp_set(16, 2, 9).members ? 1 : 0;
        l1_is_cube5 = pl.levels[1].members == build_cube_set(16, 2, 5).members ? 1 : 0;
    }
    long long l2_size = l_set(16, 2, 81, 8, 2, LMode::strict).size();
    return {{"feasible", 1, pl.feasible ? 1 : 0},
            {"level count", 2, (long long)pl.levels.size()},
            {"t", 1, pl.t},
            {"level 0 is the footprint-9 family", 1, l0_is_hyp9},
            {"level 1 is the degree-5 cube", 1, l1_is_cube5},
            {"level 2 empty", 1, l2_size == 0 ? 1 : 0},
            {"unknowns", 272, pl.unknowns},
            {"n", 256, pl.n}};
}

struct ReproCase {
    std::string name;
    std::string about;
    ReproRunner run;
};

const std::vector<ReproCase>& repro_registry() {
    static const std::vector<ReproCase> cases = {
        {"q9-thresholds", "rm hyperbolicity thresholds at q=9, m=2", repro_q9_thresholds},
        {"q9-brackets", "rm brackets around d=9 and d=27 at q=9, m=2", repro_q9_brackets},
        {"q27-containment", "smallest containing rm at q=27, m=3, d=37",
         repro_q27_containment},
        {"q11-intermediate", "decoder capabilities at q=11, m=2, d=32",
         repro_q11_intermediate},
        {"q32-cube", "cube decoding figures at q=32, m=2, d=225", repro_q32_cube},
        {"q16-lset", "list decoding level sets at q=16, d=81, r=8", repro_q16_lset},
    };
    return cases;
}

int cmd_repro(const std::vector<std::string>& names, bool all) {
    std::vector<const ReproCase*> selected;
    if (all || names.empty()) {
        for (const auto& c : repro_registry()) selected.push_back(&c);
    } else {
        for (const auto& want : names) {
            const ReproCase* found = nullptr;
            for (const auto& c : repro_registry())
                if (c.name == want) found = &c;
            if (!found) throw std::invalid_argument("unknown repro case '" + want + "'");
            selected.push_back(found);
        }
    }

    bool ok = true;
    for (const ReproCase* c : selected) {
        std::cout << "case " << c->name << ": " << c->about << "\n";
        for (const ReproCheck& chk : c->run()) {
            bool pass = chk.expected == chk.got;
            ok = ok && pass;
            std::cout << "  " << chk.name << ": expected " << chk.expected << ", got "
                      << chk.got << (pass ? "  PASS" : "  FAIL") << "\n";
        }
    }
    std::cout << (ok ? "repro: all values match\n" : "repro: MISMATCH\n");
    return ok ? kExitOk : kExitReproMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic evaluation code toolkit"};
    app.require_subcommand(1);

    CodeOptions params_opt;
    std::string params_in;
    auto* params = app.add_subcommand("params", "length, dimension, and distance of a code");
    params->add_option("family", params_opt.family, "code family: rm, hyp, or cube");
    params->add_option("--q", params_opt.q, "field size (prime power)");
    params->add_option("--p", params_opt.p, "field characteristic");
    params->add_option("--k", params_opt.k, "extension degree");
    params->add_option("--m", params_opt.m, "number of variables");
    params->add_option("--d", params_opt.d, "design distance (hyp)");
    params->add_option("--s", params_opt.s, "degree parameter (rm, cube)");
    params->add_option("--in", params_in, "read an exponent set file instead of family flags");

    int bounds_q = 0, bounds_m = 0;
    long long bounds_d = 0;
    auto* bounds = app.add_subcommand("bounds", "rm and cube brackets around a design distance");
    bounds->add_option("--q", bounds_q, "field size")->required();
    bounds->add_option("--m", bounds_m, "number of variables")->required();
    bounds->add_option("--d", bounds_d, "design distance")->required();

    std::vector<std::string> repro_names;
    bool repro_all = false;
    auto* repro = app.add_subcommand("repro", "recompute and diff the frozen fixtures");
    repro->add_option("cases", repro_names, "case names (default: all)");
    repro->add_flag("--all", repro_all, "run every registered case");

    CodeOptions export_opt;
    std::string export_out;
    auto* export_set = app.add_subcommand("export-set", "write an exponent set file");
    add_code_options(export_set, export_opt, true);
    export_set->add_option("--out", export_out, "output path (default: stdout)");

    CodeOptions mkw_opt;
    int mkw_errors = 0;
    unsigned long long mkw_seed = 1;
    std::string mkw_out;
    auto* make_word = app.add_subcommand("make-word", "encode a seeded message and add errors");
    add_code_options(make_word, mkw_opt, true);
    make_word->add_option("--r", mkw_errors, "number of corrupted positions");
    make_word->add_option("--seed", mkw_seed, "rng seed");
    make_word->add_option("--out", mkw_out, "received word output path");

    CodeOptions dec_opt;
    std::string dec_via, dec_in, dec_out;
    auto* decode = app.add_subcommand("decode", "decode a received word");
    decode->add_option("family", dec_opt.family, "code family (only used by --via nearest)");
    decode->add_option("--q", dec_opt.q, "field size");
    decode->add_option("--p", dec_opt.p, "field characteristic");
    decode->add_option("--k", dec_opt.k, "extension degree");
    decode->add_option("--m", dec_opt.m, "number of variables");
    decode->add_option("--d", dec_opt.d, "design distance");
    decode->add_option("--s", dec_opt.s, "degree parameter");
    decode->add_option("--via", dec_via, "supercode, coset, intermediate, cube, or nearest")
        ->required();
    decode->add_option("--in", dec_in, "received word file")->required();
    decode->add_option("--out", dec_out, "write the decoded codeword here");

    int ld_q = 0, ld_m = 0, ld_r = 0;
    long long ld_d = 0;
    std::string ld_mode = "strict", ld_in;
    auto* list_dec = app.add_subcommand("list-decode", "list decode a received word");
    list_dec->add_option("--q", ld_q, "field size")->required();
    list_dec->add_option("--m", ld_m, "number of variables")->required();
    list_dec->add_option("--d", ld_d, "design distance")->required();
    list_dec->add_option("--r", ld_r, "decoding radius")->required();
    list_dec->add_option("--mode", ld_mode, "level set mode: strict or reduced");
    list_dec->add_option("--in", ld_in, "received word file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(params)) return cmd_params(params_opt, params_in);
        if (app.got_subcommand(bounds)) return cmd_bounds(bounds_q, bounds_m, bounds_d);
        if (app.got_subcommand(repro)) return cmd_repro(repro_names, repro_all);
        if (app.got_subcommand(export_set)) return cmd_export_set(export_opt, export_out);
        if (app.got_subcommand(make_word))
            return cmd_make_word(mkw_opt, mkw_errors, mkw_seed, mkw_out);
        if (app.got_subcommand(decode))
            return cmd_decode(dec_opt, dec_via, dec_in, dec_out);
        if (app.got_subcommand(list_dec))
            return cmd_list_decode(ld_q, ld_m, ld_d, ld_r, ld_mode, ld_in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
