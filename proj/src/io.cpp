#include "hypcode/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hypcode {

namespace {

// "key=value" pulled out of a header token, throwing on the wrong key.
std::string expect_kv(std::istringstream& iss, const std::string& key) {
    std::string tok;
    if (!(iss >> tok)) throw std::runtime_error("truncated header, expected " + key + "=...");
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw std::runtime_error("bad header token '" + tok + "', expected " + key + "=...");
    return tok.substr(eq + 1);
}

int to_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::runtime_error("trailing junk in number '" + s + "'");
    return v;
}

} // namespace

void write_set(std::ostream& os, const ExponentSet& s) {
    os << "SET q=" << s.q << " m=" << s.m << " tag=" << s.tag << "\n";
    for (const auto& e : s.members) os << exponent_to_string(e) << "\n";
}

ExponentSet read_set(std::istream& is) {
    std::string line;
    do {
        if (!std::getline(is, line)) throw std::runtime_error("missing SET header");
    } while (line.empty());

    std::istringstream iss(line);
    std::string word;
    iss >> word;
    if (word != "SET") throw std::runtime_error("expected SET header, got '" + line + "'");
    ExponentSet out;
    out.q = to_int(expect_kv(iss, "q"));
    out.m = to_int(expect_kv(iss, "m"));
    out.tag = expect_kv(iss, "tag");
    if (out.q < 2 || out.m < 1) throw std::runtime_error("bad SET parameters");

    while (std::getline(is, line)) {
        if (line.empty()) break;
        Exponent e = exponent_from_string(line);
        if ((int)e.size() != out.m) throw std::runtime_error("member arity mismatch: " + line);
        for (int c : e)
            if (c < 0 || c >= out.q) throw std::runtime_error("member coordinate out of range: " + line);
        out.members.push_back(std::move(e));
    }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

void write_word(std::ostream& os, const Word& w) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << "\n";
}

Word read_word(std::istream& is) {
    std::string line;
    do {
        if (!std::getline(is, line)) throw std::runtime_error("missing word line");
    } while (line.empty());
    Word w;
    std::istringstream iss(line);
    std::string tok;
    while (std::getline(iss, tok, ',')) w.push_back(to_int(tok));
    if (w.empty()) throw std::runtime_error("empty word line");
    return w;
}

void write_code_spec(std::ostream& os, const Field& f, const ExponentSet& s) {
    os << f.spec_line() << "\n";
    write_set(os, s);
}

std::pair<FieldPtr, ExponentSet> read_code_spec(std::istream& is) {
    std::string line;
    do {
        if (!std::getline(is, line)) throw std::runtime_error("missing GF line");
    } while (line.empty());
    FieldPtr f = std::make_shared<const Field>(Field::parse_spec_line(line));
    ExponentSet s = read_set(is);
    if (s.q != f->q()) throw std::runtime_error("set q does not match field q");
    return {f, s};
}

void save_set(const std::string& path, const ExponentSet& s) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_set(os, s);
}

ExponentSet load_set(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_set(is);
}

void save_word(const std::string& path, const Word& w) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_word(os, w);
}

Word load_word(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_word(is);
}

} // namespace hypcode
