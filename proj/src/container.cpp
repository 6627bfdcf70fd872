#include "rcft/container.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "rcft/error.hpp"

namespace rcft {

namespace {

constexpr const char* kModHeader = "rcft-moddata";
constexpr const char* kGroupHeader = "rcft-group";
constexpr int kVersion = 1;

/// One line of input with a column cursor; all errors carry the location.
class Cursor {
public:
    Cursor(std::string text, std::size_t line) : s_(std::move(text)), line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= s_.size();
    }
    void expect_end() {
        if (!at_end()) fail("unexpected '" + s_.substr(pos_) + "'");
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '=' &&
               s_[pos_] != '[' && s_[pos_] != '(' && s_[pos_] != ',' && s_[pos_] != '"')
            ++pos_;
        if (start == pos_) fail("expected a keyword");
        return s_.substr(start, pos_ - start);
    }
    Integer integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
        if (tok.empty() || tok == "-") {
            pos_ = start;
            fail("expected an integer");
        }
        return Integer(tok);
    }
    std::size_t index(std::size_t bound, const char* what) {
        const std::size_t start = pos_;
        const Integer v = integer();
        if (v < 0 || v >= static_cast<unsigned long>(bound)) {
            pos_ = start;
            skip_space();
            fail(std::string(what) + " " + v.get_str() + " out of range");
        }
        return v.get_ui();
    }
    Rational rational() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ',') ++pos_;
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const Error& e) {
            pos_ = start;
            fail(e.what());
        }
    }
    std::string quoted() {
        expect('"');
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
            out += s_[pos_++];
        }
        if (pos_ >= s_.size()) fail("unterminated string");
        ++pos_;
        return out;
    }

private:
    std::string s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

/// `[(p, q, k), ...]` at order M; the opening bracket is already consumed.
Cyclotomic read_terms(Cursor& c, u64 M) {
    std::vector<Cyclotomic::Term> terms;
    if (!c.accept(']')) {
        do {
            c.expect('(');
            const Integer p = c.integer();
            c.expect(',');
            const Integer q = c.integer();
            if (q == 0) c.fail("zero denominator");
            c.expect(',');
            const Integer k = c.integer();
            c.expect(')');
            if (!k.fits_slong_p()) c.fail("exponent out of range");
            terms.push_back({make_rational(p, q), k.get_si()});
        } while (c.accept(','));
        c.expect(']');
    }
    return Cyclotomic::from_terms(M, terms);
}

void write_terms(std::ostream& os, const Cyclotomic& z) {
    os << "[";
    bool first = true;
    for (std::size_t k = 0; k < z.degree(); ++k) {
        const Rational c = z.coeff(k);
        if (c == 0) continue;
        os << (first ? "" : ", ") << "(" << c.get_num().get_str() << ", " << c.get_den().get_str() << ", " << k << ")";
        first = false;
    }
    os << "]";
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

/// Non-blank, non-comment lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        out.emplace_back(no, line);
    }
    return out;
}

std::size_t last_line(const std::string& text) {
    std::size_t n = 1;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

void read_header(Cursor& c, const char* name) {
    const std::string w = c.word();
    if (w != name) c.fail(std::string("expected header '") + name + "', got '" + w + "'");
    const Integer v = c.integer();
    if (v != kVersion) c.fail("unsupported format version " + v.get_str());
    c.expect_end();
}

}  // namespace

bool Metadata::empty() const {
    if (central_charge || !note.empty()) return false;
    for (const auto& w : weights)
        if (w) return false;
    return true;
}

bool same_data(const ModularData& a, const ModularData& b) {
    return a.labels == b.labels && a.T == b.T && a.S == b.S;
}

Document parse_document(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, std::string("empty document, expected '") + kModHeader + "'");
    {
        Cursor c(lines[0].second, lines[0].first);
        read_header(c, kModHeader);
    }

    u64 M = 0;
    std::size_t n = 0;
    bool have_size = false, ended = false;
    std::vector<std::string> labels;
    std::map<std::pair<std::size_t, std::size_t>, Cyclotomic> S;
    std::map<std::size_t, Rational> T;
    Metadata meta;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        Cursor c(lines[i].second, lines[i].first);
        if (ended) c.fail("content after 'end'");
        const std::string key = c.word();
        auto need_shape = [&] {
            if (M == 0 || !have_size) c.fail("'" + key + "' before 'order' and 'size'");
        };
        if (key == "order") {
            if (M != 0) c.fail("duplicate 'order'");
            const Integer v = c.integer();
            if (v < 1) c.fail("order must be positive");
            if (v > static_cast<unsigned long>(order_limit())) c.fail("order " + v.get_str() + " above the order limit");
            M = v.get_ui();
        } else if (key == "size") {
            if (have_size) c.fail("duplicate 'size'");
            const Integer v = c.integer();
            if (v < 1) c.fail("size must be positive");
            n = v.get_ui();
            have_size = true;
        } else if (key == "label") {
            need_shape();
            const std::size_t a = c.index(n, "label index");
            if (labels.empty()) labels.resize(n);
            if (!labels[a].empty()) c.fail("duplicate label for " + std::to_string(a));
            labels[a] = c.quoted();
            if (labels[a].empty()) c.fail("empty label");
        } else if (key == "S") {
            need_shape();
            const std::size_t a = c.index(n, "row");
            const std::size_t b = c.index(n, "column");
            if (S.count({a, b})) c.fail("duplicate entry S " + std::to_string(a) + " " + std::to_string(b));
            c.expect('=');
            c.expect('[');
            S[{a, b}] = read_terms(c, M);
        } else if (key == "T") {
            need_shape();
            const std::size_t a = c.index(n, "index");
            if (T.count(a)) c.fail("duplicate entry T " + std::to_string(a));
            c.expect('=');
            T[a] = c.rational();
        } else if (key == "central-charge") {
            if (meta.central_charge) c.fail("duplicate 'central-charge'");
            c.expect('=');
            meta.central_charge = c.rational();
        } else if (key == "weight") {
            need_shape();
            const std::size_t a = c.index(n, "index");
            if (meta.weights.empty()) meta.weights.resize(n);
            if (meta.weights[a]) c.fail("duplicate weight for " + std::to_string(a));
            c.expect('=');
            meta.weights[a] = c.rational();
        } else if (key == "note") {
            c.expect('=');
            meta.note = c.quoted();
        } else if (key == "end") {
            ended = true;
        } else {
            c.fail("unknown keyword '" + key + "'");
        }
        c.expect_end();
    }
    const std::size_t eof = last_line(text);
    if (!ended) throw ParseError(eof, 1, "missing 'end' (truncated document?)");
    if (M == 0 || !have_size) throw ParseError(eof, 1, "missing 'order' or 'size'");
    if (S.size() != n * n)
        throw ParseError(eof, 1, "expected " + std::to_string(n * n) + " S entries, found " + std::to_string(S.size()));
    if (T.size() != n)
        throw ParseError(eof, 1, "expected " + std::to_string(n) + " T entries, found " + std::to_string(T.size()));
    for (const auto& l : labels)
        if (l.empty()) throw ParseError(eof, 1, "labels must be given for every primary or none");

    CMatrix Smat(n, n);
    for (const auto& [ab, z] : S) Smat(ab.first, ab.second) = z;
    std::vector<Rational> Tvec;
    for (const auto& [a, r] : T) Tvec.push_back(r);
    return {make_modular_data(std::move(Smat), std::move(Tvec), std::move(labels)), std::move(meta)};
}

Document read_document(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_document(text);
}

std::string serialize(const ModularData& md, const Metadata& meta) {
    const std::size_t n = md.size();
    const u64 M = md.field_order();
    std::ostringstream os;
    os << kModHeader << " " << kVersion << "\n";
    os << "order " << M << "\n";
    os << "size " << n << "\n";
    if (!md.labels.empty())
        for (std::size_t a = 0; a < n; ++a) os << "label " << a << " " << quote(md.labels[a]) << "\n";
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            os << "S " << a << " " << b << " = ";
            write_terms(os, md.S(a, b).at_order(M));
            os << "\n";
        }
    for (std::size_t a = 0; a < n; ++a) os << "T " << a << " = " << to_string(md.T[a]) << "\n";
    if (meta.central_charge) os << "central-charge = " << to_string(*meta.central_charge) << "\n";
    for (std::size_t a = 0; a < meta.weights.size(); ++a)
        if (meta.weights[a]) os << "weight " << a << " = " << to_string(*meta.weights[a]) << "\n";
    if (!meta.note.empty()) os << "note = " << quote(meta.note) << "\n";
    os << "end\n";
    return os.str();
}

GroupData parse_group(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, std::string("empty document, expected '") + kGroupHeader + "'");
    {
        Cursor c(lines[0].second, lines[0].first);
        read_header(c, kGroupHeader);
    }
    std::string name = "G";
    std::size_t n = 0;
    bool ended = false;
    std::map<std::size_t, std::vector<int>> rows;
    std::map<int, std::vector<std::vector<Cyclotomic>>> characters;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Cursor c(lines[i].second, lines[i].first);
        if (ended) c.fail("content after 'end'");
        const std::string key = c.word();
        if (key == "name") {
            name = c.quoted();
        } else if (key == "order") {
            if (n != 0) c.fail("duplicate 'order'");
            const Integer v = c.integer();
            if (v < 1 || v > 10000) c.fail("group order must be in [1, 10000]");
            n = v.get_ui();
        } else if (key == "row") {
            if (n == 0) c.fail("'row' before 'order'");
            const std::size_t g = c.index(n, "row");
            if (rows.count(g)) c.fail("duplicate row " + std::to_string(g));
            c.expect('=');
            std::vector<int> row;
            for (std::size_t h = 0; h < n; ++h) row.push_back(static_cast<int>(c.index(n, "element")));
            rows[g] = std::move(row);
        } else if (key == "character") {
            if (n == 0) c.fail("'character' before 'order'");
            const int rep = static_cast<int>(c.index(n, "representative"));
            if (c.word() != "order") c.fail("expected 'order'");
            const Integer M = c.integer();
            if (M < 1 || M > static_cast<unsigned long>(order_limit())) c.fail("bad order " + M.get_str());
            c.expect('=');
            std::vector<Cyclotomic> values;
            while (c.accept('[')) values.push_back(read_terms(c, M.get_ui()));
            if (values.empty()) c.fail("expected character values");
            characters[rep].push_back(std::move(values));
        } else if (key == "end") {
            ended = true;
        } else {
            c.fail("unknown keyword '" + key + "'");
        }
        c.expect_end();
    }
    const std::size_t eof = last_line(text);
    if (!ended) throw ParseError(eof, 1, "missing 'end' (truncated document?)");
    if (n == 0 || rows.size() != n)
        throw ParseError(eof, 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
    std::vector<std::vector<int>> table;
    for (auto& [g, row] : rows) table.push_back(std::move(row));
    return group_from_table(name, std::move(table), characters);
}

std::string serialize(const GroupData& g) {
    std::ostringstream os;
    os << kGroupHeader << " " << kVersion << "\n";
    os << "name " << quote(g.name) << "\n";
    os << "order " << g.order() << "\n";
    for (std::size_t a = 0; a < g.order(); ++a) {
        os << "row " << a << " =";
        for (int x : g.table[a]) os << " " << x;
        os << "\n";
    }
    for (const auto& cls : g.classes)
        for (const auto& chi : cls.characters) {
            u64 M = 1;
            for (const auto& v : chi) M = lcm(M, v.order());
            os << "character " << cls.rep << " order " << M << " =";
            for (const auto& v : chi) {
                os << " ";
                write_terms(os, v.at_order(M));
            }
            os << "\n";
        }
    os << "end\n";
    return os.str();
}

}  // namespace rcft
