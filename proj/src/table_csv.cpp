/**
 * @file table_csv.cpp
 * @brief CSV reading and writing for Fn0 tables.
 */
#include "filtharm/table_csv.hpp"

#include <sstream>

namespace fh {

namespace {

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, ',')) {
        const auto b = cur.find_first_not_of(" \t\r"), e = cur.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    return out;
}

long to_long(const std::string& s, int line) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw CsvError(line, "expected an integer, got '" + s + "'");
    return v;
}

Rational to_rational(const std::string& s, int line) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw CsvError(line, "expected num/den, got '" + s + "'");
    if (r.get_den() == 0) throw CsvError(line, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

CsvTable read_csv_table(std::istream& is, const FieldPtr& field) {
    std::string line;
    int no = 0;
    auto next = [&]() {
        while (std::getline(is, line)) {
            ++no;
            if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t")] != '#')
                return true;
        }
        return false;
    };
    if (!next()) throw CsvError(no, "empty input");

    long q = -1, dim = -1;
    for (const auto& kv : fields(line)) {
        const auto eq = kv.find('=');
        const std::string k = kv.substr(0, eq), v = eq == std::string::npos ? "" : kv.substr(eq + 1);
        if (k == "q") q = to_long(v, no);
        else if (k == "dim") dim = to_long(v, no);
        else if (k == "enumeration") {
            if (v != "lex") throw CsvError(no, "unsupported enumeration '" + v + "'");
        } else throw CsvError(no, "unknown header field '" + k + "'");
    }
    if (q < 0 || dim < 0) throw CsvError(no, "header needs q=Q and dim=D");
    if (q != field->q()) throw CsvError(no, "table is over F_" + std::to_string(q) + ", field is F_" + std::to_string(field->q()));

    CsvTable out;
    const FinSpace sp(field, static_cast<int>(dim));
    out.table = Fn0(sp);
    const int p = field->p();
    std::vector<bool> seen(sp.size());
    while (next()) {
        const auto f = fields(line);
        if (f[0] == "window" || f[0] == "biwindow") {
            const std::size_t want = f[0] == "window" ? 3 : 5;
            if (f.size() != want) throw CsvError(no, f[0] + " needs " + std::to_string(want - 1) + " bounds");
            if (!out.window.empty()) throw CsvError(no, "second window line");
            for (std::size_t k = 1; k < f.size(); ++k) out.window.push_back(to_long(f[k], no));
            continue;
        }
        if (f.size() != static_cast<std::size_t>(p)) throw CsvError(no, "expected index and " + std::to_string(p - 1) + " coefficients");
        const long idx = to_long(f[0], no);
        if (idx < 0 || static_cast<std::size_t>(idx) >= sp.size()) throw CsvError(no, "index " + f[0] + " out of range");
        if (seen[static_cast<std::size_t>(idx)]) throw CsvError(no, "duplicate index " + f[0]);
        seen[static_cast<std::size_t>(idx)] = true;
        std::vector<Rational> c;
        for (std::size_t k = 1; k < f.size(); ++k) c.push_back(to_rational(f[k], no));
        out.table[static_cast<std::size_t>(idx)] = CycNum(p, std::move(c));
    }
    return out;
}

void write_csv_table(std::ostream& os, const Fn0& t, const std::vector<long>& window) {
    os << "q=" << t.space().q() << ",dim=" << t.space().dim() << ",enumeration=lex\n";
    if (window.size() == 2) os << "window," << window[0] << ',' << window[1] << '\n';
    else if (window.size() == 4) os << "biwindow," << window[0] << ',' << window[1] << ',' << window[2] << ',' << window[3] << '\n';
    for (std::size_t v = 0; v < t.size(); ++v) {
        os << v;
        for (const auto& c : t[v].coeffs()) os << ',' << c.get_num() << '/' << c.get_den();
        os << '\n';
    }
}

}  // namespace fh
