#include "sumsets/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "sumsets/side.hpp"

namespace sumsets {

using ojson = nlohmann::ordered_json;

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "text") return Format::Text;
    throw Error("unknown format '" + text + "' (json|csv|text)");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

bool is_integer(const std::string& s) {
    if (s.empty() || s.size() > 18) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

ojson cell_json(const std::string& s) {
    if (s.empty()) return nullptr;
    if (is_integer(s)) return std::stoll(s);
    return s;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_field(cells[i]);
    }
    return out + "\n";
}

std::string text_table(const Table& t) {
    std::vector<std::size_t> w(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    std::ostringstream os;
    if (!t.origin.empty()) os << "# " << t.origin << "\n";
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const std::string c = i < r.size() ? r[i] : "";
            if (i) os << "  ";
            os << std::string(w[i] - c.size(), ' ') << c;
        }
        os << "\n";
    };
    line(t.header);
    std::size_t total = 0;
    for (auto x : w) total += x;
    os << std::string(total + 2 * (w.empty() ? 0 : w.size() - 1), '-') << "\n";
    for (const auto& r : t.rows) line(r);
    return os.str();
}

}  // namespace

std::string emit(Format f, const Table& t) {
    if (f == Format::Text) return text_table(t);
    std::string out;
    if (f == Format::Csv) {
        if (!t.origin.empty()) out += "# origin: " + t.origin + "\n";
        out += csv_line(t.header);
        for (const auto& r : t.rows) out += csv_line(r);
        return out;
    }
    for (const auto& r : t.rows) {
        ojson o = ojson::object();
        for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = cell_json(i < r.size() ? r[i] : "");
        out += o.dump() + "\n";
    }
    return out;
}

Table parse_csv(const std::string& text) {
    Table t;
    std::vector<std::vector<std::string>> recs;
    std::vector<std::string> cur;
    std::string field;
    bool quoted = false, any = false;
    std::size_t i = 0;
    // leading comment lines
    while (i < text.size() && text[i] == '#') {
        std::size_t e = text.find('\n', i);
        std::string line = text.substr(i, e == std::string::npos ? std::string::npos : e - i);
        const std::string tag = "# origin: ";
        if (line.rfind(tag, 0) == 0) t.origin = line.substr(tag.size());
        i = e == std::string::npos ? text.size() : e + 1;
    }
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            cur.push_back(field);
            field.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            cur.push_back(field);
            recs.push_back(cur);
            cur.clear();
            field.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw Error("unterminated quoted CSV field");
    if (any || !field.empty()) {
        cur.push_back(field);
        recs.push_back(cur);
    }
    if (!recs.empty()) {
        t.header = recs.front();
        t.rows.assign(recs.begin() + 1, recs.end());
    }
    return t;
}

// ---- report rows ----

namespace {

ojson query_json(const QuantityQuery& q) {
    ojson o = ojson::object();
    o["family"] = family_str(q.family);
    o["lambda"] = lambda_str(q.lambda);
    o["group"] = q.group.name();
    o["terms"] = terms_str(q.terms);
    if (q.m) o["m"] = q.m;
    if (q.k) {
        o["k"] = q.k;
        o["l"] = q.l;
    }
    if (q.generating) o["generating"] = true;
    if (q.exclude_zero) o["exclude_zero"] = true;
    return o;
}

ojson opt_json(const std::optional<long long>& v) { return v ? ojson(*v) : ojson(nullptr); }

}  // namespace

std::string row_to_json(const ReportRow& r) {
    ojson o = query_json(r.query);
    o["value"] = opt_json(r.value);
    if (r.witness) o["witness"] = *r.witness;
    o["citations"] = r.citations;
    o["nodes"] = r.nodes;
    if (r.elapsed_ms) o["elapsed_ms"] = *r.elapsed_ms;
    return o.dump();
}

ReportRow row_from_json(const std::string& line) {
    ojson o;
    try {
        o = ojson::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad report row: ") + e.what());
    }
    ReportRow r;
    try {
        r.query.family = parse_family(o.at("family").get<std::string>());
        r.query.lambda = parse_lambda(o.at("lambda").get<std::string>());
        r.query.group = Group::parse(o.at("group").get<std::string>());
        r.query.terms = parse_terms(o.at("terms").get<std::string>());
        r.query.m = o.value("m", 0);
        r.query.k = o.value("k", 0);
        r.query.l = o.value("l", 0);
        r.query.generating = o.value("generating", false);
        r.query.exclude_zero = o.value("exclude_zero", false);
        if (!o.at("value").is_null()) r.value = o["value"].get<long long>();
        if (o.contains("witness")) r.witness = o["witness"].get<std::vector<int>>();
        r.citations = o.at("citations").get<std::vector<std::string>>();
        r.nodes = o.at("nodes").get<long long>();
        if (o.contains("elapsed_ms")) r.elapsed_ms = o["elapsed_ms"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad report row: ") + e.what());
    }
    return r;
}

std::string point_to_json(const std::string& id, const GridPoint& p) {
    ojson o = ojson::object();
    o["id"] = id;
    o["group"] = p.group;
    for (const auto& [k, v] : p.params) o[k] = v;
    o["status"] = status_str(p.status);
    o["predicted"] = opt_json(p.predicted);
    o["computed"] = opt_json(p.computed);
    if (p.witness) o["witness"] = p.witness->indices();
    if (p.forced) o["forced"] = true;
    if (!p.note.empty()) o["note"] = p.note;
    return o.dump();
}

// ---- named tables ----

namespace {

std::string num(long long v) { return std::to_string(v); }
std::string num(const std::optional<long long>& v) { return v ? std::to_string(*v) : "none"; }

std::vector<int> iota_range(int a, int b) {
    std::vector<int> r;
    for (int i = a; i <= b; ++i) r.push_back(i);
    return r;
}

QuantityQuery cyc(Family f, int n, Lambda l, TermCount t, int m = 0) {
    QuantityQuery q;
    q.family = f;
    q.group = Group::cyclic(n);
    q.lambda = l;
    q.terms = t;
    q.m = m;
    return q;
}

std::optional<long long> value_of(const QuantityQuery& q, const SearchOptions& opt) { return evaluate(q, opt).value; }

Table phi_table(const std::string& origin, Lambda lam, const std::vector<int>& ns, const SearchOptions& opt) {
    Table t{origin, {"n", "value"}, {}};
    for (int n : ns) t.rows.push_back({num(n), num(value_of(cyc(Family::Phi, n, lam, TermCount::upto(2)), opt))});
    return t;
}

// least n whose sigma reaches m
Table sidon_table(const std::string& origin, Lambda lam, const std::vector<int>& ms, const SearchOptions& opt) {
    Table t{origin, {"m", "value"}, {}};
    std::map<int, long long> cache;
    for (int m : ms) {
        for (int n = 1;; ++n) {
            if (!cache.count(n)) cache[n] = *value_of(cyc(Family::Sigma, n, lam, TermCount::exact(2)), opt);
            if (cache[n] >= m) {
                t.rows.push_back({num(m), num(n)});
                break;
            }
            if (n > 4096) throw Error("sidon table: no n found");
        }
    }
    return t;
}

std::vector<std::string> rhohat_row(int n, int m, int h, const SearchOptions& opt) {
    long long uh = u_hat(n, m, h).value;
    auto v = value_of(cyc(Family::Rho, n, Lambda::Restricted, TermCount::exact(h), m), opt);
    return {num(n), num(m), num(h), num(uh), num(v)};
}

std::vector<NamedTable> build_tables() {
    std::vector<NamedTable> out;
    out.push_back({"v-table", "v_table.csv", "n", iota_range(2, 40),
                   [](const std::vector<int>& ns, const SearchOptions&) {
                       Table t{"published table of v_g(n,h) for n <= 40",
                               {"n", "v1_3", "v3_3", "v1_4", "v2_4", "v4_4", "v1_5", "v3_5", "v5_5"},
                               {}};
                       const int cols[][2] = {{1, 3}, {3, 3}, {1, 4}, {2, 4}, {4, 4}, {1, 5}, {3, 5}, {5, 5}};
                       for (int n : ns) {
                           std::vector<std::string> r{num(n)};
                           for (auto& c : cols) r.push_back(num(v(n, c[1], c[0]).value));
                           t.rows.push_back(r);
                       }
                       return t;
                   },
                   nullptr});
    out.push_back({"u15", "u15_table.csv", "h", {2, 3, 4, 5},
                   [](const std::vector<int>& hs, const SearchOptions&) {
                       Table t{"published tables of u(15,m,h) and uhat(15,m,h)", {"h", "m", "u", "uhat"}, {}};
                       for (int h : hs)
                           for (int m = 1; m <= 15; ++m)
                               t.rows.push_back({num(h), num(m), num(u(15, m, h).value),
                                                 m > h ? num(u_hat(15, m, h).value) : ""});
                       return t;
                   },
                   nullptr});
    out.push_back({"nu-exception-counts", "nu_exception_counts.csv", "n", iota_range(2, 20),
                   [](const std::vector<int>& ns, const SearchOptions& opt) {
                       Table t{"published count of (m,h) with nu(Z_n,m,h) below min{n, C(m+h-1,h)}", {"n", "count"}, {}};
                       for (int n : ns) {
                           int count = 0;
                           for (int h = 1; h <= n; ++h)
                               for (int m = 1; m <= n; ++m) {
                                   i128 bound = std::min<i128>(n, binom(m + h - 1, h));
                                   auto val = value_of(cyc(Family::Nu, n, Lambda::N0, TermCount::exact(h), m), opt);
                                   count += *val < bound;
                               }
                           t.rows.push_back({num(n), num(count)});
                       }
                       return t;
                   },
                   nullptr});
    out.push_back({"nu-exceptions-z20", "nu_exceptions_z20.csv", "h", iota_range(1, 20),
                   [](const std::vector<int>& hs, const SearchOptions& opt) {
                       Table t{"published list of exceptional nu(Z_20,m,h)", {"h", "m", "bound", "value"}, {}};
                       for (int h : hs)
                           for (int m = 1; m <= 20; ++m) {
                               long long bound = (long long)std::min<i128>(20, binom(m + h - 1, h));
                               auto val = value_of(cyc(Family::Nu, 20, Lambda::N0, TermCount::exact(h), m), opt);
                               if (*val < bound) t.rows.push_back({num(h), num(m), num(bound), num(val)});
                           }
                       return t;
                   },
                   nullptr});
    out.push_back({"rhohat-exceptions", "rhohat_exceptions.csv", "n", iota_range(1, 20),
                   [](const std::vector<int>& ns, const SearchOptions& opt) {
                       Table t{"published list of n,m,h with restricted rho below uhat, h <= m/2",
                               {"n", "m", "h", "uhat", "value"},
                               {}};
                       for (int n : ns)
                           for (int m = 2; m <= n; ++m)
                               for (int h = 1; 2 * h <= m; ++h) {
                                   auto r = rhohat_row(n, m, h, opt);
                                   if (r[4] != r[3]) t.rows.push_back(r);
                               }
                       return t;
                   },
                   [](const std::vector<std::string>& row, const SearchOptions& opt) {
                       return rhohat_row(std::stoi(row.at(0)), std::stoi(row.at(1)), std::stoi(row.at(2)), opt);
                   }});
    out.push_back({"phi-z10", "phi_z10.csv", "h", iota_range(1, 9),
                   [](const std::vector<int>& hs, const SearchOptions& opt) {
                       Table t{"published values of phi(Z_10,h) and signed phi(Z_10,h); the last column holds for all h >= 9",
                               {"h", "phi", "phipm"},
                               {}};
                       for (int h : hs)
                           t.rows.push_back({num(h), num(value_of(cyc(Family::Phi, 10, Lambda::N0, TermCount::exact(h)), opt)),
                                             num(value_of(cyc(Family::Phi, 10, Lambda::Z, TermCount::exact(h)), opt))});
                       return t;
                   },
                   nullptr});
    out.push_back({"phi-cyclic-upto2", "phi_upto2.csv", "n", iota_range(1, 35),
                   [](const std::vector<int>& ns, const SearchOptions& opt) {
                       return phi_table("published computational list of phi(Z_n,[0,2])", Lambda::N0, ns, opt);
                   },
                   nullptr});
    out.push_back({"phihat-cyclic-upto2", "phihat_upto2.csv", "n", iota_range(1, 37),
                   [](const std::vector<int>& ns, const SearchOptions& opt) {
                       return phi_table("published computational list of restricted phi(Z_n,[0,2])", Lambda::Restricted, ns,
                                        opt);
                   },
                   nullptr});
    {
        auto ns = iota_range(1, 51);
        ns.erase(std::find(ns.begin(), ns.end(), 50));  // absent from the source list
        out.push_back({"phipm-cyclic-upto2", "phipm_upto2.csv", "n", ns,
                       [](const std::vector<int>& ns, const SearchOptions& opt) {
                           return phi_table("published computational list of signed phi(Z_n,[0,2]); n=50 not listed in the source",
                                            Lambda::Z, ns, opt);
                       },
                       nullptr});
    }
    out.push_back({"sidon-f2", "sidon_f2.csv", "m", iota_range(1, 6),
                   [](const std::vector<int>& ms, const SearchOptions& opt) {
                       return sidon_table("published least n with a B_2 set of size m in Z_n", Lambda::N0, ms, opt);
                   },
                   nullptr});
    out.push_back({"sidon-fhat2", "sidon_fhat2.csv", "m", iota_range(2, 7),
                   [](const std::vector<int>& ms, const SearchOptions& opt) {
                       return sidon_table("published least n with a weak Sidon set of size m in Z_n", Lambda::Restricted, ms,
                                          opt);
                   },
                   nullptr});
    out.push_back({"hallfors", "hallfors.csv", "n", iota_range(5, 40),
                   [](const std::vector<int>& ns, const SearchOptions& opt) {
                       Table t{"published computed values of weak (k,l)-sum-free maxima in Z_n",
                               {"n", "k3l1", "k4l1", "k3l2", "k4l2", "k4l3"},
                               {}};
                       const int kl[][2] = {{3, 1}, {4, 1}, {3, 2}, {4, 2}, {4, 3}};
                       for (int n : ns) {
                           std::vector<std::string> r{num(n)};
                           for (auto& p : kl) {
                               QuantityQuery q = cyc(Family::Mu, n, Lambda::Restricted, TermCount::exact(p[0]));
                               q.k = p[0];
                               q.l = p[1];
                               r.push_back(num(value_of(q, opt)));
                           }
                           t.rows.push_back(r);
                       }
                       return t;
                   },
                   nullptr});
    out.push_back({"chihat-z15", "chihat_z15.csv", "h", iota_range(1, 14),
                   [](const std::vector<int>& hs, const SearchOptions& opt) {
                       Table t{"published restricted h-critical numbers of Z_15", {"h", "value"}, {}};
                       for (int h : hs)
                           t.rows.push_back(
                               {num(h), num(value_of(cyc(Family::Chi, 15, Lambda::Restricted, TermCount::exact(h)), opt))});
                       return t;
                   },
                   nullptr});
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read fixture '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string cell_at(const std::vector<std::string>& r, std::size_t i) { return i < r.size() ? r[i] : "<missing>"; }

}  // namespace

const std::vector<NamedTable>& named_tables() {
    static const std::vector<NamedTable> t = build_tables();
    return t;
}

const NamedTable& find_table(const std::string& id) {
    for (const auto& t : named_tables())
        if (t.id == id) return t;
    throw Error("unknown table '" + id + "'");
}

FixtureResult check_fixture(const NamedTable& t, const std::string& fixture_dir, const SearchOptions& opt) {
    FixtureResult res;
    res.id = t.id;
    const std::string path = fixture_dir + "/" + t.fixture;
    const std::string text = read_file(path);
    Table want = parse_csv(text);
    Table got = t.build(t.default_range, opt);

    if (want.header != got.header) {
        auto join = [](const std::vector<std::string>& h) {
            std::string s = csv_line(h);
            s.pop_back();
            return s;
        };
        res.mismatch = t.fixture + " header: expected " + join(want.header) + ", got " + join(got.header);
        return res;
    }
    std::vector<std::vector<std::string>> swept, pointed;
    for (const auto& r : want.rows) {
        bool in = !t.point || std::find(t.default_range.begin(), t.default_range.end(), std::stoi(r.at(0))) !=
                                  t.default_range.end();
        (in ? swept : pointed).push_back(r);
    }
    auto describe = [&](std::size_t row, const std::vector<std::string>& w, std::size_t col, const std::string& g) {
        return t.fixture + " row " + std::to_string(row + 1) + " (" + want.header[0] + "=" + cell_at(w, 0) + ") column " +
               want.header[col] + ": expected " + cell_at(w, col) + ", got " + g;
    };
    for (std::size_t i = 0; i < std::max(swept.size(), got.rows.size()); ++i) {
        if (i >= swept.size()) {
            res.mismatch = t.fixture + ": extra computed row " + csv_line(got.rows[i]);
            res.mismatch.pop_back();
            return res;
        }
        if (i >= got.rows.size()) {
            res.mismatch = describe(i, swept[i], 0, "no computed row");
            return res;
        }
        for (std::size_t c = 0; c < want.header.size(); ++c)
            if (cell_at(swept[i], c) != cell_at(got.rows[i], c)) {
                res.mismatch = describe(i, swept[i], c, cell_at(got.rows[i], c));
                return res;
            }
        ++res.rows;
    }
    for (std::size_t i = 0; i < pointed.size(); ++i) {
        auto g = t.point(pointed[i], opt);
        for (std::size_t c = 0; c < want.header.size(); ++c)
            if (cell_at(pointed[i], c) != cell_at(g, c)) {
                res.mismatch = describe(swept.size() + i, pointed[i], c, cell_at(g, c));
                return res;
            }
        ++res.rows;
        ++res.point_rows;
    }
    if (!t.point && emit(Format::Csv, got) != text) {
        res.mismatch = t.fixture + ": cells agree but bytes differ";
        return res;
    }
    res.ok = true;
    return res;
}

Table fixture_table(const std::vector<FixtureResult>& rs) {
    Table t{"", {"table", "status", "rows", "point_rows", "mismatch"}, {}};
    for (const auto& r : rs)
        t.rows.push_back({r.id, r.ok ? "ok" : "mismatch", std::to_string(r.rows), std::to_string(r.point_rows), r.mismatch});
    return t;
}

}  // namespace sumsets
