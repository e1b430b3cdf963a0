#ifndef PROJSTAB_CLI_CONFIG_HPP
#define PROJSTAB_CLI_CONFIG_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <projstab/futaki/test_config.hpp>
#include <projstab/stability/ruled_scan.hpp>

// Line-oriented run configuration.
//
//   # comment
//   [geometry]
//   ns_rank = 2
//   basis = b f
//   row = 0 1
//   row = 1 0
//   c1B = 2 -4
//   todd2 = -2
//   c2B = 32                 (optional, enables the Noether check)
//
//   [sheaf E]                (any number of named sheaves)
//   rank = 2
//   c1 = -3 -1
//   ch2 = -2                 (optional for rank 1: defaults to c1^2/2)
//
//   [polarization]
//   omega = 1 3
//
//   [testconfig]
//   E = E
//   F = F2
//   nonproduct = yes         (yes | no | unknown, default unknown)
//
//   [scan]
//   sheaf = E
//   case = -1 -2             (bound_x bound_y [strict])
//   case = -2 1 strict
//
//   [options]
//   window = 10
//   format = text            (text | json)
//   sweep_g = 2..6
//   sweep_m = 0..6
//
// Rationals are "p" or "p/q" with q > 0. Coordinates are whitespace
// separated.

namespace projstab::cli
{

enum class config_error_kind {
    syntax,
    unknown_section,
    unknown_key,
    duplicate_key,
    missing_field,
    unresolved_name,
    non_symmetric,
    malformed_rational,
    dimension,
    invalid_value,
};

inline ::std::string to_string(config_error_kind k)
{
    switch (k) {
        case config_error_kind::syntax:
            return "syntax";
        case config_error_kind::unknown_section:
            return "unknown-section";
        case config_error_kind::unknown_key:
            return "unknown-key";
        case config_error_kind::duplicate_key:
            return "duplicate-key";
        case config_error_kind::missing_field:
            return "missing-field";
        case config_error_kind::unresolved_name:
            return "unresolved-name";
        case config_error_kind::non_symmetric:
            return "non-symmetric";
        case config_error_kind::malformed_rational:
            return "malformed-rational";
        case config_error_kind::dimension:
            return "dimension";
        case config_error_kind::invalid_value:
            return "invalid-value";
    }
    return "?";
}

class config_error : public ::std::runtime_error
{
public:
    config_error(config_error_kind kind, ::std::size_t line, ::std::string field, ::std::string const &what)
        : ::std::runtime_error("line " + ::std::to_string(line) + ", field '" + field + "': " + to_string(kind) + ": "
                               + what),
          kind_(kind), line_(line), field_(::std::move(field))
    {
    }

    config_error_kind kind() const noexcept
    {
        return kind_;
    }
    // 1-based; 0 when the error is not tied to a line (a missing section).
    ::std::size_t line() const noexcept
    {
        return line_;
    }
    ::std::string const &field() const noexcept
    {
        return field_;
    }

private:
    config_error_kind kind_;
    ::std::size_t line_;
    ::std::string field_;
};

struct int_range {
    long lo = 0;
    long hi = 0;

    friend bool operator==(int_range const &, int_range const &) = default;
};

struct named_sheaf {
    ::std::string name;
    sheaf_data data;
};

struct testconfig_section {
    ::std::string e;
    ::std::string f;
    nonproduct np = nonproduct::unknown;
};

struct scan_section {
    ::std::string sheaf;
    ::std::vector<scan_case> cases;
};

enum class output_format { text, json };

struct run_options {
    long window = 10;
    ::std::optional<output_format> format;
    ::std::optional<int_range> sweep_g;
    ::std::optional<int_range> sweep_m;
};

struct run_config {
    ::std::optional<surface_geometry> geometry;
    ::std::vector<named_sheaf> sheaves;
    ::std::optional<ns_class> polarization;
    ::std::optional<testconfig_section> testconfig;
    ::std::optional<scan_section> scan;
    run_options options;

    sheaf_data const &sheaf(::std::string const &name) const
    {
        for (auto const &s : sheaves) {
            if (s.name == name) {
                return s.data;
            }
        }
        throw ::std::out_of_range("no sheaf named '" + name + "'");
    }

    surface_geometry const &require_geometry() const
    {
        if (!geometry) {
            throw config_error(config_error_kind::missing_field, 0, "geometry", "this command needs a [geometry] section");
        }
        return *geometry;
    }

    ns_class const &require_polarization() const
    {
        if (!polarization) {
            throw config_error(config_error_kind::missing_field, 0, "polarization",
                               "this command needs a [polarization] section");
        }
        return *polarization;
    }

    test_config make_test_config() const
    {
        if (!testconfig) {
            throw config_error(config_error_kind::missing_field, 0, "testconfig",
                               "this command needs a [testconfig] section");
        }
        return test_config(sheaf(testconfig->e), sheaf(testconfig->f), require_geometry(), require_polarization(),
                           testconfig->np);
    }
};

namespace detail
{

inline ::std::string_view trim(::std::string_view s)
{
    auto const ws = " \t\r\n";
    auto const b = s.find_first_not_of(ws);
    if (b == ::std::string_view::npos) {
        return {};
    }
    auto const e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline ::std::vector<::std::string> split_words(::std::string_view s)
{
    ::std::vector<::std::string> out;
    ::std::istringstream in{::std::string(s)};
    ::std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

struct entry {
    ::std::string key;
    ::std::string value;
    ::std::size_t line = 0;
};

struct raw_section {
    ::std::string kind;
    ::std::string name;
    ::std::size_t line = 0;
    ::std::vector<entry> entries;
};

class section_reader
{
public:
    section_reader(raw_section const &s, ::std::vector<::std::string> allowed, ::std::vector<::std::string> repeatable = {})
        : section_(s)
    {
        for (auto const &e : s.entries) {
            bool const known = ::std::find(allowed.begin(), allowed.end(), e.key) != allowed.end();
            bool const repeat = ::std::find(repeatable.begin(), repeatable.end(), e.key) != repeatable.end();
            if (!known && !repeat) {
                throw config_error(config_error_kind::unknown_key, e.line, e.key,
                                   "unknown key in [" + s.kind + "]");
            }
            if (known && !repeat && single_.count(e.key)) {
                throw config_error(config_error_kind::duplicate_key, e.line, e.key, "key given twice");
            }
            if (repeat) {
                multi_[e.key].push_back(&e);
            } else {
                single_[e.key] = &e;
            }
        }
    }

    entry const *find(::std::string const &key) const
    {
        auto const it = single_.find(key);
        return it == single_.end() ? nullptr : it->second;
    }

    entry const &get(::std::string const &key) const
    {
        auto const *e = find(key);
        if (!e) {
            throw config_error(config_error_kind::missing_field, section_.line, key,
                               "[" + section_.kind + "] requires '" + key + "'");
        }
        return *e;
    }

    ::std::vector<entry const *> all(::std::string const &key) const
    {
        auto const it = multi_.find(key);
        return it == multi_.end() ? ::std::vector<entry const *>{} : it->second;
    }

private:
    raw_section const &section_;
    ::std::map<::std::string, entry const *> single_;
    ::std::map<::std::string, ::std::vector<entry const *>> multi_;
};

inline rational parse_rational(::std::string const &word, entry const &e)
{
    try {
        return rational::parse(word);
    } catch (malformed_rational const &) {
        throw config_error(config_error_kind::malformed_rational, e.line, e.key, "'" + word + "' is not p or p/q with q > 0");
    }
}

inline long parse_long(::std::string_view word, entry const &e)
{
    long v = 0;
    auto const *end = word.data() + word.size();
    auto const [ptr, ec] = ::std::from_chars(word.data(), end, v);
    if (ec != ::std::errc{} || ptr != end) {
        throw config_error(config_error_kind::invalid_value, e.line, e.key, "'" + ::std::string(word) + "' is not an integer");
    }
    return v;
}

inline ::std::vector<rational> parse_vector(entry const &e, ::std::size_t expected)
{
    auto const words = split_words(e.value);
    if (words.size() != expected) {
        throw config_error(config_error_kind::dimension, e.line, e.key,
                           "expected " + ::std::to_string(expected) + " coordinates, got " + ::std::to_string(words.size()));
    }
    ::std::vector<rational> out;
    for (auto const &w : words) {
        out.push_back(parse_rational(w, e));
    }
    return out;
}

inline int_range parse_range(entry const &e)
{
    auto const v = trim(e.value);
    auto const dots = v.find("..");
    if (dots == ::std::string_view::npos) {
        throw config_error(config_error_kind::invalid_value, e.line, e.key, "expected a range A..B");
    }
    int_range r{parse_long(v.substr(0, dots), e), parse_long(v.substr(dots + 2), e)};
    if (r.lo > r.hi) {
        throw config_error(config_error_kind::invalid_value, e.line, e.key, "empty range");
    }
    return r;
}

inline ::std::vector<raw_section> split_sections(::std::string_view text)
{
    ::std::vector<raw_section> sections;
    ::std::size_t line_no = 0;
    ::std::size_t pos = 0;
    while (pos <= text.size()) {
        auto const nl = text.find('\n', pos);
        auto const raw = text.substr(pos, nl == ::std::string_view::npos ? ::std::string_view::npos : nl - pos);
        pos = nl == ::std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto line = raw;
        if (auto const hash = line.find('#'); hash != ::std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw config_error(config_error_kind::syntax, line_no, ::std::string(line), "unterminated section header");
            }
            auto const words = split_words(line.substr(1, line.size() - 2));
            if (words.empty() || words.size() > 2) {
                throw config_error(config_error_kind::syntax, line_no, ::std::string(line), "bad section header");
            }
            sections.push_back({words[0], words.size() == 2 ? words[1] : ::std::string{}, line_no, {}});
            continue;
        }
        auto const eq = line.find('=');
        if (eq == ::std::string_view::npos) {
            throw config_error(config_error_kind::syntax, line_no, ::std::string(line), "expected key = value");
        }
        if (sections.empty()) {
            throw config_error(config_error_kind::syntax, line_no, ::std::string(trim(line.substr(0, eq))),
                               "key outside of any section");
        }
        auto const key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw config_error(config_error_kind::syntax, line_no, "", "empty key");
        }
        sections.back().entries.push_back({::std::string(key), ::std::string(trim(line.substr(eq + 1))), line_no});
    }
    return sections;
}

} // namespace detail

// Parses and fully resolves a configuration. Every error carries its kind,
// line and field.
inline run_config parse_config(::std::string_view text)
{
    using detail::section_reader;

    auto const sections = detail::split_sections(text);
    run_config cfg;

    // Geometry first: everything else depends on the Picard rank.
    detail::raw_section const *geometry = nullptr;
    for (auto const &s : sections) {
        static ::std::vector<::std::string> const known{"geometry", "sheaf", "polarization", "testconfig", "scan",
                                                        "options"};
        if (::std::find(known.begin(), known.end(), s.kind) == known.end()) {
            throw config_error(config_error_kind::unknown_section, s.line, s.kind, "unknown section");
        }
        if ((s.kind == "sheaf") != !s.name.empty()) {
            throw config_error(config_error_kind::syntax, s.line, s.kind,
                               s.kind == "sheaf" ? "[sheaf NAME] needs a name" : "only [sheaf NAME] takes a name");
        }
        if (s.kind != "sheaf") {
            for (auto const &t : sections) {
                if (&t != &s && t.kind == s.kind && t.line < s.line) {
                    throw config_error(config_error_kind::duplicate_key, s.line, s.kind, "section given twice");
                }
            }
        }
        if (s.kind == "geometry") {
            geometry = &s;
        }
    }

    if (geometry) {
        section_reader rd(*geometry, {"ns_rank", "basis", "c1B", "todd2", "c2B"}, {"row"});
        auto const &rank_entry = rd.get("ns_rank");
        auto const rho_signed = detail::parse_long(rank_entry.value, rank_entry);
        if (rho_signed <= 0) {
            throw config_error(config_error_kind::invalid_value, rank_entry.line, "ns_rank", "must be positive");
        }
        auto const rho = static_cast<::std::size_t>(rho_signed);

        auto const &basis_entry = rd.get("basis");
        auto labels = detail::split_words(basis_entry.value);
        if (labels.size() != rho) {
            throw config_error(config_error_kind::dimension, basis_entry.line, "basis",
                               "expected " + ::std::to_string(rho) + " labels");
        }

        auto const rows = rd.all("row");
        if (rows.size() != rho) {
            throw config_error(config_error_kind::dimension, rows.empty() ? geometry->line : rows.back()->line, "row",
                               "expected " + ::std::to_string(rho) + " intersection rows, got "
                                   + ::std::to_string(rows.size()));
        }
        intersection_matrix m;
        for (auto const *row : rows) {
            m.push_back(detail::parse_vector(*row, rho));
        }
        for (::std::size_t a = 0; a < rho; ++a) {
            for (::std::size_t b = a + 1; b < rho; ++b) {
                if (m[a][b] != m[b][a]) {
                    throw config_error(config_error_kind::non_symmetric, rows[b]->line, "row",
                                       "intersection matrix is not symmetric at (" + ::std::to_string(a + 1) + ", "
                                           + ::std::to_string(b + 1) + ")");
                }
            }
        }
        auto const &c1b_entry = rd.get("c1B");
        auto const c1b = detail::parse_vector(c1b_entry, rho);
        auto const &todd_entry = rd.get("todd2");
        auto const todd2 = detail::parse_rational(todd_entry.value, todd_entry);
        ::std::optional<rational> c2b;
        if (auto const *e = rd.find("c2B")) {
            c2b = detail::parse_rational(e->value, *e);
        }
        cfg.geometry.emplace(::std::move(labels), ::std::move(m), ns_class(c1b), todd2, c2b);
    }

    auto const need_geometry = [&](detail::raw_section const &s) -> surface_geometry const & {
        if (!cfg.geometry) {
            throw config_error(config_error_kind::missing_field, s.line, "geometry",
                               "[" + s.kind + "] needs a [geometry] section");
        }
        return *cfg.geometry;
    };

    for (auto const &s : sections) {
        if (s.kind == "sheaf") {
            auto const &geom = need_geometry(s);
            section_reader rd(s, {"rank", "c1", "ch2"});
            auto const &rank_entry = rd.get("rank");
            auto const rank = detail::parse_long(rank_entry.value, rank_entry);
            if (rank <= 0) {
                throw config_error(config_error_kind::invalid_value, rank_entry.line, "rank", "must be positive");
            }
            ns_class const c1(detail::parse_vector(rd.get("c1"), geom.ns_rank()));
            rational ch2;
            if (auto const *e = rd.find("ch2")) {
                ch2 = detail::parse_rational(e->value, *e);
            } else if (rank == 1) {
                ch2 = intersect(c1, c1, geom) / rational(2);
            } else {
                throw config_error(config_error_kind::missing_field, s.line, "ch2", "ch2 is required unless rank = 1");
            }
            for (auto const &existing : cfg.sheaves) {
                if (existing.name == s.name) {
                    throw config_error(config_error_kind::duplicate_key, s.line, s.name, "sheaf defined twice");
                }
            }
            cfg.sheaves.push_back({s.name, sheaf_data(static_cast<int>(rank), c1, ch2)});
        } else if (s.kind == "polarization") {
            auto const &geom = need_geometry(s);
            section_reader rd(s, {"omega"});
            cfg.polarization = ns_class(detail::parse_vector(rd.get("omega"), geom.ns_rank()));
        } else if (s.kind == "options") {
            section_reader rd(s, {"window", "format", "sweep_g", "sweep_m"});
            if (auto const *e = rd.find("window")) {
                cfg.options.window = detail::parse_long(e->value, *e);
                if (cfg.options.window < 0) {
                    throw config_error(config_error_kind::invalid_value, e->line, "window", "must be nonnegative");
                }
            }
            if (auto const *e = rd.find("format")) {
                if (e->value == "text") {
                    cfg.options.format = output_format::text;
                } else if (e->value == "json") {
                    cfg.options.format = output_format::json;
                } else {
                    throw config_error(config_error_kind::invalid_value, e->line, "format", "expected text or json");
                }
            }
            if (auto const *e = rd.find("sweep_g")) {
                cfg.options.sweep_g = detail::parse_range(*e);
            }
            if (auto const *e = rd.find("sweep_m")) {
                cfg.options.sweep_m = detail::parse_range(*e);
            }
        }
    }

    // Name references last, so sections may appear in any order.
    auto const resolve = [&](detail::entry const &e) {
        for (auto const &s : cfg.sheaves) {
            if (s.name == e.value) {
                return e.value;
            }
        }
        throw config_error(config_error_kind::unresolved_name, e.line, e.key, "no sheaf named '" + e.value + "'");
    };
    for (auto const &s : sections) {
        if (s.kind == "testconfig") {
            section_reader rd(s, {"E", "F", "nonproduct"});
            testconfig_section tc;
            tc.e = resolve(rd.get("E"));
            tc.f = resolve(rd.get("F"));
            if (auto const *e = rd.find("nonproduct")) {
                if (e->value == "yes") {
                    tc.np = nonproduct::yes;
                } else if (e->value == "no") {
                    tc.np = nonproduct::no;
                } else if (e->value == "unknown") {
                    tc.np = nonproduct::unknown;
                } else {
                    throw config_error(config_error_kind::invalid_value, e->line, "nonproduct",
                                       "expected yes, no or unknown");
                }
            }
            cfg.testconfig = tc;
        } else if (s.kind == "scan") {
            section_reader rd(s, {"sheaf"}, {"case"});
            scan_section sc;
            sc.sheaf = resolve(rd.get("sheaf"));
            for (auto const *e : rd.all("case")) {
                auto const words = detail::split_words(e->value);
                if (words.size() < 2 || words.size() > 3 || (words.size() == 3 && words[2] != "strict")) {
                    throw config_error(config_error_kind::invalid_value, e->line, "case",
                                       "expected 'bound_x bound_y [strict]'");
                }
                sc.cases.push_back({detail::parse_long(words[0], *e), detail::parse_long(words[1], *e), words.size() == 3});
            }
            cfg.scan = sc;
        }
    }
    return cfg;
}

namespace detail
{

inline ::std::string join(::std::vector<rational> const &v)
{
    ::std::string out;
    for (::std::size_t j = 0; j < v.size(); ++j) {
        out += (j ? " " : "") + v[j].str();
    }
    return out;
}

} // namespace detail

// Canonical text of a configuration: fixed section and key order, no
// comments, canonical rationals, explicit ch2.
inline ::std::string emit_config(run_config const &cfg)
{
    ::std::ostringstream out;
    bool first = true;
    auto const section = [&](::std::string const &header) {
        if (!first) {
            out << "\n";
        }
        first = false;
        out << "[" << header << "]\n";
    };

    if (cfg.geometry) {
        auto const &g = *cfg.geometry;
        section("geometry");
        out << "ns_rank = " << g.ns_rank() << "\n";
        out << "basis =";
        for (auto const &l : g.basis_labels()) {
            out << " " << l;
        }
        out << "\n";
        for (auto const &row : g.intersection()) {
            out << "row = " << detail::join(row) << "\n";
        }
        out << "c1B = " << detail::join(g.c1B().coords()) << "\n";
        out << "todd2 = " << g.todd2() << "\n";
        if (g.c2B()) {
            out << "c2B = " << *g.c2B() << "\n";
        }
    }
    for (auto const &s : cfg.sheaves) {
        section("sheaf " + s.name);
        out << "rank = " << s.data.rank() << "\n";
        out << "c1 = " << detail::join(s.data.c1().coords()) << "\n";
        out << "ch2 = " << s.data.ch2() << "\n";
    }
    if (cfg.polarization) {
        section("polarization");
        out << "omega = " << detail::join(cfg.polarization->coords()) << "\n";
    }
    if (cfg.testconfig) {
        section("testconfig");
        out << "E = " << cfg.testconfig->e << "\n";
        out << "F = " << cfg.testconfig->f << "\n";
        out << "nonproduct = " << to_string(cfg.testconfig->np) << "\n";
    }
    if (cfg.scan) {
        section("scan");
        out << "sheaf = " << cfg.scan->sheaf << "\n";
        for (auto const &c : cfg.scan->cases) {
            out << "case = " << c.bound_x << " " << c.bound_y << (c.exclude_corner ? " strict" : "") << "\n";
        }
    }
    section("options");
    out << "window = " << cfg.options.window << "\n";
    if (cfg.options.format) {
        out << "format = " << (*cfg.options.format == output_format::json ? "json" : "text") << "\n";
    }
    if (cfg.options.sweep_g) {
        out << "sweep_g = " << cfg.options.sweep_g->lo << ".." << cfg.options.sweep_g->hi << "\n";
    }
    if (cfg.options.sweep_m) {
        out << "sweep_m = " << cfg.options.sweep_m->lo << ".." << cfg.options.sweep_m->hi << "\n";
    }
    return out.str();
}

} // namespace projstab::cli

#endif
