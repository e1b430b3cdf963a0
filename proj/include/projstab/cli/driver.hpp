#ifndef PROJSTAB_CLI_DRIVER_HPP
#define PROJSTAB_CLI_DRIVER_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <projstab/cli/config.hpp>
#include <projstab/cli/reference_checks.hpp>
#include <projstab/cli/report_io.hpp>
#include <projstab/cli/ruled_example.hpp>
#include <projstab/cli/sweep.hpp>

namespace projstab::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_check_failed = 2;

// A run configuration reproducing a ruled-surface example, ready to feed
// back through --config.
inline run_config example_config(ruled_example const &ex)
{
    run_config cfg;
    cfg.geometry = ex.geom;
    cfg.sheaves = {{"F1", ex.f1}, {"E1", ex.e1}, {"F2", ex.f2}, {"E", ex.e}};
    cfg.polarization = ex.omega;
    cfg.testconfig = testconfig_section{"E", "F2", nonproduct::yes};
    cfg.scan = scan_section{"E", ex.cases};
    return cfg;
}

inline run_config load_config(::std::string const &path)
{
    ::std::ifstream in(path);
    if (!in) {
        throw ::std::runtime_error("cannot read config file '" + path + "'");
    }
    ::std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

inline int_range parse_cli_range(::std::string const &text, char const *flag)
{
    auto const cfg = parse_config("[options]\nsweep_g = " + text + "\n");
    if (!cfg.options.sweep_g) {
        throw ::std::invalid_argument(::std::string("bad range for ") + flag);
    }
    return *cfg.options.sweep_g;
}

// Runs one command line; argv[0] is the program name.
inline int run(::std::vector<::std::string> const &args, ::std::ostream &out, ::std::ostream &err)
{
    CLI::App app{"Exact stability and Futaki invariant calculator for bundles on polarised surfaces", "projstab"};
    app.require_subcommand(1);

    ::std::string format_flag;
    ::std::string config_path;
    long window = -1;
    int genus = 0, m = 0, deg_v = 0;
    ::std::string g_range, m_range;

    auto const add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *verify = app.add_subcommand("verify-paper", "Recompute every published reference value");
    add_format(verify);

    auto *futaki = app.add_subcommand("futaki", "Futaki invariant of the configured test configuration");
    futaki->add_option("--config", config_path, "Configuration file")->required();
    add_format(futaki);

    auto *gieseker = app.add_subcommand("gieseker", "Slope and Gieseker comparison of F against E");
    gieseker->add_option("--config", config_path, "Configuration file")->required();
    add_format(gieseker);

    auto *scan = app.add_subcommand("scan", "Destabilizer scan on a ruled surface");
    scan->add_option("--config", config_path, "Configuration file")->required();
    scan->add_option("--window", window, "Window size (default 10)")->check(CLI::NonNegativeNumber);
    add_format(scan);

    auto *example = app.add_subcommand("example", "Emit the ruled-surface example for genus g and parameter m");
    example->add_option("--g", genus, "Genus of the base curve (>= 2)")->required();
    example->add_option("--m", m, "Polarisation parameter (>= 0)")->required();
    example->add_option("--degv", deg_v, "deg V (default 0)");
    add_format(example);

    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep the ruled-surface family over ranges of g and m");
    sweep_cmd->add_option("--g", g_range, "Genus range A..B");
    sweep_cmd->add_option("--m", m_range, "m range C..D");
    sweep_cmd->add_option("--config", config_path, "Configuration file providing sweep_g/sweep_m");
    add_format(sweep_cmd);

    ::std::vector<char const *> argv;
    for (auto const &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const &e) {
        auto const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        ::std::optional<run_config> cfg;
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        }
        auto fmt = output_format::text;
        if (cfg && cfg->options.format) {
            fmt = *cfg->options.format;
        }
        if (!format_flag.empty()) {
            fmt = format_flag == "json" ? output_format::json : output_format::text;
        }
        bool const as_json = fmt == output_format::json;

        if (verify->parsed()) {
            auto const checks = run_reference_checks();
            bool all = true;
            for (auto const &c : checks) {
                all = all && c.pass;
            }
            if (as_json) {
                json doc = {{"checks", json::array()}, {"pass", all}};
                for (auto const &c : checks) {
                    doc["checks"].push_back(to_json(c));
                }
                out << doc.dump(2) << "\n";
            } else {
                print_checks(out, checks);
                ::std::size_t passed = 0;
                for (auto const &c : checks) {
                    passed += c.pass;
                }
                out << passed << "/" << checks.size() << " checks passed\n";
            }
            return all ? exit_ok : exit_check_failed;
        }

        if (futaki->parsed()) {
            auto const tc = cfg->make_test_config();
            auto const rep = futaki_invariant(tc);
            ::std::optional<equal_slope_result> crit;
            if (slope(tc.f(), tc.geom(), tc.omega()) == slope(tc.e(), tc.geom(), tc.omega())) {
                crit = equal_slope_criterion(tc);
            }
            if (as_json) {
                json doc = {{"report", to_json(rep)}};
                doc["equal_slope"] = crit ? to_json(*crit) : json(nullptr);
                out << doc.dump(2) << "\n";
            } else {
                print_report(out, rep);
                if (crit) {
                    out << "equal slopes: Q = " << crit->q << ", criterion " << to_string(crit->result) << "\n";
                }
            }
            return exit_ok;
        }

        if (gieseker->parsed()) {
            if (!cfg->testconfig) {
                throw config_error(config_error_kind::missing_field, 0, "testconfig",
                                   "gieseker compares [testconfig] F against E");
            }
            auto const &geom = cfg->require_geometry();
            auto const &omega = cfg->require_polarization();
            auto const &e = cfg->sheaf(cfg->testconfig->e);
            auto const &f = cfg->sheaf(cfg->testconfig->f);
            auto const mu = mumford_compare(f, e, geom, omega);
            auto const gv = gieseker_compare(f, e, geom, omega);
            if (as_json) {
                json doc = {{"slope_F", slope(f, geom, omega).str()},
                            {"slope_E", slope(e, geom, omega).str()},
                            {"mumford", to_string(mu)},
                            {"gieseker", to_json(gv)}};
                out << doc.dump(2) << "\n";
            } else {
                out << "mu(F) = " << slope(f, geom, omega) << ", mu(E) = " << slope(e, geom, omega) << ": "
                    << to_string(mu) << "\n";
                out << "Gieseker: " << to_string(gv.rel) << ", margin " << gv.margin << " at " << to_string(gv.level)
                    << "\n";
            }
            return exit_ok;
        }

        if (scan->parsed()) {
            if (!cfg->scan) {
                throw config_error(config_error_kind::missing_field, 0, "scan", "scan needs a [scan] section");
            }
            auto const w = window >= 0 ? window : cfg->options.window;
            auto const rep = ruled_scan(cfg->sheaf(cfg->scan->sheaf), cfg->scan->cases, cfg->require_geometry(),
                                        cfg->require_polarization(), w);
            if (as_json) {
                out << to_json(rep).dump(2) << "\n";
            } else {
                print_scan(out, rep);
            }
            return exit_ok;
        }

        if (example->parsed()) {
            auto const ex = make_ruled_example(genus, m, deg_v);
            if (as_json) {
                out << to_json(ex).dump(2) << "\n";
            } else {
                out << "# ruled surface over a genus " << genus << " curve, m = " << m << ", deg V = " << deg_v << "\n";
                out << "# mu(E) = mu(F2) = " << slope(ex.e, ex.geom, ex.omega) << ", c2(E) = " << ex.e.c2(ex.geom)
                    << "\n";
                out << emit_config(example_config(ex));
            }
            return exit_ok;
        }

        if (sweep_cmd->parsed()) {
            ::std::optional<int_range> gr, mr;
            if (cfg) {
                gr = cfg->options.sweep_g;
                mr = cfg->options.sweep_m;
            }
            if (!g_range.empty()) {
                gr = parse_cli_range(g_range, "--g");
            }
            if (!m_range.empty()) {
                mr = parse_cli_range(m_range, "--m");
            }
            if (!gr || !mr) {
                err << "sweep needs --g A..B and --m C..D\n";
                return exit_usage;
            }
            auto const rows = sweep(static_cast<int>(gr->lo), static_cast<int>(gr->hi), static_cast<int>(mr->lo),
                                    static_cast<int>(mr->hi));
            if (as_json) {
                json doc = {{"rows", json::array()}};
                for (auto const &r : rows) {
                    doc["rows"].push_back(to_json(r));
                }
                out << doc.dump(2) << "\n";
            } else {
                print_sweep(out, rows);
            }
            return exit_ok;
        }
    } catch (::std::exception const &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace projstab::cli

#endif
