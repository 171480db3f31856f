#pragma once

// Command-line front end: catalog builds, table verifications, Einstein
// scans, duality checks, and deterministic JSON/CSV reports.
//
// run() is the in-process entry point used both by the binary in tools/ and
// by the test suite.  Exit codes: 0 all checks passed, 1 at least one
// verification failed, 2 usage or environment error.  JSON output is
// deterministic: keys are emitted sorted and all rationals are exact "p/q"
// strings; floating point appears only in optional --approx columns.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "duality.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace pseudohopf::cli {

using json = nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- exact value formatting --------------------------------------------------

inline std::string rat_str(const Rat& v) {
    std::string s = rat_num(v).str();
    if (rat_den(v) != 1) s += "/" + rat_den(v).str();
    return s;
}

inline double rat_approx(const Rat& v) { return v.convert_to<double>(); }

inline Rat parse_rat(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num) / Rat(den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

// --- JSON records --------------------------------------------------------------

inline json action_record(const RowReport& r) {
    return json{{"table", r.table},
                {"row", r.row},
                {"params", r.params},
                {"family", r.family},
                {"space", r.space},
                {"dim_ambient", r.dims.dim_ambient},
                {"dim_g", r.dims.dim_g},
                {"dim_h", r.dims.dim_h},
                {"dim_sum", r.dims.dim_sum},
                {"claimed_h", r.claimed_h},
                {"coset_dim", r.coset_dim},
                {"space_dim", r.space_dim},
                {"pass", r.pass},
                {"failures", r.failures}};
}

inline json duality_record(const Table3Report& r, bool approx = false) {
    json j{{"row", r.row},
           {"a", r.a},
           {"b", r.b},
           {"family", r.family},
           {"space", r.space},
           {"dual", r.dual_name},
           {"dim_g", r.dim_g},
           {"dim_h", r.dim_h},
           {"dim_m", r.dim_m},
           {"claimed_dim_g", r.claimed_dim_g},
           {"claimed_dim_h", r.claimed_dim_h},
           {"claimed_dim_m", r.claimed_dim_m},
           {"killing_compact", r.killing_compact},
           {"dual_einstein", r.dual_einstein},
           {"einstein_constant", rat_str(r.einstein_constant)},
           {"rank", r.rank},
           {"claimed_rank", r.claimed_rank},
           {"rank_checked", r.rank_checked},
           {"pass", r.pass},
           {"failures", r.failures}};
    if (approx) j["einstein_constant_approx"] = rat_approx(r.einstein_constant);
    return j;
}

inline json metric_record(const MetricDescriptor& d, bool approx = false) {
    json j{{"kind", d.kind}, {"t", rat_str(d.t)}};
    if (d.kind == "variation") {
        j["fibration"] = d.fibration;
        j["m"] = d.m;
        j["s"] = d.s;
    }
    if (approx) j["t_approx"] = rat_approx(d.t);
    return j;
}

// --- sweeps -------------------------------------------------------------------

inline std::vector<RowReport> sweep_action_table(int table) {
    std::vector<RowReport> out;
    if (table == 1) {
        for (const auto& [t, row, a, b] : table1_minimal_params())
            out.push_back(verify_table_row(1, static_cast<int>(row), a, b));
    } else if (table == 2) {
        for (int row = 1; row <= 7; ++row)
            out.push_back(verify_table_row(2, row, 1, 0));
    } else {
        throw std::invalid_argument("sweep_action_table: table must be 1 or 2");
    }
    return out;
}

// --- report files ---------------------------------------------------------------

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
    std::ofstream ofs(path, std::ios::binary);
    if (!ofs) throw IoError("cannot open '" + path.string() + "' for writing");
    ofs << content;
    ofs.flush();
    if (!ofs.good()) throw IoError("write failed for '" + path.string() + "'");
}

inline std::string csv_quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        q += c;
    }
    q += "\"";
    return q;
}

inline std::string action_csv(const std::vector<RowReport>& rows) {
    std::ostringstream os;
    os << "table,row,a,b,family,space,pass\n";
    for (const RowReport& r : rows) {
        std::size_t a = r.params.size() > 0 ? r.params[0] : 0;
        std::size_t b = r.params.size() > 1 ? r.params[1] : 0;
        os << r.table << ',' << r.row << ',' << a << ',' << b << ','
           << csv_quote(r.family) << ',' << csv_quote(r.space) << ','
           << (r.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

inline std::string duality_csv(const std::vector<Table3Report>& rows) {
    std::ostringstream os;
    os << "row,a,b,family,space,dual,pass\n";
    for (const Table3Report& r : rows)
        os << r.row << ',' << r.a << ',' << r.b << ',' << csv_quote(r.family)
           << ',' << csv_quote(r.space) << ',' << csv_quote(r.dual_name) << ','
           << (r.pass ? "true" : "false") << '\n';
    return os.str();
}

// --- human-readable lines -------------------------------------------------------

inline void print_action_row(std::ostream& out, const RowReport& r) {
    out << "table " << r.table << " row " << r.row << " [" << r.family << " on "
        << r.space << "] ambient=" << r.dims.dim_ambient << " g=" << r.dims.dim_g
        << " h=" << r.dims.dim_h << " sum=" << r.dims.dim_sum;
    if (r.table == 2) out << " claimed_h=" << r.claimed_h;
    out << (r.pass ? "  PASS" : "  FAIL") << '\n';
    for (const std::string& f : r.failures) out << "    failure: " << f << '\n';
}

inline void print_duality_row(std::ostream& out, const Table3Report& r) {
    out << "table 3 row " << r.row << " [" << r.family << " on " << r.space
        << " -> " << r.dual_name << "] g=" << r.dim_g << " h=" << r.dim_h
        << " m=" << r.dim_m;
    if (r.rank_checked) out << " rank=" << r.rank;
    out << " lambda=" << rat_str(r.einstein_constant)
        << (r.pass ? "  PASS" : "  FAIL") << '\n';
    for (const std::string& f : r.failures) out << "    failure: " << f << '\n';
}

// --- subcommand implementations ---------------------------------------------------

namespace detail {

struct TablesOptions {
    int table = 0;  // 0 = all
    bool as_json = false;
    bool approx = false;
};

inline int run_tables(const TablesOptions& o, std::ostream& out) {
    bool all_pass = true;
    json records = json::array();
    auto do_actions = [&](int table) {
        for (const RowReport& r : sweep_action_table(table)) {
            all_pass = all_pass && r.pass;
            if (o.as_json)
                records.push_back(action_record(r));
            else
                print_action_row(out, r);
        }
    };
    if (o.table == 0 || o.table == 1) do_actions(1);
    if (o.table == 0 || o.table == 2) do_actions(2);
    if (o.table == 0 || o.table == 3) {
        for (const Table3Report& r : verify_table3_all()) {
            all_pass = all_pass && r.pass;
            if (o.as_json)
                records.push_back(duality_record(r, o.approx));
            else
                print_duality_row(out, r);
        }
    }
    if (o.as_json) out << records.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

struct VerifyActionOptions {
    int table = 1;
    int row = 0;
    std::size_t a = 0, b = 0;
    bool as_json = false;
};

inline int run_verify_action(const VerifyActionOptions& o, std::ostream& out) {
    RowReport r = verify_table_row(o.table, o.row, o.a, o.b);
    if (o.as_json)
        out << action_record(r).dump(2) << '\n';
    else
        print_action_row(out, r);
    return r.pass ? 0 : 1;
}

struct EinsteinOptions {
    std::string fibration;
    std::size_t m = 0, s = 0;
    bool scan = false;
    std::string t;  // exact rational, e.g. "1/5"
    bool as_json = false;
    bool approx = false;
};

inline int run_einstein(const EinsteinOptions& o, std::ostream& out) {
    HopfFibration f = build_fibration(o.fibration, o.m, o.s);
    auto [lam_base, lam_fibre] = lambda_values(f);
    std::optional<Rat> t0 = t_zero(f);

    auto value_entry = [&](const Rat& t) {
        ReductiveSpace v = variation(f, t);
        RatMat ric = ricci(v.tensors());
        Rat constant = scalar_curvature_of(v.tensors(), ric) /
                       Rat(static_cast<long>(v.dim_m()));
        Rat residual = einstein_residual(v.tensors());
        json j{{"t", rat_str(t)},
               {"constant", rat_str(constant)},
               {"residual", rat_str(residual)}};
        if (o.approx) j["t_approx"] = rat_approx(t);
        return j;
    };

    json j{{"fibration", f.id},
           {"m", f.m},
           {"s", f.s},
           {"total", f.total_tag},
           {"base", f.base_tag},
           {"fibre_dim", f.fibre_dim},
           {"lambda_fibre", rat_str(lam_fibre)},
           {"lambda_base", rat_str(lam_base)},
           {"t0", t0 ? json(rat_str(*t0)) : json(nullptr)}};

    if (!o.as_json) {
        out << "fibration " << f.id << " (m=" << f.m << ", s=" << f.s
            << "): " << f.total_tag << " -> " << f.base_tag << ", fibre dim "
            << f.fibre_dim << '\n';
        out << "lambda_fibre = " << rat_str(lam_fibre)
            << ", lambda_base = " << rat_str(lam_base) << ", t0 = "
            << (t0 ? rat_str(*t0) : std::string("none")) << '\n';
    }

    if (o.scan) {
        std::vector<Rat> ts = einstein_scan(f);
        std::sort(ts.begin(), ts.end(), std::greater<Rat>());  // canonical t=1 first
        if (!o.as_json) {
            out << "scan: t in {";
            for (std::size_t i = 0; i < ts.size(); ++i)
                out << (i ? ", " : "") << rat_str(ts[i]);
            out << "}\n";
        }
        json entries = json::array();
        for (const Rat& t : ts) {
            json e = value_entry(t);
            if (!o.as_json)
                out << "  t = " << e["t"].get<std::string>() << ": einstein constant "
                    << e["constant"].get<std::string>() << ", residual "
                    << e["residual"].get<std::string>() << '\n';
            entries.push_back(std::move(e));
        }
        j["scan"] = std::move(entries);
    }
    if (!o.t.empty()) {
        json e = value_entry(parse_rat(o.t));
        if (!o.as_json)
            out << "t = " << e["t"].get<std::string>() << ": einstein constant "
                << e["constant"].get<std::string>() << ", residual "
                << e["residual"].get<std::string>() << '\n';
        j["value"] = std::move(e);
    }
    if (o.as_json) out << j.dump(2) << '\n';
    return 0;
}

struct DualOptions {
    int row = 0;
    std::size_t a = 0, b = 0;
    std::string family;
    bool as_json = false;
    bool approx = false;
};

inline int run_dual(const DualOptions& o, std::ostream& out) {
    if ((o.row == 0) == o.family.empty())
        throw std::invalid_argument("dual: give exactly one of --row or --family");
    if (o.row != 0) {
        Table3Report r = verify_table3(static_cast<std::size_t>(o.row), o.a, o.b);
        if (o.as_json)
            out << duality_record(r, o.approx).dump(2) << '\n';
        else
            print_duality_row(out, r);
        return r.pass ? 0 : 1;
    }
    MatrixLieAlgebra g = parse_family(o.family).algebra;
    RatMat theta = cartan_involution(g);
    DualityData dd = compact_dual(g, theta);
    Inertia kin = inertia(killing_matrix(dd.dual));
    std::size_t centre = center_coords(dd.dual).size();
    std::optional<std::size_t> rk = compact_rank(dd.dual);
    if (o.as_json) {
        json j{{"family", o.family},
               {"dim", dd.dual.dim},
               {"dim_plus", dd.plus.dim()},
               {"dim_minus", dd.minus.dim()},
               {"killing",
                json{{"positive", kin.positive},
                     {"negative", kin.negative},
                     {"null", kin.null}}},
               {"centre_dim", centre},
               {"rank", rk ? json(*rk) : json(nullptr)}};
        out << j.dump(2) << '\n';
    } else {
        out << "family " << o.family << ": dim " << dd.dual.dim << ", split "
            << dd.plus.dim() << "+" << dd.minus.dim() << ", dual Killing "
            << (kin.null == 0 ? "negative definite" : "negative semidefinite")
            << " (" << kin.positive << "," << kin.negative << "," << kin.null
            << "), centre " << centre << ", rank "
            << (rk ? std::to_string(*rk) : std::string("not certified")) << '\n';
    }
    return 0;
}

struct EnumerateOptions {
    std::string space;
    bool as_json = false;
    bool approx = false;
};

inline int run_enumerate(const EnumerateOptions& o, std::ostream& out) {
    std::vector<MetricDescriptor> metrics = enumerate_einstein_metrics(o.space);
    if (o.as_json) {
        json j{{"space", o.space}, {"count", metrics.size()}};
        json arr = json::array();
        for (const MetricDescriptor& d : metrics) arr.push_back(metric_record(d, o.approx));
        j["metrics"] = std::move(arr);
        out << j.dump(2) << '\n';
    } else {
        out << "space " << o.space << ": count " << metrics.size() << '\n';
        for (const MetricDescriptor& d : metrics) {
            out << "  " << d.kind;
            if (d.kind == "variation") {
                out << " " << d.fibration << " (m=" << d.m << ", s=" << d.s
                    << ") t=" << rat_str(d.t);
                if (o.approx) out << " (~" << rat_approx(d.t) << ")";
            }
            out << '\n';
        }
    }
    return 0;
}

struct ReportOptions {
    std::string dir;
    bool csv = false;
};

inline int run_report(const ReportOptions& o, std::ostream& out) {
    namespace fs = std::filesystem;
    std::string dir = o.dir;
    if (dir.empty()) {
        const char* env = std::getenv("PSEUDOHOPF_REPORT_DIR");
        dir = env ? env : ".";
    }
    fs::path base(dir);
    std::error_code ec;
    fs::create_directories(base, ec);
    if (ec) throw IoError("cannot create report directory '" + base.string() + "'");

    bool all_pass = true;
    auto dump_records = [&](const json& records, const std::string& name) {
        fs::path p = base / name;
        write_text_file(p, records.dump(2) + "\n");
        out << "wrote " << p.string() << '\n';
    };

    std::vector<RowReport> t1 = sweep_action_table(1);
    std::vector<RowReport> t2 = sweep_action_table(2);
    std::vector<Table3Report> t3 = verify_table3_all();
    json j1 = json::array(), j2 = json::array(), j3 = json::array();
    for (const RowReport& r : t1) {
        all_pass = all_pass && r.pass;
        j1.push_back(action_record(r));
    }
    for (const RowReport& r : t2) {
        all_pass = all_pass && r.pass;
        j2.push_back(action_record(r));
    }
    for (const Table3Report& r : t3) {
        all_pass = all_pass && r.pass;
        j3.push_back(duality_record(r));
    }
    dump_records(j1, "table1.json");
    dump_records(j2, "table2.json");
    dump_records(j3, "table3.json");
    if (o.csv) {
        write_text_file(base / "table1.csv", action_csv(t1));
        out << "wrote " << (base / "table1.csv").string() << '\n';
        write_text_file(base / "table2.csv", action_csv(t2));
        out << "wrote " << (base / "table2.csv").string() << '\n';
        write_text_file(base / "table3.csv", duality_csv(t3));
        out << "wrote " << (base / "table3.csv").string() << '\n';
    }
    out << (all_pass ? "all rows PASS" : "some rows FAIL") << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace detail

// In-process entry point; args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "exact-arithmetic toolkit for homogeneous pseudo-Riemannian geometry"};
    app.name("pseudohopf");
    app.require_subcommand(1);

    detail::TablesOptions tab;
    CLI::App* tables = app.add_subcommand(
        "tables", "verify every table row at minimal parameters");
    tables->add_option("--table", tab.table, "restrict to one table (1, 2 or 3)")
        ->check(CLI::Range(1, 3));
    tables->add_flag("--json", tab.as_json, "emit one JSON array of records");
    tables->add_flag("--approx", tab.approx, "add floating-point display columns");

    detail::VerifyActionOptions va;
    CLI::App* verify = app.add_subcommand(
        "verify-action", "verify one transitive-action table row");
    verify->add_option("--table", va.table, "action table (1 or 2)")
        ->check(CLI::Range(1, 2));
    verify->add_option("--row", va.row, "row number")->required();
    verify->add_option("--a", va.a, "first parameter (n or m)");
    verify->add_option("--b", va.b, "second parameter (r or s)");
    verify->add_flag("--json", va.as_json, "emit a JSON record");

    detail::EinsteinOptions ein;
    CLI::App* einstein = app.add_subcommand(
        "einstein", "Einstein data of a catalog fibration");
    einstein->add_option("--fibration", ein.fibration, "fibration id (e.g. piH)")
        ->required();
    einstein->add_option("--m", ein.m, "family parameter m");
    einstein->add_option("--s", ein.s, "family parameter s");
    einstein->add_flag("--scan", ein.scan,
                       "solve for every Einstein parameter of the canonical "
                       "variation");
    einstein->add_option("--t", ein.t, "evaluate one variation, exact p/q");
    einstein->add_flag("--json", ein.as_json, "emit a JSON record");
    einstein->add_flag("--approx", ein.approx, "add floating-point display columns");

    detail::DualOptions du;
    CLI::App* dual = app.add_subcommand(
        "dual", "compact duality checks (one table row or one family)");
    dual->add_option("--row", du.row, "duality table row (1..24)")
        ->check(CLI::Range(1, 24));
    dual->add_option("--a", du.a, "first parameter (n or m)");
    dual->add_option("--b", du.b, "second parameter (r or s)");
    dual->add_option("--family", du.family, "catalog family string");
    dual->add_flag("--json", du.as_json, "emit a JSON record");
    dual->add_flag("--approx", du.approx, "add floating-point display columns");

    detail::EnumerateOptions en;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list the Einstein metrics of a catalog space");
    enumerate->add_option("--space", en.space, "space tag, e.g. H:15:7")
        ->required();
    enumerate->add_flag("--json", en.as_json, "emit a JSON record");
    enumerate->add_flag("--approx", en.approx, "add floating-point display columns");

    detail::ReportOptions rep;
    CLI::App* report = app.add_subcommand(
        "report", "write full table sweeps as JSON (and optional CSV) files");
    report->add_option("--dir", rep.dir,
                       "output directory (default: $PSEUDOHOPF_REPORT_DIR or .)");
    report->add_flag("--csv", rep.csv, "also write CSV files");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tables->parsed()) return detail::run_tables(tab, out);
        if (verify->parsed()) return detail::run_verify_action(va, out);
        if (einstein->parsed()) return detail::run_einstein(ein, out);
        if (dual->parsed()) return detail::run_dual(du, out);
        if (enumerate->parsed()) return detail::run_enumerate(en, out);
        if (report->parsed()) return detail::run_report(rep, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "verification error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace pseudohopf::cli
