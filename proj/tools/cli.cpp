#include "qvbs/cli.hpp"

#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qvbs/correlators.hpp"
#include "qvbs/detail/parallel.hpp"
#include "qvbs/mpsrep.hpp"
#include "qvbs/spectral.hpp"
#include "qvbs/verify.hpp"

namespace qvbs::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kDefaultGrid = "0.25:4:13:log";
constexpr const char* kVersion = "0.1.0";

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double to_double(const std::string& s) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw InvalidArgument("not a number: '" + s + "'");
    return v;
}

int to_int(const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
    return v;
}

std::string json_cell_to_csv(const Json& v) {
    switch (v.type()) {
        case Json::value_t::null: return "";
        case Json::value_t::boolean: return v.get<bool>() ? "true" : "false";
        case Json::value_t::number_float: return format_double(v.get<double>());
        case Json::value_t::number_integer: return std::to_string(v.get<long long>());
        case Json::value_t::number_unsigned: return std::to_string(v.get<unsigned long long>());
        case Json::value_t::string: return v.get<std::string>();
        case Json::value_t::array: {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + json_cell_to_csv(v[i]);
            return s;
        }
        default: return v.dump();
    }
}

// Non-finite doubles become null in JSON; keep them visible as strings instead.
Json num(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

struct Report {
    std::string command;
    Json parameters = Json::object();
    std::vector<std::string> columns;
    std::vector<Json> rows;
    Json extra = Json::object();
    bool has_status = false;
    bool passed = true;
};

std::string render(const Report& r, const std::string& format) {
    std::ostringstream s;
    if (format == "csv") {
        for (size_t i = 0; i < r.columns.size(); ++i) s << (i ? "," : "") << csv_field(r.columns[i]);
        s << "\r\n";
        for (const auto& row : r.rows) {
            for (size_t i = 0; i < r.columns.size(); ++i) {
                const auto it = row.find(r.columns[i]);
                s << (i ? "," : "") << csv_field(it == row.end() ? "" : json_cell_to_csv(*it));
            }
            s << "\r\n";
        }
        return s.str();
    }
    Json doc;
    doc["command"] = r.command;
    doc["version"] = kVersion;
    doc["parameters"] = r.parameters;
    doc["columns"] = r.columns;
    doc["rows"] = r.rows;
    for (const auto& [k, v] : r.extra.items()) doc[k] = v;
    if (r.has_status) doc["passed"] = r.passed;
    return doc.dump(2) + "\n";
}

struct Common {
    std::vector<std::string> q_list;
    std::string q_grid;
    std::string format = "json";
    std::string output;
    int jobs = 1;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--q", c.q_list, "Deformation values, comma separated")->delimiter(',');
    app->add_option("--q-grid", c.q_grid, "start:stop:count:log|lin (default 0.25:4:13:log)");
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--output,-o", c.output, "Output file; relative paths resolve against $QVBS_OUTPUT_DIR");
    app->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

std::vector<double> resolve_qs(const Common& c) {
    if (!c.q_list.empty() && !c.q_grid.empty()) throw InvalidArgument("--q and --q-grid are exclusive");
    std::vector<double> qs;
    if (!c.q_list.empty()) {
        for (const auto& s : c.q_list) qs.push_back(to_double(s));
    } else {
        qs = parse_q_grid(c.q_grid.empty() ? kDefaultGrid : c.q_grid);
    }
    for (double q : qs) static_cast<void>(Deformation{q});
    return qs;
}

std::optional<std::filesystem::path> resolve_output(const Common& c, const std::string& command) {
    const char* dir = std::getenv("QVBS_OUTPUT_DIR");
    if (!c.output.empty() && c.output != "-") {
        std::filesystem::path p(c.output);
        if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
        return p;
    }
    if (c.output.empty() && dir && *dir) return std::filesystem::path(dir) / (command + "." + c.format);
    return std::nullopt;
}

void emit(const Report& r, const Common& c, std::ostream& out, std::ostream& err) {
    const std::string text = render(r, c.format);
    const auto path = resolve_output(c, r.command);
    if (!path) {
        out << text;
        return;
    }
    if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file " + path->string());
    f << text;
    err << "wrote " << path->string() << "\n";
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& it : items) {
        const auto eq = it.find('=');
        if (eq == std::string::npos) throw InvalidArgument("tolerance override must be name=value: '" + it + "'");
        const double v = to_double(it.substr(eq + 1));
        if (!(v > 0.0)) throw InvalidArgument("tolerances must be positive");
        out[it.substr(0, eq)] = v;
    }
    return out;
}

Json tolerances_json(const std::map<std::string, double>& t) {
    Json j = Json::object();
    for (const auto& [k, v] : t) j[k] = v;
    return j;
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumOpts {
    Common common;
    std::string spins;
    std::vector<std::string> tol;
    bool eigenvectors = false;
};

int cmd_spectrum(const SpectrumOpts& o, std::ostream& out, std::ostream& err) {
    const std::vector<int> spins = parse_int_list(o.spins);
    for (int S : spins)
        if (S < 1 || S > 6) throw InvalidArgument("spectrum supports 1 <= S <= 6");
    const auto qs = resolve_qs(o.common);
    SpectrumTolerances tol;
    std::map<std::string, double*> slots{{"eigenvalue", &tol.eigenvalue},
                                         {"eigen_residual", &tol.eigen_residual},
                                         {"intertwining", &tol.intertwining},
                                         {"norm", &tol.norm},
                                         {"leading_one", &tol.leading_one}};
    for (const auto& [k, v] : parse_tolerances(o.tol)) {
        auto it = slots.find(k);
        if (it == slots.end()) throw InvalidArgument("unknown spectrum tolerance '" + k + "'");
        *it->second = v;
    }

    struct Point { int spin; double q; };
    std::vector<Point> grid;
    for (int S : spins)
        for (double q : qs) grid.push_back({S, q});
    const auto reports = parallel_map<SpectrumReport>(static_cast<int>(grid.size()), o.common.jobs, [&](int i) {
        return verify_spectrum(grid[i].spin, Deformation(grid[i].q), tol);
    });

    Report r;
    r.command = "spectrum";
    r.has_status = true;
    r.parameters["spin"] = spins;
    r.parameters["q"] = qs;
    r.parameters["tolerances"] = Json{{"eigenvalue", tol.eigenvalue},
                                      {"eigen_residual", tol.eigen_residual},
                                      {"intertwining", tol.intertwining},
                                      {"norm", tol.norm},
                                      {"leading_one", tol.leading_one}};
    r.columns = {"spin", "q", "eigenvalues", "degeneracies", "max_eigenvalue_rel_error", "max_eigen_residual",
                 "max_intertwining_residual", "max_norm_residual", "max_leading_one_error", "min_block_separation",
                 "passed", "failures"};
    for (const auto& rep : reports) {
        Json row;
        row["spin"] = rep.spin;
        row["q"] = rep.q;
        row["eigenvalues"] = rep.eigenvalues;
        row["degeneracies"] = rep.degeneracies;
        row["max_eigenvalue_rel_error"] = num(rep.max_eigenvalue_rel_error);
        row["max_eigen_residual"] = num(rep.max_eigen_residual);
        row["max_intertwining_residual"] = num(rep.max_intertwining_residual);
        row["max_norm_residual"] = num(rep.max_norm_residual);
        row["max_leading_one_error"] = num(rep.max_leading_one_error);
        row["min_block_separation"] = num(rep.min_block_separation);
        row["passed"] = rep.passed;
        row["failures"] = rep.failures;
        r.rows.push_back(row);
        r.passed = r.passed && rep.passed;
        if (!rep.passed) {
            err << "spectrum S=" << rep.spin << " q=" << format_double(rep.q) << " failed:";
            for (const auto& f : rep.failures) err << " [" << f << "]";
            err << "\n";
        }
    }
    if (o.eigenvectors) {
        Json vecs = Json::array();
        for (const auto& p : grid) {
            const Deformation q(p.q);
            for (int l = 0; l <= p.spin; ++l)
                for (int j = -l; j <= l; ++j) {
                    const Vector v = eigenvector(p.spin, l, j, q);
                    Json e;
                    e["spin"] = p.spin;
                    e["q"] = p.q;
                    e["level"] = l;
                    e["block"] = j;
                    Json basis = Json::array();
                    for (auto [a, b] : block_basis(p.spin, j)) basis.push_back({a, b});
                    e["basis"] = basis;
                    e["components"] = std::vector<double>(v.data(), v.data() + v.size());
                    e["squared_norm"] = squared_norm_closed(p.spin, l, j, q);
                    vecs.push_back(e);
                }
        }
        r.extra["basis_convention"] =
            "W basis |a,b>> with index a*(S+1)+b; block j lists |i,i+j>> (j>=0) or |i-j,i>> (j<0) by increasing i; "
            "eigenvectors are unnormalized with leading component 1";
        r.extra["eigenvectors"] = vecs;
    }
    emit(r, o.common, out, err);
    return r.passed ? kOk : kCheckFailed;
}

// --- correlate --------------------------------------------------------------

struct CorrelateOpts {
    Common common;
    int spin = 1;
    std::string pair = "zz";
    std::string r_range = "2..10";
    std::string lengths;
    std::string mode = "thermo";
};

// Least-squares slope of ln|value| against r; -1/slope is the fitted length.
std::optional<double> fitted_zeta(const std::vector<std::pair<int, double>>& series) {
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [r, v] : series) {
        if (!(std::abs(v) > 0.0) || !std::isfinite(v)) continue;
        const double y = std::log(std::abs(v));
        n += 1;
        sx += r;
        sy += y;
        sxx += double(r) * r;
        sxy += r * y;
    }
    if (n < 2) return std::nullopt;
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (!(slope < 0.0)) return std::nullopt;
    return -1.0 / slope;
}

int cmd_correlate(const CorrelateOpts& o, std::ostream& out, std::ostream& err) {
    if (o.spin < 1) throw InvalidArgument("spin S must be >= 1");
    const PairKind pair = parse_pair(o.pair);
    const auto qs = resolve_qs(o.common);
    const std::vector<int> rs = parse_int_list(o.r_range);
    for (int r : rs)
        if (r < 2) throw InvalidArgument("two-point functions need r >= 2 (r = 1 is the same site)");
    const bool finite = o.mode == "finite" || o.mode == "both";
    const bool thermo = o.mode == "thermo" || o.mode == "both";
    std::vector<int> lengths;
    if (finite) {
        if (o.lengths.empty()) throw InvalidArgument("--mode " + o.mode + " needs --L");
        lengths = parse_int_list(o.lengths);
        for (int L : lengths) {
            if (L < 2) throw InvalidArgument("chain length L must be >= 2");
            for (int r : rs)
                if (r > L) throw InvalidArgument("r = " + std::to_string(r) + " exceeds L = " + std::to_string(L));
        }
    } else if (!o.lengths.empty()) {
        throw InvalidArgument("--L only applies to --mode finite or both");
    }

    struct Series {
        std::string mode;
        double q;
        std::optional<int> length;
    };
    std::vector<Series> series;
    for (double q : qs) {
        if (finite)
            for (int L : lengths) series.push_back({"finite", q, L});
        if (thermo) series.push_back({"thermo", q, std::nullopt});
        if (o.mode == "asymptotic") series.push_back({"asymptotic", q, std::nullopt});
    }

    const int S = o.spin;
    auto rows = parallel_map<std::vector<Json>>(static_cast<int>(series.size()), o.common.jobs, [&](int i) {
        const auto& s = series[static_cast<size_t>(i)];
        const Deformation q(s.q);
        std::vector<std::pair<int, double>> values;
        for (int r : rs) {
            double v = 0.0;
            if (s.mode == "finite")
                v = two_point_finite(S, q, *s.length, r, pair);
            else if (s.mode == "thermo")
                v = two_point_thermo(S, q, r, pair);
            else
                v = pair == PairKind::ZZ ? zz_asymptotic(S, q, r) : pm_asymptotic(S, q, r);
            values.emplace_back(r, v);
        }
        const auto zeta = fitted_zeta(values);
        std::optional<int> radius;
        if (s.mode == "asymptotic") radius = asymptotic(S, q, pair).validity_radius;
        std::vector<Json> out_rows;
        for (size_t k = 0; k < values.size(); ++k) {
            const auto [r, v] = values[k];
            Json row;
            row["spin"] = S;
            row["q"] = s.q;
            row["pair"] = std::string(to_string(pair));
            row["mode"] = s.mode;
            row["L"] = s.length ? Json(*s.length) : Json(nullptr);
            row["r"] = r;
            row["distance"] = r - 1;
            row["value"] = num(v);
            row["log_abs"] = num(std::log(std::abs(v)));
            row["local_ratio"] = (k > 0 && values[k - 1].first == r - 1) ? num(v / values[k - 1].second) : Json(nullptr);
            row["fitted_zeta"] = zeta ? num(*zeta) : Json(nullptr);
            row["gap"] = o.mode == "both" && s.mode == "finite" ? num(std::abs(v - two_point_thermo(S, q, r, pair)))
                                                                 : Json(nullptr);
            row["validity_radius"] = radius ? Json(*radius) : Json(nullptr);
            out_rows.push_back(row);
        }
        return out_rows;
    });

    Report r;
    r.command = "correlate";
    r.parameters["spin"] = S;
    r.parameters["q"] = qs;
    r.parameters["pair"] = std::string(to_string(pair));
    r.parameters["mode"] = o.mode;
    r.parameters["r"] = rs;
    r.parameters["L"] = lengths;
    r.parameters["distance_convention"] = "operators on sites 1 and r; distance = r - 1";
    Json ref = Json::array();
    for (double qv : qs) {
        const auto a = asymptotic(S, Deformation(qv), pair);
        ref.push_back(Json{{"q", qv}, {"correlation_length", a.correlation_length}, {"ratio", a.ratio}, {"amplitude", num(a.amplitude)}});
    }
    r.extra["closed_form"] = ref;
    r.columns = {"spin", "q", "pair", "mode", "L", "r", "distance", "value", "log_abs", "local_ratio", "fitted_zeta",
                 "gap", "validity_radius"};
    for (auto& block : rows)
        for (auto& row : block) r.rows.push_back(std::move(row));
    emit(r, o.common, out, err);
    return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyOpts {
    Common common;
    int spin = 1;
    std::string lengths = "2..6";
    bool prop1 = false;
    bool full = false;
    int n_max = -1;
    std::uint64_t seed = 12345;
    int samples = 200;
    std::vector<std::string> couplings;
    std::vector<std::string> tol;
};

BondCouplings parse_couplings(const std::vector<std::string>& items, int spin) {
    BondCouplings c;
    for (const auto& it : items) {
        const auto eq = it.find('=');
        if (eq == std::string::npos) throw InvalidArgument("coupling must be J=value or J@bond=value: '" + it + "'");
        const std::string key = it.substr(0, eq);
        const double v = to_double(it.substr(eq + 1));
        const auto at = key.find('@');
        const int J = to_int(key.substr(0, at));
        if (J < spin + 1 || J > 2 * spin) throw InvalidArgument("couplings exist for S+1 <= J <= 2S only");
        if (at == std::string::npos)
            c.set(J, v);
        else
            c.set(J, to_int(key.substr(at + 1)), v);
    }
    return c;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
    VerifyConfig c;
    c.spin = o.spin;
    c.qs = resolve_qs(o.common);
    c.chain_checks = !o.prop1 || o.full;
    c.prop1 = o.prop1 || o.full;
    if (c.chain_checks) c.lengths = parse_int_list(o.lengths);
    c.n_max = o.n_max;
    c.seed = o.seed;
    c.vandermonde_samples = o.samples;
    c.couplings = parse_couplings(o.couplings, o.spin);
    c.tolerances = parse_tolerances(o.tol);
    c.jobs = o.common.jobs;
    validate(c);
    const auto results = run_verification(c);

    Report r;
    r.command = "verify";
    r.has_status = true;
    r.parameters["spin"] = c.spin;
    r.parameters["q"] = c.qs;
    r.parameters["L"] = c.chain_checks ? Json(c.lengths) : Json::array();
    r.parameters["prop1"] = c.prop1;
    r.parameters["n_max"] = c.n_max;
    r.parameters["seed"] = c.seed;
    r.parameters["samples"] = c.vandermonde_samples;
    r.parameters["couplings"] = o.couplings;
    r.parameters["tolerance_overrides"] = tolerances_json(c.tolerances);
    r.columns = {"check", "spin", "q", "L", "J", "n", "max_residual", "tolerance", "passed", "detail"};
    int failed = 0;
    for (const auto& x : results) {
        Json row;
        row["check"] = x.check;
        row["spin"] = x.check == "q_vandermonde" ? Json(nullptr) : Json(x.spin);
        row["q"] = x.q ? Json(*x.q) : Json(nullptr);
        row["L"] = x.length ? Json(*x.length) : Json(nullptr);
        row["J"] = x.total ? Json(*x.total) : Json(nullptr);
        row["n"] = x.n ? Json(*x.n) : Json(nullptr);
        row["max_residual"] = num(x.max_residual);
        row["tolerance"] = x.tolerance;
        row["passed"] = x.passed;
        row["detail"] = x.detail;
        r.rows.push_back(row);
        if (!x.passed) {
            ++failed;
            err << "FAILED " << x.check << " S=" << x.spin;
            if (x.q) err << " q=" << format_double(*x.q);
            if (x.length) err << " L=" << *x.length;
            if (x.total) err << " J=" << *x.total;
            err << " residual=" << format_double(x.max_residual) << " tol=" << format_double(x.tolerance) << "\n";
        }
    }
    r.passed = failed == 0;
    emit(r, o.common, out, err);
    err << results.size() - failed << "/" << results.size() << " checks passed\n";
    return r.passed ? kOk : kCheckFailed;
}

}  // namespace

std::vector<double> parse_q_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& s : split(text, ',')) out.push_back(to_double(s));
    if (out.empty()) throw InvalidArgument("empty q list");
    return out;
}

std::vector<double> parse_q_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw InvalidArgument("q grid must be start:stop:count:log|lin");
    const double a = to_double(parts[0]), b = to_double(parts[1]);
    const int n = to_int(parts[2]);
    const std::string kind = parts[3];
    if (n < 1) throw InvalidArgument("q grid needs count >= 1");
    if (kind != "log" && kind != "lin") throw InvalidArgument("q grid spacing must be log or lin");
    if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("q grid bounds must be > 0");
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        const double t = n == 1 ? 0.0 : double(i) / (n - 1);
        out.push_back(kind == "log" ? a * std::pow(b / a, t) : a + t * (b - a));
    }
    // Pin the endpoints exactly.
    out.front() = a;
    if (n > 1) out.back() = b;
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split(text, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(part));
            continue;
        }
        const int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + 2));
        if (hi < lo) throw InvalidArgument("empty range '" + part + "'");
        for (int i = lo; i <= hi; ++i) out.push_back(i);
    }
    if (out.empty()) throw InvalidArgument("empty integer list");
    return out;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
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

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-deformed VBS transfer-matrix spectra, correlators and oracle checks", "qvbs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    SpectrumOpts sp;
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form spectrum of G checked against a Jacobi eigensolve");
    spectrum->add_option("--spin,-S", sp.spins, "Spin S or a list/range such as 1..4")->required();
    spectrum->add_option("--tol", sp.tol, "Tolerance override name=value (eigenvalue, eigen_residual, intertwining, norm, leading_one)");
    spectrum->add_flag("--eigenvectors", sp.eigenvectors, "Include eigenvectors in JSON output");
    add_common(spectrum, sp.common);

    CorrelateOpts co;
    auto* correlate = app.add_subcommand("correlate", "Two-point functions in long format");
    correlate->add_option("--spin,-S", co.spin, "Spin S")->required();
    correlate->add_option("--pair", co.pair, "Operator pair")->check(CLI::IsMember({"zz", "pm"}));
    correlate->add_option("--r", co.r_range, "Second site r, list or range (default 2..10)");
    correlate->add_option("--L", co.lengths, "Chain lengths for finite mode, list or range");
    correlate->add_option("--mode", co.mode, "finite, thermo, asymptotic or both")
        ->check(CLI::IsMember({"finite", "thermo", "asymptotic", "both"}));
    add_common(correlate, co.common);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Brute-force oracle cross-validation");
    verify->add_option("--spin,-S", vo.spin, "Spin S")->required();
    verify->add_option("--L", vo.lengths, "Chain lengths, list or range (default 2..6)");
    verify->add_flag("--prop1", vo.prop1, "Run only the lowering-operator grid");
    verify->add_flag("--full", vo.full, "Run the chain checks and the lowering-operator grid");
    verify->add_option("--n-max", vo.n_max, "Largest n in the lowering-operator grid (default 2J+1)");
    verify->add_option("--seed", vo.seed, "Seed for sampled identities");
    verify->add_option("--samples", vo.samples, "Samples for the q-Vandermonde check");
    verify->add_option("--coupling", vo.couplings, "Coupling override J=value or J@bond=value (bond 0-based)");
    verify->add_option("--tol", vo.tol, "Tolerance override check=value");
    add_common(verify, vo.common);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*spectrum) return cmd_spectrum(sp, out, err);
        if (*correlate) return cmd_correlate(co, out, err);
        return cmd_verify(vo, out, err);
    } catch (const InvalidArgument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace qvbs::cli
