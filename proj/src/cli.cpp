#include "diamonds/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "diamonds/asymptotics.hpp"
#include "diamonds/errors.hpp"
#include "diamonds/eulerian.hpp"
#include "diamonds/oracle.hpp"
#include "diamonds/qseries.hpp"
#include "diamonds/specfun.hpp"
#include "diamonds/verify.hpp"

namespace diamonds::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxD = 16;
constexpr int kMaxOrder = 100000;
constexpr int kMaxListN = 8;

// Raised for bad option values found after CLI11 parsing; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family = "size";
    int d = 1;
    int order = 0;
    long n = 1;
    std::string spec_path;
    bool json = false;
    std::string stat = "size";
    bool list = false;
    std::string poly;
    std::optional<double> tol;
    std::string grid;
    bool quick = false;
    int criterion = 0;
    std::string z;
    bool verbose = false;
    long seed = 0;
};

Json header()
{
    Json j;
    j["schema"] = 1;
    return j;
}

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(',', start);
        parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

template <class T>
T parse_number(const std::string& text, const std::string& what)
{
    T value{};
    if (!CLI::detail::lexical_cast(text, value)) {
        throw UsageError(what + ": cannot parse '" + text + "'");
    }
    return value;
}

void require_d(const Options& o)
{
    if (o.d < 1 || o.d > kMaxD) {
        throw UsageError("--d must lie in 1.." + std::to_string(kMaxD));
    }
}

void require_order(int order)
{
    if (order < 0 || order > kMaxOrder) {
        throw UsageError("--N must lie in 0.." + std::to_string(kMaxOrder));
    }
}

double default_tolerance(const Options& o)
{
    if (o.tol) {
        if (!(*o.tol > 0.0)) {
            throw UsageError("--tol must be positive");
        }
        return *o.tol;
    }
    if (const char* env = std::getenv(kToleranceEnv)) {
        const auto value = parse_number<double>(env, kToleranceEnv);
        if (!(value > 0.0)) {
            throw UsageError(std::string(kToleranceEnv) + " must be positive");
        }
        return value;
    }
    return ConstantReport::kAgreementTolerance;
}

ProductSpec family_spec(const Options& o)
{
    if (o.spec_path.empty()) {
        throw UsageError("--family general needs --spec <file>");
    }
    return load_product_spec(o.spec_path);
}

void check_family(const Options& o)
{
    if (o.family == "general") {
        if (o.spec_path.empty()) {
            throw UsageError("--family general needs --spec <file>");
        }
    } else {
        require_d(o);
    }
}

IntSeries family_series(const Options& o, int order)
{
    if (o.family == "schmidt") {
        return schmidt_series(o.d, order);
    }
    if (o.family == "size") {
        return size_series(o.d, order);
    }
    return general_product_series(family_spec(o), order);
}

AsymParams family_params(const Options& o)
{
    if (o.family == "schmidt") {
        return schmidt_params(o.d);
    }
    if (o.family == "size") {
        return size_params(o.d);
    }
    return general_params(family_spec(o));
}

int cmd_coeffs(const Options& o, std::ostream& out)
{
    check_family(o);
    require_order(o.order);
    const IntSeries s = family_series(o, o.order);
    if (o.json) {
        Json j = header();
        j["family"] = o.family;
        if (o.family != "general") {
            j["d"] = o.d;
        }
        j["N"] = o.order;
        Json coeffs = Json::array();
        for (const auto& c : s.coeffs()) {
            coeffs.push_back(c.get_str());
        }
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n) {
        out << n << ',' << s[n].get_str() << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    require_d(o);
    if (o.n < 0 || o.n > 40) {
        throw UsageError("--n must lie in 0..40");
    }
    if (o.stat != "size" && o.stat != "schmidt") {
        throw UsageError("--stat must be size or schmidt");
    }
    const int n = static_cast<int>(o.n);
    const DiamondStat stat = o.stat == "size" ? DiamondStat::size : DiamondStat::schmidt;
    if (!o.list) {
        out << (stat == DiamondStat::size ? brute_size_count(o.d, n) : brute_schmidt_count(o.d, n)).get_str()
            << '\n';
        return kExitOk;
    }
    if (n > kMaxListN) {
        throw UsageError("--list is limited to n <= " + std::to_string(kMaxListN));
    }
    const auto configs = list_diamonds(o.d, n, stat);
    Json j = header();
    j["d"] = o.d;
    j["n"] = n;
    j["stat"] = o.stat;
    j["count"] = configs.size();
    Json items = Json::array();
    for (const auto& c : configs) {
        items.push_back(Json{{"a", c.a}, {"b", c.b}});
    }
    j["diamonds"] = std::move(items);
    out << j.dump(2) << '\n';
    return kExitOk;
}

Json constant_json(const ConstantReport& r, double tol)
{
    return Json{{"quad", r.value_quadrature},
                {"dilog", r.value_dilog},
                {"gap", r.abs_gap},
                {"agrees", r.abs_gap < tol}};
}

int cmd_constants(const Options& o, std::ostream& out)
{
    const double tol = default_tolerance(o);
    Json j = header();
    if (!o.poly.empty()) {
        const UniPoly p = parse_unipoly(o.poly);
        j["poly"] = p.to_string();
        j["C_P"] = constant_json(c_constant(p), tol);
    } else {
        require_d(o);
        j["d"] = o.d;
        j["C_d"] = constant_json(c_constant(eulerian_family(o.d).A), tol);
        j["D_Fd"] = d_constant(deformed_family(o.d).F);
        j["gamma_schmidt"] = schmidt_params(o.d).gamma;
        j["gamma_size"] = size_params(o.d).gamma;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_asym(const Options& o, std::ostream& out)
{
    check_family(o);
    if (o.n < 1) {
        throw UsageError("--n must be at least 1");
    }
    const AsymParams params = family_params(o);
    Json j = header();
    j["family"] = o.family;
    if (o.family != "general") {
        j["d"] = o.d;
    }
    j["lambda"] = params.lambda;
    j["beta"] = params.beta;
    j["gamma"] = params.gamma;
    j["n"] = o.n;
    j["log_estimate"] = ingham_eval(params, o.n);
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err)
{
    check_family(o);
    require_order(o.order);
    if (o.grid.empty()) {
        throw UsageError("--grid n1,n2,... is required");
    }
    std::vector<long> grid;
    for (const auto& item : split_commas(o.grid)) {
        const long n = parse_number<long>(item, "--grid");
        if (n < 1 || n > o.order) {
            throw UsageError("--grid entries must lie in 1..N");
        }
        grid.push_back(n);
    }
    const IntSeries series = family_series(o, o.order);
    const CompareResult result = compare_exact_vs_asym(series, family_params(o), grid);
    for (const auto& note : result.notes) {
        err << "note: " << note << '\n';
    }
    out << "n,exact_log,asym_log,log_ratio\n";
    for (const auto& row : result.rows) {
        out << row.n << ',' << format_double(row.exact_log) << ',' << format_double(row.asym_log) << ','
            << format_double(row.log_ratio) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::vector<CriterionResult> results;
    if (o.criterion != 0) {
        if (o.criterion < 1 || o.criterion > kCriterionCount) {
            throw UsageError("--criterion must lie in 1.." + std::to_string(kCriterionCount));
        }
        results.push_back(run_criterion(o.criterion, o.quick));
    } else {
        results = run_all_criteria(o.quick);
    }
    bool ok = true;
    for (const auto& r : results) {
        out << format_result(r) << '\n';
        ok = ok && r.passed;
    }
    return ok ? kExitOk : kExitComputation;
}

int cmd_roots(const Options& o, std::ostream& out)
{
    if (o.poly.empty()) {
        throw UsageError("--poly is required");
    }
    const UniPoly p = parse_unipoly(o.poly);
    Json j = header();
    j["poly"] = p.to_string();
    Json roots = Json::array();
    for (const auto& r : poly_roots(p)) {
        roots.push_back(Json::array({r.real(), r.imag()}));
    }
    j["roots"] = std::move(roots);
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_dilog(const Options& o, std::ostream& out)
{
    const auto parts = split_commas(o.z);
    if (parts.size() > 2 || o.z.empty()) {
        throw UsageError("--z expects re or re,im");
    }
    const double re = parse_number<double>(parts[0], "--z");
    const double im = parts.size() == 2 ? parse_number<double>(parts[1], "--z") : 0.0;
    const ComplexVal value = dilog({re, im});
    Json j = header();
    j["z"] = Json::array({re, im});
    j["value"] = Json::array({value.real(), value.imag()});
    out << j.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Partition diamond generating functions, constants and asymptotics", "diamonds"};
    app.require_subcommand(1, 1);
    Options o;
    app.fallthrough();
    app.add_flag("--verbose", o.verbose, "Print run metadata to standard error");
    app.add_option("--seed", o.seed, "Accepted and ignored; every computation is deterministic");

    auto family_flags = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "schmidt, size or general")
            ->check(CLI::IsMember({"schmidt", "size", "general"}));
        sub->add_option("--d", o.d, "Diamond order d");
        sub->add_option("--spec", o.spec_path, "ProductSpec JSON file for --family general");
    };

    auto* coeffs = app.add_subcommand("coeffs", "Exact series coefficients as CSV n,coefficient");
    family_flags(coeffs);
    coeffs->add_option("--N", o.order, "Series order")->required();
    coeffs->add_flag("--json", o.json, "Emit JSON instead of CSV");

    auto* enumerate = app.add_subcommand("enumerate", "Brute-force diamond count");
    enumerate->add_option("--d", o.d, "Diamond order d")->required();
    enumerate->add_option("--n", o.n, "Statistic value")->required();
    enumerate->add_option("--stat", o.stat, "size or schmidt")->check(CLI::IsMember({"size", "schmidt"}));
    enumerate->add_flag("--list", o.list, "Dump every diamond as JSON (n <= 8)");

    auto* constants = app.add_subcommand("constants", "C_d by quadrature and dilogarithms, D(F_d), gammas");
    constants->add_option("--d", o.d, "Diamond order d");
    constants->add_option("--poly", o.poly, "Compute C_P for this polynomial instead");
    constants->add_option("--tol", o.tol, "Agreement tolerance for the two C routes");

    auto* asym = app.add_subcommand("asym", "Predicted log coefficient at n");
    family_flags(asym);
    asym->add_option("--n", o.n, "Coefficient index")->required();

    auto* compare = app.add_subcommand("compare", "Exact vs predicted log coefficients as CSV");
    family_flags(compare);
    compare->add_option("--N", o.order, "Series order")->required();
    compare->add_option("--grid", o.grid, "Comma separated indices")->required();

    auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
    verify->add_flag("--quick", o.quick, "Reduced sizes; skips the numerical criteria 7 and 9");
    verify->add_option("--criterion", o.criterion, "Run only this criterion");

    auto* roots = app.add_subcommand("roots", "Complex roots of an integer polynomial as JSON");
    roots->add_option("--poly", o.poly, "Polynomial text, e.g. 1+4x+x^2")->required();

    auto* dilog_cmd = app.add_subcommand("dilog", "Li_2(z) as JSON");
    dilog_cmd->add_option("--z", o.z, "re or re,im")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    if (o.verbose) {
        err << "diamonds " << sub->get_name() << "; seed ignored\n";
    }
    try {
        if (sub == coeffs) {
            return cmd_coeffs(o, out);
        }
        if (sub == enumerate) {
            return cmd_enumerate(o, out);
        }
        if (sub == constants) {
            return cmd_constants(o, out);
        }
        if (sub == asym) {
            return cmd_asym(o, out);
        }
        if (sub == compare) {
            return cmd_compare(o, out, err);
        }
        if (sub == verify) {
            return cmd_verify(o, out);
        }
        if (sub == roots) {
            return cmd_roots(o, out);
        }
        return cmd_dilog(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const diamonds::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const diamonds::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputation;
    }
}

} // namespace diamonds::cli
