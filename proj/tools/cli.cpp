#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dpb/error.hpp"
#include "dpb/families.hpp"
#include "dpb/identities.hpp"
#include "dpb/json_io.hpp"
#include "dpb/umbral.hpp"

namespace dpb::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FamilyFlags {
    std::string family;
    std::optional<int> k;
    std::optional<std::string> lambda;
    bool symbolic = false;
    std::string format;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f)
{
    cmd->add_option("--family", f.family, "bernoulli | carlitz | daehee | polybernoulli | fdpb")->required();
    cmd->add_option("--k", f.k, "order k of the poly families (any integer)");
    auto* lam = cmd->add_option("--lambda", f.lambda, "substitute lambda = P/Q");
    auto* sym = cmd->add_flag("--symbolic", f.symbolic, "keep lambda symbolic (default)");
    lam->excludes(sym);
}

struct Resolved {
    FamilySpec spec;
    std::optional<Rat> lambda;
};

Resolved resolve(const FamilyFlags& f, Argument arg)
{
    auto family = parse_family(f.family);
    if (!family) {
        throw UsageError("unknown family '" + f.family + "'");
    }
    if (has_order_parameter(*family) && !f.k) {
        throw UsageError("--k is required for --family " + f.family);
    }
    Resolved r{{*family, has_order_parameter(*family) ? f.k : std::nullopt, arg}, std::nullopt};
    if (f.lambda) {
        try {
            r.lambda = Rat::parse(*f.lambda);
        } catch (const ParseError& e) {
            throw UsageError(std::string("--lambda: ") + e.what());
        }
    }
    return r;
}

std::string lambda_label(const Resolved& r) { return r.lambda ? r.lambda->str() : "symbolic"; }

std::vector<OutputRecord> records(const Resolved& r, int n_min, int n_max)
{
    std::vector<OutputRecord> out;
    for (const auto& v : family_values(r.spec, n_max)) {
        if (v.n < n_min) {
            continue;
        }
        BiPoly value = r.lambda ? eval_at(v.value, *r.lambda, std::nullopt) : v.value;
        out.push_back({std::string(family_name(r.spec.family)), v.n, r.spec.k, lambda_label(r), canonical_string(value)});
    }
    return out;
}

void write_records(const std::vector<OutputRecord>& rows, const std::string& format, std::ostream& os)
{
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            arr.push_back(to_json(row));
        }
        os << arr.dump(2) << '\n';
        return;
    }
    if (format == "text") {
        for (const auto& row : rows) {
            os << row.value << '\n';
        }
        return;
    }
    os << "n,value\n";
    for (const auto& row : rows) {
        os << row.n << ',' << row.value << '\n';
    }
}

int emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out, std::ostream& err)
{
    if (!path) {
        out << text;
        return ExitCode::ok;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << *path << " for writing\n";
        return ExitCode::usage;
    }
    file << text;
    return ExitCode::ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fully degenerate poly-Bernoulli numbers and polynomials in exact arithmetic", "dpb"};
    app.require_subcommand(1);

    // table
    FamilyFlags table_flags;
    int table_n_max = 10;
    std::string table_format = "csv";
    std::optional<std::string> table_out;
    auto* table = app.add_subcommand("table", "numbers n = 0..n_max of a family (x = 0)");
    add_family_flags(table, table_flags);
    table->add_option("--n-max", table_n_max, "largest index")->check(CLI::NonNegativeNumber);
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", table_out, "output file (default stdout)");

    // poly
    FamilyFlags poly_flags;
    int poly_n = 0;
    std::string poly_format = "text";
    std::optional<std::string> poly_out;
    auto* poly = app.add_subcommand("poly", "one polynomial of a family in x");
    add_family_flags(poly, poly_flags);
    poly->add_option("--n", poly_n, "index")->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--format", poly_format)->check(CLI::IsMember({"text", "csv", "json"}));
    poly->add_option("--out", poly_out, "output file (default stdout)");

    // verify
    std::string suite = "all";
    int verify_n_max = 12;
    int k_min = -3;
    int k_max = 3;
    unsigned jobs = 1;
    std::string verify_format = "text";
    std::string reading = "reindexed";
    auto* verify = app.add_subcommand("verify", "check identities exactly in lambda and x");
    verify->add_option("--suite", suite, "all or one identity name, e.g. THM3_K2");
    verify->add_option("--n-max", verify_n_max)->check(CLI::PositiveNumber);
    verify->add_option("--k-min", k_min);
    verify->add_option("--k-max", k_max);
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--integral-reading", reading, "index convention of the unit-interval triple sum")
        ->check(CLI::IsMember({"reindexed", "literal"}));

    // expand
    std::string expand_poly;
    int expand_k = 1;
    auto* expand = app.add_subcommand("expand", "coefficients of p(x) in the fully degenerate basis (JSON)");
    expand->add_option("--poly", expand_poly, "polynomial, e.g. \"x^2 + (-1/2)*L*x + 1/6\"")->required();
    expand->add_option("--k", expand_k)->required();

    std::vector<std::string> argv_storage;
    argv_storage.emplace_back("dpb");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    }

    try {
        if (table->parsed()) {
            Resolved r = resolve(table_flags, Argument::number());
            std::ostringstream os;
            write_records(records(r, 0, table_n_max), table_format, os);
            return emit(os.str(), table_out, out, err);
        }
        if (poly->parsed()) {
            Resolved r = resolve(poly_flags, Argument::polynomial());
            std::ostringstream os;
            write_records(records(r, poly_n, poly_n), poly_format, os);
            return emit(os.str(), poly_out, out, err);
        }
        if (verify->parsed()) {
            if (k_min > k_max) {
                throw UsageError("--k-min must not exceed --k-max");
            }
            std::vector<IdentityId> ids = suite == "all" ? all_identities() : std::vector{parse_identity(suite)};
            CheckOptions options;
            options.jobs = jobs;
            options.reading = reading == "literal" ? IntegralReading::literal : IntegralReading::reindexed;
            std::vector<Report> reports = check_many(ids, verify_n_max, {k_min, k_max}, options);
            if (verify_format == "json") {
                out << to_json(reports).dump(2) << '\n';
            } else {
                std::size_t failed = 0;
                for (const auto& r : reports) {
                    out << render_text(r) << '\n';
                    failed += r.passed ? 0 : 1;
                }
                if (failed == 0) {
                    out << "all " << reports.size() << " identities pass\n";
                } else {
                    out << failed << " of " << reports.size() << " identities FAILED\n";
                }
            }
            return all_passed(reports) ? ExitCode::ok : ExitCode::check_failed;
        }
        if (expand->parsed()) {
            BiPoly p = BiPoly::parse(expand_poly);
            out << to_json(sheffer_expand(p, expand_k)).dump(2) << '\n';
            return ExitCode::ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const RouteMismatch& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::check_failed;
    }
    return ExitCode::usage;
}

} // namespace dpb::cli
