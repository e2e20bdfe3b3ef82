// slopeforge CLI: exact-arithmetic front end for the library.
//
// Exit codes: 0 success, 1 invalid parameters, 2 verification failure
// (a checked inequality or cross-check fails), 3 I/O error. Every error is
// a single machine-parsable line on stderr.

#include "slopeforge/bounds.hpp"
#include "slopeforge/numtheory.hpp"
#include "slopeforge/product.hpp"
#include "slopeforge/rootcover.hpp"
#include "slopeforge/serialize.hpp"
#include "slopeforge/slope_search.hpp"
#include "slopeforge/version.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sf = slopeforge;
using sf::Int;
using sf::Rat;
using sf::serialize::json;

namespace {

class verification_failure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Ctx {
    std::string format = "plain";
    std::string out_path;
    bool approx = false;
    bool no_header = false;
    int threads = 0;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// RFC 4180 quoting; only applied when the field needs it.
std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void emit(const Ctx& ctx, const std::string& text) {
    if (ctx.out_path.empty()) {
        std::cout << text;
        if (!std::cout)
            throw io_error("write to stdout failed");
        return;
    }
    std::ofstream file(ctx.out_path, std::ios::binary);
    if (!file)
        throw io_error("cannot open output file '" + ctx.out_path + "'");
    file << text;
    file.flush();
    if (!file)
        throw io_error("write to '" + ctx.out_path + "' failed");
}

void emit_json(const Ctx& ctx, json j) {
    j["tool"] = sf::kToolName;
    j["version"] = sf::kVersion;
    emit(ctx, j.dump(2) + "\n");
}

void emit_csv(const Ctx& ctx, const std::vector<std::string>& cols,
              const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    if (!ctx.no_header)
        os << "# " << sf::kToolName << " " << sf::kVersion << "\n";
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << csv_quote(cols[i]);
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_quote(row[i]);
        os << "\n";
    }
    emit(ctx, os.str());
}

// Column/value helpers so --approx stays in sync between header and rows.
void rat_col(const Ctx& ctx, std::vector<std::string>& cols, const std::string& name) {
    cols.push_back(name);
    if (ctx.approx) cols.push_back(name + "_approx");
}

void rat_val(const Ctx& ctx, std::vector<std::string>& row, const Rat& v) {
    row.push_back(sf::format_fraction(v));
    if (ctx.approx) row.push_back(format_double(sf::to_double(v)));
}

void approx_field(const Ctx& ctx, json& j, const std::string& name, const Rat& v) {
    if (ctx.approx) j[name + "_approx"] = sf::to_double(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep))
        parts.push_back(item);
    return parts;
}

std::int64_t parse_int64(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::domain_error(what + ": not an integer: '" + text + "'");
    }
}

// ---------------------------------------------------------------- hj / dedekind / cqp

int run_hj(const Ctx& ctx, std::int64_t p, std::int64_t q) {
    const sf::numtheory::HJExpansion e = sf::numtheory::hj_expand(p, q);
    if (e.evaluate() != Rat(Int(p), Int(q)))
        throw verification_failure("continued fraction of " + std::to_string(p) + "/" +
                                   std::to_string(q) + " does not fold back to its value");
    std::ostringstream terms;
    for (std::size_t i = 0; i < e.terms.size(); ++i)
        terms << (i ? " " : "") << e.terms[i];

    if (ctx.format == "json") {
        emit_json(ctx, sf::serialize::json_of(e));
    } else if (ctx.format == "csv") {
        emit_csv(ctx, {"p", "q", "length", "terms"},
                 {{std::to_string(p), std::to_string(q), std::to_string(e.length()),
                   terms.str()}});
    } else {
        emit(ctx, terms.str() + "\n");
    }
    return 0;
}

int run_dedekind(const Ctx& ctx, std::int64_t q, std::int64_t p, bool print_c) {
    const sf::numtheory::DedekindRecord rec = sf::numtheory::dedekind_record(q, p);
    if (p <= sf::numtheory::kMaxSawtoothModulus &&
        sf::numtheory::dedekind_sum(q, p) != rec.s) {
        throw verification_failure("sawtooth and continued-fraction Dedekind sums disagree at q=" +
                                   std::to_string(q) + " p=" + std::to_string(p));
    }
    if (ctx.format == "json") {
        json j = sf::serialize::json_of(rec);
        approx_field(ctx, j, "s", rec.s);
        approx_field(ctx, j, "c", rec.c);
        emit_json(ctx, std::move(j));
    } else if (ctx.format == "csv") {
        std::vector<std::string> cols{"q", "p"};
        rat_col(ctx, cols, "s");
        cols.push_back("l");
        rat_col(ctx, cols, "c");
        cols.push_back("q_inv");
        std::vector<std::string> row{std::to_string(q), std::to_string(p)};
        rat_val(ctx, row, rec.s);
        row.push_back(std::to_string(rec.l));
        rat_val(ctx, row, rec.c);
        row.push_back(std::to_string(rec.q_inv));
        emit_csv(ctx, cols, {row});
    } else {
        const Rat& value = print_c ? rec.c : rec.s;
        std::string line = sf::format_human(value);
        if (ctx.approx)
            line += " " + format_double(sf::to_double(value));
        emit(ctx, line + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------------------- ru

int run_ru(const Ctx& ctx, const sf::rootcover::FamilyParams& params,
           const std::string& residual_text, bool formal) {
    std::optional<Int> residual;
    if (!residual_text.empty()) {
        try {
            residual = Int(residual_text);
        } catch (const std::runtime_error&) {
            throw std::domain_error("--residual: not an integer: '" + residual_text + "'");
        }
    }
    const sf::rootcover::ChernInvariants inv =
        sf::rootcover::chern_invariants(params, residual, formal);

    if (ctx.format == "json") {
        json j = sf::serialize::json_of(params, inv);
        approx_field(ctx, j, "c1sq_partial", inv.c1sq_partial);
        approx_field(ctx, j, "slope", inv.slope());
        if (!inv.residual_omitted())
            approx_field(ctx, j, "c1sq_total", inv.c1sq_total());
        emit_json(ctx, std::move(j));
        return 0;
    }

    if (ctx.format == "csv") {
        std::vector<std::string> cols{"p", "alpha", "beta", "d", "n", "c2"};
        rat_col(ctx, cols, "c1sq_partial");
        cols.insert(cols.end(), {"residual_omitted", "residual_A_sq"});
        rat_col(ctx, cols, "c1sq_total");
        cols.insert(cols.end(), {"genus_sum", "log_c1sq", "log_c2"});
        rat_col(ctx, cols, "slope");
        cols.push_back("formal");

        std::vector<std::string> row{std::to_string(params.p), std::to_string(params.alpha),
                                     std::to_string(params.beta), std::to_string(params.d),
                                     std::to_string(params.n()), inv.c2.str()};
        rat_val(ctx, row, inv.c1sq_partial);
        row.push_back(inv.residual_omitted() ? "true" : "false");
        if (inv.residual_omitted()) {
            row.push_back("");
            row.push_back("");
            if (ctx.approx) row.push_back("");
        } else {
            row.push_back(inv.residual_A_sq->str());
            rat_val(ctx, row, inv.c1sq_total());
        }
        row.insert(row.end(), {inv.genus_sum.str(), inv.log_c1sq.str(), inv.log_c2.str()});
        rat_val(ctx, row, inv.slope());
        row.push_back(inv.formal ? "true" : "false");
        emit_csv(ctx, cols, {row});
        return 0;
    }

    std::ostringstream os;
    os << "p = " << params.p << "\n"
       << "alpha = " << params.alpha << "\n"
       << "beta = " << params.beta << "\n"
       << "d = " << params.d << "\n"
       << "n = " << params.n() << "\n"
       << "c2 = " << inv.c2.str() << "\n"
       << "c1sq_partial = " << sf::format_human(inv.c1sq_partial) << "\n"
       << "residual_omitted = " << (inv.residual_omitted() ? "true" : "false") << "\n";
    if (!inv.residual_omitted()) {
        os << "residual_A_sq = " << inv.residual_A_sq->str() << "\n"
           << "c1sq_total = " << sf::format_human(inv.c1sq_total()) << "\n";
    }
    os << "genus_sum = " << inv.genus_sum.str() << "\n"
       << "log_c1sq = " << inv.log_c1sq.str() << "\n"
       << "log_c2 = " << inv.log_c2.str() << "\n"
       << "slope = " << sf::format_human(inv.slope());
    if (ctx.approx)
        os << " " << format_double(sf::to_double(inv.slope()));
    os << "\n";
    if (inv.formal)
        os << "formal = true\n";
    emit(ctx, os.str());
    return 0;
}

// ------------------------------------------------------------------- bounds / lemma

std::string scheme_text(const sf::bounds::MultiplicityScheme& s) {
    std::ostringstream os;
    os << "p=" << s.p << " a=" << s.a << " b=" << s.b << " c=" << s.c << " m=" << s.m;
    return os.str();
}

int run_bounds(const Ctx& ctx, std::int64_t p_max) {
    std::vector<sf::bounds::SchemeRow> rows;
    const bool want_rows = ctx.format == "csv";
    const sf::bounds::BoundsReport report =
        sf::bounds::verify_lomaschico(p_max, ctx.threads, want_rows ? &rows : nullptr);

    if (ctx.format == "json") {
        emit_json(ctx, sf::serialize::json_of(report));
    } else if (ctx.format == "csv") {
        std::vector<std::string> cols{"p", "a", "b", "c", "m"};
        rat_col(ctx, cols, "S");
        cols.push_back("L");
        rat_col(ctx, cols, "C");
        rat_col(ctx, cols, "six_S_plus_L");
        rat_col(ctx, cols, "bound");
        rat_col(ctx, cols, "slack");
        rat_col(ctx, cols, "limit_slope");
        std::vector<std::vector<std::string>> out;
        out.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<std::string> row{std::to_string(r.scheme.p), std::to_string(r.scheme.a),
                                         std::to_string(r.scheme.b), std::to_string(r.scheme.c),
                                         std::to_string(r.scheme.m)};
            rat_val(ctx, row, r.sums.S);
            row.push_back(std::to_string(r.sums.L));
            rat_val(ctx, row, r.sums.C);
            rat_val(ctx, row, r.six_s_plus_l);
            rat_val(ctx, row, r.bound);
            rat_val(ctx, row, r.slack);
            rat_val(ctx, row, r.limit_slope);
            out.push_back(std::move(row));
        }
        emit_csv(ctx, cols, out);
    } else {
        std::ostringstream os;
        os << "p_max = " << report.p_max << "\n"
           << "schemes_checked = " << report.schemes_checked << "\n"
           << "violations = " << report.violations.size() << "\n"
           << "min_slack = " << sf::format_human(report.min_slack) << " at "
           << scheme_text(report.extremal_scheme) << "\n"
           << "min_limit_slope = " << sf::format_human(report.min_limit_slope) << " at "
           << scheme_text(report.min_limit_scheme) << "\n";
        emit(ctx, os.str());
    }

    if (!report.ok()) {
        std::cerr << "error: verification failure: " << report.violations.size()
                  << " scheme(s) violate the bound; first at "
                  << scheme_text(report.violations.front().scheme) << "\n";
        return 2;
    }
    return 0;
}

int run_lemma(const Ctx& ctx, std::int64_t p_max) {
    const sf::bounds::LemmaReport report = sf::bounds::verify_lemma_behavior(p_max, ctx.threads);

    if (ctx.format == "json") {
        emit_json(ctx, sf::serialize::json_of(report));
    } else if (ctx.format == "csv") {
        std::vector<std::vector<std::string>> out;
        out.reserve(report.per_modulus.size());
        for (const auto& pm : report.per_modulus) {
            out.push_back({std::to_string(pm.p), std::to_string(pm.pairs),
                           std::to_string(pm.max_sum), std::to_string(pm.equality_count)});
        }
        emit_csv(ctx, {"p", "pairs", "max_sum", "equality_count"}, out);
    } else {
        std::ostringstream os;
        os << "p_max = " << report.p_max << "\n"
           << "pairs_checked = " << report.pairs_checked << "\n"
           << "violations = " << report.violations.size() << "\n";
        emit(ctx, os.str());
    }

    if (!report.ok()) {
        std::cerr << "error: verification failure: sum(e_i - 1) > p - 1 at q="
                  << report.violations.front().first << " p=" << report.violations.front().second
                  << "\n";
        return 2;
    }
    return 0;
}

// ------------------------------------------------------------------------ product

sf::product::PolarizedSurface parse_surface(const std::string& text, const std::string& flag) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 5)
        throw std::domain_error(flag + ": expected 5 comma-separated values "
                                       "(c1sq,c2,chi,bundle_sq,bundle_dot_K), got '" +
                                text + "'");
    sf::product::PolarizedSurface s;
    s.c1sq = sf::parse_rational(parts[0]);
    s.c2 = sf::parse_rational(parts[1]);
    s.chi = sf::parse_rational(parts[2]);
    s.bundle_sq = sf::parse_rational(parts[3]);
    s.bundle_dot_k = sf::parse_rational(parts[4]);
    return s;
}

int run_product(const Ctx& ctx, const std::string& x_text, const std::string& y_text) {
    const sf::product::PolarizedSurface xs = parse_surface(x_text, "--x-invariants");
    const sf::product::PolarizedSurface ys = parse_surface(y_text, "--y-invariants");
    const std::vector<std::string> warnings = sf::product::sanity_warnings(xs, ys);
    const sf::product::ProductInvariants inv = sf::product::product_invariants(xs, ys);

    if (ctx.format == "json") {
        json j = sf::serialize::json_of(inv);
        j["warnings"] = warnings;
        approx_field(ctx, j, "c1sq", inv.c1sq);
        approx_field(ctx, j, "c2", inv.c2);
        approx_field(ctx, j, "chi", inv.chi);
        emit_json(ctx, std::move(j));
    } else {
        for (const std::string& w : warnings)
            std::cerr << "warning: " << w << "\n";
        if (ctx.format == "csv") {
            std::vector<std::string> cols;
            rat_col(ctx, cols, "c1sq");
            rat_col(ctx, cols, "c2");
            rat_col(ctx, cols, "chi");
            rat_col(ctx, cols, "coupling");
            rat_col(ctx, cols, "deg_to_x");
            rat_col(ctx, cols, "deg_to_y");
            std::vector<std::string> row;
            rat_val(ctx, row, inv.c1sq);
            rat_val(ctx, row, inv.c2);
            rat_val(ctx, row, inv.chi);
            rat_val(ctx, row, inv.coupling);
            rat_val(ctx, row, inv.deg_to_x);
            rat_val(ctx, row, inv.deg_to_y);
            emit_csv(ctx, cols, {row});
        } else {
            std::ostringstream os;
            os << "coupling = " << sf::format_human(inv.coupling) << "\n"
               << "c1sq = " << sf::format_human(inv.c1sq) << "\n"
               << "c2 = " << sf::format_human(inv.c2) << "\n"
               << "chi = " << sf::format_human(inv.chi) << "\n"
               << "deg_to_x = " << sf::format_human(inv.deg_to_x) << "\n"
               << "deg_to_y = " << sf::format_human(inv.deg_to_y) << "\n";
            emit(ctx, os.str());
        }
    }
    return 0;
}

// ------------------------------------------------------------------ seek / density

int run_seek(const Ctx& ctx, const std::string& r_text, double tol, std::int64_t witness_p,
             std::int64_t d) {
    const Rat r = sf::parse_rational(r_text);
    const sf::slope_search::SlopeCertificate cert =
        sf::slope_search::seek_slope(r, tol, witness_p, d);

    if (ctx.format == "json") {
        json j = sf::serialize::json_of(cert);
        approx_field(ctx, j, "asymptotic_slope", cert.asymptotic_slope);
        approx_field(ctx, j, "asymptotic_error", cert.asymptotic_error);
        approx_field(ctx, j, "witness_slope", cert.witness_slope);
        emit_json(ctx, std::move(j));
    } else if (ctx.format == "csv") {
        std::vector<std::string> cols{"target_r", "x_star", "alpha", "beta"};
        rat_col(ctx, cols, "asymptotic_slope");
        rat_col(ctx, cols, "asymptotic_error");
        cols.push_back("witness_p");
        rat_col(ctx, cols, "witness_slope");
        cols.push_back("residual_note");
        std::vector<std::string> row{sf::format_fraction(cert.target_r),
                                     format_double(cert.x_star), cert.alpha.str(),
                                     cert.beta.str()};
        rat_val(ctx, row, cert.asymptotic_slope);
        rat_val(ctx, row, cert.asymptotic_error);
        row.push_back(std::to_string(cert.witness_p));
        rat_val(ctx, row, cert.witness_slope);
        row.push_back(cert.residual_note);
        emit_csv(ctx, cols, {row});
    } else {
        std::ostringstream os;
        os << "target_r = " << sf::format_human(cert.target_r) << "\n"
           << "x_star = " << format_double(cert.x_star) << "\n"
           << "alpha = " << cert.alpha.str() << "\n"
           << "beta = " << cert.beta.str() << "\n"
           << "asymptotic_slope = " << sf::format_human(cert.asymptotic_slope) << "\n"
           << "asymptotic_error = " << sf::format_human(cert.asymptotic_error) << "\n"
           << "witness_p = " << cert.witness_p << "\n"
           << "witness_slope = " << sf::format_human(cert.witness_slope);
        if (ctx.approx)
            os << " " << format_double(sf::to_double(cert.witness_slope));
        os << "\n"
           << "residual_note = " << cert.residual_note << "\n";
        emit(ctx, os.str());
    }
    return 0;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_grid(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
    if (text.find(':') != std::string::npos) {
        for (const std::string& item : split(text, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw std::domain_error("--grid: expected alpha:beta, got '" + item + "'");
            grid.emplace_back(parse_int64(item.substr(0, colon), "--grid"),
                              parse_int64(item.substr(colon + 1), "--grid"));
        }
        return grid;
    }
    const std::int64_t n = parse_int64(text, "--grid");
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = 1; b <= n; ++b)
            grid.emplace_back(a, b);
    return grid;
}

std::vector<std::int64_t> parse_primes(const std::string& text) {
    std::vector<std::int64_t> primes;
    if (text.find(',') != std::string::npos) {
        for (const std::string& item : split(text, ','))
            primes.push_back(parse_int64(item, "--primes"));
        return primes;
    }
    for (const std::int64_t p : sf::numtheory::primes_up_to(parse_int64(text, "--primes")))
        if (p >= 5)
            primes.push_back(p);
    return primes;
}

int run_density(const Ctx& ctx, const std::string& grid_text, const std::string& primes_text,
                std::int64_t d) {
    const sf::slope_search::DensityTable table = sf::slope_search::density_sample(
        parse_grid(grid_text), parse_primes(primes_text), d, ctx.threads);

    if (ctx.format == "json") {
        json rows = json::array();
        for (const auto& row : table.rows) {
            json j = sf::serialize::json_of(row);
            approx_field(ctx, j, "lambda", row.lambda);
            approx_field(ctx, j, "witness_slope", row.witness_slope);
            approx_field(ctx, j, "difference", row.difference);
            rows.push_back(std::move(j));
        }
        emit_json(ctx, json{{"rows", std::move(rows)}, {"skipped", table.skipped}});
        return 0;
    }

    for (const std::string& reason : table.skipped)
        std::cerr << "warning: " << reason << "\n";

    if (ctx.format == "csv") {
        std::vector<std::string> cols{"alpha", "beta", "p", "d"};
        rat_col(ctx, cols, "lambda");
        rat_col(ctx, cols, "witness_slope");
        rat_col(ctx, cols, "difference");
        std::vector<std::vector<std::string>> out;
        out.reserve(table.rows.size());
        for (const auto& r : table.rows) {
            std::vector<std::string> row{std::to_string(r.alpha), std::to_string(r.beta),
                                         std::to_string(r.p), std::to_string(r.d)};
            rat_val(ctx, row, r.lambda);
            rat_val(ctx, row, r.witness_slope);
            rat_val(ctx, row, r.difference);
            out.push_back(std::move(row));
        }
        emit_csv(ctx, cols, out);
    } else {
        std::ostringstream os;
        for (const auto& r : table.rows) {
            os << r.alpha << " " << r.beta << " " << r.p << " " << r.d << " "
               << sf::format_human(r.lambda) << " " << sf::format_human(r.witness_slope) << " "
               << sf::format_human(r.difference);
            if (ctx.approx)
                os << " " << format_double(sf::to_double(r.difference));
            os << "\n";
        }
        emit(ctx, os.str());
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Chern-slope arithmetic for p-th root covers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sf::kToolName) + " " + sf::kVersion);

    Ctx ctx;
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
    app.add_option("--out", ctx.out_path, "write output to a file instead of stdout");
    app.add_flag("--approx", ctx.approx, "append decimal approximations to exact values");
    app.add_flag("--no-header", ctx.no_header, "suppress the version header line in csv output");
    app.add_option("--threads", ctx.threads,
                   "worker threads for sweeps (0 = all cores; SLOPEFORGE_THREADS caps)");

    std::int64_t hj_p = 0, hj_q = 0;
    auto* hj = app.add_subcommand("hj", "continued-fraction expansion of p/q");
    hj->add_option("p", hj_p, "numerator")->required();
    hj->add_option("q", hj_q, "denominator, coprime to p, 0 < q < p")->required();
    hj->fallthrough();

    std::int64_t dd_q = 0, dd_p = 0;
    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(q,p) with cross-check");
    dedekind->add_option("q", dd_q, "first argument")->required();
    dedekind->add_option("p", dd_p, "modulus")->required();
    dedekind->fallthrough();

    std::int64_t c_q = 0, c_p = 0;
    auto* cqp = app.add_subcommand("cqp", "c(q,p) = 12 s(q,p) + l(q,p)");
    cqp->add_option("q", c_q, "first argument")->required();
    cqp->add_option("p", c_p, "modulus")->required();
    cqp->fallthrough();

    sf::rootcover::FamilyParams ru_params;
    std::string ru_residual;
    bool ru_formal = false;
    auto* ru = app.add_subcommand("ru", "Chern invariants of one family member");
    ru->add_option("--p", ru_params.p, "prime >= 5")->required();
    ru->add_option("--alpha", ru_params.alpha, "first weight, >= 1")->required();
    ru->add_option("--beta", ru_params.beta, "second weight, >= 1")->required();
    ru->add_option("--d", ru_params.d, "half the number of general lines, 3 <= 2d <= p")
        ->required();
    ru->add_option("--residual", ru_residual, "known value of sum(A_j^2), folded into c1sq_total");
    ru->add_flag("--formal", ru_formal, "skip primality/range checks (formal evaluation)");
    ru->fallthrough();

    std::int64_t bounds_pmax = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "verify 6S+L <= 3p+3-6/p over all schemes");
    bounds_cmd->add_option("--pmax", bounds_pmax, "largest prime to check")->required();
    bounds_cmd->fallthrough();

    std::int64_t lemma_pmax = 0;
    auto* lemma = app.add_subcommand("lemma", "verify sum(e_i - 1) <= p-1 over coprime pairs");
    lemma->add_option("--pmax", lemma_pmax, "largest modulus to check")->required();
    lemma->fallthrough();

    std::string x_text, y_text;
    auto* product_cmd =
        app.add_subcommand("product", "invariants of the complete intersection in X x Y");
    product_cmd
        ->add_option("--x-invariants", x_text, "c1sq,c2,chi,bundle_sq,bundle_dot_K of X")
        ->required();
    product_cmd
        ->add_option("--y-invariants", y_text, "c1sq,c2,chi,bundle_sq,bundle_dot_K of Y")
        ->required();
    product_cmd->fallthrough();

    std::string seek_r;
    double seek_tol = 1e-3;
    std::int64_t seek_witness = 1009, seek_d = 2;
    auto* seek = app.add_subcommand("seek", "certificate for a target slope r in (1,3)");
    seek->add_option("--r", seek_r, "target slope, rational like 83/65")->required();
    seek->add_option("--tol", seek_tol, "tolerance for |lambda(alpha/beta) - r|")
        ->capture_default_str();
    seek->add_option("--witness-p", seek_witness, "prime for the finite witness")
        ->capture_default_str();
    seek->add_option("--d", seek_d, "family parameter d")->capture_default_str();
    seek->fallthrough();

    std::string grid_text, primes_text;
    std::int64_t density_d = 0;
    auto* density = app.add_subcommand("density", "witness slopes over an (alpha,beta) x p grid");
    density->add_option("--grid", grid_text, "N for [1,N]^2, or pairs alpha:beta,...")
        ->required();
    density->add_option("--primes", primes_text, "P for all primes 5..P, or list p1,p2,...")
        ->required();
    density->add_option("--d", density_d, "family parameter d (default: smallest valid, 2)");
    density->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help / --version
        std::cerr << "error: invalid parameter: " << e.what() << "\n";
        return 1;
    }

    if (*hj) return run_hj(ctx, hj_p, hj_q);
    if (*dedekind) return run_dedekind(ctx, dd_q, dd_p, false);
    if (*cqp) return run_dedekind(ctx, c_q, c_p, true);
    if (*ru) return run_ru(ctx, ru_params, ru_residual, ru_formal);
    if (*bounds_cmd) return run_bounds(ctx, bounds_pmax);
    if (*lemma) return run_lemma(ctx, lemma_pmax);
    if (*product_cmd) return run_product(ctx, x_text, y_text);
    if (*seek) return run_seek(ctx, seek_r, seek_tol, seek_witness, seek_d);
    if (*density) return run_density(ctx, grid_text, primes_text, density_d);
    return 1;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const verification_failure& e) {
        std::cerr << "error: verification failure: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: invalid parameter: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
