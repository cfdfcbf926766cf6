// Command-line front door: solve/load a double shuffle solution, print
// coefficient q-expansions, run identity checks, export tables.

#include "cmes/eds.hpp"
#include "cmes/relations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace cmes;

struct CommonOpts {
    int weight = 6;
    int depth = 3;
    int qorder = 30;
    std::string beta_file;
    std::string out_file;
    std::string format;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_qorder = true) {
    cmd->add_option("--weight", o.weight, "weight truncation")->check(CLI::PositiveNumber);
    cmd->add_option("--depth", o.depth, "depth truncation")->check(CLI::PositiveNumber);
    if (with_qorder)
        cmd->add_option("--qorder", o.qorder, "q-series order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--beta", o.beta_file, "load a solved beta document instead of solving");
    cmd->add_option("--out", o.out_file, "write output to this file");
}

void validate(const CommonOpts& o) {
    if (o.weight < o.depth || o.depth < 1 || o.qorder < 0)
        throw CLI::ValidationError("need weight >= depth >= 1 and qorder >= 0");
}

BetaSolution obtain_beta(const CommonOpts& o) {
    if (!o.beta_file.empty()) {
        BetaSolution b = BetaSolution::load(o.beta_file);
        if (b.weight_max() < o.weight || b.depth_max() < o.depth)
            throw std::runtime_error("beta document truncation (" +
                                     std::to_string(b.weight_max()) + "," +
                                     std::to_string(b.depth_max()) +
                                     ") does not cover the requested truncation");
        return b;
    }
    return solve_eds(std::max(o.weight, 2), o.depth);
}

std::ostream& open_out(const CommonOpts& o, std::ofstream& file) {
    if (o.out_file.empty()) return std::cout;
    file.open(o.out_file);
    if (!file) throw std::runtime_error("cannot write " + o.out_file);
    return file;
}

BiIndex parse_index(const std::vector<std::string>& tokens) {
    std::vector<int> ks, ds;
    for (const auto& t : tokens) {
        size_t us = t.find('_');
        ks.push_back(std::stoi(t.substr(0, us)));
        ds.push_back(us == std::string::npos ? 0 : std::stoi(t.substr(us + 1)));
    }
    return BiIndex(ks, ds);
}

int cmd_beta(const CommonOpts& o, const std::string& mode,
             const std::vector<std::string>& index_tokens) {
    validate(o);
    if (mode == "solve") {
        if (o.weight < 2) throw CLI::ValidationError("beta solve needs --weight >= 2");
        BetaSolution sol = solve_eds(o.weight, o.depth);
        std::ofstream file;
        open_out(o, file) << sol.to_json() << "\n";
        return 0;
    }
    if (mode == "show") {
        if (index_tokens.empty()) throw CLI::ValidationError("beta show needs an index");
        BetaSolution sol = obtain_beta(o);
        BiIndex idx = parse_index(index_tokens);
        for (int d : idx.d)
            if (d != 0) throw CLI::ValidationError("beta indices carry no d-part");
        std::ofstream file;
        open_out(o, file) << sol.value(idx.k).str() << "\n";
        return 0;
    }
    throw CLI::ValidationError("beta mode must be solve or show");
}

int cmd_series(const CommonOpts& o, const std::string& table,
               const std::vector<std::string>& index_tokens) {
    validate(o);
    if (index_tokens.empty()) throw CLI::ValidationError("series needs an index");
    BiIndex idx = parse_index(index_tokens);
    if (idx.weight() > o.weight || idx.depth() > o.depth)
        throw CLI::ValidationError("index " + idx.str() + " outside truncation");
    TruncationParams trunc(o.weight, o.depth, o.qorder);
    EisContext ctx(obtain_beta(o), trunc);
    QSeries s;
    if (table == "G")
        s = ctx.G_coeff(idx);
    else if (table == "g")
        s = ctx.g_coeff(idx);
    else if (table == "gstar")
        s = ctx.g_star_coeff(idx);
    else if (table == "b")
        s = QSeries::constant(ctx.b_coeff(idx), o.qorder);
    else
        throw CLI::ValidationError("table must be one of G, g, gstar, b");

    std::ofstream file;
    std::ostream& out = open_out(o, file);
    if (o.format.empty()) {
        out << s.str(o.qorder) << "\n";
    } else if (o.format == "csv") {
        out << "k,d,n,value\n";
        std::string kcol, dcol;
        for (size_t i = 0; i < idx.k.size(); ++i) {
            kcol += (i ? " " : "") + std::to_string(idx.k[i]);
            dcol += (i ? " " : "") + std::to_string(idx.d[i]);
        }
        for (int n = 0; n <= o.qorder; ++n)
            out << "\"" << kcol << "\",\"" << dcol << "\"," << n << "," << s.coeff(n).str()
                << "\n";
    } else if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (int n = 0; n <= o.qorder; ++n)
            arr.push_back(
                {{"k", idx.k}, {"d", idx.d}, {"n", n}, {"value", s.coeff(n).str()}});
        out << arr.dump(2) << "\n";
    } else {
        throw CLI::ValidationError("format must be csv or json");
    }
    return 0;
}

int cmd_check(const CommonOpts& o, const std::vector<std::string>& ids) {
    validate(o);
    TruncationParams trunc(o.weight, o.depth, o.qorder);
    EisContext ctx(obtain_beta(o), trunc);
    std::vector<RelationReport> reports;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        reports = run_all(ctx);
    } else {
        for (const auto& id : ids) reports.push_back(check_identity(id, ctx));
    }
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    for (const auto& r : reports) out << r.json_line() << "\n";
    return none_failed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial (bi-)multiple Eisenstein series as exact truncated q-series"};
    app.require_subcommand(1);

    CommonOpts beta_opts, series_opts, check_opts;
    std::string beta_mode, series_table;
    std::vector<std::string> beta_index, series_index, check_ids;

    CLI::App* beta = app.add_subcommand("beta", "solve or inspect the double shuffle solution");
    beta->add_option("mode", beta_mode, "solve | show")->required();
    beta->add_option("index", beta_index, "index entries for show, e.g. 1 1");
    add_common(beta, beta_opts, false);

    CLI::App* series = app.add_subcommand("series", "print the q-expansion of a coefficient");
    series->add_option("table", series_table, "G | g | gstar | b")->required();
    series->add_option("index", series_index, "index entries, e.g. 3 2 or 3_1 2_0")->required();
    add_common(series, series_opts);
    series->add_option("--format", series_opts.format, "csv | json (default: plain list)");

    CLI::App* check = app.add_subcommand("check", "run identity checks (exit 0 iff none fail)");
    check->add_option("ids", check_ids, "identity ids or 'all'");
    add_common(check, check_opts);

    try {
        app.parse(argc, argv);
        if (beta->parsed()) return cmd_beta(beta_opts, beta_mode, beta_index);
        if (series->parsed()) return cmd_series(series_opts, series_table, series_index);
        if (check->parsed()) return cmd_check(check_opts, check_ids);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
