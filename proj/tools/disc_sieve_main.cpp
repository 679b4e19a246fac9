// disc-sieve: CLI over the discsieve shared library (C API only).
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "discsieve/discsieve.h"

using json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string out;
    std::string format = "json";
    bool no_timing = false;
    int threads = 1;
    uint64_t seed = 1;
};

int emit(const std::string& text, const Common& c) {
    if (c.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(c.out);
        if (!f) {
            std::cerr << "cannot open output file: " << c.out << "\n";
            return 2;
        }
        f << text << "\n";
    }
    return 0;
}

int fail(ds_status st) {
    std::cerr << "error: " << ds_last_error() << "\n";
    return st == DS_ERR_BUDGET ? 3 : st == DS_ERR_INVALID ? 2 : 4;
}

std::string csv_escape(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// flatten scalar fields to a two-line CSV; array-valued reports get one row
// per entry of the named column
std::string to_csv(const json& j) {
    std::string head, row, out;
    for (auto& [k, v] : j.items()) {
        if (v.is_array() || v.is_object()) continue;
        if (!head.empty()) {
            head += ",";
            row += ",";
        }
        head += k;
        row += csv_escape(v);
    }
    out = head + "\n" + row + "\n";
    if (j.contains("counts")) {  // tail table
        out += "M,count\n";
        for (auto& e : j["counts"]) out += e[0].dump() + "," + e[1].dump() + "\n";
    }
    if (j.contains("Ys")) {  // monogenic growth table
        out += "Y,box,count,undetermined\n";
        for (size_t i = 0; i < j["Ys"].size(); ++i)
            out += j["Ys"][i].dump() + "," + j["box"][i].dump() + "," + j["counts"][i].dump() +
                   "," + j["undetermined"][i].dump() + "\n";
    }
    return out;
}

int run_experiment_cmd(const std::string& kind, const json& params, const Common& c) {
    char* res = nullptr;
    ds_status st = ds_experiment(kind.c_str(), params.dump().c_str(), &res);
    if (st != DS_OK) return fail(st);
    json j = json::parse(res);
    ds_string_free(res);
    return emit(c.format == "csv" ? to_csv(j) : j.dump(2), c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disc-sieve: discriminant sieve and lattice experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--out", common.out, "write the report to a file instead of stdout");
    app.add_option("--format", common.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timing", common.no_timing, "omit wall-time fields (byte-stable output)");
    app.add_option("--threads", common.threads, "worker threads (result is thread-count independent)");
    app.add_option("--seed", common.seed, "seed for Monte Carlo / sampling subcommands");

    // classify
    auto* classify = app.add_subcommand("classify", "p^2-divisibility class of disc(f)");
    std::string poly_text;
    uint64_t prime = 0;
    classify->add_option("--poly", poly_text, "monic polynomial, text or [a1,...,an]")->required();
    classify->add_option("--p", prime, "prime p")->required();

    // embed
    auto* embed = app.add_subcommand("embed", "weak normal form and symmetric-matrix embedding");
    int64_t mval = 1;
    embed->add_option("--poly", poly_text, "monic polynomial")->required();
    embed->add_option("--m", mval, "positive squarefree m")->required();

    // qinv
    auto* qinv = app.add_subcommand("qinv", "Q-invariant of a W0 matrix");
    std::string matrix_json;
    qinv->add_option("--matrix", matrix_json, "JSON {n, d, S:[row-major]}")->required();

    // localdensity
    auto* ld = app.add_subcommand("localdensity", "lambda_n(p) and the mod-p^2 oracle");
    int nval = 2;
    bool a1_zero = false, with_oracle = false;
    ld->add_option("--n", nval, "degree")->required();
    ld->add_option("--p", prime, "prime p")->required();
    ld->add_flag("--a1-zero", a1_zero, "vanishing x^{n-1} coefficient family");
    ld->add_flag("--oracle", with_oracle, "run the exhaustive mod-p^2 sweep");

    // box experiments
    int64_t Xval = 10, Yval = 4;
    uint64_t samples = 1000000;
    double truncation = 4000.0;
    uint64_t prime_bound = 10000;
    std::vector<int64_t> thresholds;

    auto* density = app.add_subcommand("density", "squarefree-discriminant density over a height box");
    density->add_option("--n", nval, "degree")->required();
    density->add_option("--X", Xval, "height bound")->required();
    density->add_option("--P", prime_bound, "Euler product truncation");

    auto* maximal = app.add_subcommand("maximal", "maximal-order density over a height box");
    maximal->add_option("--n", nval, "degree")->required();
    maximal->add_option("--X", Xval, "height bound")->required();

    auto* sievechk = app.add_subcommand("sieve-check", "exact Mobius sieve identity on a box");
    sievechk->add_option("--n", nval, "degree")->required();
    sievechk->add_option("--X", Xval, "height bound")->required();

    auto* tail = app.add_subcommand("tail", "counts of m^2 | disc for squarefree m > M");
    tail->add_option("--n", nval, "degree")->required();
    tail->add_option("--X", Xval, "height bound")->required();
    tail->add_option("--M,--thresholds", thresholds, "threshold list (default 1,2,4,...)");

    auto* reducible = app.add_subcommand("reducible", "count of rationally reducible polynomials");
    reducible->add_option("--n", nval, "degree")->required();
    reducible->add_option("--X", Xval, "height bound")->required();

    auto* c3 = app.add_subcommand("c3vol", "Monte Carlo volume of |disc| < 1 for x^3 + a2 x + a3");
    c3->add_option("--samples", samples, "sample count (>= 1e5)");
    c3->add_option("--truncation", truncation, "a2 truncation T");

    auto* monogenic = app.add_subcommand("monogenic", "monogenic-ring counting experiment");
    monogenic->add_option("--n", nval, "degree (2..4)")->required();
    monogenic->add_option("--Y", Yval, "height bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    json params;
    params["threads"] = common.threads;
    params["seed"] = common.seed;
    params["no_timing"] = common.no_timing;

    if (classify->parsed() || embed->parsed()) {
        ds_poly* f = nullptr;
        ds_status st = ds_poly_parse(poly_text.c_str(), &f);
        if (st != DS_OK) return fail(st);
        char* res = nullptr;
        st = classify->parsed() ? ds_classify(f, prime, &res) : ds_embed(f, mval, &res);
        ds_poly_free(f);
        if (st != DS_OK) return fail(st);
        json j = json::parse(res);
        ds_string_free(res);
        return emit(common.format == "csv" ? to_csv(j) : j.dump(2), common);
    }
    if (qinv->parsed()) {
        char* res = nullptr;
        ds_status st = ds_qinv(matrix_json.c_str(), &res);
        if (st != DS_OK) return fail(st);
        json j = json::parse(res);
        ds_string_free(res);
        return emit(common.format == "csv" ? to_csv(j) : j.dump(2), common);
    }
    if (ld->parsed()) {
        char* res = nullptr;
        ds_status st = ds_local_density(nval, prime, a1_zero, with_oracle, &res);
        if (st != DS_OK) return fail(st);
        json j = json::parse(res);
        ds_string_free(res);
        return emit(common.format == "csv" ? to_csv(j) : j.dump(2), common);
    }

    params["n"] = nval;
    params["X"] = Xval;
    params["Y"] = Yval;
    params["samples"] = samples;
    params["truncation"] = truncation;
    params["prime_bound"] = prime_bound;
    if (!thresholds.empty()) params["thresholds"] = thresholds;

    if (density->parsed()) return run_experiment_cmd("density", params, common);
    if (maximal->parsed()) return run_experiment_cmd("maximal", params, common);
    if (sievechk->parsed()) return run_experiment_cmd("sieve-check", params, common);
    if (tail->parsed()) return run_experiment_cmd("tail", params, common);
    if (reducible->parsed()) return run_experiment_cmd("reducible", params, common);
    if (c3->parsed()) return run_experiment_cmd("c3vol", params, common);
    if (monogenic->parsed()) return run_experiment_cmd("monogenic", params, common);
    return 2;
}
