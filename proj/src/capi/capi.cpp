#include "discsieve/discsieve.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "core/budget.hpp"
#include "core/discclass.hpp"
#include "core/lattice.hpp"
#include "core/localdensity.hpp"
#include "core/poly.hpp"
#include "core/qinv.hpp"
#include "core/sievelab.hpp"
#include "core/symrep.hpp"

using json = nlohmann::ordered_json;
using namespace discsieve;

struct ds_poly {
    MonicPoly f;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
ds_status guarded(Fn&& fn) {
    try {
        fn();
        return DS_OK;
    } catch (const budget_error& e) {
        g_last_error = e.what();
        return DS_ERR_BUDGET;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return DS_ERR_INVALID;
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return DS_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DS_ERR_INTERNAL;
    }
}

json sym_to_json(const SymMatrix& B) {
    json m;
    m["n"] = B.n;
    m["d"] = B.d;
    json s = json::array();
    for (const Int& v : B.s) s.push_back(v.get_str());
    m["S"] = s;
    return m;
}

SymMatrix sym_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("d") || !j.contains("S"))
        throw std::invalid_argument("matrix JSON needs fields n, d, S");
    SymMatrix B = make_sym(j["n"].get<int>(), j["d"].get<int>());
    const auto& arr = j["S"];
    if (!arr.is_array() || arr.size() != B.s.size())
        throw std::invalid_argument("matrix S must be a row-major array of n*n integers");
    for (size_t i = 0; i < B.s.size(); ++i) {
        if (arr[i].is_string()) B.s[i] = Int(arr[i].get<std::string>());
        else B.s[i] = int_from_i64(arr[i].get<int64_t>());
    }
    if (!B.is_symmetric()) throw std::invalid_argument("matrix S must be symmetric");
    return B;
}

json rat_poly_json(const RatPoly& f) {
    json arr = json::array();
    for (size_t i = f.size(); i-- > 0;) arr.push_back(rat_to_string(f[i]));
    return arr;
}

struct Params {
    int n = 0;
    int64_t X = 0, Y = 0;
    std::vector<int64_t> thresholds;
    uint64_t samples = 1000000;
    double truncation = 4000.0;
    uint64_t seed = 1;
    int threads = 1;
    uint64_t prime_bound = 10000;
    bool no_timing = false;
};

Params parse_params(const char* params_json) {
    Params p;
    if (!params_json || !*params_json) return p;
    json j = json::parse(params_json);
    if (j.contains("n")) p.n = j["n"].get<int>();
    if (j.contains("X")) p.X = j["X"].get<int64_t>();
    if (j.contains("Y")) p.Y = j["Y"].get<int64_t>();
    if (j.contains("thresholds"))
        for (const auto& t : j["thresholds"]) p.thresholds.push_back(t.get<int64_t>());
    if (j.contains("samples")) p.samples = j["samples"].get<uint64_t>();
    if (j.contains("truncation")) p.truncation = j["truncation"].get<double>();
    if (j.contains("seed")) p.seed = j["seed"].get<uint64_t>();
    if (j.contains("threads")) p.threads = j["threads"].get<int>();
    if (j.contains("prime_bound")) p.prime_bound = j["prime_bound"].get<uint64_t>();
    if (j.contains("no_timing")) p.no_timing = j["no_timing"].get<bool>();
    return p;
}

json density_report_json(const DensityReport& r, bool no_timing) {
    json j;
    j["experiment"] = r.predicate == "maximal_order" ? "maximal" : "density";
    j["n"] = r.n;
    j["X"] = r.X;
    j["total"] = r.total;
    j["hits"] = r.hits;
    j["empirical"] = rat_to_pq_string(r.empirical);
    j["theoretical"] = r.theoretical;
    j["abs_error"] = r.abs_error;
    j["prime_bound"] = r.prime_bound;
    j["truncation_tail"] = r.truncation_tail;
    j["predicate"] = r.predicate;
    j["method"] = r.method;
    j["threads"] = r.threads;
    if (!no_timing) j["wall_time"] = r.wall_time;
    return j;
}

json run_experiment(const std::string& kind, const Params& p) {
    if (kind == "density" || kind == "maximal") {
        DensityReport r = kind == "density"
                              ? squarefree_density_experiment(p.n, p.X, p.threads, p.prime_bound)
                              : maximality_density_experiment(p.n, p.X, p.threads, p.prime_bound);
        return density_report_json(r, p.no_timing);
    }
    if (kind == "sieve-check") {
        SieveCheckReport r = mobius_sieve_identity_check(p.n, p.X);
        json j;
        j["experiment"] = "sieve-check";
        j["n"] = r.n;
        j["X"] = r.X;
        j["box"] = r.box;
        j["lhs"] = r.lhs.get_str();
        j["rhs"] = r.rhs.get_str();
        j["equal"] = r.equal;
        json terms = json::array();
        for (auto& [m, c] : r.terms) terms.push_back({m.get_str(), c.get_str()});
        j["terms"] = terms;
        return j;
    }
    if (kind == "tail") {
        std::vector<int64_t> ms = p.thresholds;
        if (ms.empty()) ms = {1, 2, 4, 8, 16, 32};
        TailReport r = tail_counts(p.n, p.X, ms);
        json j;
        j["experiment"] = "tail";
        j["n"] = r.n;
        j["X"] = r.X;
        j["box"] = r.box;
        j["nonsquarefree"] = r.nonsquarefree;
        j["zero_disc"] = r.zero_disc;
        json counts = json::array();
        for (auto& [M, c] : r.counts) counts.push_back({M, c});
        j["counts"] = counts;
        json sw = json::object();
        for (auto& [prime, t] : r.strong_weak)
            sw[std::to_string(prime)] = {{"strong", t.first}, {"weak", t.second}};
        j["strong_weak"] = sw;
        return j;
    }
    if (kind == "reducible") {
        ReducibleReport r = reducible_count(p.n, p.X);
        json j;
        j["experiment"] = "reducible";
        j["n"] = r.n;
        j["X"] = r.X;
        j["box"] = r.box;
        j["count"] = r.count;
        j["fraction"] = rat_to_pq_string(r.fraction);
        j["scope"] = r.scope;
        return j;
    }
    if (kind == "c3vol") {
        C3Report r = c3_volume(p.samples, p.truncation, p.seed, p.threads);
        json j;
        j["experiment"] = "c3vol";
        j["samples"] = r.samples;
        j["truncation"] = r.truncation;
        j["seed"] = r.seed;
        j["estimate"] = r.estimate;
        j["closed_form"] = r.closed_form;
        j["tail_bound"] = r.tail_bound;
        j["truncation_warning"] = r.truncation_warning;
        j["rel_err"] = r.rel_err;
        j["threads"] = r.threads;
        return j;
    }
    if (kind == "monogenic") {
        MonogenicReport r = monogenic_count_experiment(p.n, p.Y, p.threads);
        json j;
        j["experiment"] = "monogenic";
        j["n"] = r.n;
        j["Y"] = r.Y;
        j["Ys"] = r.Ys;
        j["box"] = r.box;
        j["counts"] = r.counts;
        j["undetermined"] = r.undetermined;
        j["slopes"] = r.slopes;
        j["predicted_exponent"] = r.predicted_exponent;
        j["pairs_checked"] = r.pairs_checked;
        j["distinct_violations"] = r.distinct_violations;
        j["pairwise_complete"] = r.pairwise_complete;
        return j;
    }
    if (kind == "qrfrac") {
        QrFractionReport r = qr_fraction_experiment(p.n, p.X, p.samples, p.seed, p.threads);
        json j;
        j["experiment"] = "qrfrac";
        j["n"] = r.n;
        j["X"] = r.X;
        j["box"] = r.box;
        j["samples"] = r.samples;
        j["strong_hits"] = r.strong_hits;
        j["undetermined"] = r.undetermined;
        j["seed"] = r.seed;
        j["fraction"] = rat_to_pq_string(r.fraction);
        j["exhaustive"] = r.exhaustive;
        return j;
    }
    throw std::invalid_argument("unknown experiment kind: " + kind);
}

}  // namespace

extern "C" {

ds_status ds_poly_parse(const char* text, ds_poly** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] { *out = new ds_poly{parse_monic(text)}; });
}

void ds_poly_free(ds_poly* p) { delete p; }

int ds_poly_degree(const ds_poly* p) { return p ? p->f.degree() : -1; }

ds_status ds_poly_format(const ds_poly* p, char** out_text) {
    if (!p || !out_text) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] { *out_text = dup_string(format_monic(p->f)); });
}

ds_status ds_poly_coeffs_json(const ds_poly* p, char** out_json) {
    if (!p || !out_json) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] { *out_json = dup_string(monic_coeff_json(p->f)); });
}

void ds_string_free(char* s) { std::free(s); }

const char* ds_last_error(void) { return g_last_error.c_str(); }

const char* ds_version(void) { return "1.0.0"; }

ds_status ds_classify(const ds_poly* f, uint64_t p, char** out_json) {
    if (!f || !out_json) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] {
        P2Class c = classify_p2(f->f, p);
        json j;
        j["poly"] = format_monic(f->f);
        j["p"] = p;
        j["tag"] = to_string(c.tag);
        if (c.witness) j["witness"] = *c.witness;
        else j["witness"] = nullptr;
        *out_json = dup_string(j.dump());
    });
}

ds_status ds_embed(const ds_poly* f, int64_t m, char** out_json) {
    if (!f || !out_json) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] {
        auto nf = weak_normal_form(f->f, int_from_i64(m));
        if (!nf)
            throw std::invalid_argument(
                "disc(f) is not weakly divisible by p^2 at every prime p | m");
        SymMatrix B = sigma_m(*nf);
        json j;
        j["poly"] = format_monic(f->f);
        j["m"] = m;
        j["ell"] = nf->ell.get_str();
        json c = json::array();
        for (const Int& v : nf->c) c.push_back(v.get_str());
        j["c"] = c;
        j["matrix"] = sym_to_json(B);
        RatPoly inv = invariant_poly(B);
        auto monic = rat_poly_to_monic(inv);
        j["invariant_poly"] = monic ? format_monic(*monic) : "(non-integral)";
        j["invariant_coeffs"] = rat_poly_json(inv);
        Rat Q = q_of_w0(B);
        j["Q"] = rat_to_pq_string(Q);
        Rat aq = abs(Q);
        if (rat_is_integer(aq)) j["absQ"] = Rat(aq).get_num().get_str();
        else j["absQ"] = nullptr;
        *out_json = dup_string(j.dump());
    });
}

ds_status ds_qinv(const char* matrix_json, char** out_json) {
    if (!matrix_json || !out_json) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] {
        SymMatrix B = sym_from_json(json::parse(matrix_json));
        Rat Q = q_of_w0(B);
        json j;
        j["Q"] = rat_to_pq_string(Q);
        Rat aq = abs(Q);
        if (rat_is_integer(aq)) j["absQ"] = Rat(aq).get_num().get_str();
        else j["absQ"] = nullptr;
        *out_json = dup_string(j.dump());
    });
}

ds_status ds_local_density(int n, uint64_t p, int a1_zero, int with_oracle, char** out_json) {
    if (!out_json) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] {
        json j;
        j["n"] = n;
        j["p"] = p;
        j["a1_zero"] = bool(a1_zero);
        if (!a1_zero) j["formula"] = rat_to_pq_string(lambda_np(n, p));
        else j["formula"] = nullptr;  // no closed form for kappa_n(p)
        if (with_oracle) {
            Rat oracle = bruteforce_disc_density(n, p, a1_zero != 0);
            j["oracle"] = rat_to_pq_string(oracle);
            if (!a1_zero) j["equal"] = oracle == lambda_np(n, p);
            else j["equal"] = nullptr;
        } else {
            j["oracle"] = nullptr;
            j["equal"] = nullptr;
        }
        *out_json = dup_string(j.dump());
    });
}

ds_status ds_experiment(const char* kind, const char* params_json, char** out_json) {
    if (!kind || !out_json) {
        g_last_error = "null argument";
        return DS_ERR_INVALID;
    }
    return guarded([&] {
        Params p = parse_params(params_json);
        json j = run_experiment(kind, p);
        *out_json = dup_string(j.dump(2));
    });
}

}  // extern "C"
