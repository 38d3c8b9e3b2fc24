#include "hesslab/report.hpp"

#include "hesslab/cache.hpp"
#include "hesslab/error.hpp"
#include "hesslab/version.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <sstream>
#include <thread>

namespace hesslab {

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::string join(const std::vector<long>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
    std::vector<T> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "'");
        out.push_back(static_cast<T>(v));
    }
    return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) { return parse_list<int>(text, "integer list"); }
std::vector<long> parse_long_list(const std::string& text) { return parse_list<long>(text, "integer list"); }

Json multiplicity_json(const HessenbergFunction& h, const GradedMultiplicity& mult) {
    Json table = Json::object();
    for (const auto& [lambda, row] : mult.table) table[lambda.to_compact_string()] = row;
    return Json{{"n", mult.n}, {"h", h.to_string()}, {"l", mult.l}, {"mult", table}, {"betti", betti_rs(mult)}};
}

GradedMultiplicity multiplicity_from_json(const Json& doc) {
    GradedMultiplicity mult;
    mult.n = doc.at("n").get<int>();
    mult.l = doc.at("l").get<int>();
    for (const auto& [key, row] : doc.at("mult").items())
        mult.table.emplace(Partition::parse(key), row.get<std::vector<std::int64_t>>());
    return mult;
}

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

Json header(const char* command, const CommonOptions& options) {
    return Json{{"tool", "hesslab"}, {"version", kVersion}, {"command", command}, {"seed", options.seed}};
}

Json violation(const HessenbergFunction& h, const std::string& kind, const std::string& detail) {
    return Json{{"h", h.to_string()}, {"kind", kind}, {"detail", detail}};
}

GradedMultiplicity cached_multiplicities(const HessenbergFunction& h, const Cache& cache,
                                         const CommonOptions& options, unsigned jobs) {
    const auto key = Cache::key("dotchar", h.n(), h.to_string(), {}, 0);
    if (auto hit = cache.load(key)) return multiplicity_from_json(*hit);
    const auto mult = dot_action_multiplicities(h, CsfOptions{options.force, jobs});
    cache.store(key, multiplicity_json(h, mult));
    return mult;
}

GenericJordan cached_lambda_h(const HessenbergFunction& h, const Cache& cache, std::uint64_t seed) {
    const auto key = Cache::key("springer", h.n(), h.to_string(), {}, seed);
    if (auto hit = cache.load(key)) {
        GenericJordan g;
        g.type = Partition::parse(hit->at("lambdaH").get<std::string>());
        g.prime = hit->at("prime").get<std::uint64_t>();
        g.seed = hit->at("seed").get<std::uint64_t>();
        g.samples = hit->at("samples").get<int>();
        g.hits = hit->at("hits").get<int>();
        return g;
    }
    SamplingOptions sampling;
    sampling.seed = seed;
    const auto g = generic_jordan_type(h, sampling);
    cache.store(key, Json{{"lambdaH", g.type.to_string()},
                                    {"prime", g.prime},
                                    {"seed", g.seed},
                                    {"samples", g.samples},
                                    {"hits", g.hits}});
    return g;
}

struct Analysis {
    Json report;
    std::vector<Json> violations;
};

// dotchar + springer + regular Betti numbers for one h; GKM Morse counts when
// n <= gkm_max_n.
Analysis analyze_one(const HessenbergFunction& h, const CommonOptions& options, const Cache& cache,
                     unsigned csf_jobs, int gkm_max_n, bool full_report) {
    Analysis out;
    const auto mult = cached_multiplicities(h, cache, options, csf_jobs);
    const auto betti = betti_rs(mult);
    const auto lambda_h = cached_lambda_h(h, cache, options.seed);
    const auto convention =
        options.convention_control ? SpringerConvention::direct : SpringerConvention::fourier;
    const auto allowed = allowed_irreps(lambda_h.type, convention);

    for (const auto& v : support_violations(mult, lambda_h.type, convention))
        out.violations.push_back(violation(
            h, "support",
            "irrep " + v.irrep.to_string() + " occurs with multiplicity " + std::to_string(v.multiplicity) +
                " but orbit " + v.orbit.to_string() + " is not below lambdaH " + lambda_h.type.to_string()));

    bool certified = false;
    if (options.certify) {
        const auto exact = chain_partition_type(h);
        certified = exact == lambda_h.type;
        if (!certified)
            out.violations.push_back(violation(h, "lambdaH-certificate",
                                               "sampled " + lambda_h.type.to_string() + " vs chain partition " +
                                                   exact.to_string()));
    }

    if (h.indecomposable() && (betti.front() != 1 || betti.back() != 1))
        out.violations.push_back(violation(h, "connectedness", "betti " + join(betti)));

    Json regular = Json::array();
    for (const auto& J : all_subsets_J(h.n())) {
        const auto rb = regular_betti(mult, J);
        const bool palindromic = is_palindromic(rb);
        if (!palindromic)
            out.violations.push_back(violation(h, "palindromicity",
                                               "J={" + join(J) + "} betti " + join(rb)));
        if (full_report) regular.push_back(Json{{"J", join(J)}, {"betti", rb}, {"palindromic", palindromic}});
    }

    Json gkm = nullptr;
    if (h.n() <= gkm_max_n) {
        const GkmGraph graph(h);
        const auto morse = morse_data(graph, options.seed);
        const bool agrees = morse.betti == betti;
        if (!agrees)
            out.violations.push_back(violation(h, "gkm-betti",
                                               "morse " + join(morse.betti) +
                                                   " vs character " + join(betti)));
        gkm = Json{{"vertices", graph.vertex_count()},
                   {"edges", graph.edge_count()},
                   {"components", graph.component_count()},
                   {"xi", morse.xi},
                   {"morse_betti", morse.betti},
                   {"agrees", agrees}};
    }

    if (full_report) {
        out.report = multiplicity_json(h, mult);
        out.report["indecomposable"] = h.indecomposable();
        out.report["lambdaH"] = lambda_h.type.to_string();
        out.report["lambdaH_sampling"] =
            Json{{"prime", lambda_h.prime}, {"samples", lambda_h.samples}, {"hits", lambda_h.hits}};
        if (options.certify) out.report["lambdaH_certified"] = certified;
        out.report["convention"] = options.convention_control ? "direct" : "fourier";
        Json allowed_json = Json::array();
        for (const auto& p : allowed) allowed_json.push_back(p.to_string());
        out.report["allowed_irreps"] = allowed_json;
        out.report["regular"] = regular;
        if (!gkm.is_null()) out.report["gkm"] = gkm;
    } else {
        out.report = Json{{"h", h.to_string()},
                          {"l", mult.l},
                          {"betti", betti},
                          {"lambdaH", lambda_h.type.to_string()},
                          {"violations", out.violations.size()}};
        if (options.certify) out.report["lambdaH_certified"] = certified;
        if (!gkm.is_null()) out.report["gkm_agrees"] = gkm["agrees"];
    }
    return out;
}

Json verdict_json(const PackageVerdict& verdict, bool with_determinant, bool with_signature) {
    Json degrees = Json::array();
    for (const auto& d : verdict.degrees) {
        Json entry{{"degree", d.degree}, {"dimension", d.dimension}, {"rank", d.rank}, {"holds", d.holds}};
        if (with_determinant) entry["determinant"] = d.determinant;
        if (with_signature)
            entry["signature"] = Json{{"positive", d.signature.positive},
                                      {"negative", d.signature.negative},
                                      {"zero", d.signature.zero}};
        degrees.push_back(entry);
    }
    Json out{{"holds", verdict.holds}, {"degrees", degrees}};
    if (!verdict.holds) out["witness"] = verdict.witness;
    return out;
}

void validate_J(const std::vector<int>& J, int n) {
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (J[i] < 1 || J[i] > n - 1)
            throw std::invalid_argument("J entries must lie in 1.." + std::to_string(n - 1));
        if (i && J[i] <= J[i - 1]) throw std::invalid_argument("J must be strictly increasing");
    }
}

}  // namespace

CommandResult cmd_analyze(const HessenbergFunction& h, const AnalyzeOptions& options) {
    const auto start = Clock::now();
    const Cache cache = Cache::from_flag(options.common.cache_dir);
    if (options.gkm && h.n() > 5) throw BoundedInputError("--gkm requires n <= 5");
    auto analysis = analyze_one(h, options.common, cache, options.common.jobs, options.gkm ? 5 : 0, true);

    Json report = header("analyze", options.common);
    for (auto& [key, value] : analysis.report.items()) report[key] = value;

    if (options.gkm && h.n() <= 4) {
        const auto betti = report["betti"].get<std::vector<std::int64_t>>();
        const GkmGraph graph(h);
        const GkmCohomology coh(graph, options.common.seed, betti);
        const auto gkm_mult = gkm_dot_multiplicities(coh);
        const bool character_agrees = gkm_mult == multiplicity_from_json(report);
        if (!character_agrees)
            analysis.violations.push_back(violation(h, "gkm-character", "dot-action character differs from CSF decoding"));
        const auto lambda = default_kahler_weight(h.n());
        const auto pd = poincare_duality_check(coh, {});
        const auto hl = hard_lefschetz_check(coh, {}, lambda);
        const auto hr = hodge_riemann_check(coh, {}, lambda);
        for (const auto* v : {&pd, &hl, &hr})
            if (!v->holds) analysis.violations.push_back(violation(h, "kahler", v->witness));
        report["gkm"]["character_agrees"] = character_agrees;
        report["gkm"]["poincare"] = pd.holds;
        report["gkm"]["hard_lefschetz"] = hl.holds;
        report["gkm"]["hodge_riemann"] = hr.holds;
    }

    report["violations"] = analysis.violations;
    if (options.common.timing) report["timing_ms"] = elapsed_ms(start);
    return {report, analysis.violations.empty() ? 0 : 3};
}

CommandResult cmd_verify(int n, const VerifyOptions& options) {
    const auto start = Clock::now();
    const int max_n = options.common.force ? 8 : 7;
    if (n < 2 || n > max_n)
        throw BoundedInputError("verify: n must lie in 2.." + std::to_string(max_n) +
                                (options.common.force ? "" : " (8 with --force)"));
    if (options.gkm_max_n > 5) throw BoundedInputError("verify: --gkm-max-n must be <= 5");
    const Cache cache = Cache::from_flag(options.common.cache_dir);
    const auto functions = enumerate_hessenberg(n, options.indecomposable);

    std::vector<Analysis> results(functions.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < functions.size(); i = next++)
            results[i] = analyze_one(functions[i], options.common, cache, 1, options.gkm_max_n, false);
    };
    const unsigned jobs = std::max(1u, options.common.jobs);
    std::vector<std::future<void>> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();

    Json report = header("verify", options.common);
    report["n"] = n;
    report["indecomposable_only"] = options.indecomposable;
    report["convention"] = options.common.convention_control ? "direct" : "fourier";
    report["gkm_max_n"] = options.gkm_max_n;
    report["functions"] = functions.size();
    Json rows = Json::array();
    Json violations = Json::array();
    for (const auto& r : results) {
        rows.push_back(r.report);
        for (const auto& v : r.violations) violations.push_back(v);
    }
    report["results"] = rows;
    report["violation_count"] = violations.size();
    report["violations"] = violations;
    if (options.common.timing) report["timing_ms"] = elapsed_ms(start);
    return {report, violations.empty() ? 0 : 3};
}

CommandResult cmd_kahler(const HessenbergFunction& h, const KahlerOptions& options) {
    const auto start = Clock::now();
    if (h.n() > 4) throw BoundedInputError("kahler: n must be <= 4");
    validate_J(options.J, h.n());
    const auto lambda = options.lambda.value_or(default_kahler_weight(h.n()));
    if (static_cast<int>(lambda.size()) != h.n())
        throw std::invalid_argument("kahler: --lambda must have n entries");
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] >= lambda[i - 1]) throw std::invalid_argument("kahler: --lambda must be strictly decreasing");

    const Cache cache = Cache::from_flag(options.common.cache_dir);
    const auto key = Cache::key("kahler", h.n(), h.to_string() + "|lambda=" + join(lambda), options.J,
                                options.common.seed);
    Json report = header("kahler", options.common);
    report["h"] = h.to_string();
    report["n"] = h.n();
    report["l"] = dimension(h);
    report["J"] = join(options.J);
    report["lambda"] = join(lambda);

    Json body;
    if (auto hit = cache.load(key)) {
        body = *hit;
    } else {
        const auto mult = cached_multiplicities(h, cache, options.common, options.common.jobs);
        const GkmGraph graph(h);
        const GkmCohomology coh(graph, options.common.seed, betti_rs(mult));
        std::vector<std::size_t> invariant_dims;
        for (int k = 0; k <= coh.dimension(); ++k) invariant_dims.push_back(invariant_subring(coh, options.J, k).size());
        const auto expected = regular_betti(mult, options.J);
        const bool dims_agree =
            std::equal(invariant_dims.begin(), invariant_dims.end(), expected.begin(), expected.end(),
                       [](std::size_t a, std::int64_t b) { return static_cast<std::int64_t>(a) == b; });
        const auto pd = poincare_duality_check(coh, options.J);
        const auto hl = hard_lefschetz_check(coh, options.J, lambda);
        const auto hr = hodge_riemann_check(coh, options.J, lambda);
        body = Json{{"invariant_betti", invariant_dims},
                    {"regular_betti", expected},
                    {"dimensions_agree", dims_agree},
                    {"hodge_riemann_sign", "(-1)^(k/2) in degree k"},
                    {"poincare", verdict_json(pd, true, false)},
                    {"hard_lefschetz", verdict_json(hl, false, false)},
                    {"hodge_riemann", verdict_json(hr, false, true)}};
        cache.store(key, body);
    }
    for (auto& [k, v] : body.items()) report[k] = v;

    Json violations = Json::array();
    if (!report["dimensions_agree"].get<bool>())
        violations.push_back(violation(h, "invariant-dimension", "GKM invariant dimensions differ from regular_betti"));
    for (const char* check : {"poincare", "hard_lefschetz", "hodge_riemann"})
        if (!report[check]["holds"].get<bool>())
            violations.push_back(violation(h, check, report[check]["witness"].get<std::string>()));
    report["holds"] = violations.empty();
    report["violations"] = violations;
    if (options.common.timing) report["timing_ms"] = elapsed_ms(start);
    return {report, violations.empty() ? 0 : 3};
}

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + cell(v[i]);
        return out;
    }
    return v.dump();
}

Table tabulate(const Json& report) {
    Table t;
    const std::string command = report.at("command").get<std::string>();
    if (command == "analyze") {
        const int l = report.at("l").get<int>();
        t.header.push_back("lambda");
        for (int k = 0; k <= l; ++k) t.header.push_back("k" + std::to_string(k));
        auto add = [&](const std::string& label, const Json& row) {
            std::vector<std::string> r{label};
            for (const auto& v : row) r.push_back(v.dump());
            t.rows.push_back(std::move(r));
        };
        for (const auto& [key, row] : report.at("mult").items())
            add(Partition::parse(key).to_string(), row);
        add("betti", report.at("betti"));
        for (const auto& entry : report.at("regular")) add("J={" + entry.at("J").get<std::string>() + "}", entry.at("betti"));
    } else if (command == "verify") {
        t.header = {"h", "l", "betti", "lambdaH", "violations"};
        const bool gkm = report.at("gkm_max_n").get<int>() > 0;
        if (gkm) t.header.push_back("gkm_agrees");
        for (const auto& r : report.at("results")) {
            std::vector<std::string> row{cell(r.at("h")), cell(r.at("l")), cell(r.at("betti")), cell(r.at("lambdaH")),
                                         cell(r.at("violations"))};
            if (gkm) row.push_back(r.contains("gkm_agrees") ? cell(r.at("gkm_agrees")) : "");
            t.rows.push_back(std::move(row));
        }
    } else {
        t.header = {"check", "degree", "dimension", "rank", "holds"};
        for (const char* check : {"poincare", "hard_lefschetz", "hodge_riemann"})
            for (const auto& d : report.at(check).at("degrees"))
                t.rows.push_back({check, cell(d.at("degree")), cell(d.at("dimension")), cell(d.at("rank")),
                                  cell(d.at("holds"))});
    }
    return t;
}

}  // namespace

std::string render(const Json& report, OutputFormat format) {
    if (format == OutputFormat::json) return report.dump() + "\n";
    const Table t = tabulate(report);
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
                out << (i ? "," : "") << (quote ? "\"" + cells[i] + "\"" : cells[i]);
            }
            out << '\n';
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return out.str();
    }
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    if (report.contains("violations") && !report["violations"].empty())
        for (const auto& v : report["violations"])
            out << "violation " << cell(v.at("h")) << " " << cell(v.at("kind")) << ": " << cell(v.at("detail")) << '\n';
    return out.str();
}

}  // namespace hesslab
