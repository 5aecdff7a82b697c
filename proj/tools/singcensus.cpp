// singcensus: command-line front end for the singlab library.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "singlab/report_json.hpp"

using namespace singlab;

namespace {

constexpr const char* kVersion = "singlab 0.1.0";

struct Options {
    std::int64_t n = 3, b = 1, l = 3, p = 2, q = 2, m = 0, d = 1;
    std::uint64_t trials = 1000;
    std::optional<std::uint64_t> seed;
    std::int64_t window = kDefaultL0Window;
    std::string mode = "sample";
    std::optional<std::uint64_t> cap;
    std::optional<std::size_t> nvars;
    std::string config, out, format = "json";
    std::vector<std::string> z;
    std::string f0, f, point, poly, route = "automatic";
    bool deterministic = false, squarefree = false, include_base = false;
    std::optional<std::int64_t> s1_l0;
    std::optional<std::size_t> random_d;
    bool random_f0 = false;
    unsigned threads = 1;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    [[nodiscard]] double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string now_utc() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t resolve_cap(const Options& o) {
    if (o.cap) return *o.cap;
    if (const char* env = std::getenv("SINGCENSUS_CAP"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        detail::require(end != nullptr && *end == '\0', "SINGCENSUS_CAP must be a non-negative integer");
        return v;
    }
    return kDefaultEnumerationCap;
}

std::uint64_t resolve_seed(Options& o) {
    if (!o.seed) {
        std::random_device rd;
        o.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    return *o.seed;
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (o.format == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw ValidationError("--format must be one of: " + list);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            detail::require(file_.good(), "cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

/// Wraps a result with the artifact metadata every JSON document carries.
Json envelope(const std::string& command, const Json& config, const Options& o, const Json& result, const Timer& t,
              bool with_seed) {
    Json doc{{"version", kVersion}, {"command", command}, {"config", config}};
    if (with_seed) doc["seed"] = *o.seed;
    doc["result"] = result;
    doc["wall_clock"] = o.deterministic ? std::string() : now_utc();
    doc["elapsed_ms"] = o.deterministic ? 0.0 : t.ms();
    return doc;
}

void write_json(const Options& o, const Json& doc) {
    Output out(o.out);
    out.stream() << doc.dump(2) << '\n';
}

std::vector<Coeff> parse_point(const std::string& text, const PrimeField& field) {
    std::vector<Coeff> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        detail::require(used != 0 && used == item.size(), "--point must be comma-separated integers");
        pt.push_back(field.reduce_signed(v));
    }
    return pt;
}

std::size_t as_size(std::int64_t v, const char* name) {
    detail::require(v >= 0, std::string(name) + " must be non-negative");
    return static_cast<std::size_t>(v);
}

// ---- subcommands ----------------------------------------------------------

int cmd_bounds(Options& o) {
    check_format(o, {"json"});
    Timer t;
    const auto r = bounds_report(o.n, o.b, o.l, o.p, o.q);
    Json result = to_json(r);
    result["noneffective"] = to_json(noneffective_params(o.n, o.b, o.p));
    if (o.m != 0) {
        detail::require(o.m >= 1 && o.m <= o.l + 1, "1 ≤ m ≤ l+1 required");
        result["A_b_l_m"] = big_json(A_b(o.l, o.m, o.b));
        result["hypothesis_at_m"] = check_hypothesis(o.l, o.m, a_nb(o.n, o.b, o.l), o.p, o.b);
    }
    Json cfg{{"n", o.n}, {"b", o.b}, {"l", o.l}, {"p", o.p}, {"q", o.q}};
    if (o.m != 0) cfg["m"] = o.m;
    write_json(o, envelope("bounds", cfg, o, result, t, false));
    return 0;
}

int cmd_l0(Options& o) {
    check_format(o, {"json", "text"});
    Timer t;
    const auto r = find_l0(o.n, o.b, o.p, o.window);
    std::int64_t combined = r.l0;
    if (o.s1_l0) {
        detail::require(*o.s1_l0 >= 0, "--s1-l0 must be non-negative");
        combined = std::max(combined, *o.s1_l0);
    }
    if (o.format == "text") {
        Output out(o.out);
        out.stream() << combined << '\n';
        return 0;
    }
    Json result = to_json(r);
    result["s1_l0"] = o.s1_l0 ? Json(*o.s1_l0) : Json(nullptr);
    result["l0"] = combined;
    Json notes = Json::array();
    if (auto adv = l0_parity_advisory(o.n, o.b, o.p)) notes.push_back(*adv);
    if (!o.s1_l0) notes.push_back("l0 covers the large-degree range only; pass --s1-l0 to combine with the other range");
    result["notes"] = notes;
    Json cfg{{"n", o.n}, {"b", o.b}, {"p", o.p}, {"window", o.window}};
    if (o.s1_l0) cfg["s1-l0"] = *o.s1_l0;
    write_json(o, envelope("l0", cfg, o, result, t, false));
    return 0;
}

int cmd_singdim(Options& o) {
    check_format(o, {"json", "text"});
    Timer t;
    validate_prime(o.p, "p");
    const std::string text = !o.f.empty() ? o.f : o.poly;
    detail::require(!text.empty(), "a polynomial is required (positional or --f)");
    const PrimeField field(static_cast<std::uint64_t>(o.p));
    const std::size_t nvars = o.nvars ? *o.nvars : infer_num_vars(text);
    const Polynomial F = parse_poly(text, nvars, field);
    const auto dd = sing_dim_deg(F);
    if (o.format == "text") {
        Output out(o.out);
        out.stream() << dd.projective_dim << ' ' << dd.degree << '\n';
        return 0;
    }
    Json result = to_json(dd);
    result["nvars"] = nvars;
    result["poly"] = format_poly(F);
    const int l = F.total_degree();
    if (nvars >= 2 && l >= 2) result["degree_audit"] = to_json(degree_bound_audit(F, nvars - 1, static_cast<unsigned>(l)));
    Json cfg{{"p", o.p}, {"poly", text}, {"nvars", nvars}};
    write_json(o, envelope("singdim", cfg, o, result, t, false));
    return 0;
}

void write_csv(std::ostream& os, const CensusResult& res) {
    os << "seed,trial,q,n,b,l,sing_dim,sing_deg,elapsed_ms\n";
    char buf[64];
    for (const auto& r : res.records) {
        std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
        os << r.seed << ',' << r.trial << ',' << r.q << ',' << r.n << ',' << r.b << ',' << r.l << ',' << r.sing_dim
           << ',' << r.sing_deg << ',' << buf << '\n';
    }
}

int cmd_census(Options& o) {
    check_format(o, {"csv", "json"});
    Timer t;
    detail::require(o.mode == "sample" || o.mode == "exhaustive", "--mode must be sample or exhaustive");
    const auto mode = o.mode == "sample" ? CensusMode::sample : CensusMode::exhaustive;
    // Exhaustive runs draw nothing; a fixed default keeps their output replayable.
    if (mode == CensusMode::exhaustive && !o.seed) o.seed = 0;
    const std::uint64_t seed = resolve_seed(o);
    const std::uint64_t cap = resolve_cap(o);
    Json cfg{{"n", o.n},         {"b", o.b},     {"l", o.l},           {"q", o.q},
             {"mode", o.mode},   {"trials", o.trials}, {"seed", seed}, {"cap", cap},
             {"threads", o.threads}, {"format", o.format}, {"deterministic", o.deterministic},
             {"squarefree", o.squarefree}};

    if (o.squarefree) {
        validate_nb(o.n, o.b);
        detail::require(o.b == o.n - 1, "--squarefree needs b = n−1");
        detail::require(o.l >= 2, "l ≥ 2 required");
        validate_prime(o.q, "q");
        detail::require(o.format == "json", "--squarefree writes a JSON report only");
        const auto r = squarefree_census(as_size(o.n, "n"), static_cast<unsigned>(o.l),
                                         static_cast<std::uint64_t>(o.q), mode, o.trials, seed, cap);
        write_json(o, envelope("census", cfg, o, to_json(r), t, true));
        return 0;
    }

    CensusConfig c;
    c.n = as_size(o.n, "n");
    c.b = as_size(o.b, "b");
    detail::require(o.l >= 1, "l ≥ 1 required");
    c.l = static_cast<unsigned>(o.l);
    detail::require(o.q >= 2, "q must be prime");
    c.q = static_cast<std::uint64_t>(o.q);
    c.mode = mode;
    c.trials = o.trials;
    c.seed = seed;
    c.cap = cap;
    c.threads = o.threads;
    c.timing = !o.deterministic;
    const auto res = census(c);

    Json summary = to_json(res.summary);
    summary["mode"] = o.mode;
    summary["seed"] = seed;
    if (o.format == "json") {
        Json result{{"summary", summary}, {"records", Json::array()}};
        for (const auto& r : res.records) result["records"].push_back(to_json(r));
        write_json(o, envelope("census", cfg, o, result, t, true));
        return 0;
    }
    {
        Output out(o.out);
        write_csv(out.stream(), res);
    }
    const Json doc = envelope("census", cfg, o, summary, t, true);
    if (o.out.empty()) {
        std::cerr << doc.dump(2) << '\n';
    } else {
        std::ofstream s(o.out + ".summary.json", std::ios::binary);
        detail::require(s.good(), "cannot open summary file");
        s << doc.dump(2) << '\n';
    }
    return 0;
}

LinearConfig config_from_json(const Json& j, const PrimeField& field, std::size_t n, std::size_t b) {
    if (j.contains("planes")) {
        std::vector<std::vector<Polynomial>> planes;
        for (const auto& plane : j.at("planes")) {
            std::vector<Polynomial> gens;
            for (const auto& g : plane) gens.push_back(parse_poly(g.get<std::string>(), n + 1, field));
            planes.push_back(std::move(gens));
        }
        return LinearConfig::from_planes(field, n, b, std::move(planes));
    }
    detail::require(j.contains("points"), "config needs \"points\" or \"planes\"");
    std::vector<std::vector<Coeff>> points;
    for (const auto& pt : j.at("points")) {
        std::vector<Coeff> v;
        for (const auto& c : pt) v.push_back(field.reduce_signed(c.get<std::int64_t>()));
        points.push_back(std::move(v));
    }
    return LinearConfig::from_points(field, n, b, std::move(points));
}

int cmd_speccodim(Options& o, const Json& file) {
    check_format(o, {"json"});
    Timer t;
    validate_nb(o.n, o.b);
    validate_prime(o.p, "p");
    detail::require(o.l >= 1, "l ≥ 1 required");
    const PrimeField field(static_cast<std::uint64_t>(o.p));
    const auto n = as_size(o.n, "n");
    const auto b = as_size(o.b, "b");
    CodimRoute route = CodimRoute::automatic;
    if (o.route == "substitution") {
        route = CodimRoute::substitution;
    } else if (o.route == "groebner") {
        route = CodimRoute::groebner;
    } else {
        detail::require(o.route == "automatic", "--route must be automatic, substitution or groebner");
    }
    Json cfg{{"n", o.n}, {"b", o.b}, {"l", o.l}, {"p", o.p}, {"route", o.route}};
    const bool random = o.random_d.has_value();
    std::optional<LinearConfig> lc;
    if (random) {
        detail::require(!file.contains("points") && !file.contains("planes"), "--random conflicts with a config layout");
        Rng rng(resolve_seed(o));
        lc = LinearConfig::random(field, n, b, *o.random_d, rng, o.include_base);
        cfg["random"] = *o.random_d;
        cfg["include-base"] = o.include_base;
        cfg["seed"] = *o.seed;
    } else {
        detail::require(file.contains("points") || file.contains("planes"), "speccodim needs --config or --random");
        lc = config_from_json(file, field, n, b);
    }
    Json planes = Json::array();
    for (const auto& plane : lc->planes()) {
        Json gens = Json::array();
        for (const auto& g : plane) gens.push_back(format_poly(g));
        planes.push_back(gens);
    }
    cfg["planes"] = planes;
    const auto r = union_vanishing_codim(*lc, static_cast<unsigned>(o.l), route);
    write_json(o, envelope("speccodim", cfg, o, to_json(r), t, random));
    return 0;
}

int cmd_dhcount(Options& o) {
    check_format(o, {"json"});
    Timer t;
    detail::require(o.n >= 1, "n ≥ 1 required");
    validate_prime(o.p, "p");
    detail::require(o.q == o.p, "q must equal p (prime fields only)");
    detail::require(o.l >= 2, "l ≥ 2 required");
    detail::require(!o.z.empty(), "--z generators are required");
    const PrimeField field(static_cast<std::uint64_t>(o.p));
    const auto n = as_size(o.n, "n");
    std::vector<Polynomial> z;
    for (const auto& g : o.z) z.push_back(parse_poly(g, n + 1, field));
    const auto tv = static_cast<unsigned>(tau(o.l, o.p));
    const auto hom = static_cast<unsigned>(o.l - 1);
    const std::uint64_t cap = resolve_cap(o);
    Json cfg{{"n", o.n}, {"l", o.l}, {"p", o.p}, {"q", o.q}, {"tau", tv}, {"z", o.z}, {"cap", cap}};

    std::vector<Polynomial> draws;
    if (o.random_f0) {
        detail::require(o.f0.empty(), "--f0 conflicts with --random");
        Rng rng(resolve_seed(o));
        const auto space = GradedSpace::at_most(field, n, hom);
        for (std::uint64_t i = 0; i < o.trials; ++i) draws.push_back(space.sample(rng));
        cfg["random"] = true;
        cfg["trials"] = o.trials;
        cfg["seed"] = *o.seed;
    } else {
        draws.push_back(o.f0.empty() ? Polynomial(field, n) : parse_poly(o.f0, n, field));
        detail::require(draws.back().total_degree() <= static_cast<int>(hom), "deg F0 must be at most l−1");
        cfg["f0"] = o.f0;
    }
    Json runs = Json::array();
    bool all_dichotomy = true, all_le = true;
    for (const auto& F0 : draws) {
        const auto r = dh_counting(F0, z, tv, hom, cap);
        Json j = to_json(r);
        j["f0"] = format_poly(F0);
        runs.push_back(j);
        all_dichotomy = all_dichotomy && r.dichotomy;
        all_le = all_le && r.count_lhs <= r.count_rhs;
    }
    Json result{{"runs", runs}, {"all_dichotomy", all_dichotomy}, {"all_lhs_le_rhs", all_le}};
    write_json(o, envelope("dhcount", cfg, o, result, t, o.random_f0));
    return 0;
}

int cmd_witness(Options& o) {
    check_format(o, {"json"});
    Timer t;
    validate_nb(o.n, o.b);
    validate_prime(o.p, "p");
    detail::require(o.l >= 2 && o.d >= 1, "l ≥ 2 and d ≥ 1 required");
    detail::require(!o.f.empty() && !o.point.empty(), "--f and --point are required");
    const PrimeField field(static_cast<std::uint64_t>(o.p));
    const auto n = as_size(o.n, "n");
    const Polynomial f = parse_poly(o.f, n + 1, field);
    const auto P = parse_point(o.point, field);
    const auto r = jacobian_witness(n, as_size(o.b, "b"), static_cast<unsigned>(o.l), static_cast<unsigned>(o.d), f, P);
    Json result = to_json(r);
    result["rank_ge_n_minus_b"] = r.rank >= n - static_cast<std::size_t>(o.b);
    Json cfg{{"n", o.n}, {"b", o.b}, {"l", o.l}, {"d", o.d}, {"p", o.p}, {"f", o.f}, {"point", o.point}};
    write_json(o, envelope("witness", cfg, o, result, t, false));
    return 0;
}

int cmd_en_experiment(Options& o) {
    check_format(o, {"json"});
    Timer t;
    validate_nb(o.n, o.b);
    validate_prime(o.p, "p");
    detail::require(o.q == o.p, "q must equal p (prime fields only)");
    detail::require(o.l >= 2, "l ≥ 2 required");
    const PrimeField field(static_cast<std::uint64_t>(o.p));
    const auto n = as_size(o.n, "n");
    const auto b = as_size(o.b, "b");
    const std::uint64_t seed = resolve_seed(o);
    const std::size_t k = n - b;
    std::vector<std::uint64_t> prefix_ok(k, 0);
    std::uint64_t bullet1 = 0, bullet2 = 0, both = 0;
    for (std::uint64_t i = 0; i < o.trials; ++i) {
        Rng rng = Rng::for_trial(seed, i);
        const auto s = sample_smart(field, n, static_cast<unsigned>(o.l), rng);
        const auto e = event_En_proxy(s, n, b);
        for (std::size_t j = 0; j < k && e.bullet1_per_i[j]; ++j) ++prefix_ok[j];
        bullet1 += e.bullet1;
        bullet2 += e.bullet2_strong;
        both += e.bullet1 && e.bullet2_strong;
    }
    const auto eps = prob_En_epsilons(o.n, o.b, o.l, o.p, o.q);
    Json per_i = Json::array();
    Rational running = 1;
    for (std::size_t j = 0; j < k; ++j) {
        running *= 1 - eps[j];
        const double freq = o.trials == 0 ? 0.0 : static_cast<double>(prefix_ok[j]) / static_cast<double>(o.trials);
        per_i.push_back(Json{{"i", j},
                             {"empirical_prefix_frequency", freq},
                             {"product_lower_bound", rational_json(running)},
                             {"product_lower_bound_approx", running.get_d()}});
    }
    auto freq = [&](std::uint64_t c) { return o.trials == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(o.trials); };
    const Rational lower = prob_En_lower(o.n, o.b, o.l, o.p, o.q);
    Json result{{"trials", o.trials},
                {"bullet1_frequency", freq(bullet1)},
                {"bullet2_strong_frequency", freq(bullet2)},
                {"both_frequency", freq(both)},
                {"per_i", per_i},
                {"prob_En_lower", rational_json(lower)},
                {"prob_En_lower_approx", lower.get_d()},
                {"notes",
                 Json::array({"bullet1 is exact; bullet2_strong is stronger than the degree-d condition, so "
                              "both_frequency estimates a lower bound for Prob(E_n)"})}};
    Json cfg{{"n", o.n}, {"b", o.b}, {"l", o.l}, {"p", o.p}, {"q", o.q}, {"trials", o.trials}, {"seed", seed}};
    write_json(o, envelope("en-experiment", cfg, o, result, t, true));
    return 0;
}

// ---- config files ----------------------------------------------------------

/// Fills options not given on the command line from a JSON object whose keys
/// mirror the flag names. Layout keys (points, planes) are left to the command.
void apply_config(CLI::App& sub, const Json& j) {
    detail::require(j.is_object(), "config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "points" || key == "planes") continue;
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        detail::require(opt != nullptr, "unknown config key \"" + key + "\"");
        if (opt->count() != 0) continue;
        auto as_text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        if (value.is_array()) {
            for (const auto& v : value) opt->add_result(as_text(v));
        } else {
            opt->add_result(as_text(value));
        }
        opt->run_callback();
    }
}

Json load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    detail::require(in.good(), "cannot open config file " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("config file " + path + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singcensus: singular loci of hypersurfaces over finite fields"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::map<std::string, Options> opts;
    std::map<std::string, CLI::App*> subs;
    auto make = [&](const std::string& name, const std::string& help) {
        Options& o = opts[name];
        CLI::App* s = app.add_subcommand(name, help);
        subs[name] = s;
        s->add_option("--config", o.config, "JSON file whose keys mirror flag names");
        s->add_option("--out", o.out, "output file (default stdout)");
        s->add_option("--format", o.format, "output format");
        s->add_flag("--deterministic", o.deterministic, "zero wall-clock and timing fields");
        return std::pair<Options&, CLI::App*>{o, s};
    };

    {
        auto [o, s] = make("bounds", "closed-form quantities for (n, b, l, p, q)");
        s->add_option("--n", o.n)->capture_default_str();
        s->add_option("--b", o.b)->capture_default_str();
        s->add_option("--l", o.l)->capture_default_str();
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--q", o.q)->capture_default_str();
        s->add_option("--m", o.m, "also evaluate A_b(l, m) and the hypothesis at m");
    }
    {
        auto [o, s] = make("l0", "smallest l from which the hypothesis holds (large-degree range)");
        s->add_option("--n", o.n)->capture_default_str();
        s->add_option("--b", o.b)->capture_default_str();
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--window", o.window, "consecutive successes required (default 50)")->capture_default_str();
        s->add_option("--s1-l0", o.s1_l0, "user-supplied l0 for the other range; combined by max");
    }
    {
        auto [o, s] = make("singdim", "dimension and degree of the singular locus of V(F)");
        s->add_option("poly", o.poly, "homogeneous polynomial, e.g. x0^2*x1");
        s->add_option("--f", o.f, "polynomial (alternative to the positional argument)");
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--nvars", o.nvars, "number of variables (default: max index + 1)");
    }
    {
        auto [o, s] = make("census", "singular-locus census of degree-l hypersurfaces");
        o.format = "csv";
        s->add_option("--n", o.n)->capture_default_str();
        s->add_option("--b", o.b)->capture_default_str();
        s->add_option("--l", o.l)->capture_default_str();
        s->add_option("--q", o.q)->capture_default_str();
        s->add_option("--mode", o.mode, "sample or exhaustive")->capture_default_str();
        s->add_option("--trials", o.trials)->capture_default_str();
        s->add_option("--seed", o.seed, "random seed (generated and echoed when absent)");
        s->add_option("--cap", o.cap, "enumeration cap (default 2^25 or SINGCENSUS_CAP)");
        s->add_option("--threads", o.threads)->capture_default_str();
        s->add_flag("--squarefree", o.squarefree, "compare sing_dim >= n-1 with the G^2 H image (b = n-1)");
    }
    {
        auto [o, s] = make("speccodim", "codimension of forms vanishing on a union of b-planes");
        s->add_option("--n", o.n)->capture_default_str();
        s->add_option("--b", o.b)->capture_default_str();
        s->add_option("--l", o.l)->capture_default_str();
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--random", o.random_d, "draw this many random normal-form planes");
        s->add_flag("--include-base", o.include_base, "with --random, always include V(x_{b+1},...,x_n)");
        s->add_option("--seed", o.seed);
        s->add_option("--route", o.route, "automatic, substitution or groebner")->capture_default_str();
    }
    {
        auto [o, s] = make("dhcount", "exhaustive counting dichotomy for a subvariety Z");
        o.trials = 1;
        s->add_option("--n", o.n)->capture_default_str();
        s->add_option("--l", o.l)->capture_default_str();
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--q", o.q)->capture_default_str();
        s->add_option("--z", o.z, "homogeneous generators of Z in x0..xn")->delimiter(',');
        s->add_option("--f0", o.f0, "F0 in x0..x_{n-1}, degree <= l-1 (default 0)");
        s->add_flag("--random", o.random_f0, "draw --trials random F0");
        s->add_option("--trials", o.trials)->capture_default_str();
        s->add_option("--seed", o.seed);
        s->add_option("--cap", o.cap);
    }
    {
        auto [o, s] = make("witness", "Jacobian rank witness for a hypersurface singular along a cone");
        s->add_option("--n", o.n)->capture_default_str();
        s->add_option("--b", o.b)->capture_default_str();
        s->add_option("--l", o.l)->capture_default_str();
        s->add_option("--d", o.d)->capture_default_str();
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--f", o.f, "f in x0..x_{b+1}, homogeneous of degree d");
        s->add_option("--point", o.point, "comma-separated coordinates of P");
    }
    {
        auto [o, s] = make("en-experiment", "sampled frequency of the good-event proxies");
        o.trials = 200;
        s->add_option("--n", o.n)->capture_default_str();
        s->add_option("--b", o.b)->capture_default_str();
        s->add_option("--l", o.l)->capture_default_str();
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--q", o.q)->capture_default_str();
        s->add_option("--trials", o.trials)->capture_default_str();
        s->add_option("--seed", o.seed);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto& [name, sub] : subs) {
            if (!sub->parsed()) continue;
            Options& o = opts[name];
            Json file = Json::object();
            if (!o.config.empty()) {
                file = load_config(o.config);
                apply_config(*sub, file);
            }
            if (name == "bounds") return cmd_bounds(o);
            if (name == "l0") return cmd_l0(o);
            if (name == "singdim") return cmd_singdim(o);
            if (name == "census") return cmd_census(o);
            if (name == "speccodim") return cmd_speccodim(o, file);
            if (name == "dhcount") return cmd_dhcount(o);
            if (name == "witness") return cmd_witness(o);
            if (name == "en-experiment") return cmd_en_experiment(o);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
