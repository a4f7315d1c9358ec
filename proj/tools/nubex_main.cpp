#include "nubex/algorithms.hpp"
#include "nubex/analysis.hpp"
#include "nubex/base_pair.hpp"
#include "nubex/projection.hpp"
#include "nubex/rational.hpp"
#include "nubex/sequences.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using nlohmann::json;
using namespace nubex;

namespace {

constexpr std::size_t kListingDepthCap = 16;
constexpr std::size_t kCountingDepthCap = 40;

std::string fdouble(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

using Rows = std::vector<std::pair<std::string, std::string>>;

void print_rows(const Rows& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows) std::cout << csv_escape(k) << ',' << csv_escape(v) << '\n';
    } else {
        for (const auto& [k, v] : rows) std::cout << k << ": " << v << '\n';
    }
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

json interval_to_json(const Interval& iv) {
    if (iv.is_empty()) return json{{"empty", true}};
    return json{{"lo", iv.lo().str()},
                {"hi", iv.hi().str()},
                {"lo_closed", iv.lo_closed()},
                {"hi_closed", iv.hi_closed()}};
}

json word_to_json(const DigitWord& w) {
    json a = json::array();
    for (int d : w) a.push_back(d);
    return a;
}

json sequence_to_json(const EventuallyPeriodic& s) {
    return json{{"preperiod", word_to_json(s.preperiod())}, {"period", word_to_json(s.period())}};
}

EventuallyPeriodic parse_sequence_arg(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed sequence JSON: ") + e.what());
        }
        if (!j.contains("preperiod") || !j.contains("period"))
            throw std::invalid_argument("sequence JSON needs \"preperiod\" and \"period\" arrays");
        auto to_word = [](const json& arr) {
            if (!arr.is_array()) throw std::invalid_argument("sequence JSON fields must be arrays");
            std::vector<int> d;
            for (const auto& e : arr) {
                if (!e.is_number_integer()) throw std::invalid_argument("sequence digits must be integers");
                d.push_back(e.get<int>());
            }
            return DigitWord(d);
        };
        return EventuallyPeriodic(to_word(j["preperiod"]), to_word(j["period"]));
    }
    return EventuallyPeriodic::parse(text);
}

struct ExpandOpts {
    std::string x, algorithm = "greedy", alpha;
    std::size_t depth = 10;
};

void cmd_expand(const BasePair& b, const ExpandOpts& o, const std::string& format) {
    const Rational x = Rational::parse(o.x);
    AlgorithmKind kind = AlgorithmKind::greedy();
    if (o.algorithm == "greedy") {
        if (!o.alpha.empty()) throw std::invalid_argument("--alpha only applies to --algorithm intermediate");
    } else if (o.algorithm == "lazy") {
        if (!o.alpha.empty()) throw std::invalid_argument("--alpha only applies to --algorithm intermediate");
        kind = AlgorithmKind::lazy();
    } else if (o.algorithm == "intermediate") {
        if (o.alpha.empty()) throw std::invalid_argument("--algorithm intermediate requires --alpha");
        kind = AlgorithmKind::intermediate(Rational::parse(o.alpha));
    } else {
        throw std::invalid_argument("unknown algorithm '" + o.algorithm + "'");
    }

    const DigitWord w = digits(b, kind, x, o.depth);
    const std::vector<Rational> orb = orbit(b, kind, x, o.depth);
    const Interval cyl = cylinder_interval(b, w);
    const Rational residual = x - project_prefix_with_remainder(b, w, orb.back());

    if (format == "json") {
        json orbj = json::array();
        for (const auto& r : orb) orbj.push_back(r.str());
        print_json(json{{"algorithm", kind.name()},
                        {"x", x.str()},
                        {"digits", word_to_json(w)},
                        {"orbit", orbj},
                        {"cylinder", interval_to_json(cyl)},
                        {"residual", residual.str()}});
        return;
    }
    if (format == "csv") {
        std::cout << "index,digit,remainder\n";
        for (std::size_t i = 0; i < w.size(); ++i)
            std::cout << i << ',' << w[i] << ',' << csv_escape(orb[i + 1].str()) << '\n';
        return;
    }
    std::string orbtext;
    for (const auto& r : orb) {
        if (!orbtext.empty()) orbtext += ' ';
        orbtext += r.str();
    }
    print_rows({{"algorithm", kind.name()},
                {"x", x.str()},
                {"digits", w.str()},
                {"orbit", orbtext},
                {"cylinder", cyl.str()},
                {"residual", residual.str()}},
               format);
}

json witness_to_json(const BranchingWitness& w) {
    json j{{"value", w.value.str()},
           {"branch_depth", w.branch_depth},
           {"descent", w.descent.str()},
           {"child_low", w.child_low.str()},
           {"child_high", w.child_high.str()}};
    if (w.low) {
        j["low"] = witness_to_json(*w.low);
        j["high"] = witness_to_json(*w.high);
    }
    return j;
}

void witness_text(const BranchingWitness& w, std::size_t indent, std::string& out) {
    out.append(indent, ' ');
    out += "value=" + w.value.str() + " branch_depth=" + std::to_string(w.branch_depth) +
           " descent=" + (w.descent.empty() ? "-" : w.descent.str()) + " children=" +
           w.child_low.str() + "|" + w.child_high.str() + "\n";
    if (w.low) {
        witness_text(*w.low, indent + 2, out);
        witness_text(*w.high, indent + 2, out);
    }
}

struct EnumerateOpts {
    std::string x;
    std::size_t depth = 8;
    unsigned threads = 1;
    std::size_t splits = 0;
    bool count_only = false;
};

void cmd_enumerate(const BasePair& b, const EnumerateOpts& o, const std::string& format) {
    const Rational x = Rational::parse(o.x);

    if (o.count_only) {
        if (o.depth > kCountingDepthCap)
            throw std::domain_error("depth " + std::to_string(o.depth) + " exceeds the counting cap " +
                                    std::to_string(kCountingDepthCap));
        const std::uint64_t n = count_expansions(b, x, o.depth);
        if (format == "json") {
            print_json(json{{"count", n}});
        } else {
            print_rows({{"count", std::to_string(n)}}, format);
        }
        return;
    }

    if (o.depth > kListingDepthCap)
        throw std::domain_error("depth " + std::to_string(o.depth) + " exceeds the listing cap " +
                                std::to_string(kListingDepthCap) + " (use --count-only for counts)");

    const auto nodes = enumerate_prefixes(b, x, o.depth, o.threads);

    std::unique_ptr<BranchingWitness> wit;
    if (o.splits > 0) {
        if (o.splits > 20) throw std::invalid_argument("--splits capped at 20");
        wit = std::make_unique<BranchingWitness>(branching_witness(b, x, o.splits));
    }

    if (format == "json") {
        json prefixes = json::array();
        for (const auto& node : nodes)
            prefixes.push_back(json{{"digits", word_to_json(node.prefix)}, {"pullback", node.pullback.str()}});
        json j{{"count", nodes.size()}, {"prefixes", prefixes}};
        if (wit) j["witness"] = witness_to_json(*wit);
        print_json(j);
        return;
    }
    if (format == "csv") {
        std::cout << "digits,pullback\n";
        for (const auto& node : nodes)
            std::cout << node.prefix.str() << ',' << csv_escape(node.pullback.str()) << '\n';
        return;
    }
    std::cout << "count: " << nodes.size() << '\n';
    for (const auto& node : nodes) std::cout << node.prefix.str() << " pullback=" << node.pullback.str() << '\n';
    if (wit) {
        std::cout << "witness leaves=" << witness_leaf_count(*wit)
                  << " max_prefix_depth=" << witness_max_prefix_depth(*wit) << '\n';
        std::string tree;
        witness_text(*wit, 0, tree);
        std::cout << tree;
    }
}

void cmd_unique(const BasePair& b, const std::string& sequence_text, const std::string& format) {
    const EventuallyPeriodic s = parse_sequence_arg(sequence_text);
    const UniquenessCertificate cert = unique_eventually_periodic(b, s);

    if (format == "json") {
        json vals = json::array();
        for (const auto& v : cert.shifted_values) vals.push_back(v.str());
        json j{{"sequence", sequence_to_json(cert.sequence)},
               {"canonical", cert.sequence.str()},
               {"overlap", interval_to_json(b.overlap())},
               {"shifted_values", vals},
               {"verdict", cert.verdict}};
        j["witness_shift"] = cert.witness_shift ? json(*cert.witness_shift) : json(nullptr);
        print_json(j);
        return;
    }
    Rows rows{{"sequence", cert.sequence.str()},
              {"overlap", b.overlap().str()},
              {"verdict", cert.verdict ? "unique" : "not-unique"},
              {"witness_shift", cert.witness_shift ? std::to_string(*cert.witness_shift) : "none"}};
    for (std::size_t k = 0; k < cert.shifted_values.size(); ++k) {
        const auto& v = cert.shifted_values[k];
        rows.emplace_back("shift " + std::to_string(k),
                          v.str() + (b.overlap().contains(v) ? " (in overlap)" : " (outside overlap)"));
    }
    print_rows(rows, format);
}

void cmd_regime(const BasePair& b, const std::string& format) {
    const RegimeReport r = regime_report(b);
    const Rational one(1);
    const Rational continuum_lhs = b.beta1() * b.beta1() + b.beta0();
    const Rational countable_lhs = b.beta0() * (one + b.beta1());
    const Rational uncountable_lhs = b.beta0() * (one + Rational(2) * b.beta1() - b.beta0() * b.beta1());

    if (format == "json") {
        print_json(json{{"beta0", b.beta0().str()},
                        {"beta1", b.beta1().str()},
                        {"interval", interval_to_json(b.domain())},
                        {"overlap", interval_to_json(b.overlap())},
                        {"continuum_all", r.continuum_all},
                        {"countable_unique", r.countable_unique},
                        {"uncountable_unique", r.uncountable_unique},
                        {"lhs",
                         json{{"continuum", continuum_lhs.str()},
                              {"countable", countable_lhs.str()},
                              {"uncountable", uncountable_lhs.str()}}}});
        return;
    }
    auto verdict = [](bool v, const Rational& lhs, const char* rel) {
        return std::string(v ? "true" : "false") + " (lhs = " + lhs.str() + ", needs " + rel + " 1)";
    };
    print_rows({{"beta0", b.beta0().str()},
                {"beta1", b.beta1().str()},
                {"interval", b.domain().str()},
                {"overlap", b.overlap().str()},
                {"continuum_all", verdict(r.continuum_all, continuum_lhs, ">")},
                {"countable_unique", verdict(r.countable_unique, countable_lhs, "<")},
                {"uncountable_unique", verdict(r.uncountable_unique, uncountable_lhs, "<")}},
               format);
}

void cmd_lambda(const BasePair& b, std::size_t n, const std::string& format) {
    const Interval closed_form = lambda_interval_closed_form(b, n);
    const Interval recursive = lambda_interval_recursive(b, n);
    const bool equal = closed_form == recursive;

    if (format == "json") {
        print_json(json{{"n", n},
                        {"closed_form", interval_to_json(closed_form)},
                        {"recursive", interval_to_json(recursive)},
                        {"equal", equal}});
        return;
    }
    print_rows({{"n", std::to_string(n)},
                {"closed_form", closed_form.str()},
                {"recursive", recursive.str()},
                {"equal", equal ? "true" : "false"}},
               format);
}

void cmd_dimension(const BasePair& b, std::size_t depth, const std::string& format) {
    const DimensionValue dim = hausdorff_dimension(b);
    const double box = box_count_estimate(b, depth);
    const std::size_t checked = std::min<std::size_t>(depth, 12);

    if (format == "json") {
        json j{{"contraction", dim.contraction.str()},
               {"dimension_approx", dim.approx},
               {"box_depth", depth},
               {"box_estimate", box},
               {"images_disjoint_checked_depth", checked}};
        j["dimension_exact"] = dim.exact ? json(dim.exact->str()) : json(nullptr);
        print_json(j);
        return;
    }
    print_rows({{"contraction", dim.contraction.str()},
                {"dimension_exact", dim.exact ? dim.exact->str() : "none"},
                {"dimension_approx", fdouble(dim.approx)},
                {"box_depth", std::to_string(depth)},
                {"box_estimate", fdouble(box)},
                {"images_disjoint_checked_depth", std::to_string(checked)}},
               format);
}

struct SurveyOpts {
    std::size_t samples = 100;
    std::size_t depth = 20;
    unsigned grid_bits = 16;
    std::uint64_t threshold = 1;
};

void cmd_survey(const BasePair& b, const SurveyOpts& o, std::uint64_t seed, const std::string& format) {
    if (o.samples == 0) throw std::invalid_argument("--samples must be >= 1");
    if (o.grid_bits < 2 || o.grid_bits > 30) throw std::invalid_argument("--grid-bits must be in 2..30");
    if (o.depth > kCountingDepthCap)
        throw std::domain_error("depth " + std::to_string(o.depth) + " exceeds the counting cap " +
                                std::to_string(kCountingDepthCap));

    // Seeded draws from the dyadic grid of I; the seed fully determines the
    // sample set, so identical configurations yield identical output.
    std::mt19937_64 rng(seed);
    const std::uint64_t den = std::uint64_t(1) << o.grid_bits;
    std::vector<std::uint64_t> counts;
    counts.reserve(o.samples);
    for (std::size_t i = 0; i < o.samples; ++i) {
        const std::uint64_t j = 1 + rng() % (den - 1);
        const Rational x = Rational(static_cast<long>(j), static_cast<long>(den)) * b.interval_max();
        counts.push_back(count_expansions(b, x, o.depth));
    }
    std::sort(counts.begin(), counts.end());

    const std::uint64_t mn = counts.front(), mx = counts.back();
    Rational median;
    if (counts.size() % 2 == 1) {
        median = Rational(static_cast<long>(counts[counts.size() / 2]));
    } else {
        median = Rational(static_cast<long>(counts[counts.size() / 2 - 1] + counts[counts.size() / 2]), 2);
    }
    const std::size_t above =
        counts.size() - (std::upper_bound(counts.begin(), counts.end(), o.threshold) - counts.begin());
    const Rational fraction(static_cast<long>(above), static_cast<long>(o.samples));

    if (format == "json") {
        print_json(json{{"samples", o.samples},
                        {"depth", o.depth},
                        {"grid_bits", o.grid_bits},
                        {"seed", seed},
                        {"min", mn},
                        {"median", median.str()},
                        {"max", mx},
                        {"threshold", o.threshold},
                        {"fraction_above", fraction.str()}});
        return;
    }
    print_rows({{"samples", std::to_string(o.samples)},
                {"depth", std::to_string(o.depth)},
                {"grid_bits", std::to_string(o.grid_bits)},
                {"seed", std::to_string(seed)},
                {"min", std::to_string(mn)},
                {"median", median.str()},
                {"max", std::to_string(mx)},
                {"threshold", std::to_string(o.threshold)},
                {"fraction_above", fraction.str()}},
               format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expansions in a pair of non-integer bases"};
    app.name("nubex");

    std::string beta0_text, beta1_text;
    std::string format = "text";
    std::uint64_t seed = 1;
    app.add_option("--beta0", beta0_text, "contraction for digit 0, e.g. 3/4 or 0.75")->required();
    app.add_option("--beta1", beta1_text, "contraction for digit 1")->required();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", seed, "seed for any sampling");
    app.require_subcommand(1);

    ExpandOpts expand_opts;
    auto* c_expand = app.add_subcommand("expand", "digit expansion of a point");
    c_expand->add_option("--x", expand_opts.x, "point to expand")->required();
    c_expand->add_option("--algorithm", expand_opts.algorithm, "greedy | lazy | intermediate")
        ->check(CLI::IsMember({"greedy", "lazy", "intermediate"}));
    c_expand->add_option("--alpha", expand_opts.alpha, "threshold for the intermediate algorithm");
    c_expand->add_option("--depth", expand_opts.depth, "number of digits");

    EnumerateOpts enum_opts;
    auto* c_enum = app.add_subcommand("enumerate", "all expansion prefixes of a point");
    c_enum->add_option("--x", enum_opts.x, "point to enumerate")->required();
    c_enum->add_option("--depth", enum_opts.depth, "prefix depth");
    c_enum->add_option("--threads", enum_opts.threads, "worker threads")->check(CLI::Range(1u, 64u));
    c_enum->add_option("--splits", enum_opts.splits, "emit a branching witness with 2^splits leaves");
    c_enum->add_flag("--count-only", enum_opts.count_only, "only count prefixes (higher depth cap)");

    std::string sequence_text;
    auto* c_unique = app.add_subcommand("unique", "uniqueness of an eventually periodic expansion");
    c_unique->add_option("--sequence", sequence_text, "e.g. \"101(01)\" or JSON {\"preperiod\":[],\"period\":[0,1]}")
        ->required();

    auto* c_regime = app.add_subcommand("regime", "which parameter regimes hold");

    std::size_t lambda_n = 0;
    auto* c_lambda = app.add_subcommand("lambda", "interval of points still branching after n digits");
    c_lambda->add_option("--n", lambda_n, "remaining digit count")->required();

    std::size_t dim_depth = 20;
    auto* c_dim = app.add_subcommand("dimension", "dimension of the unique-expansion set");
    c_dim->add_option("--depth", dim_depth, "box-counting depth");

    SurveyOpts survey_opts;
    auto* c_survey = app.add_subcommand("survey", "expansion counts over seeded sample points");
    c_survey->add_option("--samples", survey_opts.samples, "number of sample points");
    c_survey->add_option("--depth", survey_opts.depth, "counting depth");
    c_survey->add_option("--grid-bits", survey_opts.grid_bits, "sample from the 2^bits dyadic grid");
    c_survey->add_option("--threshold", survey_opts.threshold, "report the fraction with count above this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const BasePair b(Rational::parse(beta0_text), Rational::parse(beta1_text));
        if (c_expand->parsed()) cmd_expand(b, expand_opts, format);
        else if (c_enum->parsed()) cmd_enumerate(b, enum_opts, format);
        else if (c_unique->parsed()) cmd_unique(b, sequence_text, format);
        else if (c_regime->parsed()) cmd_regime(b, format);
        else if (c_lambda->parsed()) cmd_lambda(b, lambda_n, format);
        else if (c_dim->parsed()) cmd_dimension(b, dim_depth, format);
        else if (c_survey->parsed()) cmd_survey(b, survey_opts, seed, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
