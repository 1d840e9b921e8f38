#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "core.hpp"
#include "json_io.hpp"
#include "quadric.hpp"
#include "resolutions.hpp"
#include "schur.hpp"
#include "sequence_spec.hpp"
#include "sequences.hpp"
#include "shapes.hpp"
#include "zelevinsky.hpp"

namespace jtpos::cli {

using nlohmann::json;
namespace jio = jtpos::json;

// Malformed flag values; exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, text, csv };

struct Output {
    json data;
    std::string text;                // empty: derived from data
    std::optional<std::string> csv;  // tabular commands only
    bool csv_by_default = false;
};

inline std::vector<int> parse_ints(const std::string &s, const std::string &flag)
{
    std::vector<int> out;
    std::string t = s;
    for (char &c : t) {
        if (c == '(' || c == ')' || c == '[' || c == ']') {
            c = ' ';
        }
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(' ');
        if (b == std::string::npos) {
            continue;
        }
        const auto e = item.find_last_not_of(' ');
        item = item.substr(b, e - b + 1);
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw UsageError(flag + ": '" + s + "' is not a comma-separated list of integers");
        }
    }
    return out;
}

inline Partition parse_partition(const std::string &s, const std::string &flag)
{
    auto v = parse_ints(s, flag);
    try {
        return Partition(v);
    } catch (const Error &e) {
        throw UsageError(flag + ": " + e.what());
    }
}

inline Composition parse_composition(const std::string &s, const std::string &flag)
{
    auto v = parse_ints(s, flag);
    if (v.empty()) {
        throw UsageError(flag + ": empty list");
    }
    try {
        return Composition(v);
    } catch (const Error &e) {
        throw UsageError(flag + ": " + e.what());
    }
}

inline GradedSequence parse_seq(const std::string &s, const std::string &flag)
{
    try {
        return parse_sequence(s);
    } catch (const SpecError &e) {
        throw UsageError(flag + ": " + e.what());
    }
}

inline SkewShape make_skew(const Partition &outer, const Partition &inner)
{
    if (!outer.contains(inner)) {
        throw UsageError("--mu " + inner.to_string() + " is not contained in --lambda " + outer.to_string());
    }
    return {outer, inner};
}

inline std::string csv_cell(const json &v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return q + "\"";
    }
    return s;
}

inline std::string generic_text(const json &j)
{
    if (!j.is_object()) {
        return j.dump();
    }
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) {
        width = std::max(width, it.key().size());
    }
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << std::left << std::setw(static_cast<int>(width)) << it.key() << "  "
           << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
    return os.str();
}

inline std::string generic_csv(const json &j)
{
    if (!j.is_object()) {
        return csv_cell(j) + "\n";
    }
    std::string s = "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        s += csv_cell(it.key()) + "," + csv_cell(*it) + "\n";
    }
    return s;
}

inline std::string table_text(const BettiTable &t)
{
    std::ostringstream os;
    os << std::right << std::setw(6) << "index" << std::setw(8) << "twist" << std::setw(12) << "rank"
       << "  label\n";
    for (const auto &r : t.rows) {
        os << std::setw(6) << r.index << std::setw(8) << r.twist << std::setw(12) << r.rank.str() << "  "
           << jio::label_text(r) << "\n";
    }
    if (t.tail) {
        os << "tail: rank " << t.tail->rank.str() << " from index " << t.tail->start << ", twist step 1\n";
    }
    if (t.open_ended) {
        os << "(open-ended: further rows omitted)\n";
    }
    return os.str();
}

inline std::string value_text(const SchurClass &c) { return c.to_string(); }

struct Settings {
    std::string format;
    std::size_t max_cost = default_max_class_order;
};

inline MinorOptions minor_opts(const Settings &s, std::size_t r = 0) { return {r, s.max_cost}; }

inline PurityReport purity_or_throw(const BettiTable &t, const GradedSequence &a, std::optional<int> horizon)
{
    long long last = t.rows.empty() ? 0 : t.rows.back().twist;
    const int h = horizon ? *horizon : static_cast<int>(last + 10);
    return validate_purity(t, a, h);
}

inline json purity_json(const BettiTable &t, const GradedSequence &a, std::optional<int> horizon)
{
    try {
        return jio::from_purity(purity_or_throw(t, a, horizon));
    } catch (const Error &e) {
        return {{"error", e.what()}};
    }
}

inline Output table_output(json data, const BettiTable &t)
{
    Output o;
    o.data = std::move(data);
    o.text = table_text(t);
    o.csv = jio::table_csv(t);
    o.csv_by_default = true;
    return o;
}

// Runs one invocation; returns the process exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact Jacobi-Trudi minors, positivity scans and pure resolutions", "jtpos"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Settings settings;
    app.add_option("--format", settings.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--max-cost", settings.max_cost, "Largest class-valued determinant order")
        ->check(CLI::Range(1, 8));

    std::function<Output()> action;
    auto sub = [&](const std::string &name, const std::string &desc) {
        CLI::App *s = app.add_subcommand(name, desc);
        return s;
    };

    // Options shared across subcommands are declared per subcommand; these
    // hold the parsed values.
    std::string seq_s, seq2_s, lambda_s, mu_s, nu_s, rows_s, cols_s, shifts_s, twists_s, ranks_s, method = "jt",
                                                                                          table_path, kind;
    int order = 4, window = 8, trunc = 8, m = 0, n = 0, d = 0, r_opt = 0, s_opt = 0, e_dim = 0, count = 0,
        terms = 8, r_max = 4, s_max = 4, tail_terms = default_tail_terms, tail_start = -1;
    std::optional<int> horizon;
    bool skew = false, dual = false;

    auto seq_opt = [&](CLI::App *s, bool required = true) {
        auto *o = s->add_option("--seq", seq_s, "Sequence spec, e.g. quadric:3 or hadamard:quadric:2,squares");
        if (required) {
            o->required();
        }
    };

    // pf-check
    {
        auto *s = sub("pf-check", "Scan Jacobi-Trudi minors for a negative one");
        seq_opt(s);
        s->add_option("--order", order, "Largest number of rows")->check(CLI::PositiveNumber);
        s->add_option("--window", window, "Largest first row")->check(CLI::PositiveNumber);
        s->add_flag("--skew", skew, "Also scan skew shapes");
        s->callback([&] {
            action = [&] {
                const auto a = parse_seq(seq_s, "--seq");
                const PFReport rep = pf_check(a, order, window, skew, settings.max_cost);
                Output o;
                o.data = jio::from_report(rep);
                o.data["sequence"] = a.name();
                o.text = rep.verdict();
                if (rep.witness) {
                    o.text += " lambda=" + rep.witness->lambda.to_string() + " mu=" + rep.witness->mu.to_string() +
                              " value=" + value_text(rep.witness->value);
                }
                o.text += "\n";
                return o;
            };
        });
    }

    // jt-minor
    {
        auto *s = sub("jt-minor", "Jacobi-Trudi minor s^A_{lambda/mu}");
        seq_opt(s);
        s->add_option("--lambda", lambda_s, "Outer partition, e.g. 2,2,2");
        s->add_option("--mu", mu_s, "Inner partition");
        s->add_option("--r", r_opt, "Padding length")->check(CLI::NonNegativeNumber);
        s->add_option("--rows", rows_s, "Row index set J (with --cols)");
        s->add_option("--cols", cols_s, "Column index set I (with --rows)");
        s->add_flag("--dual", dual, "Use the determinant in e-classes");
        s->callback([&] {
            action = [&] {
                const auto a = parse_seq(seq_s, "--seq");
                Output o;
                SchurClass v;
                if (!rows_s.empty() || !cols_s.empty()) {
                    if (rows_s.empty() || cols_s.empty() || !lambda_s.empty()) {
                        throw UsageError("--rows and --cols go together and exclude --lambda");
                    }
                    const auto j = parse_ints(rows_s, "--rows");
                    const auto i = parse_ints(cols_s, "--cols");
                    const auto [lam, mu] = index_to_shapes(j, i);
                    v = minor_from_indices(a, j, i, settings.max_cost);
                    o.data = {{"sequence", a.name()}, {"rows", j}, {"cols", i}, {"lambda", lam.vec()},
                              {"mu", mu.vec()}};
                } else {
                    if (lambda_s.empty()) {
                        throw UsageError("--lambda is required");
                    }
                    const SkewShape sh =
                        make_skew(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
                    v = dual ? jt_minor_dual(a, sh, static_cast<std::size_t>(r_opt), settings.max_cost)
                             : jt_minor(a, sh, minor_opts(settings, static_cast<std::size_t>(r_opt)));
                    o.data = {{"sequence", a.name()}, {"lambda", sh.outer().vec()}, {"mu", sh.inner().vec()}};
                    if (r_opt) {
                        o.data["r"] = r_opt;
                    }
                    if (dual) {
                        o.data["dual"] = true;
                    }
                }
                o.data["value"] = jio::from_value(v);
                o.text = value_text(v) + "\n";
                return o;
            };
        });
    }

    // lr
    {
        auto *s = sub("lr", "Littlewood-Richardson coefficient, or the product s_mu s_nu");
        s->add_option("--lambda", lambda_s, "Outer partition (omit for the full product)");
        s->add_option("--mu", mu_s, "First factor")->required();
        s->add_option("--nu", nu_s, "Second factor")->required();
        s->callback([&] {
            action = [&] {
                const Partition mu = parse_partition(mu_s, "--mu");
                const Partition nu = parse_partition(nu_s, "--nu");
                Output o;
                if (!lambda_s.empty()) {
                    const Partition lam = parse_partition(lambda_s, "--lambda");
                    const BigInt c = lr_coefficient(lam, mu, nu);
                    o.data = {{"lambda", lam.vec()}, {"mu", mu.vec()}, {"nu", nu.vec()}, {"coefficient", jio::from_big(c)}};
                    o.text = c.str() + "\n";
                } else {
                    const SchurClass p = multiply(SchurClass::schur(mu), SchurClass::schur(nu));
                    o.data = {{"mu", mu.vec()}, {"nu", nu.vec()}, {"product", jio::from_class(p)}};
                    o.text = p.to_string() + "\n";
                }
                return o;
            };
        });
    }

    // skew-expand
    {
        auto *s = sub("skew-expand", "Schur expansion of a skew Schur function");
        s->add_option("--lambda", lambda_s, "Outer partition")->required();
        s->add_option("--mu", mu_s, "Inner partition");
        s->callback([&] {
            action = [&] {
                const SkewShape sh = make_skew(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
                const SchurClass c = skew_to_straight(sh);
                Output o;
                o.data = {{"shape", jio::from_skew(sh)}, {"expansion", jio::from_class(c)}};
                o.text = c.to_string() + "\n";
                return o;
            };
        });
    }

    // dim
    {
        auto *s = sub("dim", "Dimensions: gl (hook content), super (r|s) or quadric");
        s->add_option("kind", kind, "gl, super or quadric")->required()->check(CLI::IsMember({"gl", "super", "quadric"}));
        s->add_option("--lambda", lambda_s, "Outer partition")->required();
        s->add_option("--mu", mu_s, "Inner partition");
        s->add_option("--m", m, "dim V (gl, quadric)");
        s->add_option("--r", r_opt, "Even dimension (super)")->check(CLI::NonNegativeNumber);
        s->add_option("--s", s_opt, "Odd dimension (super)")->check(CLI::NonNegativeNumber);
        s->add_option("--method", method, "Quadric method")
            ->check(CLI::IsMember({"jt", "vertical_strip", "vertical-strip", "super", "all"}));
        s->callback([&] {
            action = [&] {
                const SkewShape sh = make_skew(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
                Output o;
                o.data = {{"kind", kind}, {"lambda", sh.outer().vec()}, {"mu", sh.inner().vec()}};
                if (kind == "super") {
                    const BigInt v = dim_super(sh, r_opt, s_opt);
                    o.data["r"] = r_opt;
                    o.data["s"] = s_opt;
                    o.data["value"] = jio::from_big(v);
                    o.text = v.str() + "\n";
                    return o;
                }
                if (m < 1) {
                    throw UsageError("--m must be at least 1");
                }
                o.data["m"] = m;
                if (kind == "gl") {
                    const BigInt v = sh.inner().length() == 0 ? dim_gl(sh.outer(), m) : dim_gl_skew(sh, m);
                    o.data["value"] = jio::from_big(v);
                    o.text = v.str() + "\n";
                    return o;
                }
                const QuadricContext ctx(m);
                if (method == "all") {
                    const BigInt a = quadric_schur_dim(ctx, sh, QuadricMethod::jt);
                    const BigInt b = quadric_schur_dim(ctx, sh, QuadricMethod::vertical_strip);
                    const BigInt c = quadric_schur_dim(ctx, sh, QuadricMethod::super);
                    o.data["values"] = {{"jt", jio::from_big(a)},
                                        {"vertical_strip", jio::from_big(b)},
                                        {"super", jio::from_big(c)}};
                    o.data["agree"] = a == b && b == c;
                    o.data["value"] = jio::from_big(a);
                    o.text = a.str() + " " + b.str() + " " + c.str() + "\n";
                } else {
                    const BigInt v = quadric_schur_dim(ctx, sh, parse_quadric_method(method));
                    o.data["method"] = method;
                    o.data["value"] = jio::from_big(v);
                    o.text = v.str() + "\n";
                }
                return o;
            };
        });
    }

    auto values_json = [](const GradedSequence &a, int count) {
        json arr = json::array();
        for (int i = 0; i < count; ++i) {
            arr.push_back(jio::from_value(a.term(i)));
        }
        return arr;
    };

    // veronese
    {
        auto *s = sub("veronese", "Veronese subsequence and its minor translation");
        seq_opt(s);
        s->add_option("--d", d, "Veronese degree")->required()->check(CLI::PositiveNumber);
        s->add_option("--terms", terms, "Number of terms to list")->check(CLI::NonNegativeNumber);
        s->add_option("--lambda", lambda_s, "Check the translation at this shape");
        s->add_option("--mu", mu_s, "Inner partition for the check");
        s->add_option("--r", r_opt, "Padding length for the check")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const auto a = parse_seq(seq_s, "--seq");
                const auto v = veronese(a, d);
                Output o;
                o.data = {{"sequence", v.name()}, {"terms", values_json(v, terms)}};
                if (!lambda_s.empty()) {
                    const SkewShape sh =
                        make_skew(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
                    const std::size_t r =
                        r_opt ? static_cast<std::size_t>(r_opt) : std::max(sh.outer().length(), sh.inner().length());
                    const SkewShape big = veronese_shape(sh, d, r);
                    const SchurClass left = jt_minor(v, sh, minor_opts(settings, r));
                    const SchurClass right = jt_minor(a, big, minor_opts(settings, r));
                    o.data["identity"] = {{"lambda", sh.outer().vec()}, {"mu", sh.inner().vec()},
                                          {"r", r},
                                          {"translated", jio::from_skew(big)},
                                          {"left", jio::from_value(left)},
                                          {"right", jio::from_value(right)},
                                          {"holds", left == right}};
                }
                return o;
            };
        });
    }

    // tensor
    {
        auto *s = sub("tensor", "Tensor product A (x) B and the Cauchy-Binet identity");
        seq_opt(s);
        s->add_option("--seq2", seq2_s, "Second sequence")->required();
        s->add_option("--terms", terms, "Number of terms to list")->check(CLI::NonNegativeNumber);
        s->add_option("--lambda", lambda_s, "Check the identity at this shape");
        s->add_option("--mu", mu_s, "Inner partition for the check");
        s->callback([&] {
            action = [&] {
                const auto a = parse_seq(seq_s, "--seq");
                const auto b = parse_seq(seq2_s, "--seq2");
                const auto t = tensor_product(a, b);
                Output o;
                o.data = {{"sequence", t.name()}, {"terms", values_json(t, terms)}};
                if (!lambda_s.empty()) {
                    const SkewShape sh =
                        make_skew(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
                    o.data["identity"] = {{"shape", jio::from_skew(sh)},
                                          {"value", jio::from_value(jt_minor(t, sh, minor_opts(settings)))},
                                          {"holds", tensor_identity_check(a, b, sh)}};
                }
                return o;
            };
        });
    }

    // segre
    {
        auto *s = sub("segre", "Segre (Hadamard) product A_d (x) B_d");
        seq_opt(s);
        s->add_option("--seq2", seq2_s, "Second sequence")->required();
        s->add_option("--terms", terms, "Number of terms to list")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const auto c = segre(parse_seq(seq_s, "--seq"), parse_seq(seq2_s, "--seq2"));
                Output o;
                o.data = {{"sequence", c.name()}, {"factor_count", c.factor_count()}, {"terms", values_json(c, terms)}};
                return o;
            };
        });
    }

    // e-class
    {
        auto *s = sub("e-class", "Alternating composition sums psi(e_d)");
        seq_opt(s);
        auto *od = s->add_option("--d", d, "Single degree")->check(CLI::NonNegativeNumber);
        s->add_option("--terms", terms, "Degrees 0..terms-1 when --d is absent")->check(CLI::NonNegativeNumber);
        s->callback([&, od] {
            action = [&, od] {
                const auto a = parse_seq(seq_s, "--seq");
                Output o;
                o.data = {{"sequence", a.name()}};
                if (od->count()) {
                    const SchurClass v = e_class(a, d);
                    o.data["d"] = d;
                    o.data["value"] = jio::from_value(v);
                    o.text = value_text(v) + "\n";
                } else {
                    json arr = json::array();
                    for (int i = 0; i < terms; ++i) {
                        arr.push_back(jio::from_value(e_class(a, i)));
                    }
                    o.data["values"] = arr;
                }
                return o;
            };
        });
    }

    // schur-profile
    {
        auto *s = sub("schur-profile", "Schur dimension r|s of a sequence");
        seq_opt(s);
        s->add_option("--r-max", r_max, "Largest r considered")->check(CLI::NonNegativeNumber);
        s->add_option("--s-max", s_max, "Largest s considered")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const auto a = parse_seq(seq_s, "--seq");
                const auto p = schur_dimension_profile(a, r_max, s_max);
                Output o;
                o.data = {{"sequence", a.name()}, {"r_max", r_max}, {"s_max", s_max}, {"profile", nullptr}};
                if (p) {
                    o.data["profile"] = {{"r", p->first}, {"s", p->second}};
                }
                o.text = (p ? std::to_string(p->first) + "|" + std::to_string(p->second) : std::string("none")) + "\n";
                return o;
            };
        });
    }

    // ortho-decomp
    {
        auto *s = sub("ortho-decomp", "Stable-range O(V) decomposition of a quadric Schur functor");
        s->add_option("--m", m, "dim V")->required()->check(CLI::PositiveNumber);
        s->add_option("--lambda", lambda_s, "Partition")->required();
        s->callback([&] {
            action = [&] {
                const Partition lam = parse_partition(lambda_s, "--lambda");
                const QuadricContext ctx(m);
                const auto dec = orthogonal_stable_decomposition(ctx, lam);
                const BigInt total = decomposition_dimension(dec, m);
                const BigInt q = quadric_schur_dim(ctx, lam);
                Output o;
                o.data = {{"m", m},
                          {"lambda", lam.vec()},
                          {"decomposition", jio::from_decomposition(dec)},
                          {"dimension", jio::from_big(total)},
                          {"quadric_dim", jio::from_big(q)},
                          {"consistent", total == q}};
                std::string t;
                for (const auto &term : dec) {
                    t += term.mu.to_string() + " x" + term.mult.str() + "\n";
                }
                o.text = t;
                std::string c = "mu,mult\n";
                for (const auto &term : dec) {
                    c += "\"" + term.mu.to_string() + "\"," + term.mult.str() + "\n";
                }
                o.csv = c;
                return o;
            };
        });
    }

    // hs-check
    {
        auto *s = sub("hs-check", "Multigraded Hilbert series factorization for the quadric");
        s->add_option("--m", m, "dim V")->required()->check(CLI::PositiveNumber);
        s->add_option("--n", n, "dim E")->required()->check(CLI::PositiveNumber);
        s->add_option("--trunc", trunc, "Total degree bound")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const auto rep = multigraded_hs_check(m, static_cast<std::size_t>(n), trunc);
                Output o;
                o.data = {{"m", m},
                          {"n", n},
                          {"trunc", trunc},
                          {"factorization", rep.factorization},
                          {"weight_spaces", rep.weight_spaces},
                          {"coefficients_checked", rep.coefficients_checked},
                          {"ok", rep.ok()}};
                return o;
            };
        });
    }

    // efw
    {
        auto *s = sub("efw", "EFW partitions and Betti table over a polynomial ring");
        s->add_option("--shifts", shifts_s, "Degree shifts e, e.g. 2,1,2,3")->required();
        s->add_option("--E,--e-dim", e_dim, "dim E (number of variables)")->required()->check(CLI::PositiveNumber);
        s->add_option("--count", count, "Number of partitions (default E+1)")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const Composition e = parse_composition(shifts_s, "--shifts");
                const int c = count > 0 ? count : e_dim + 1;
                json parts = json::array();
                for (const auto &p : efw_partitions(e, c)) {
                    parts.push_back(p.vec());
                }
                const BettiTable t = efw_betti(e, e_dim, c);
                json data = {{"shifts", e.vec()}, {"E", e_dim}, {"partitions", parts}, {"table", jio::from_table(t)}};
                data["purity"] = purity_json(t, make_polynomial(e_dim), horizon);
                return table_output(data, t);
            };
        });
    }

    // resolve
    {
        auto *s = sub("resolve", "Pure resolutions: quadric, rnc (rational normal curve) or poly (EFW)");
        s->add_option("kind", kind, "quadric, rnc or poly")->required()->check(CLI::IsMember({"quadric", "rnc", "poly"}));
        s->add_option("--shifts", shifts_s, "Degree shifts e")->required();
        s->add_option("--m", m, "dim V of the quadric")->check(CLI::PositiveNumber);
        s->add_option("--d", d, "Veronese degree (rnc)")->check(CLI::PositiveNumber);
        s->add_option("--E,--e-dim", e_dim, "Number of variables (poly)")->check(CLI::PositiveNumber);
        s->add_option("--tail-terms", tail_terms, "Explicit tail rows")->check(CLI::NonNegativeNumber);
        s->add_option("--horizon", horizon, "Series horizon for the purity check")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const Composition e = parse_composition(shifts_s, "--shifts");
                BettiTable t;
                std::optional<GradedSequence> a;
                json data = {{"kind", kind}, {"shifts", e.vec()}};
                if (kind == "quadric") {
                    if (m < 1) {
                        throw UsageError("--m is required for resolve quadric");
                    }
                    t = quadric_pure_resolution(m, e, tail_terms);
                    a = make_quadric(m);
                    data["m"] = m;
                } else if (kind == "rnc") {
                    if (d < 1) {
                        throw UsageError("--d is required for resolve rnc");
                    }
                    t = rnc_pure_resolution(d, e.vec(), tail_terms);
                    a = veronese(make_polynomial(2), d);
                    data["d"] = d;
                } else {
                    if (e_dim < 1) {
                        throw UsageError("--E is required for resolve poly");
                    }
                    t = efw_betti(e, e_dim);
                    a = make_polynomial(e_dim);
                    data["E"] = e_dim;
                }
                data["table"] = jio::from_table(t);
                data["purity"] = purity_json(t, *a, horizon);
                return table_output(data, t);
            };
        });
    }

    // hk-solve
    {
        auto *s = sub("hk-solve", "Betti numbers from the Herzog-Kuhl type linear system");
        s->add_option("--twists", twists_s, "Twists d_0 = 0 < d_1 < ...")->required();
        s->add_option("--n", n, "Number of twists (default: all)")->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto tw = parse_ints(twists_s, "--twists");
                std::vector<long long> dd(tw.begin(), tw.end());
                const std::size_t nn = n > 0 ? static_cast<std::size_t>(n) : dd.size();
                const HKSolution sol = hk_solve(dd, nn);
                auto arr = [](const std::vector<BigInt> &v) {
                    json a = json::array();
                    for (const auto &x : v) {
                        a.push_back(jio::from_big(x));
                    }
                    return a;
                };
                Output o;
                o.data = {{"twists", dd},
                          {"infinite_branch", arr(sol.infinite_branch)},
                          {"finite_branch", arr(sol.finite_branch)}};
                return o;
            };
        });
    }

    // validate
    {
        auto *s = sub("validate", "Purity check: is the resolved module of finite length?");
        seq_opt(s);
        s->add_option("--table", table_path, "JSON file written by resolve/efw (or a bare table)");
        s->add_option("--twists", twists_s, "Twists, with --ranks");
        s->add_option("--ranks", ranks_s, "Ranks, with --twists");
        s->add_option("--tail-start", tail_start, "Index where a constant tail starts");
        s->add_option("--horizon", horizon, "Series horizon")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const auto a = parse_seq(seq_s, "--seq");
                BettiTable t;
                if (!table_path.empty()) {
                    std::ifstream in(table_path);
                    if (!in) {
                        throw UsageError("--table: cannot read " + table_path);
                    }
                    nlohmann::json j;
                    try {
                        j = nlohmann::json::parse(in);
                    } catch (const nlohmann::json::exception &ex) {
                        throw UsageError("--table: " + std::string(ex.what()));
                    }
                    t = jio::to_table(j.contains("table") ? j.at("table") : j);
                } else {
                    const auto tw = parse_ints(twists_s, "--twists");
                    const auto rk = parse_ints(ranks_s, "--ranks");
                    if (tw.empty() || tw.size() != rk.size()) {
                        throw UsageError("--twists and --ranks must be nonempty lists of equal length");
                    }
                    for (std::size_t i = 0; i < tw.size(); ++i) {
                        t.rows.push_back({static_cast<int>(i), tw[i], rk[i], std::nullopt, std::nullopt});
                    }
                    if (tail_start >= 0) {
                        if (static_cast<std::size_t>(tail_start) >= rk.size()) {
                            throw UsageError("--tail-start is past the last row");
                        }
                        t.tail = BettiTail{tail_start, rk[static_cast<std::size_t>(tail_start)], 1};
                    }
                }
                const PurityReport rep = purity_or_throw(t, a, horizon);
                Output o;
                o.data = jio::from_purity(rep);
                o.data["sequence"] = a.name();
                std::string hs;
                for (std::size_t i = 0; i < rep.coefficients.size(); ++i) {
                    hs += (i ? " " : "") + rep.coefficients[i].str();
                }
                o.text = std::string(rep.polynomial ? "polynomial" : "not polynomial") +
                         (rep.nonnegative ? ", nonnegative" : ", has negative coefficients") + "; HS: " + hs + "\n";
                return o;
            };
        });
    }

    // zelevinsky
    {
        auto *s = sub("zelevinsky", "Terms of the Jacobi-Trudi complex and its Euler characteristic");
        seq_opt(s);
        s->add_option("--lambda", lambda_s, "Outer partition")->required();
        s->add_option("--mu", mu_s, "Inner partition");
        s->add_option("--n", n, "Number of factors (default: partition length)")->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto a = parse_seq(seq_s, "--seq");
                const SkewShape sh = make_skew(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
                std::size_t nn = n > 0 ? static_cast<std::size_t>(n) : std::max<std::size_t>(sh.outer().length(), 1);
                if (!a.is_integer() && nn > settings.max_cost) {
                    throw Error("n = " + std::to_string(nn) + " exceeds --max-cost " + std::to_string(settings.max_cost));
                }
                const ComplexLayout c = jt_complex_layout(a, sh.outer(), sh.inner(), nn);
                const SchurClass chi = euler_characteristic(c);
                Output o;
                o.data = jio::from_layout(c);
                o.data["sequence"] = a.name();
                o.data["euler_characteristic"] = jio::from_value(chi);
                o.data["check"] = chi == c.h0;
                std::ostringstream os;
                for (const auto &[len, ts] : c.degrees) {
                    BigInt dims = 0;
                    os << "F_" << len << ":";
                    for (const auto &t : ts) {
                        os << " [";
                        for (std::size_t k = 0; k < t.sigma.size(); ++k) {
                            os << t.sigma.one_line()[k];
                        }
                        os << "] " << value_text(t.value) << ";";
                    }
                    os << "\n";
                }
                os << "chi = " << value_text(chi) << (chi == c.h0 ? " (matches minor)" : " (MISMATCH)") << "\n";
                o.text = os.str();
                return o;
            };
        });
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    for (CLI::App *s : app.get_subcommands()) {
        if (s->get_subcommands().empty() && s->count_all() > 0) {
            // The selected subcommand's callback has set `action`.
        }
    }
    if (!action) {
        err << "usage error: no subcommand\n";
        return 2;
    }
    try {
        Output o = action();
        Format f = Format::json;
        if (settings.format == "text") {
            f = Format::text;
        } else if (settings.format == "csv" || (settings.format.empty() && o.csv_by_default)) {
            f = Format::csv;
        }
        switch (f) {
        case Format::json:
            out << o.data.dump(2) << "\n";
            break;
        case Format::text:
            out << (o.text.empty() ? generic_text(o.data) : o.text);
            break;
        case Format::csv:
            out << (o.csv ? *o.csv : generic_csv(o.data));
            break;
        }
        return 0;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace jtpos::cli
