#include "cli.hpp"

#include "vspread/errors.hpp"
#include "vspread/gin.hpp"
#include "vspread/koszul.hpp"
#include "vspread/resolution.hpp"
#include "vspread/spread_ops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace vspread::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string read_source(const std::string& source)
{
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{')
        return source;
    std::ifstream in(source, std::ios::binary);
    if (!in)
        throw InputError("cannot read ideal file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string line_and_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<int> read_int_array(const Json& j, const char* key)
{
    if (!j.is_array())
        throw InputError(std::string("\"") + key + "\" must be an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw InputError(std::string("\"") + key + "\" must be an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

SpreadVector make_spread_vector(const std::vector<int>& entries)
{
    if (entries.empty())
        throw InputError("t needs at least one entry");
    if (std::any_of(entries.begin(), entries.end(), [](int v) { return v < 0; }))
        throw InputError("t entries must be non-negative");
    return SpreadVector(entries);
}

Json to_json(const SpreadVector& t)
{
    return Json(t.entries());
}

Json generators_json(const MonomialIdeal& I)
{
    Json g = Json::array();
    for (const auto& u : I.generators())
        g.push_back(to_string(u));
    return g;
}

Json table_json(const BettiTable& table)
{
    Json j;
    j["module"] = table.module() == BettiModule::quotient ? "quotient" : "ideal";
    Json entries = Json::array();
    for (const auto& [key, v] : table.entries())
        entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
    j["entries"] = entries;
    j["totals"] = table.totals();
    const auto pd = table.projective_dimension();
    const auto reg = table.regularity();
    j["projective_dimension"] = pd ? Json(*pd) : Json(nullptr);
    j["regularity"] = reg ? Json(*reg) : Json(nullptr);
    return j;
}

Json chain_json(const KoszulChain& c)
{
    Json terms = Json::array();
    for (const auto& [tau, coeffs] : c.terms())
        for (const auto& [m, q] : coeffs)
            terms.push_back({{"coefficient", to_string(q)}, {"monomial", to_string(m)}, {"wedge", tau}});
    return terms;
}

void emit(std::ostream& out, const Json& j)
{
    out << j.dump(2) << "\n";
}

int oracle_bound(const JobConfig& c, const MonomialIdeal& I, const SpreadVector& t)
{
    return c.max_degree ? *c.max_degree : default_oracle_degree(I, t);
}

int cmd_enumerate(const JobConfig& c, std::ostream& out)
{
    if (!c.t)
        throw InputError("enumerate needs --t");
    const SpreadVector t = make_spread_vector(*c.t);
    if (c.n < 1)
        throw InputError("--n must be positive");
    if (c.degree < 0 || c.degree > t.d())
        throw InputError("--deg must lie in [0, d] = [0, " + std::to_string(t.d()) + "]");
    const auto mons = enumerate_spread_monomials(c.n, c.degree, t);
    if (c.format == OutputFormat::json) {
        Json j;
        j["n"] = c.n;
        j["degree"] = c.degree;
        j["t"] = to_json(t);
        Json list = Json::array();
        for (const auto& u : mons)
            list.push_back(to_string(u));
        j["monomials"] = list;
        j["count"] = mons.size();
        emit(out, j);
    } else {
        for (const auto& u : mons)
            out << to_string(u) << "\n";
        out << "count: " << mons.size() << "\n";
    }
    return 0;
}

int cmd_verify(const JobConfig& c, std::ostream& out, std::ostream& err)
{
    const IdealInput in = parse_ideal_file(c.ideal_source, true, c.lenient ? &err : nullptr);
    IdealClass cls;
    try {
        cls = parse_ideal_class(c.ideal_class);
    } catch (const ParseError& e) {
        throw InputError(e.what());
    }
    // only reachable with --lenient: the ideal is not a t-spread ideal at all
    for (const auto& g : in.ideal.generators()) {
        if (is_t_spread(g, in.t))
            continue;
        const std::string reason = "generator " + to_display_string(g) + " is not t-spread";
        if (c.format == OutputFormat::json) {
            Json j;
            j["class"] = to_string(cls);
            j["holds"] = false;
            j["reason"] = reason;
            emit(out, j);
        } else {
            out << to_string(cls) << ": false\nreason: " << reason << "\n";
        }
        return 1;
    }
    const auto w = find_class_violation(in.ideal, in.t, cls);
    if (c.format == OutputFormat::json) {
        Json j;
        j["class"] = to_string(cls);
        j["holds"] = !w.has_value();
        if (w) {
            Json wj;
            wj["u"] = to_string(w->u);
            if (cls != IdealClass::lex) {
                wj["i"] = w->i;
                wj["j"] = w->j;
            }
            wj["w"] = to_string(w->w);
            wj["description"] = w->describe();
            j["witness"] = wj;
        }
        emit(out, j);
    } else {
        out << to_string(cls) << ": " << (w ? "false" : "true") << "\n";
        if (w)
            out << "witness: " << w->describe() << "\n";
    }
    return w ? 1 : 0;
}

int cmd_betti(const JobConfig& c, std::ostream& out, std::ostream& err)
{
    const IdealInput in = parse_ideal_file(c.ideal_source, true, c.lenient ? &err : nullptr);
    const BettiTable ideal_table = betti_table_formula(in.ideal, in.t);
    const BettiTable table = c.module == BettiModule::quotient ? ideal_table.to_quotient() : ideal_table;
    std::optional<bool> match;
    int bound = 0;
    if (c.oracle) {
        bound = oracle_bound(c, in.ideal, in.t);
        const BettiTable oracle = oracle_betti_table(in.ideal, bound);
        match = (c.module == BettiModule::quotient ? oracle : oracle.to_ideal()) == table;
    }
    if (c.format == OutputFormat::json) {
        Json j = table_json(table);
        if (match)
            j["oracle"] = {{"max_degree", bound}, {"result", *match ? "MATCH" : "MISMATCH"}};
        emit(out, j);
    } else {
        out << format_ascii(table);
        if (match)
            out << "oracle: " << (*match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match && !*match ? 1 : 0;
}

int cmd_homology_basis(const JobConfig& c, std::ostream& out, std::ostream& err)
{
    const IdealInput in = parse_ideal_file(c.ideal_source, true, c.lenient ? &err : nullptr);
    if (c.homological_degree < 1)
        throw InputError("--i must be at least 1");
    const auto labels = homology_basis_labels(in.ideal, in.t, c.homological_degree);
    std::vector<HomologyBasisReport> reports;
    bool ok = true;
    if (c.verify) {
        const int bound = oracle_bound(c, in.ideal, in.t);
        for (int q = c.homological_degree; q <= bound; ++q) {
            reports.push_back(verify_homology_basis(in.ideal, in.t, c.homological_degree, q));
            ok = ok && reports.back().ok;
        }
    }
    if (c.format == OutputFormat::json) {
        Json j;
        j["i"] = c.homological_degree;
        Json list = Json::array();
        for (const auto& l : labels) {
            Json lj;
            lj["u"] = to_string(l.u);
            lj["sigma"] = l.sigma;
            if (c.expand)
                lj["chain"] = chain_json(build_cycle_e(in.ideal, in.t, l.u, l.sigma));
            list.push_back(lj);
        }
        j["labels"] = list;
        if (c.verify) {
            Json v = Json::array();
            for (const auto& r : reports)
                v.push_back({{"degree", r.degree},
                             {"ok", r.ok},
                             {"cycles", r.cycles},
                             {"kernel_dimension", r.kernel_dimension},
                             {"boundary_rank", r.boundary_rank}});
            j["verify"] = v;
        }
        emit(out, j);
    } else {
        out << "H_" << c.homological_degree << ": " << labels.size() << (labels.size() == 1 ? " label" : " labels")
            << "\n";
        for (const auto& l : labels) {
            out << to_display_string(l);
            if (c.expand)
                out << " : " << to_display_string(build_cycle_e(in.ideal, in.t, l.u, l.sigma));
            out << "\n";
        }
        for (const auto& r : reports)
            if (!r.ok)
                out << "degree " << r.degree << ": " << r.message << "\n";
        if (c.verify)
            out << "verify: " << (ok ? "OK" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_resolution(const JobConfig& c, std::ostream& out, std::ostream& err)
{
    const IdealInput in = parse_ideal_file(c.ideal_source, true, c.lenient ? &err : nullptr);
    const Resolution R = build_resolution(in.ideal, in.t);
    std::optional<ResolutionReport> rep;
    if (c.verify)
        rep = verify_resolution(R, in.ideal, oracle_bound(c, in.ideal, in.t));
    if (c.format == OutputFormat::json) {
        Json j;
        j["n"] = in.ideal.ambient();
        j["t"] = to_json(in.t);
        j["generators"] = generators_json(in.ideal);
        Json bases = Json::array();
        for (const auto& basis : R.bases) {
            Json b = Json::array();
            for (const auto& f : basis)
                b.push_back({{"label", basis_label(R, f)},
                             {"u", to_string(f.u)},
                             {"sigma", f.sigma},
                             {"degree", f.degree()}});
            bases.push_back(b);
        }
        j["bases"] = bases;
        Json ds = Json::array();
        for (int i = 1; i <= R.length(); ++i) {
            const auto& d = R.differential(i);
            Json entries = Json::array();
            for (std::size_t col = 0; col < d.cols(); ++col)
                for (const auto& [row, p] : d.column(col)) {
                    Json terms = Json::array();
                    for (const auto& [m, q] : p)
                        terms.push_back({{"coefficient", to_string(q)}, {"monomial", to_string(m)}});
                    entries.push_back({{"row", row}, {"col", col}, {"terms", terms}});
                }
            ds.push_back({{"position", i}, {"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}});
        }
        j["differentials"] = ds;
        if (rep)
            j["verify"] = {{"max_degree", rep->max_degree}, {"ok", rep->ok()}, {"failures", rep->failures}};
        emit(out, j);
    } else {
        out << format_resolution_ascii(R);
        if (rep) {
            out << "\nverify (degree <= " << rep->max_degree << "): " << (rep->ok() ? "OK" : "FAILED") << "\n";
            for (const auto& f : rep->failures)
                out << "  " << f << "\n";
        }
    }
    return rep && !rep->ok() ? 1 : 0;
}

GinOptions gin_options(const JobConfig& c)
{
    if (c.bound < 1)
        throw InputError("--bound must be positive");
    if (c.retries < 0)
        throw InputError("--retries must be non-negative");
    return {c.seed, c.bound, c.retries};
}

int cmd_gin(const JobConfig& c, std::ostream& out)
{
    const IdealInput in = parse_ideal_file(c.ideal_source, false);
    const GinResult g = gin(in.ideal, gin_options(c));
    if (c.format == OutputFormat::json) {
        Json j;
        j["n"] = g.ideal.ambient();
        j["generators"] = generators_json(g.ideal);
        j["seed"] = g.seed;
        j["bound"] = g.bound;
        j["attempts"] = g.attempts;
        emit(out, j);
    } else {
        out << "Gin(I) = " << to_string(g.ideal) << "\n";
        out << "seed: " << g.seed << ", bound: " << g.bound << ", attempts: " << g.attempts << "\n";
    }
    return 0;
}

int cmd_shift(const JobConfig& c, std::ostream& out)
{
    const IdealInput in = parse_ideal_file(c.ideal_source, false);
    const SpreadVector t = c.t ? make_spread_vector(*c.t) : in.t;
    const GinOptions opts = gin_options(c);
    if (!c.verify) {
        const MonomialIdeal s = shift(in.ideal, t, opts);
        if (c.format == OutputFormat::json) {
            Json j;
            j["n"] = s.ambient();
            j["t"] = to_json(t);
            j["generators"] = generators_json(s);
            j["seed"] = opts.seed;
            emit(out, j);
        } else {
            out << "I^{s,t} = " << to_string(s) << "\n";
            out << "seed: " << opts.seed << "\n";
        }
        return 0;
    }
    std::optional<MonomialIdeal> other;
    if (!c.other_source.empty()) {
        const IdealInput j = parse_ideal_file(c.other_source, false);
        other = j.ideal;
    }
    const ShiftReport rep = verify_shift_properties(in.ideal, other, t, c.max_degree, opts);
    if (c.format == OutputFormat::json) {
        Json j;
        j["n"] = rep.shifted.ambient();
        j["t"] = to_json(t);
        j["generators"] = generators_json(rep.shifted);
        j["seed"] = opts.seed;
        Json props;
        for (std::size_t k = 0; k < 4; ++k)
            props["Shift_" + std::to_string(k + 1)] = to_string(rep.status[k]);
        j["properties"] = props;
        j["hilbert_bound"] = rep.hilbert_bound;
        j["notes"] = rep.notes;
        emit(out, j);
    } else {
        out << "I^{s,t} = " << to_string(rep.shifted) << "\n";
        if (rep.shifted_other)
            out << "J^{s,t} = " << to_string(*rep.shifted_other) << "\n";
        for (std::size_t k = 0; k < 4; ++k)
            out << "Shift_" << k + 1 << ": " << to_string(rep.status[k]) << "\n";
        out << "Hilbert functions compared up to degree " << rep.hilbert_bound << "\n";
        for (const auto& note : rep.notes)
            out << "  " << note << "\n";
        out << "seed: " << opts.seed << "\n";
    }
    return rep.ok() ? 0 : 1;
}

std::optional<std::int64_t> env_integer(const char* name)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return std::nullopt;
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used != std::string(v).size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw InputError(std::string("environment variable ") + name + " is not an integer: '" + v + "'");
    }
}

} // namespace

IdealInput parse_ideal_file(const std::string& source, bool require_spread, std::ostream* warnings)
{
    const std::string text = read_source(source);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON at " + line_and_column(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        throw InputError("ideal input must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1 ||
        j["n"].get<long long>() > 1000000)
        throw InputError("\"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InputError("\"generators\" must be an array of monomial strings");

    std::vector<Monomial> gens;
    std::size_t index = 0;
    for (const auto& g : j["generators"]) {
        if (!g.is_string())
            throw InputError("generator " + std::to_string(index + 1) + " is not a string");
        const std::string s = g.get<std::string>();
        try {
            gens.push_back(parse_monomial(s, n));
        } catch (const ParseError& e) {
            throw InputError("generator " + std::to_string(index + 1) + " \"" + s + "\": " + e.what() +
                             " (token '" + e.token() + "' at position " + std::to_string(e.position()) + ")");
        }
        ++index;
    }
    MonomialIdeal I(n, std::move(gens));

    std::optional<SpreadVector> t;
    if (j.contains("t"))
        t = make_spread_vector(read_int_array(j["t"], "t"));
    const bool t_given = t.has_value();
    if (!t)
        t = SpreadVector::zero(std::max(2, I.max_generator_degree()));

    bool spread = true;
    for (const auto& u : I.generators()) {
        if (is_t_spread(u, *t))
            continue;
        spread = false;
        if (require_spread) {
            std::ostringstream os;
            os << "generator " << to_string(u) << " is not t-spread for t = (" << *t << ")";
            if (!warnings)
                throw InputError(os.str());
            *warnings << "warning: " << os.str() << "\n";
        }
    }
    return {spread ? I.with_spread_type(*t) : I, *t, t_given};
}

std::string serialize_ideal(const MonomialIdeal& I, const std::optional<SpreadVector>& t)
{
    Json j;
    j["n"] = I.ambient();
    if (t)
        j["t"] = to_json(*t);
    j["generators"] = generators_json(I);
    return j.dump();
}

std::optional<int> parse_command_line(const std::vector<std::string>& args, JobConfig& config, std::ostream& out,
                                      std::ostream& err)
{
    CLI::App app{"Vector-spread monomial ideals: Betti tables, Koszul cycles, resolutions and shifting", "vspread"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "ascii";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"ascii", "json"}));
    app.add_flag("--lenient", config.lenient, "Warn instead of failing on generators that are not t-spread");

    std::string t_text;
    std::optional<int> max_degree;
    std::optional<std::uint64_t> seed;
    std::optional<int> bound;

    auto* en = app.add_subcommand("enumerate", "List the t-spread monomials of one degree");
    en->add_option("--n", config.n, "Number of variables")->required()->check(CLI::PositiveNumber);
    en->add_option("--deg", config.degree, "Degree")->required()->check(CLI::NonNegativeNumber);
    en->add_option("--t", t_text, "Spread vector, e.g. 1,0,2")->required();

    auto add_ideal = [&](CLI::App* sub) {
        sub->add_option("--ideal", config.ideal_source, "Ideal JSON file, or inline JSON")->required();
    };

    auto* ve = app.add_subcommand("verify", "Check membership in an ideal class");
    add_ideal(ve);
    ve->add_option("--class", config.ideal_class, "stable, strongly-stable or lex")
        ->check(CLI::IsMember({"stable", "strongly-stable", "lex"}));

    auto* be = app.add_subcommand("betti", "Closed-form Betti table");
    add_ideal(be);
    be->add_flag("--oracle", config.oracle, "Cross-check against Koszul homology ranks");
    std::string module = "quotient";
    be->add_option("--module", module, "Table of S/I (quotient) or of I (ideal)")
        ->check(CLI::IsMember({"quotient", "ideal"}));
    be->add_option("--max-degree", max_degree, "Oracle degree bound")->check(CLI::NonNegativeNumber);

    auto* hb = app.add_subcommand("homology-basis", "Labels of the Koszul homology basis");
    add_ideal(hb);
    hb->add_option("--i", config.homological_degree, "Homological degree")->required()->check(CLI::PositiveNumber);
    hb->add_flag("--expand", config.expand, "Print the cycles");
    hb->add_flag("--verify", config.verify, "Check the basis by exact ranks");
    hb->add_option("--max-degree", max_degree, "Largest internal degree checked")->check(CLI::NonNegativeNumber);

    auto* re = app.add_subcommand("resolution", "Explicit minimal free resolution of S/I");
    add_ideal(re);
    re->add_flag("--verify", config.verify, "Check complex property, minimality and exactness");
    re->add_option("--max-degree", max_degree, "Largest internal degree checked")->check(CLI::NonNegativeNumber);

    auto* gi = app.add_subcommand("gin", "Generic initial ideal for degrevlex");
    add_ideal(gi);
    gi->add_option("--seed", seed, "Random seed");
    gi->add_option("--bound", bound, "Coefficient bound")->check(CLI::PositiveNumber);
    gi->add_option("--retries", config.retries, "Extra attempts")->check(CLI::NonNegativeNumber);

    auto* sh = app.add_subcommand("shift", "Spread shifting sigma_{0,t}(Gin(I))");
    add_ideal(sh);
    sh->add_option("--t", t_text, "Spread vector, e.g. 1,0,2");
    sh->add_flag("--verify", config.verify, "Check Shift_1 to Shift_4");
    sh->add_option("--other", config.other_source, "Ideal J with I contained in J, for Shift_4");
    sh->add_option("--max-degree", max_degree, "Hilbert function bound for Shift_3")->check(CLI::NonNegativeNumber);
    sh->add_option("--seed", seed, "Random seed");
    sh->add_option("--bound", bound, "Coefficient bound")->check(CLI::PositiveNumber);
    sh->add_option("--retries", config.retries, "Extra attempts")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    config.format = format == "json" ? OutputFormat::json : OutputFormat::ascii;
    config.module = module == "ideal" ? BettiModule::ideal : BettiModule::quotient;
    try {
        if (!t_text.empty())
            config.t = SpreadVector::parse(t_text).entries();
        if (!max_degree)
            if (auto v = env_integer("VSPREAD_MAX_DEGREE")) {
                if (*v < 0)
                    throw InputError("VSPREAD_MAX_DEGREE must be non-negative");
                max_degree = static_cast<int>(*v);
            }
        config.max_degree = max_degree;
        if (seed)
            config.seed = *seed;
        else if (auto v = env_integer("VSPREAD_GIN_SEED"))
            config.seed = static_cast<std::uint64_t>(*v);
        if (bound)
            config.bound = *bound;
        else if (auto v = env_integer("VSPREAD_GIN_BOUND")) {
            if (*v < 1)
                throw InputError("VSPREAD_GIN_BOUND must be positive");
            config.bound = static_cast<int>(*v);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return std::nullopt;
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.subcommand == "enumerate")
            return cmd_enumerate(config, out);
        if (config.subcommand == "verify")
            return cmd_verify(config, out, err);
        if (config.subcommand == "betti")
            return cmd_betti(config, out, err);
        if (config.subcommand == "homology-basis")
            return cmd_homology_basis(config, out, err);
        if (config.subcommand == "resolution")
            return cmd_resolution(config, out, err);
        if (config.subcommand == "gin")
            return cmd_gin(config, out);
        if (config.subcommand == "shift")
            return cmd_shift(config, out);
        err << "error: unknown subcommand '" << config.subcommand << "'\n";
        return 2;
    } catch (const GenericityError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    JobConfig config;
    if (auto code = parse_command_line(args, config, out, err))
        return *code;
    return run(config, out, err);
}

} // namespace vspread::cli
