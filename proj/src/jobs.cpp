#include "shintani/jobs.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <variant>

#include <toml.hpp>

#include "shintani/conegeom.hpp"
#include "shintani/eisenstein.hpp"
#include "shintani/fixtures.hpp"
#include "shintani/numfield.hpp"
#include "shintani/sczech.hpp"
#include "shintani/suites.hpp"

namespace shintani::jobs {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what)
{
    throw SchemaError(where + ": " + what);
}

std::string str(const Rational& x) { return to_string(x); }

// ---- field values -------------------------------------------------------------

Rational rational_of(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                      : Rational(Integer(std::to_string(j.get<std::int64_t>())));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error&) {
            schema(where, "'" + j.get<std::string>() + "' is not an exact rational");
        }
    }
    schema(where, "expected an integer or a \"p/q\" string, got " + std::string(j.type_name()));
}

Integer integer_of(const Json& j, const std::string& where)
{
    const Rational r = rational_of(j, where);
    if (r.get_den() != 1)
        schema(where, "expected an integer");
    return r.get_num();
}

long small_int(const Json& j, const std::string& where, long lo, long hi)
{
    const Integer v = integer_of(j, where);
    if (v < lo || v > hi)
        schema(where, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v.get_si();
}

RatVector vector_of(const Json& j, const std::string& where, std::optional<std::size_t> len = {})
{
    if (!j.is_array())
        schema(where, "expected an array");
    if (len && j.size() != *len)
        schema(where, "expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
    RatVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_of(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

// Row-major array of rows.
std::vector<RatVector> rows_of(const Json& j, const std::string& where, std::size_t width)
{
    if (!j.is_array() || j.empty())
        schema(where, "expected a non-empty array of rows");
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(vector_of(j[i], where + "[" + std::to_string(i) + "]", width));
    return rows;
}

const Json& require(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.contains(key))
        schema(where, std::string("missing '") + key + "'");
    return obj.at(key);
}

void allow_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where)
{
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items())
        if (!ok.count(k))
            schema(where, "unknown key '" + k + "'");
}

std::vector<unsigned> k_list(const Json& job, const std::string& where)
{
    const Json& k = require(job, "k", where);
    std::vector<unsigned> ks;
    if (k.is_array()) {
        for (std::size_t i = 0; i < k.size(); ++i)
            ks.push_back(unsigned(small_int(k[i], where + ".k", 0, 64)));
        if (ks.empty())
            schema(where + ".k", "empty list");
    } else {
        ks.push_back(unsigned(small_int(k, where + ".k", 0, 64)));
    }
    return ks;
}

// ---- validated plan -----------------------------------------------------------

struct Context {
    TotallyRealField field;
    std::string field_label;
    std::optional<UnitSystem> units;
    std::map<std::string, Lattice> ideals;
};

struct ZetaJob {
    bool smoothed = false;
    std::vector<std::string> classes;
    std::string f, c;
    std::vector<std::size_t> c_action;
    std::vector<unsigned> ks;
    std::optional<std::vector<FieldElem>> basis;
    std::optional<Integer> ell;
};

struct DedekindJob {
    IntMatrix sigma;
    std::vector<unsigned> e;
    RatVector q, v;
    std::optional<Integer> ell;
};

struct DomainJob {
    std::vector<FieldElem> basis;
    std::vector<FieldElem> points;  // explicit points
    int random_points = 0;
};

struct SczechJob {
    std::size_t n = 3;
};

struct VerifyJob {
    std::string suite;
};

struct Job {
    std::string name, kind;
    std::variant<ZetaJob, DedekindJob, DomainJob, SczechJob, VerifyJob> spec;
};

struct Plan {
    Context ctx;
    std::vector<Job> jobs;
};

const Lattice& ideal_ref(const Context& ctx, const Json& j, const std::string& where)
{
    if (!j.is_string())
        schema(where, "expected an ideal name");
    auto it = ctx.ideals.find(j.get<std::string>());
    if (it == ctx.ideals.end())
        schema(where, "unknown ideal '" + j.get<std::string>() + "'");
    return it->second;
}

std::vector<FieldElem> elements_of(const Context& ctx, const Json& j, const std::string& where)
{
    std::vector<FieldElem> out;
    for (const auto& row : rows_of(j, where, ctx.field.degree()))
        out.push_back(ctx.field.elem(row));
    return out;
}

Context build_context(const Json& file)
{
    Context ctx;
    const Json& field = require(file, "field", "file");
    std::optional<Fixture> fx;
    if (field.is_string() || (field.is_object() && field.contains("fixture"))) {
        const Json& name = field.is_string() ? field : field.at("fixture");
        if (!name.is_string())
            schema("field.fixture", "expected a name");
        try {
            fx = fixture(name.get<std::string>());
        } catch (const Error& e) {
            schema("field.fixture", e.what());
        }
        ctx.field = fx->field;
        ctx.field_label = fx->name;
        ctx.units = fx->units;
    } else if (field.is_object()) {
        allow_keys(field, {"minpoly"}, "field");
        RatVector mp = vector_of(require(field, "minpoly", "field"), "field.minpoly");
        IntVector coeffs;
        for (const auto& c : mp) {
            if (c.get_den() != 1)
                schema("field.minpoly", "coefficients must be integers");
            coeffs.push_back(c.get_num());
        }
        try {
            ctx.field = TotallyRealField(coeffs);
        } catch (const Error& e) {
            schema("field.minpoly", e.what());
        }
        ctx.field_label = "minpoly";
    } else {
        schema("field", "expected a fixture name or {minpoly = [...]}");
    }
    const std::size_t n = ctx.field.degree();

    if (file.contains("units")) {
        std::vector<FieldElem> us = elements_of(ctx, file.at("units"), "units");
        if (us.size() != n - 1)
            schema("units", "need " + std::to_string(n - 1) + " units");
        for (const auto& u : us)
            if (abs(u.norm()) != 1 || !u.totally_positive())
                schema("units", "every unit must be a totally positive element of norm 1");
        ctx.units = UnitSystem{us};
    } else if (!ctx.units) {
        if (n != 2)
            schema("units", "required for fields of degree other than 2");
        ctx.units = UnitSystem{{fundamental_unit_quadratic(ctx.field)}};
    }

    const Lattice o = Lattice::equation_order(ctx.field);
    ctx.ideals.emplace("O", o);
    if (file.contains("ideals")) {
        const Json& ids = file.at("ideals");
        if (!ids.is_object())
            schema("ideals", "expected a table of named ideals");
        for (const auto& [name, spec] : ids.items()) {
            const std::string where = "ideals." + name;
            if (name == "O")
                schema(where, "'O' is reserved for Z[theta]");
            if (!spec.is_object())
                schema(where, "expected {basis = [...]} or {generator = [...]}");
            allow_keys(spec, {"basis", "generator"}, where);
            try {
                if (spec.contains("generator") == spec.contains("basis"))
                    schema(where, "give exactly one of 'basis' and 'generator'");
                if (spec.contains("generator")) {
                    const FieldElem g = ctx.field.elem(vector_of(spec.at("generator"), where + ".generator", n));
                    if (g.is_zero())
                        schema(where, "zero generator");
                    ctx.ideals.emplace(name, Lattice::principal(g, o));
                } else {
                    const auto rows = rows_of(spec.at("basis"), where + ".basis", n);
                    ctx.ideals.emplace(name, lattice_from_generators(ctx.field, rows));
                }
            } catch (const Error& e) {
                schema(where, e.what());
            }
        }
    }
    return ctx;
}

ZetaJob zeta_job(const Context& ctx, const Json& j, const std::string& where, bool smoothed)
{
    allow_keys(j, {"name", "kind", "a", "classes", "f", "c", "c_action", "k", "ell", "basis"}, where);
    ZetaJob z;
    z.smoothed = smoothed;
    if (j.contains("a") && j.contains("classes"))
        schema(where, "give 'a' or 'classes', not both");
    if (j.contains("classes")) {
        const Json& cl = j.at("classes");
        if (!cl.is_array() || cl.empty())
            schema(where + ".classes", "expected a non-empty list of ideal names");
        for (std::size_t i = 0; i < cl.size(); ++i) {
            ideal_ref(ctx, cl[i], where + ".classes[" + std::to_string(i) + "]");
            z.classes.push_back(cl[i].get<std::string>());
        }
    } else {
        const Json a = j.value("a", Json("O"));
        ideal_ref(ctx, a, where + ".a");
        z.classes.push_back(a.get<std::string>());
    }
    const Json f = j.value("f", Json("O"));
    ideal_ref(ctx, f, where + ".f");
    z.f = f.get<std::string>();
    ideal_ref(ctx, require(j, "c", where), where + ".c");
    z.c = j.at("c").get<std::string>();
    z.ks = k_list(j, where);

    if (j.contains("c_action")) {
        const Json& ca = j.at("c_action");
        if (!ca.is_array() || ca.size() != z.classes.size())
            schema(where + ".c_action", "needs one entry per class");
        for (std::size_t i = 0; i < ca.size(); ++i)
            z.c_action.push_back(std::size_t(small_int(ca[i], where + ".c_action", 0, long(z.classes.size()) - 1)));
    } else if (!smoothed) {
        if (z.classes.size() != 1)
            schema(where, "'c_action' is required with several classes");
        z.c_action = {0};
    }
    if (j.contains("basis")) {
        if (z.classes.size() != 1)
            schema(where + ".basis", "an explicit basis needs a single class");
        z.basis = elements_of(ctx, j.at("basis"), where + ".basis");
        if (z.basis->size() != ctx.field.degree())
            schema(where + ".basis", "wrong number of basis elements");
    }
    if (j.contains("ell")) {
        z.ell = integer_of(j.at("ell"), where + ".ell");
        const Integer norm = ideal_norm(ctx.ideals.at(z.c));
        if (*z.ell != norm)
            schema(where + ".ell", "ell = " + z.ell->get_str() + " but N(c) = " + norm.get_str());
    }
    return z;
}

DedekindJob dedekind_job(const Json& j, const std::string& where)
{
    allow_keys(j, {"name", "kind", "sigma", "e", "q", "v", "ell"}, where);
    DedekindJob d;
    const Json& sj = require(j, "sigma", where);
    if (!sj.is_array() || sj.empty())
        schema(where + ".sigma", "expected a square matrix");
    const std::size_t n = sj.size();
    const auto rows = rows_of(sj, where + ".sigma", n);
    d.sigma = IntMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (rows[r][c].get_den() != 1)
                schema(where + ".sigma", "entries must be integers");
            d.sigma(r, c) = rows[r][c].get_num();
        }
    const Json& ej = require(j, "e", where);
    if (!ej.is_array() || ej.size() != n)
        schema(where + ".e", "needs " + std::to_string(n) + " entries");
    for (const auto& x : ej)
        d.e.push_back(unsigned(small_int(x, where + ".e", 1, 64)));
    d.q = vector_of(require(j, "q", where), where + ".q", n);
    d.v = vector_of(require(j, "v", where), where + ".v", n);
    if (j.contains("ell"))
        d.ell = integer_of(j.at("ell"), where + ".ell");
    return d;
}

DomainJob domain_job(const Context& ctx, const Json& j, const std::string& where)
{
    allow_keys(j, {"name", "kind", "basis", "points"}, where);
    DomainJob d;
    if (j.contains("basis")) {
        d.basis = elements_of(ctx, j.at("basis"), where + ".basis");
        if (d.basis.size() != ctx.field.degree())
            schema(where + ".basis", "wrong number of basis elements");
    } else {
        d.basis.push_back(ctx.field.one());
        for (std::size_t i = 1; i < ctx.field.degree(); ++i)
            d.basis.push_back(d.basis.back() * ctx.field.gen());
    }
    const Json pts = j.value("points", Json(200));
    if (pts.is_array()) {
        d.points = elements_of(ctx, pts, where + ".points");
        for (const auto& p : d.points)
            if (!p.totally_positive())
                schema(where + ".points", "test points must be totally positive");
    } else {
        d.random_points = int(small_int(pts, where + ".points", 1, 100000));
    }
    return d;
}

Plan build_plan(const Json& file)
{
    if (!file.is_object())
        schema("file", "expected a table at the top level");
    allow_keys(file, {"field", "units", "ideals", "jobs"}, "file");
    Plan plan{build_context(file), {}};
    const Json& js = require(file, "jobs", "file");
    if (!js.is_array())
        schema("jobs", "expected a list");
    std::set<std::string> names;
    for (std::size_t i = 0; i < js.size(); ++i) {
        const Json& j = js[i];
        std::string where = "jobs[" + std::to_string(i) + "]";
        if (!j.is_object())
            schema(where, "expected a table");
        const Json& kind = require(j, "kind", where);
        if (!kind.is_string())
            schema(where + ".kind", "expected a string");
        Job job;
        job.kind = kind.get<std::string>();
        job.name = j.value("name", "job" + std::to_string(i + 1));
        if (!names.insert(job.name).second)
            schema(where + ".name", "duplicate job name '" + job.name + "'");
        if (job.kind == "zeta" || job.kind == "smooth-zeta") {
            job.spec = zeta_job(plan.ctx, j, where, job.kind == "smooth-zeta");
        } else if (job.kind == "dedekind") {
            job.spec = dedekind_job(j, where);
        } else if (job.kind == "domain") {
            job.spec = domain_job(plan.ctx, j, where);
        } else if (job.kind == "sczech-verify") {
            allow_keys(j, {"name", "kind", "n"}, where);
            job.spec = SczechJob{std::size_t(small_int(j.value("n", Json(3)), where + ".n", 2, 5))};
        } else if (job.kind == "verify") {
            allow_keys(j, {"name", "kind", "suite"}, where);
            const Json& s = require(j, "suite", where);
            const auto& known = suite_names();
            if (!s.is_string() || std::find(known.begin(), known.end(), s.get<std::string>()) == known.end())
                schema(where + ".suite", "unknown suite");
            job.spec = VerifyJob{s.get<std::string>()};
        } else {
            schema(where + ".kind", "unknown job kind '" + job.kind + "'");
        }
        plan.jobs.push_back(std::move(job));
    }
    return plan;
}

// ---- execution ----------------------------------------------------------------

struct JobOutput {
    Json result = Json::object();
    Json diagnostics = Json::array();
    bool verified = true;
};

Json check_json(const CheckResult& c, bool timings)
{
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["total"] = c.total;
    j["ok"] = c.ok();
    if (!c.failures.empty())
        j["failures"] = c.failures;
    if (timings)
        j["seconds"] = c.seconds;
    return j;
}

Json suite_json(const SuiteReport& rep, bool timings)
{
    Json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["ok"] = rep.ok();
    j["checks"] = Json::array();
    for (const auto& c : rep.checks)
        j["checks"].push_back(check_json(c, timings));
    return j;
}

JobOutput run_zeta(const Context& ctx, const ZetaJob& z)
{
    JobOutput out;
    const Lattice& f = ctx.ideals.at(z.f);
    const Lattice& c = ctx.ideals.at(z.c);
    const UnitSystem units = units_congruent_one(*ctx.units, f);
    std::vector<ZetaData> data;
    for (const auto& a : z.classes)
        data.push_back(zeta_data(ctx.ideals.at(a), f, c, units, z.basis));
    const Integer ell = data.front().ell;
    out.result["ell"] = ell.get_str();
    out.result["classes"] = z.classes;
    if (!z.c_action.empty())
        out.result["c_action"] = z.c_action;
    Json values = Json::array();
    bool integral = true;
    for (unsigned k : z.ks) {
        std::vector<Rational> smoothed;
        for (const auto& d : data)
            smoothed.push_back(smoothed_zeta(d, k));
        integral = integral && integrality_check(smoothed, ell).ok;
        Json row;
        row["k"] = k;
        std::vector<Rational> shown = smoothed;
        if (!z.smoothed)
            shown = unsmooth_solve(smoothed, z.c_action, ell, k);
        Json per = Json::array();
        Rational sum = 0;
        for (const auto& x : shown) {
            per.push_back(str(x));
            sum += x;
        }
        if (shown.size() == 1) {
            row["value"] = per[0];
        } else {
            row["values"] = per;
            row["sum"] = str(sum);
        }
        values.push_back(row);
    }
    out.result["values"] = values;
    out.diagnostics.push_back(std::string("smoothed values ") + (integral ? "lie" : "do not lie") + " in Z[1/" +
                              ell.get_str() + "]");
    return out;
}

JobOutput run_dedekind(const DedekindJob& d)
{
    JobOutput out;
    const auto q = PerturbationVector::rational(d.q);
    if (d.ell) {
        out.result["ell"] = d.ell->get_str();
        out.result["value"] = str(dedekind_D_ell(d.sigma, d.e, q, d.v, *d.ell));
    } else {
        out.result["value"] = str(dedekind_D(d.sigma, d.e, q, d.v));
    }
    return out;
}

JobOutput run_domain(const Context& ctx, const DomainJob& d, std::uint64_t seed)
{
    JobOutput out;
    const SignedDomain dom = signed_fundamental_domain(*ctx.units, d.basis);
    out.result["pieces"] = dom.pieces.size();
    out.result["regulator_sign"] = dom.regulator_sign;
    out.result["sign_det_J"] = dom.sign_det_J;
    std::vector<FieldElem> pts = d.points;
    Rng rng(seed);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 3);
    while (int(pts.size()) < int(d.points.size()) + d.random_points) {
        RatVector c(ctx.field.degree());
        for (auto& x : c) {
            x = Rational(num(rng), den(rng));
            x.canonicalize();
        }
        FieldElem e = ctx.field.elem(c);
        if (!e.is_zero() && e.totally_positive())
            pts.push_back(std::move(e));
    }
    std::size_t good = 0;
    Json bad = Json::array();
    for (const auto& p : pts) {
        const OrbitSum s = orbit_sum(dom, p);
        if (s.total == 1)
            ++good;
        else if (bad.size() < 5) {
            Json b;
            b["point"] = Json::array();
            for (const auto& x : p.coords())
                b["point"].push_back(str(x));
            b["orbit_sum"] = s.total.get_str();
            bad.push_back(b);
        }
    }
    out.result["checked"] = pts.size();
    out.result["orbit_sum_one"] = good;
    if (!bad.empty())
        out.result["failures"] = bad;
    out.verified = good == pts.size();
    return out;
}

JobOutput run_sczech(const SczechJob& s, bool parallel)
{
    JobOutput out;
    const CoboundaryReport rep = verify_coboundary(s.n, parallel);
    out.result["n"] = rep.n;
    out.result["checked"] = rep.checked;
    out.result["failures"] = rep.failures;
    out.result["passed"] = rep.ok();
    out.verified = rep.ok();
    return out;
}

}  // namespace

Json parse_job_text(const std::string& text, bool toml)
{
    if (toml) {
        try {
            const toml::table tbl = toml::parse(text);
            std::ostringstream os;
            os << toml::json_formatter{tbl};
            return Json::parse(os.str());
        } catch (const toml::parse_error& e) {
            std::ostringstream os;
            os << "TOML parse error: " << e.description() << " at line " << e.source().begin.line;
            throw SchemaError(os.str());
        }
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error: ") + e.what());
    }
}

Json load_job_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SchemaError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const bool toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
    return parse_job_text(buf.str(), toml);
}

Outcome run_jobs(const Json& file, const RunOptions& opts)
{
    Outcome o;
    o.doc["seed"] = opts.seed;
    Plan plan;
    try {
        plan = build_plan(file);
    } catch (const SchemaError& e) {
        o.doc["status"] = "schema-error";
        o.doc["error"] = {{"code", "SchemaError"}, {"message", e.what()}};
        o.exit_code = Schema;
        return o;
    } catch (const nlohmann::json::exception& e) {
        o.doc["status"] = "schema-error";
        o.doc["error"] = {{"code", "SchemaError"}, {"message", std::string("malformed value: ") + e.what()}};
        o.exit_code = Schema;
        return o;
    }
    Json field;
    field["label"] = plan.ctx.field_label;
    field["minpoly"] = Json::array();
    for (const auto& c : plan.ctx.field.minpoly())
        field["minpoly"].push_back(c.get_str());
    o.doc["field"] = field;

    bool computation_failed = false, verification_failed = false;
    Json results = Json::array();
    for (std::size_t i = 0; i < plan.jobs.size(); ++i) {
        const Job& job = plan.jobs[i];
        Json r;
        r["name"] = job.name;
        r["kind"] = job.kind;
        const auto t0 = std::chrono::steady_clock::now();
        // every job draws from its own stream
        const std::uint64_t job_seed = opts.seed + 7919 * i;
        try {
            JobOutput out = std::visit(
                [&](const auto& spec) -> JobOutput {
                    using T = std::decay_t<decltype(spec)>;
                    if constexpr (std::is_same_v<T, ZetaJob>)
                        return run_zeta(plan.ctx, spec);
                    else if constexpr (std::is_same_v<T, DedekindJob>)
                        return run_dedekind(spec);
                    else if constexpr (std::is_same_v<T, DomainJob>)
                        return run_domain(plan.ctx, spec, job_seed);
                    else if constexpr (std::is_same_v<T, SczechJob>)
                        return run_sczech(spec, opts.parallel);
                    else {
                        JobOutput v;
                        const SuiteReport rep = run_suite(spec.suite, job_seed, opts.parallel);
                        v.result = suite_json(rep, opts.timings);
                        v.verified = rep.ok();
                        return v;
                    }
                },
                job.spec);
            r["status"] = out.verified ? "ok" : "verification-failed";
            r["result"] = std::move(out.result);
            if (!out.diagnostics.empty())
                r["diagnostics"] = std::move(out.diagnostics);
            verification_failed = verification_failed || !out.verified;
        } catch (const Error& e) {
            r["status"] = "error";
            r["error"] = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
            computation_failed = true;
        }
        if (opts.timings)
            r["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    }
    o.doc["jobs"] = std::move(results);
    // a computation error outranks a failed verification
    o.exit_code = computation_failed ? Computation : verification_failed ? VerificationFailed : Ok;
    o.doc["status"] = o.exit_code == Ok ? "ok" : computation_failed ? "error" : "verification-failed";
    return o;
}

Outcome run_file(const std::string& path, const RunOptions& opts)
{
    try {
        return run_jobs(load_job_file(path), opts);
    } catch (const SchemaError& e) {
        Outcome o;
        o.doc["seed"] = opts.seed;
        o.doc["status"] = "schema-error";
        o.doc["error"] = {{"code", "SchemaError"}, {"message", e.what()}};
        o.exit_code = Schema;
        return o;
    }
}

Outcome verify_suite(const std::string& suite, std::uint64_t seed, bool parallel, bool timings)
{
    Outcome o;
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
        o.doc["status"] = "schema-error";
        o.doc["error"] = {{"code", "SchemaError"}, {"message", "unknown suite '" + suite + "'"}};
        o.exit_code = Schema;
        return o;
    }
    const SuiteReport rep = run_suite(suite, seed, parallel);
    o.doc = suite_json(rep, timings);
    o.exit_code = rep.ok() ? Ok : VerificationFailed;
    return o;
}

std::string render(const Json& doc)
{
    return doc.dump(2) + "\n";
}

}  // namespace shintani::jobs
