#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>

#include "lorq/causality.hpp"
#include "lorq/errors.hpp"
#include "lorq/example4d.hpp"
#include "lorq/specfile.hpp"
#include "lorq/splitting.hpp"
#include "lorq/version.hpp"

namespace lorq::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFails = 2;

struct CommonOpts {
    std::string out_path;
    int radius = 10;
    long box = 25;
    int samples = 100;
    std::uint64_t seed = 0;

    Budget budget() const { return Budget{box, samples, seed}; }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out_path, "write a JSON result record to this path");
    cmd->add_option("--radius", o.radius, "word-ball radius")->capture_default_str();
    cmd->add_option("--box", o.box, "integer search box radius")->capture_default_str();
    cmd->add_option("--samples", o.samples, "sample count for spot checks")->capture_default_str();
    cmd->add_option("--seed", o.seed, "deterministic sampling seed")->capture_default_str();
}

ordered_json budgets_json(const CommonOpts& o) {
    return {{"radius", o.radius}, {"box", o.box}, {"samples", o.samples}, {"seed", o.seed}};
}

ordered_json vec_json(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const Rat& r : v) out.push_back(rat_to_string(r));
    return out;
}

ordered_json mat_json(const Mat& m) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) out.push_back(vec_json(row(m, i)));
    return out;
}

ordered_json int_vec_json(const std::vector<Int>& v) {
    ordered_json out = ordered_json::array();
    for (const Int& z : v) out.push_back(z.get_str());
    return out;
}

std::string witness_str(const std::vector<Int>& w) {
    if (w.size() == 1) return "n=" + w[0].get_str();
    std::string s = "x=(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i].get_str();
    }
    return s + ")";
}

void write_record(const CommonOpts& o, const std::string& command, const std::string& digest,
                  ordered_json verdicts, ordered_json witnesses) {
    if (o.out_path.empty()) return;
    ordered_json record;
    record["command"] = command;
    record["inputDigest"] = digest;
    record["verdicts"] = verdicts.is_null() ? ordered_json::object() : std::move(verdicts);
    record["witnesses"] = witnesses.is_null() ? ordered_json::object() : std::move(witnesses);
    record["budgets"] = budgets_json(o);
    record["toolVersion"] = kVersion;
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + o.out_path + "'");
    out << record.dump(2) << "\n";
}

ordered_json margin_json(const GammaMargin& m) {
    ordered_json j;
    j["element"] = m.element;
    if (m.verdict.kind == SupremumVerdict::Kind::Attained) {
        j["kind"] = "Attained";
        j["value"] = rat_to_string(m.verdict.value);
    } else {
        j["kind"] = "Unbounded";
        j["direction"] = vec_json(m.verdict.direction);
    }
    return j;
}

ordered_json answer_json(const ChronologyAnswer& ans) {
    ordered_json j;
    j["tag"] = to_string(ans.tag);
    if (ans.tag == ChronologyAnswer::Tag::Member) j["witness"] = int_vec_json(ans.witness);
    if (ans.tag == ChronologyAnswer::Tag::NonMember) j["exhaustive"] = ans.exhaustive;
    if (ans.tag == ChronologyAnswer::Tag::UnboundedRegion) j["direction"] = vec_json(ans.direction);
    if (!ans.note.empty()) j["note"] = ans.note;
    return j;
}

const TypeIISpec& need_type_ii(const SpecFile& spec, const std::string& what) {
    if (!spec.is_type_ii())
        throw Error(what + " needs a typeII group spec");
    return std::get<TypeIISpec>(spec.group);
}

int cmd_validate(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    std::vector<std::string> violations = spec.violations();
    ordered_json verdicts;
    verdicts["valid"] = violations.empty();
    verdicts["violations"] = violations;
    write_record(o, "validate", spec.digest, verdicts, ordered_json::object());
    if (violations.empty()) {
        out << "ok\n";
        return kExitOk;
    }
    for (const std::string& v : violations) out << "violation: " << v << "\n";
    return kExitFails;
}

int cmd_classify(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    GroupGenerators gg = spec.build(true);
    ordered_json verdicts;
    ordered_json gens = ordered_json::array();
    for (size_t i = 0; i < gg.gens.size(); ++i) {
        IsometryClass cls = classify_isometry(gg.space, gg.gens[i].linear);
        out << "g" << i << ": " << to_string(cls.tag) << "\n";
        ordered_json j;
        j["generator"] = "g" + std::to_string(i);
        j["class"] = to_string(cls.tag);
        if (cls.tag == IsometryClass::Tag::Elliptic)
            j["fixedInteriorPoint"] = vec_json(cls.elliptic_fixed_point);
        if (cls.hyperbolic && cls.hyperbolic->rational) {
            j["mu"] = rat_to_string(cls.hyperbolic->mu);
            j["eigenvector"] = vec_json(cls.hyperbolic->eigenvector);
        }
        gens.push_back(std::move(j));
    }
    EllipticityResult ell = ellipticity_check(gg);
    out << "group: " << (ell.elliptic ? "Elliptic" : "NotElliptic") << "\n";
    verdicts["generators"] = std::move(gens);
    verdicts["groupElliptic"] = ell.elliptic;
    ordered_json witnesses;
    if (ell.elliptic) witnesses["ellipticCertificate"] = vec_json(ell.certificate);
    write_record(o, "classify", spec.digest, verdicts, witnesses);
    return kExitOk;
}

int cmd_build(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    GroupGenerators gg = spec.build();
    ordered_json gens = ordered_json::array();
    for (size_t i = 0; i < gg.gens.size(); ++i) {
        out << "g" << i << ": linear " << gg.gens[i].linear.rows << "x"
            << gg.gens[i].linear.cols << ", translation " << vec_to_string(gg.gens[i].translation)
            << "\n";
        gens.push_back({{"linear", mat_json(gg.gens[i].linear)},
                        {"translation", vec_json(gg.gens[i].translation)}});
    }
    ordered_json verdicts;
    verdicts["generatorCount"] = gg.gens.size();
    write_record(o, "build", spec.digest, verdicts, ordered_json{{"generators", gens}});
    return kExitOk;
}

int cmd_check_free(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    ordered_json verdicts, witnesses;
    bool free = true;
    if (spec.is_type_ii()) {
        FreenessReport fr = freeness_check(std::get<TypeIISpec>(spec.group));
        free = fr.free;
        verdicts["minorGcd"] = poly_to_string(fr.minor_gcd, "s");
        if (fr.witness) {
            if (fr.witness->rational_t) {
                witnesses["t"] = rat_to_string(fr.witness->t);
                witnesses["x"] = vec_json(fr.witness->x);
            } else {
                witnesses["factor"] = poly_to_string(fr.witness->factor, "s");
                witnesses["sInterval"] = {rat_to_string(fr.witness->s_lo),
                                          rat_to_string(fr.witness->s_hi)};
                witnesses["tInterval"] = {rat_to_string(fr.witness->t_lo),
                                          rat_to_string(fr.witness->t_hi)};
            }
        }
    }
    verdicts["free"] = free;
    write_record(o, "check-free", spec.digest, verdicts, witnesses);
    if (free) {
        out << "Free\n";
        return kExitOk;
    }
    out << "NotFree";
    if (!witnesses.empty() && witnesses.contains("t")) out << " (t=" << witnesses["t"].get<std::string>() << ")";
    out << "\n";
    return kExitFails;
}

int cmd_check_causal(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    GroupGenerators gg = spec.build(true);
    WordBallReport report = word_ball_causality(gg, o.radius);
    ordered_json verdicts;
    verdicts["summary"] = to_string(report.summary);
    verdicts["radius"] = report.radius;
    verdicts["elements"] = report.margins.size();
    if (report.worst_margin) verdicts["worstMargin"] = rat_to_string(*report.worst_margin);
    ordered_json witnesses;
    ordered_json margins = ordered_json::array();
    for (const GammaMargin& m : report.margins) margins.push_back(margin_json(m));
    witnesses["margins"] = std::move(margins);
    write_record(o, "check-causal", spec.digest, verdicts, witnesses);

    if (report.summary == CausalSummary::NotCausal) {
        // Name the mechanism when an unbounded margin comes from a hyperbolic part.
        std::string reason = "margin >= 0 at " + report.worst_element;
        for (const GammaMargin& m : report.margins)
            if (m.verdict.kind == SupremumVerdict::Kind::Unbounded) {
                reason = "unbounded margin at " + m.element;
                for (const AffineIsometry& g : gg.gens) {
                    IsometryClass cls = classify_isometry(gg.space, g.linear);
                    if (cls.tag == IsometryClass::Tag::Hyperbolic) {
                        reason = "hyperbolic element";
                        break;
                    }
                }
                break;
            }
        out << "NotCausal (" << reason << ")\n";
        return kExitFails;
    }
    if (report.summary == CausalSummary::VacuouslyCausal) {
        out << "VacuouslyCausal (trivial group)\n";
        return kExitOk;
    }
    out << "CausalWithinRadius " << report.radius << " (worst margin "
        << rat_to_string(*report.worst_margin) << " at " << report.worst_element << ")\n";
    return kExitOk;
}

int cmd_check_strict(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    ordered_json verdicts, witnesses;
    StrictCausality sc;
    if (spec.is_type_i()) {
        sc = strict_causality_certificate(std::get<TypeISpec>(spec.group));
    } else {
        sc = strict_causality_certificate(need_type_ii(spec, "check-strict"), o.budget());
    }
    verdicts["strictlyCausal"] = sc.strictly_causal;
    if (sc.witness && sc.witness->rational_t) {
        witnesses["t"] = rat_to_string(sc.witness->t);
        witnesses["x"] = vec_json(sc.witness->x);
    }
    write_record(o, "check-strict", spec.digest, verdicts, witnesses);
    if (sc.strictly_causal) {
        out << "StrictlyCausal\n";
        return kExitOk;
    }
    out << "Fails (freeness witness"
        << (sc.witness && sc.witness->rational_t ? " t=" + rat_to_string(sc.witness->t) : "")
        << ")\n";
    return kExitFails;
}

int cmd_query(const SpecFile& spec, const CommonOpts& o, const std::string& from,
              const std::string& to, const std::string& orientation, std::ostream& out) {
    const TypeIISpec& t2 = need_type_ii(spec, "query");
    Vec u = parse_vector_arg(from), v = parse_vector_arg(to);
    Orientation ori =
        orientation == "past" ? Orientation::Past : Orientation::Future;
    if (orientation != "past" && orientation != "future")
        throw ParseError("--orientation must be past or future");
    ChronologyAnswer ans = chronology_query(t2, u, v, ori, o.budget());
    ordered_json verdicts;
    verdicts["answer"] = to_string(ans.tag);
    verdicts["orientation"] = orientation;
    write_record(o, "query", spec.digest, verdicts,
                 ordered_json{{"answer", answer_json(ans)}, {"from", vec_json(u)}, {"to", vec_json(v)}});
    switch (ans.tag) {
        case ChronologyAnswer::Tag::Member:
            out << "Member " << witness_str(ans.witness) << "\n";
            return kExitOk;
        case ChronologyAnswer::Tag::NonMember:
            out << "NonMember" << (ans.exhaustive ? " (exhaustive)" : "") << "\n";
            return kExitOk;
        case ChronologyAnswer::Tag::UnboundedRegion:
            out << "UnboundedRegion (" << ans.note << ")\n";
            return kExitOk;
    }
    return kExitOk;
}

int cmd_closure(const SpecFile& spec, const CommonOpts& o, const std::string& point,
                const std::string& orientation, std::ostream& out) {
    if (orientation != "past" && orientation != "future")
        throw ParseError("--orientation must be past or future");
    if (spec.is_type_i()) {
        // Spacelike translation lattices: pasts and futures are closed.
        write_record(o, "closure", spec.digest,
                     ordered_json{{"outcome", "LocallyClosed"}, {"orientation", orientation}},
                     ordered_json::object());
        out << "LocallyClosed (spacelike translation lattice)\n";
        return kExitOk;
    }
    const TypeIISpec& t2 = need_type_ii(spec, "closure");
    Vec u = parse_vector_arg(point);
    Orientation ori = orientation == "past" ? Orientation::Past : Orientation::Future;
    ClosureCertificate cert = closure_probe(t2, u, ori, o.budget());
    ordered_json verdicts;
    verdicts["outcome"] = to_string(cert.outcome);
    verdicts["orientation"] = orientation;
    ordered_json witnesses;
    if (cert.outcome == ClosureCertificate::Outcome::NonClosed) {
        witnesses["limitPoint"] = vec_json(cert.limit_point);
        witnesses["lightlikeDirection"] = vec_json(cert.lightlike_direction);
        witnesses["memberLineBase"] = vec_json(cert.member_line_base);
        witnesses["memberLineDirection"] = vec_json(cert.member_line_direction);
        witnesses["criticalLevel"] = rat_to_string(cert.critical_level);
        ordered_json params = ordered_json::array();
        for (const Rat& p : cert.verified_params) params.push_back(rat_to_string(p));
        witnesses["verifiedParams"] = std::move(params);
    }
    write_record(o, "closure", spec.digest, verdicts, witnesses);
    out << to_string(cert.outcome);
    if (cert.outcome == ClosureCertificate::Outcome::NonClosed)
        out << " limitPoint=" << vec_to_string(cert.limit_point) << " lightlikeDirection="
            << vec_to_string(cert.lightlike_direction);
    if (!cert.note.empty()) out << " (" << cert.note << ")";
    out << "\n";
    return kExitOk;
}

int cmd_split(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    GroupGenerators gg = spec.build();
    SplitResult split = unipotent_bounded_split(gg);
    out << "basePoint: " << vec_to_string(split.base_point) << "\n";
    out << "V0 dim " << split.v0_part.dim() << ", V1 dim " << split.v1_part.dim() << "\n";
    ordered_json verdicts;
    verdicts["v0Dim"] = split.v0_part.dim();
    verdicts["v1Dim"] = split.v1_part.dim();
    ordered_json witnesses;
    witnesses["basePoint"] = vec_json(split.base_point);
    ordered_json v0b = ordered_json::array(), v1b = ordered_json::array();
    for (const Vec& b : split.v0_part.basis) v0b.push_back(vec_json(b));
    for (const Vec& b : split.v1_part.basis) v1b.push_back(vec_json(b));
    witnesses["v0Basis"] = std::move(v0b);
    witnesses["v1Basis"] = std::move(v1b);
    write_record(o, "split", spec.digest, verdicts, witnesses);
    return kExitOk;
}

int cmd_scan(const SpecFile& spec, const CommonOpts& o, const std::string& from,
             const std::string& to, long nmin, long nmax, std::ostream& out) {
    // gamma_n for the single lattice generator, directly per coefficient.
    std::function<Vec(long, const Vec&)> orbit;
    if (auto* t1 = std::get_if<TypeISpec>(&spec.group)) {
        if (t1->lattice_basis.size() != 1)
            throw Error("scan needs a rank-1 lattice; use query for higher ranks");
        auto bad = validate_type_i(*t1);
        if (!bad.empty()) throw SpecInvalid(std::move(bad));
        const Vec& b = t1->lattice_basis[0];
        orbit = [&b](long n, const Vec& v) { return vadd(v, vscale(Rat(n), b)); };
    } else {
        const TypeIISpec& t2 = need_type_ii(spec, "scan");
        if (t2.rank() != 1)
            throw Error("scan needs a rank-1 lattice; use query for higher ranks");
        orbit = [&t2](long n, const Vec& v) {
            return apply_isometry(group_element(t2, {Int(n)}), v);
        };
    }
    const QuadraticSpace& sp = spec.space();
    Vec u = parse_vector_arg(from), v = parse_vector_arg(to);
    out << "n,value,coneClass\n";
    ordered_json rows = ordered_json::array();
    for (long n = nmin; n <= nmax; ++n) {
        Vec d = vsub(orbit(n, v), u);
        Rat value = sp.norm(d);
        std::string cls = to_string(cone_classify(sp, d));
        out << n << "," << rat_to_string(value) << "," << cls << "\n";
        rows.push_back({{"n", n}, {"value", rat_to_string(value)}, {"coneClass", cls}});
    }
    write_record(o, "scan", spec.digest, ordered_json{{"rows", rows.size()}},
                 ordered_json{{"rows", rows}});
    return kExitOk;
}

int cmd_normalize(const SpecFile& spec, const CommonOpts& o, std::ostream& out) {
    const TypeIISpec& t2 = need_type_ii(spec, "normalize4d");
    example4d::Normalization norm = example4d::normalize_4d(t2);
    out << "scale t = " << surd_to_string(norm.scale) << "\n";
    out << "metric scale = " << rat_to_string(norm.metric_scale) << "\n";
    static const char* names[4] = {"e0", "e1", "e2", "e3"};
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
        std::string line;
        ordered_json jv = ordered_json::array();
        for (const Surd& s : norm.basis[static_cast<size_t>(i)]) {
            if (!line.empty()) line += ", ";
            line += surd_to_string(s);
            jv.push_back(surd_to_string(s));
        }
        out << names[i] << "' = (" << line << ")\n";
        basis.push_back(std::move(jv));
    }
    for (const std::string& v : norm.verification) out << v << "\n";
    ordered_json verdicts;
    verdicts["scale"] = surd_to_string(norm.scale);
    verdicts["metricScale"] = rat_to_string(norm.metric_scale);
    verdicts["verification"] = norm.verification;
    write_record(o, "normalize4d", spec.digest, verdicts, ordered_json{{"basis", basis}});
    return kExitOk;
}

int cmd_example(const std::string& sub, const CommonOpts& o, const std::string& point,
                int range, std::ostream& out) {
    example4d::Example ex = example4d::build();
    if (sub == "build") {
        SpecFile file;
        file.version = "1";
        file.group = ex.spec;
        std::string text = spec_to_json(file);
        out << text;
        if (!o.out_path.empty()) {
            std::ofstream f(o.out_path, std::ios::binary);
            if (!f) throw Error("cannot write '" + o.out_path + "'");
            f << text;
        }
        return kExitOk;
    }
    if (sub == "caega") {
        example4d::IdentityReport rep =
            example4d::displacement_identity(range, std::max(1, o.samples / 10), o.seed);
        out << (rep.ok ? "ok" : "FAIL") << ": " << rep.identities_checked
            << " identities checked; " << rep.detail << "\n";
        write_record(o, "example caega", fnv1a64_digest("example"),
                     ordered_json{{"ok", rep.ok}, {"checked", rep.identities_checked}},
                     ordered_json::object());
        return rep.ok ? kExitOk : kExitFails;
    }
    if (sub == "involution") {
        example4d::InvolutionReport rep = example4d::check_involution();
        out << (rep.ok ? "ok" : "FAIL") << ": " << rep.detail << "\n";
        write_record(o, "example involution", fnv1a64_digest("example"),
                     ordered_json{{"ok", rep.ok}}, ordered_json::object());
        return rep.ok ? kExitOk : kExitFails;
    }
    if (sub == "regions") {
        Vec u = parse_vector_arg(point);
        example4d::RegionReport rep = example4d::region_report(u, o.budget());
        out << to_string(rep.region) << ": futureClosed=" << rep.profile.future_closed
            << " pastClosed=" << rep.profile.past_closed
            << " futureLightlike=" << rep.profile.future_lightlike
            << " pastLightlike=" << rep.profile.past_lightlike
            << " crossChecked=" << rep.cross_checked << "\n"
            << rep.detail << "\n";
        write_record(o, "example regions", fnv1a64_digest("example"),
                     ordered_json{{"region", to_string(rep.region)},
                                  {"crossChecked", rep.cross_checked}},
                     ordered_json::object());
        return rep.cross_checked ? kExitOk : kExitFails;
    }
    if (sub == "iu") {
        Vec u = parse_vector_arg(point);
        example4d::InvariantSet set = example4d::iu_certificate(u, o.budget());
        out << "level: v3 = " << rat_to_string(set.level) << "\n";
        out << set.description << "\n";
        out << "invariance: " << (set.invariance_ok ? "ok" : "FAIL")
            << ", non-membership: " << (set.non_members_ok ? "ok" : "FAIL") << "\n";
        ordered_json samples = ordered_json::array();
        for (const Vec& s : set.samples) samples.push_back(vec_json(s));
        write_record(o, "example iu", fnv1a64_digest("example"),
                     ordered_json{{"invarianceOk", set.invariance_ok},
                                  {"nonMembersOk", set.non_members_ok},
                                  {"level", rat_to_string(set.level)}},
                     ordered_json{{"samples", samples}});
        return (set.invariance_ok && set.non_members_ok) ? kExitOk : kExitFails;
    }
    throw ParseError("unknown example subcommand '" + sub + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact certification of flat Lorentzian quotients"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string spec_path, from, to, point, orientation = "past", example_sub;
    long nmin = -10, nmax = 10;
    int range = 10;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", spec_path, "spec file (JSON)")->required();
        add_common(cmd, opts);
    };

    CLI::App* validate = app.add_subcommand("validate", "check every spec invariant");
    add_spec(validate);
    CLI::App* classify = app.add_subcommand("classify", "per-generator trichotomy and group ellipticity");
    add_spec(classify);
    CLI::App* build = app.add_subcommand("build", "build the generators");
    add_spec(build);
    CLI::App* check_free = app.add_subcommand("check-free", "decide the freeness condition");
    add_spec(check_free);
    CLI::App* check_causal =
        app.add_subcommand("check-causal", "word-ball causality margins (semi-decision)");
    add_spec(check_causal);
    CLI::App* check_strict = app.add_subcommand("check-strict", "strict causality certificate");
    add_spec(check_strict);

    CLI::App* query = app.add_subcommand("query", "past/future membership with witness");
    add_spec(query);
    query->add_option("--from", from, "query point u")->required();
    query->add_option("--to", to, "candidate member v")->required();
    query->add_option("--orientation", orientation, "past|future")->required();

    CLI::App* closure = app.add_subcommand("closure", "closure probe with certificates");
    add_spec(closure);
    closure->add_option("--point", point, "query point u")->required();
    closure->add_option("--orientation", orientation, "past|future")->required();

    CLI::App* split = app.add_subcommand("split", "unipotent-bounded decomposition");
    add_spec(split);

    CLI::App* scan = app.add_subcommand("scan", "CSV scan of orbit values (rank-1 lattices)");
    add_spec(scan);
    scan->add_option("--from", from, "query point u")->required();
    scan->add_option("--to", to, "moved point v")->required();
    scan->add_option("--nmin", nmin, "first lattice coefficient")->capture_default_str();
    scan->add_option("--nmax", nmax, "last lattice coefficient")->capture_default_str();

    CLI::App* normalize = app.add_subcommand("normalize4d", "homothety normalization onto the 4-D model");
    add_spec(normalize);

    CLI::App* example = app.add_subcommand("example", "the distinguished 4-D quotient");
    example->add_option("sub", example_sub, "build|regions|caega|involution|iu")->required();
    example->add_option("--point", point, "base point for regions/iu");
    example->add_option("--range", range, "coefficient range for caega")->capture_default_str();
    add_common(example, opts);

    try {
        std::vector<std::string> argv_rev(args.rbegin(), args.rend());
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (example->parsed()) return cmd_example(example_sub, opts, point, range, out);
        SpecFile spec = load_spec_file(spec_path);
        if (validate->parsed()) return cmd_validate(spec, opts, out);
        if (classify->parsed()) return cmd_classify(spec, opts, out);
        if (build->parsed()) return cmd_build(spec, opts, out);
        if (check_free->parsed()) return cmd_check_free(spec, opts, out);
        if (check_causal->parsed()) return cmd_check_causal(spec, opts, out);
        if (check_strict->parsed()) return cmd_check_strict(spec, opts, out);
        if (query->parsed()) return cmd_query(spec, opts, from, to, orientation, out);
        if (closure->parsed()) return cmd_closure(spec, opts, point, orientation, out);
        if (split->parsed()) return cmd_split(spec, opts, out);
        if (scan->parsed()) return cmd_scan(spec, opts, from, to, nmin, nmax, out);
        if (normalize->parsed()) return cmd_normalize(spec, opts, out);
        err << "error: no subcommand\n";
        return kExitInput;
    } catch (const NonFreeSpec& e) {
        err << "fails: " << e.what() << "\n";
        return kExitFails;
    } catch (const NotAbelian& e) {
        err << "fails: " << e.what() << "\n";
        return kExitFails;
    } catch (const NotParabolic& e) {
        err << "fails: " << e.what() << "\n";
        return kExitFails;
    } catch (const SpecInvalid& e) {
        err << "error: " << e.what() << "\n";
        for (const std::string& v : e.violations) err << "  " << v << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace lorq::cli
