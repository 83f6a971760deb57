// Command-line front end: catalog/file inputs, the individual constructions,
// and the property-suite runner.  Reports are single JSON documents on
// stdout (or an indented text view via --emit text) and are byte-identical
// across runs for identical inputs; timings appear only under --timing.
//
// Exit codes: 0 ok, 2 validation failure, 3 cross-check disagreement,
// 4 enumeration bound exceeded; `suite` exits with the number of failed
// property families (capped).

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alglab/algebra.hpp"
#include "alglab/birkhoff.hpp"
#include "alglab/catalog.hpp"
#include "alglab/commutators.hpp"
#include "alglab/congruence.hpp"
#include "alglab/error.hpp"
#include "alglab/extensions.hpp"
#include "alglab/io.hpp"
#include "alglab/report.hpp"
#include "alglab/suite.hpp"

namespace {

using namespace alglab;

struct Opts {
    std::string algebra_ref;   // -A
    std::string variety_ref;   // -B
    std::string m_gens;        // -M
    std::string n_gens;        // -N
    std::string j_gens;        // -J
    std::string quotient_by;   // --quotient-by
    std::string target_ref;    // --target
    std::string map_images;    // --map
    std::string kp_of;         // --kernel-pair-of
    std::string method = "categorical";
    std::string emit = "json";
    std::string only;
    bool cross_check = false;
    bool quick = false;
    bool serial = false;
    bool timing = false;
    int bound = 24;
    uint64_t seed = 1;
    std::string command_echo;
};

AlgebraPtr resolve_algebra(const std::string& ref) {
    if (ref.empty()) throw ValidationError("no algebra given; pass -A <file|catalog-name>");
    if (is_catalog_algebra(ref)) return catalog_algebra(ref);
    return load_algebra(ref);
}

VarietySpec resolve_variety(const std::string& ref) {
    if (ref.empty()) throw ValidationError("no variety given; pass -B <file|catalog-name>");
    if (is_catalog_variety(ref)) return catalog_variety(ref);
    return load_variety(ref);
}

// Split a generator list on commas outside parentheses; element names such
// as "(a,b)" from product constructions stay intact.
std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (std::string& name : out) {
        size_t b = name.find_first_not_of(" \t");
        size_t e = name.find_last_not_of(" \t");
        name = (b == std::string::npos) ? "" : name.substr(b, e - b + 1);
        if (name.empty()) throw ValidationError("empty element name in generator list '" + s + "'");
    }
    return out;
}

NormalSubobject parse_sub(const AlgebraPtr& a, const std::string& s, const char* flag) {
    if (s.empty())
        throw ValidationError(std::string("missing ") + flag +
                              " (generators, 'all', or '1') for algebra '" + a->name() + "'");
    if (s == "all") {
        std::vector<int> all(static_cast<size_t>(a->size()));
        std::iota(all.begin(), all.end(), 0);
        return NormalSubobject{a, std::move(all)};
    }
    std::vector<int> gens;
    for (const std::string& name : split_names(s)) gens.push_back(a->element_by_name(name));
    return normal_closure(a, gens);
}

report_json algebra_inline(const FiniteAlgebra& a) {
    return report_json::parse(algebra_to_json(a));
}

std::string digest_of(std::vector<std::string> parts) {
    return inputs_digest(parts);
}

report_json base_report(const Opts& o, std::vector<std::string> digest_parts) {
    report_json doc;
    doc["command"] = o.command_echo;
    doc["digest"] = digest_of(std::move(digest_parts));
    return doc;
}

int finish(report_json& doc, const Opts& o,
           std::chrono::steady_clock::time_point start, int code = 0) {
    if (o.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        doc["timing"] = {{"total_ms", ms}};
    }
    emit_report(doc, o.emit == "text", std::cout);
    return code;
}

// ---------------------------------------------------------------------------

int cmd_inspect(const Opts& o) {
    auto start = std::chrono::steady_clock::now();
    AlgebraPtr a = resolve_algebra(o.algebra_ref);
    report_json doc = base_report(o, {"inspect", algebra_to_json(*a), std::to_string(o.bound)});
    report_json res;
    res["algebra"] = algebra_inline(*a);
    res["group_structure"] = a->group_ops().has_value();
    report_json sat = report_json::object();
    for (const std::string& bn : catalog_variety_names()) {
        VarietySpec b = catalog_variety(bn);
        if (variety_applies(b, a->signature())) sat[bn] = satisfies(*a, b.identities);
    }
    res["satisfies"] = sat;
    report_json normals = report_json::array();
    for (const NormalSubobject& m : normals_enumerate(a, o.bound)) normals.push_back(members_json(m));
    res["normal_subobjects"] = normals;
    report_json lattice = report_json::array();
    for (const Congruence& th : congruence_lattice(a, o.bound)) lattice.push_back(partition_json(*a, th));
    res["congruence_lattice"] = lattice;
    doc["results"] = res;
    return finish(doc, o, start);
}

int cmd_radical(const Opts& o, bool reflect_view) {
    auto start = std::chrono::steady_clock::now();
    AlgebraPtr a = resolve_algebra(o.algebra_ref);
    VarietySpec b = resolve_variety(o.variety_ref);
    report_json doc = base_report(o, {reflect_view ? "reflect" : "radical", algebra_to_json(*a),
                                      variety_to_json(b)});
    Exec exec = o.serial ? Exec::serial : default_exec();
    Reflection r = radical(a, b, exec);
    report_json res;
    res["radical"] = members_json(r.radical);
    res["radical_partition"] = partition_json(*a, kernel_pair(r.unit_map));
    if (reflect_view) {
        res["reflected"] = algebra_inline(*r.reflected);
        report_json unit = report_json::array();
        for (int x = 0; x < a->size(); ++x)
            unit.push_back(r.reflected->element_name(r.unit_map(x)));
        res["unit_map"] = unit;
    } else {
        res["reflected_size"] = r.reflected->size();
    }
    res["already_in_subvariety"] = r.radical.is_unit_only();
    doc["results"] = res;
    return finish(doc, o, start);
}

struct MethodValue {
    std::string method;
    std::vector<int> members;  // ambient, sorted
};

MethodValue run_method(const std::string& method, const AlgebraPtr& a, const NormalSubobject& m,
                       const NormalSubobject& n, const VarietySpec& b, const Opts& o, Exec exec) {
    if (method == "categorical") return {method, commutator_categorical(a, m, n, b, exec).members};
    if (method == "words") return {method, commutator_words(a, m, n, b.word_scheme, exec).members};
    if (method == "froehlich") {
        if (!n.is_whole())
            throw ValidationError("method froehlich computes [M,A]; it needs -N all");
        QuotientResult q = quotient(a, congruence_of_normal(m));
        return {method, froehlich_commutator(q.proj, b, exec).value.members};
    }
    if (method == "higgins") {
        if (!is_abelian_spec(b, a->signature()))
            throw ValidationError("method higgins computes the absolute word commutator; "
                                  "it applies only with the abelian variety (-B ab)");
        return {method, higgins_commutator(a, m, n, 2, exec).value.members};
    }
    if (method == "huq") {
        if (!is_abelian_spec(b, a->signature()))
            throw ValidationError("method huq applies only with the abelian variety (-B ab)");
        return {method, huq_commutator(a, m, n, o.bound, exec).members};
    }
    if (method == "smith") {
        if (!is_abelian_spec(b, a->signature()))
            throw ValidationError("method smith applies only with the abelian variety (-B ab)");
        NormalSubobject jn = join_normal(m, n);
        SubalgebraResult join = subalgebra(a, jn.members);
        auto local = [&](const NormalSubobject& s) {
            std::vector<int> mem;
            for (int e : s.members)
                mem.push_back(static_cast<int>(
                    std::lower_bound(join.to_ambient.begin(), join.to_ambient.end(), e) -
                    join.to_ambient.begin()));
            return NormalSubobject::make(join.algebra, std::move(mem));
        };
        Congruence sm = smith_commutator(join.algebra, congruence_of_normal(local(m)),
                                         congruence_of_normal(local(n)));
        std::vector<int> mem;
        for (int e : sm.unit_class()) mem.push_back(join.to_ambient[static_cast<size_t>(e)]);
        return {method, std::move(mem)};
    }
    throw ValidationError("unknown method '" + method +
                          "'; expected categorical|words|froehlich|higgins|huq|smith");
}

bool word_route_available(const FiniteAlgebra& a) {
    if (a.group_ops()) return true;
    const Signature& sig = a.signature();
    int mul = sig.find("mul"), rdiv = sig.find("rdiv");
    return mul >= 0 && sig.op(mul).arity == 2 && rdiv >= 0 && sig.op(rdiv).arity == 2;
}

int cmd_commutator(const Opts& o) {
    auto start = std::chrono::steady_clock::now();
    AlgebraPtr a = resolve_algebra(o.algebra_ref);
    VarietySpec b = resolve_variety(o.variety_ref);
    NormalSubobject m = parse_sub(a, o.m_gens, "-M");
    NormalSubobject n = parse_sub(a, o.n_gens, "-N");
    report_json doc = base_report(
        o, {"commutator", algebra_to_json(*a), variety_to_json(b), o.m_gens, o.n_gens, o.method,
            o.cross_check ? "cross" : "single"});
    Exec exec = o.serial ? Exec::serial : default_exec();
    report_json res;
    res["M"] = members_json(m);
    res["N"] = members_json(n);

    MethodValue primary = run_method(o.cross_check ? "categorical" : o.method, a, m, n, b, o, exec);
    auto names = [&](const std::vector<int>& mem) {
        report_json arr = report_json::array();
        for (int e : mem) arr.push_back(a->element_name(e));
        return arr;
    };
    res["method"] = primary.method;
    res["value"] = names(primary.members);
    res["size"] = primary.members.size();
    res["vanishes"] = primary.members.size() == 1;

    bool all_agree = true;
    if (o.cross_check) {
        std::vector<std::string> methods = {"categorical"};
        if (!b.word_scheme.empty() && word_route_available(*a)) methods.push_back("words");
        if (n.is_whole()) methods.push_back("froehlich");
        if (is_abelian_spec(b, a->signature())) {
            if (a->group_ops()) methods.push_back("higgins");
            methods.push_back("huq");
            methods.push_back("smith");
        }
        report_json table = report_json::array();
        for (const std::string& method : methods) {
            MethodValue v = run_method(method, a, m, n, b, o, exec);
            bool agree = v.members == primary.members;
            all_agree = all_agree && agree;
            table.push_back({{"method", method}, {"value", names(v.members)}, {"agree", agree}});
        }
        res["cross_check"] = table;
        res["agreement"] = all_agree;
    }
    doc["results"] = res;
    int code = finish(doc, o, start);
    if (!all_agree) {
        std::cerr << "cross-check disagreement on [M,N] in '" << a->name() << "' relative to '"
                  << b.name << "'\n";
        return 3;
    }
    return code;
}

Extension extension_from_opts(const Opts& o, const AlgebraPtr& a) {
    if (!o.quotient_by.empty() && !o.target_ref.empty())
        throw ValidationError("pass either --quotient-by or --target/--map, not both");
    if (!o.quotient_by.empty()) {
        NormalSubobject j = parse_sub(a, o.quotient_by, "--quotient-by");
        return make_extension(quotient(a, congruence_of_normal(j)).proj);
    }
    if (!o.target_ref.empty()) {
        AlgebraPtr t = resolve_algebra(o.target_ref);
        if (o.map_images.empty())
            throw ValidationError("--target needs --map with one image per domain element, "
                                  "in element order");
        std::vector<std::string> imgs = split_names(o.map_images);
        if (static_cast<int>(imgs.size()) != a->size())
            throw ValidationError("--map lists " + std::to_string(imgs.size()) +
                                  " images for the " + std::to_string(a->size()) + " elements of '" +
                                  a->name() + "'");
        std::vector<int> map;
        for (const std::string& name : imgs) map.push_back(t->element_by_name(name));
        return make_extension(hom_check(a, t, std::move(map)));
    }
    throw ValidationError("no extension given; pass --quotient-by <gens> or --target/--map");
}

int cmd_central(const Opts& o) {
    auto start = std::chrono::steady_clock::now();
    AlgebraPtr a = resolve_algebra(o.algebra_ref);
    VarietySpec b = resolve_variety(o.variety_ref);
    Extension e = extension_from_opts(o, a);
    report_json doc = base_report(o, {"central", algebra_to_json(*a), variety_to_json(b),
                                      o.quotient_by, o.target_ref, o.map_images});
    Exec exec = o.serial ? Exec::serial : default_exec();
    report_json res;
    res["kernel"] = members_json(e.kernel);
    res["codomain_size"] = e.map.codomain->size();
    FroehlichValue v = froehlich_commutator(e.map, b, exec);
    res["kernel_commutator"] = members_json(v.value);
    bool central = central_check(e, b, exec);
    res["central"] = central;
    res["trivial"] = trivial_check(e, b, exec);
    if (!central) {
        Extension c = centralisation(e, b, exec);
        res["centralisation_domain_size"] = c.map.domain->size();
    }
    doc["results"] = res;
    return finish(doc, o, start);
}

int cmd_double_central(const Opts& o) {
    auto start = std::chrono::steady_clock::now();
    AlgebraPtr a = resolve_algebra(o.algebra_ref);
    VarietySpec b = resolve_variety(o.variety_ref);
    if (!o.kp_of.empty() && !o.m_gens.empty())
        throw ValidationError("pass either -M/-N (quotient square) or --kernel-pair-of, not both");
    DoubleExtension sq;
    std::string shape;
    if (!o.kp_of.empty()) {
        NormalSubobject j = parse_sub(a, o.kp_of, "--kernel-pair-of");
        sq = kernel_pair_square(quotient(a, congruence_of_normal(j)).proj);
        shape = "kernel-pair square of the quotient by " + o.kp_of;
    } else {
        NormalSubobject m = parse_sub(a, o.m_gens, "-M");
        NormalSubobject n = parse_sub(a, o.n_gens, "-N");
        sq = mn_square(a, m, n);
        shape = "quotient square of M, N on their join";
    }
    report_json doc = base_report(o, {"double-central", algebra_to_json(*a), variety_to_json(b),
                                      o.m_gens, o.n_gens, o.kp_of});
    Exec exec = o.serial ? Exec::serial : default_exec();
    report_json res;
    res["square"] = shape;
    res["sizes"] = {{"X", sq.d.domain->size()},
                    {"D", sq.f.domain->size()},
                    {"C", sq.g.domain->size()},
                    {"Z", sq.g.codomain->size()}};
    res["double_extension"] = double_extension_check(sq);
    res["double_central"] = double_central_check(sq, b, exec);
    doc["results"] = res;
    return finish(doc, o, start);
}

int cmd_threefold(const Opts& o) {
    auto start = std::chrono::steady_clock::now();
    AlgebraPtr a = resolve_algebra(o.algebra_ref);
    NormalSubobject j = parse_sub(a, o.j_gens, "-J");
    NormalSubobject m = parse_sub(a, o.m_gens, "-M");
    NormalSubobject n = parse_sub(a, o.n_gens, "-N");
    report_json doc =
        base_report(o, {"threefold", algebra_to_json(*a), o.j_gens, o.m_gens, o.n_gens});
    report_json res;
    res["J"] = members_json(j);
    res["M"] = members_json(m);
    res["N"] = members_json(n);
    QuotientResult q = quotient(a, congruence_of_normal(j));
    NormalSubobject lhs = direct_image(q.proj, meet_normal(m, n));
    NormalSubobject rhs = meet_normal(direct_image(q.proj, m), direct_image(q.proj, n));
    res["image_of_meet"] = members_json(lhs);
    res["meet_of_images"] = members_json(rhs);
    res["holds"] = threefold_criterion(a, j, m, n);
    doc["results"] = res;
    return finish(doc, o, start);
}

int cmd_suite(const Opts& o) {
    auto start = std::chrono::steady_clock::now();
    SuiteOptions so;
    so.quick = o.quick;
    so.only = o.only;
    so.bound = o.bound;
    so.seed = o.seed;
    so.exec = o.serial ? Exec::serial : default_exec();
    report_json doc = base_report(o, {"suite", o.quick ? "quick" : "full", o.only,
                                      std::to_string(o.bound), std::to_string(o.seed)});
    SuiteResult r = run_suite(so);
    size_t failed_lines = 0;
    report_json lines = report_json::array();
    for (const SuiteLine& l : r.lines) {
        report_json line = {{"family", l.family}, {"instance", l.instance}, {"pass", l.pass}};
        if (!l.detail.empty()) line["detail"] = l.detail;
        lines.push_back(std::move(line));
        if (!l.pass) ++failed_lines;
    }
    report_json res;
    res["instances"] = r.lines.size();
    res["failed_instances"] = failed_lines;
    res["failed_families"] = r.failed_families;
    res["lines"] = std::move(lines);
    doc["results"] = res;
    int failed = static_cast<int>(r.failed_families.size());
    return finish(doc, o, start, std::min(failed, 120));
}

// CLI11 rejects option values that begin with '-' (they look like flags), but
// element names such as "-1" in q8 are legitimate input; fuse those values
// onto their flag before parsing.
std::vector<std::string> fuse_dash_values(int argc, char** argv) {
    static const std::vector<std::string> taking = {
        "-A", "-B", "-M", "-N", "-J", "--quotient-by", "--target", "--map", "--kernel-pair-of",
        "--method", "--emit", "--seed", "--bound", "--only"};
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        bool takes = std::find(taking.begin(), taking.end(), tok) != taking.end();
        if (takes && i + 1 < argc && argv[i + 1][0] == '-') {
            std::string val = argv[++i];
            if (tok[1] == '-') out.push_back(tok + "=" + val);
            else out.push_back(tok + val);  // short options take attached values
        } else {
            out.push_back(std::move(tok));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Opts o;
    for (int i = 0; i < argc; ++i) {
        if (i) o.command_echo += ' ';
        o.command_echo += (i == 0) ? "alglab" : argv[i];
    }

    CLI::App app{"relative commutators of normal subobjects in finite pointed algebras"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_b) {
        sub->add_option("-A", o.algebra_ref, "algebra: catalog name or JSON file");
        if (needs_b) sub->add_option("-B", o.variety_ref, "variety: catalog name or JSON file");
        sub->add_option("--emit", o.emit, "report format: json|text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--bound", o.bound, "lattice enumeration cap (default 24)");
        sub->add_option("--seed", o.seed, "seed for randomised parser instances");
        sub->add_flag("--serial", o.serial, "run the enumeration kernels serially");
        sub->add_flag("--timing", o.timing, "include wall-clock timing in the report");
        return sub;
    };

    CLI::App* inspect = add_common(app.add_subcommand("inspect", "list subobjects and congruences"), false);
    CLI::App* rad = add_common(app.add_subcommand("radical", "radical relative to a subvariety"), true);
    CLI::App* refl = add_common(app.add_subcommand("reflect", "reflection into a subvariety"), true);
    CLI::App* comm = add_common(app.add_subcommand("commutator", "relative commutator of two normal subobjects"), true);
    comm->add_option("-M", o.m_gens, "generators of M ('all' or '1' allowed)");
    comm->add_option("-N", o.n_gens, "generators of N");
    comm->add_option("--method", o.method, "categorical|words|froehlich|higgins|huq|smith");
    comm->add_flag("--cross-check", o.cross_check, "run all applicable methods and compare");
    CLI::App* cent = add_common(app.add_subcommand("central", "centrality of an extension"), true);
    cent->add_option("--quotient-by", o.quotient_by, "kernel generators of the quotient extension");
    cent->add_option("--target", o.target_ref, "codomain: catalog name or JSON file");
    cent->add_option("--map", o.map_images, "images of the domain elements, in element order");
    CLI::App* dc = add_common(app.add_subcommand("double-central", "double centrality of a square"), true);
    dc->add_option("-M", o.m_gens, "generators of M");
    dc->add_option("-N", o.n_gens, "generators of N");
    dc->add_option("--kernel-pair-of", o.kp_of, "use the kernel-pair square of the quotient by these generators");
    CLI::App* tf = add_common(app.add_subcommand("threefold", "image of a meet against the meet of images"), false);
    tf->add_option("-J", o.j_gens, "generators of the quotient kernel J");
    tf->add_option("-M", o.m_gens, "generators of M");
    tf->add_option("-N", o.n_gens, "generators of N");
    CLI::App* suite = add_common(app.add_subcommand("suite", "run the property families over the catalog"), false);
    suite->add_flag("--quick", o.quick, "restrict to algebras with at most 8 elements");
    suite->add_option("--only", o.only, "run a single property family");

    std::vector<std::string> args = fuse_dash_values(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (o.serial) set_default_exec(Exec::serial);
    try {
        if (app.got_subcommand(inspect)) return cmd_inspect(o);
        if (app.got_subcommand(rad)) return cmd_radical(o, false);
        if (app.got_subcommand(refl)) return cmd_radical(o, true);
        if (app.got_subcommand(comm)) return cmd_commutator(o);
        if (app.got_subcommand(cent)) return cmd_central(o);
        if (app.got_subcommand(dc)) return cmd_double_central(o);
        if (app.got_subcommand(tf)) return cmd_threefold(o);
        if (app.got_subcommand(suite)) return cmd_suite(o);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
