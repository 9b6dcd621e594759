// preord: command-line front end over the library.
//
// Exit codes: 0 success / property holds / suites pass, 1 failure (suite or
// property fails, unreadable or invalid document), 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "preord/alexandroff.hpp"
#include "preord/document.hpp"
#include "preord/dot.hpp"
#include "preord/galois.hpp"
#include "preord/pretorsion.hpp"
#include "preord/testkit/suites.hpp"

using namespace preord;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Unknown names and other command-line mistakes that pass CLI11.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string set_of(const FinSet& carrier, const std::vector<Index>& members) {
    std::vector<std::string> parts;
    for (Index a : members) parts.push_back(carrier.label(a));
    return "{" + join(parts, ",") + "}";
}

void print_preorder(std::ostream& os, const std::string& title, const FinPreorder& p) {
    os << title << ": " << p.size() << (p.size() == 1 ? " point" : " points");
    const auto labels = p.carrier().labels();
    os << " [" << join(labels, ", ") << "]\n";
    std::vector<std::string> rel;
    for (auto [a, b] : p.rel().pairs())
        if (a != b) rel.push_back(p.carrier().label(a) + " <= " + p.carrier().label(b));
    if (rel.empty())
        os << "  discrete\n";
    else
        for (const auto& r : rel) os << "  " << r << "\n";
}

bool is_identity(const PreordMorphism& f) {
    if (f.src().size() != f.dst().size() || !(f.src() == f.dst())) return false;
    for (Index a = 0; a < f.src().size(); ++a)
        if (f(a) != a) return false;
    return true;
}

void print_morphism(std::ostream& os, const std::string& title, const PreordMorphism& f) {
    os << title << ":";
    if (is_identity(f)) {
        os << " identity\n";
        return;
    }
    os << "\n";
    for (Index a = 0; a < f.src().size(); ++a)
        os << "  " << f.src().carrier().label(a) << " -> " << f.dst().carrier().label(f(a)) << "\n";
}

void print_flag(std::ostream& os, const char* name, const Flag& flag) {
    os << name << ": " << (flag.value ? "yes" : "no");
    if (!flag.value) {
        std::vector<std::string> w;
        for (Index i : flag.witness) w.push_back(std::to_string(i));
        os << "  (" << join(w, ", ") << ") " << flag.reason;
    }
    os << "\n";
}

struct Input {
    std::string file;
    std::string object;
    std::string morphism;
    bool strict = false;

    Document load() const {
        return file == "-" ? load_document(std::cin, {strict}) : load_document_file(file, {strict});
    }
};

const NamedPreorder& pick_object(const Document& doc, const std::string& name) {
    if (name.empty()) {
        if (doc.objects.empty()) throw UsageError("the document has no objects");
        return doc.objects.front();
    }
    for (const auto& o : doc.objects)
        if (o.name == name) return o;
    throw UsageError("unknown object \"" + name + "\"");
}

const NamedMorphism& pick_morphism(const Document& doc, const std::string& name) {
    for (const auto& m : doc.morphisms)
        if (m.name == name) return m;
    throw UsageError("unknown morphism \"" + name + "\"");
}

const NamedSpace& pick_space(const Document& doc, const std::string& name) {
    if (name.empty()) {
        if (doc.spaces.empty()) throw UsageError("the document has no spaces");
        return doc.spaces.front();
    }
    for (const auto& s : doc.spaces)
        if (s.name == name) return s;
    throw UsageError("unknown space \"" + name + "\"");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

int cmd_reflect(const Input& in, const std::string& save) {
    const Document doc = in.load();
    const NamedPreorder& p = pick_object(doc, in.object);
    const Reflection r = reflect(p.object);
    std::ostringstream os;
    print_preorder(os, p.name, p.object);
    os << "classes:";
    for (const auto& c : r.classes) os << " " << set_of(p.object.carrier(), c);
    os << "\n";
    print_preorder(os, "F(" + p.name + ")", r.object);
    print_morphism(os, "unit", r.projection);
    std::cout << os.str();
    if (!save.empty()) {
        Document out;
        out.objects.push_back(p);
        out.objects.push_back({"F(" + p.name + ")", r.object});
        out.morphisms.push_back({"unit", p.name, "F(" + p.name + ")", r.projection});
        write_text(save, save_document(out));
    }
    return 0;
}

int cmd_classify(const Input& in) {
    const Document doc = in.load();
    const NamedMorphism& f = pick_morphism(doc, in.morphism);
    const MorphismClassification c = classify(f.morphism);
    std::cout << f.name << ": " << f.source << " -> " << f.target << "\n";
    print_flag(std::cout, "surjective", c.surjective);
    print_flag(std::cout, "fully_faithful", c.fully_faithful);
    print_flag(std::cout, "regular_epi", c.regular_epi);
    print_flag(std::cout, "in_E", c.in_E);
    print_flag(std::cout, "in_M", c.in_M);
    print_flag(std::cout, "in_E_bar", c.in_E_bar);
    print_flag(std::cout, "in_M_star", c.in_M_star);
    print_flag(std::cout, "effective_descent", c.effective_descent);
    return 0;
}

int cmd_factor(const Input& in, const std::string& system) {
    const Document doc = in.load();
    const NamedMorphism& f = pick_morphism(doc, in.morphism);
    const bool reflective = system == "reflective";
    const FactorizationResult r =
        reflective ? reflective_factorization(f.morphism) : monotone_light_factorization(f.morphism);
    std::cout << f.name << ": " << f.source << " -> " << f.target << " (" << to_string(r.system) << ")\n";
    print_preorder(std::cout, "mid", r.mid);
    print_morphism(std::cout, "e", r.e);
    print_morphism(std::cout, "m", r.m);
    print_flag(std::cout, reflective ? "e in_E" : "e in_E_bar", r.e_certificate);
    print_flag(std::cout, reflective ? "m in_M" : "m in_M_star", r.m_certificate);
    return r.e_certificate && r.m_certificate ? 0 : kFailure;
}

int cmd_cover(const Input& in) {
    const Document doc = in.load();
    const NamedPreorder& b = pick_object(doc, in.object);
    const DescentCover c = effective_descent_cover(b.object);
    print_preorder(std::cout, "cover of " + b.name, c.object);
    print_morphism(std::cout, "p", c.p);
    const Flag d = is_effective_descent(c.p);
    print_flag(std::cout, "effective_descent", d);
    return d ? 0 : kFailure;
}

int cmd_sequence(const Input& in) {
    const Document doc = in.load();
    const NamedPreorder& p = pick_object(doc, in.object);
    const NExactSequence s = canonical_sequence(p.object);
    print_preorder(std::cout, "torsion part", s.torsion_part.src());
    print_preorder(std::cout, "object", p.object);
    print_preorder(std::cout, "free part", s.free_part.dst());
    std::cout << "classes:";
    for (const auto& c : s.classes) std::cout << " " << set_of(p.object.carrier(), c);
    std::cout << "\n";
    print_morphism(std::cout, "free_part", s.free_part);
    return 0;
}

void print_space(std::ostream& os, const std::string& title, const AlexandroffSpace& s) {
    os << title << ": " << s.size() << (s.size() == 1 ? " point" : " points") << "\n";
    for (Index x = 0; x < s.size(); ++x)
        os << "  U(" << s.carrier().label(x) << ") = " << set_of(s.carrier(), min_open(s, x)) << "\n";
}

int cmd_topology(const Input& in, bool from_space, const std::string& space_name, const std::string& check) {
    const Document doc = in.load();
    AlexandroffSpace s;
    std::string name;
    if (from_space) {
        const NamedSpace& ns = pick_space(doc, space_name);
        s = ns.space;
        name = ns.name;
        print_space(std::cout, name, s);
        print_preorder(std::cout, "preorder", space_to_preorder(s));
    } else {
        const NamedPreorder& p = pick_object(doc, in.object);
        s = preorder_to_space(p.object);
        name = p.name;
        print_space(std::cout, "space of " + name, s);
    }
    if (check.empty()) return 0;
    const bool holds = check == "t0" ? is_T0(s) : is_partition(s);
    std::cout << check << ": " << (holds ? "yes" : "no") << "\n";
    return holds ? 0 : kFailure;
}

int cmd_check(const std::string& suite, std::size_t max_n, std::uint64_t seed, std::optional<std::size_t> random) {
    testkit::SuiteConfig c;
    c.max_n = max_n;
    c.seed = seed;
    c.random_count = random;
    std::vector<std::string> names;
    if (suite == "all")
        names = testkit::suite_names();
    else
        names.push_back(suite);
    bool all = true;
    for (const auto& name : names) {
        const testkit::SuiteReport r = testkit::run_suite(name, testkit::reference_subject(), c);
        std::cout << name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
                  << r.failure_count << " failures)\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        all = all && r.passed();
    }
    return all ? 0 : kFailure;
}

int cmd_export(const Input& in, const std::string& out) {
    const Document doc = in.load();
    const NamedPreorder& p = pick_object(doc, in.object);
    write_text(out, to_dot(p.object, p.name));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite preorders: reflection, factorizations, descent covers and Alexandroff spaces"};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict", strict, "Require document edges to be transitively closed already");

    Input in;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("FILE", in.file, "Document (\"-\" for standard input)")->required();
    };
    auto add_object = [&](CLI::App* sub) {
        sub->add_option("-o,--object", in.object, "Object name (default: the first object)");
    };

    auto* reflect_cmd = app.add_subcommand("reflect", "Partial-order quotient and its unit");
    add_file(reflect_cmd);
    add_object(reflect_cmd);
    std::string save;
    reflect_cmd->add_option("--save", save, "Also write the object, quotient and unit as a document");

    auto* classify_cmd = app.add_subcommand("classify", "Morphism classes with witnesses");
    add_file(classify_cmd);
    classify_cmd->add_option("-m,--morphism", in.morphism, "Morphism name")->required();

    auto* factor_cmd = app.add_subcommand("factor", "Factorize a morphism");
    add_file(factor_cmd);
    factor_cmd->add_option("-m,--morphism", in.morphism, "Morphism name")->required();
    std::string system = "reflective";
    factor_cmd->add_option("--system", system, "Factorization system")
        ->check(CLI::IsMember({"reflective", "monotone-light"}))
        ->capture_default_str();

    auto* cover_cmd = app.add_subcommand("cover", "Effective-descent cover by a partial order");
    add_file(cover_cmd);
    add_object(cover_cmd);

    auto* sequence_cmd = app.add_subcommand("sequence", "Canonical short N-exact sequence");
    add_file(sequence_cmd);
    add_object(sequence_cmd);

    auto* topology_cmd = app.add_subcommand("topology", "Alexandroff translation");
    add_file(topology_cmd);
    add_object(topology_cmd);
    bool to_space = false, from_space = false;
    std::string space_name, check_prop;
    auto* to_opt = topology_cmd->add_flag("--to-space", to_space, "Object to space (default)");
    topology_cmd->add_flag("--from-space", from_space, "Space to preorder")->excludes(to_opt);
    topology_cmd->add_option("-s,--space", space_name, "Space name with --from-space (default: the first space)");
    topology_cmd->add_option("--check", check_prop, "Test a separation property; exit 1 if it fails")
        ->check(CLI::IsMember({"t0", "partition"}));

    auto* check_cmd = app.add_subcommand("check", "Run oracle-agreement suites");
    std::string suite = "all";
    std::vector<std::string> suites = testkit::suite_names();
    suites.push_back("all");
    check_cmd->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suites))->capture_default_str();
    std::size_t max_n = 3;
    check_cmd->add_option("--max-n", max_n, "Exhaustive carrier size")
        ->envname("PREORD_MAX_N")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
    std::uint64_t seed = 1;
    check_cmd->add_option("--seed", seed, "Random seed")->envname("PREORD_SEED")->capture_default_str();
    std::optional<std::size_t> random;
    check_cmd->add_option("--random", random, "Random instances per suite (default: per-suite)");

    auto* export_cmd = app.add_subcommand("export", "Graphviz export");
    std::string dot_file;
    export_cmd->add_option("--dot", dot_file, "Document to export")->required();
    add_object(export_cmd);
    std::string out_path;
    export_cmd->add_option("--out", out_path, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    in.strict = strict;

    try {
        if (*reflect_cmd) return cmd_reflect(in, save);
        if (*classify_cmd) return cmd_classify(in);
        if (*factor_cmd) return cmd_factor(in, system);
        if (*cover_cmd) return cmd_cover(in);
        if (*sequence_cmd) return cmd_sequence(in);
        if (*topology_cmd) return cmd_topology(in, from_space, space_name, check_prop);
        if (*check_cmd) return cmd_check(suite, max_n, seed, random);
        if (*export_cmd) {
            in.file = dot_file;
            return cmd_export(in, out_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "preord: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "preord: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
