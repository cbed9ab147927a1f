// Command-line surface for the cluster diagram toolkit.
//
// Exit codes: 0 success / 2-finite, 1 recognized 2-infinite (or no match),
// 2 inconclusive (limits reached), 3 input error.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdiag/bm.hpp"
#include "cdiag/canon.hpp"
#include "cdiag/catalog.hpp"
#include "cdiag/diagram.hpp"
#include "cdiag/dynkin.hpp"
#include "cdiag/errors.hpp"
#include "cdiag/explore.hpp"
#include "cdiag/mutation.hpp"
#include "cdiag/parallel.hpp"
#include "cdiag/recognize.hpp"
#include "cdiag/textio.hpp"

using cdiag::error;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInfinite = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

// CLUSTER_RECOG_LIMITS="members=500000,weight=4" overrides the default
// exploration limits of every command that explores mutation classes.
cdiag::ExplorationLimits env_limits() {
    cdiag::ExplorationLimits lim;
    const char* env = std::getenv("CLUSTER_RECOG_LIMITS");
    if (!env || !*env) return lim;
    std::string s(env);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string part = s.substr(pos, comma - pos);
        std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw error(cdiag::errc::bad_params, "CLUSTER_RECOG_LIMITS entry '" + part + "' is not key=value");
        std::string key = part.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(part.substr(eq + 1));
        } catch (const std::exception&) {
            throw error(cdiag::errc::bad_params, "CLUSTER_RECOG_LIMITS value in '" + part + "' is not a number");
        }
        if (value <= 0)
            throw error(cdiag::errc::bad_params, "CLUSTER_RECOG_LIMITS value in '" + part + "' must be positive");
        if (key == "members")
            lim.max_members = static_cast<std::size_t>(value);
        else if (key == "weight")
            lim.max_weight = value;
        else
            throw error(cdiag::errc::bad_params, "CLUSTER_RECOG_LIMITS key '" + key + "' is not members or weight");
        pos = comma + 1;
    }
    return lim;
}

const char* verdict_name(cdiag::VerdictKind k) {
    switch (k) {
    case cdiag::VerdictKind::finite: return "2-finite";
    case cdiag::VerdictKind::infinite: return "2-infinite";
    case cdiag::VerdictKind::inconclusive: return "inconclusive";
    }
    return "unknown";
}

const char* kind_name(const cdiag::EntryKind& k) {
    switch (k.tag) {
    case cdiag::EntryKind::Tag::series: return "series";
    case cdiag::EntryKind::Tag::fixture: return "fixture";
    case cdiag::EntryKind::Tag::generated: return "generated";
    }
    return "unknown";
}

void print_json(const ordered_json& j) { std::printf("%s\n", j.dump(2).c_str()); }

int run_validate(const std::string& path, bool human) {
    // Split syntax errors (exit 3) from semantic rejection (exit 1): parse
    // the file shape first, then let diagram construction judge it.
    std::string text;
    {
        std::FILE* f = std::fopen(path.c_str(), "rb");
        if (!f) throw error(cdiag::errc::io_error, "cannot open " + path);
        char buf[4096];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
        std::fclose(f);
    }
    try {
        cdiag::Diagram d = cdiag::parse_diagram_text(text);
        if (human)
            std::printf("valid: %d vertices, %zu edges\n", d.size(), d.edges().size());
        else
            print_json({{"valid", true}, {"vertices", d.size()}, {"edges", d.edges().size()}});
        return kOk;
    } catch (const error& e) {
        if (e.code() == cdiag::errc::format_error) throw; // syntax: exit 3
        if (human)
            std::printf("invalid: %s\n", e.what());
        else
            print_json({{"valid", false}, {"error", e.what()}});
        return kInfinite; // semantic rejection
    }
}

int run_mutate(const std::string& path, const std::vector<int>& at, const std::string& seq,
               const std::string& out) {
    cdiag::Diagram d = cdiag::read_diagram_file(path);
    std::vector<cdiag::MutationStep> steps;
    for (int k : at) steps.push_back({k});
    if (!seq.empty() && seq.back() == ',')
        throw error(cdiag::errc::bad_params, "--seq entry '' is not a vertex index");
    std::size_t pos = 0;
    while (pos < seq.size()) {
        std::size_t comma = seq.find(',', pos);
        if (comma == std::string::npos) comma = seq.size();
        std::string part = seq.substr(pos, comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw error(cdiag::errc::bad_params, "--seq entry '" + part + "' is not a vertex index");
        try {
            steps.push_back({std::stoi(part)});
        } catch (const std::exception&) {
            throw error(cdiag::errc::bad_params, "--seq entry '" + part + "' is not a vertex index");
        }
        pos = comma + 1;
    }
    cdiag::Diagram m = cdiag::mutate_seq(d, steps);
    if (out.empty())
        std::fputs(cdiag::print_diagram_text(m).c_str(), stdout);
    else
        cdiag::write_diagram_file(out, m);
    return kOk;
}

int run_recognize(const std::string& path, bool witness, bool label, bool reduce,
                  const std::string& catalog_file, bool human) {
    cdiag::Diagram d = cdiag::read_diagram_file(path);
    cdiag::RecognizeOptions opt;
    opt.limits = env_limits();
    opt.want_reduction = reduce;
    if (!catalog_file.empty()) opt.extra_catalog = cdiag::load_catalog(catalog_file);
    cdiag::RecognitionReport rep = cdiag::recognize(d, opt);

    ordered_json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["method"] = cdiag::recognition_method_name(rep.method);
    if (witness && rep.witness) j["witness"] = *rep.witness;
    if (label) j["witness_label"] = rep.witness_entry ? ordered_json(rep.witness_entry->label) : ordered_json(nullptr);
    if (reduce && rep.reduction) {
        std::vector<int> ks;
        for (const cdiag::MutationStep& s : rep.reduction->path) ks.push_back(s.vertex);
        j["reduction"] = ordered_json{{"label", rep.reduction->label}, {"path", ks}};
    }
    if (human) {
        std::printf("%s (method %s)\n", verdict_name(rep.verdict), cdiag::recognition_method_name(rep.method));
        if (witness && rep.witness) {
            std::printf("witness vertices:");
            for (int v : *rep.witness) std::printf(" %d", v);
            std::printf("\n");
        }
        if (label)
            std::printf("witness label: %s\n", rep.witness_entry ? rep.witness_entry->label.c_str() : "none");
        if (reduce && rep.reduction) {
            std::printf("reduces to %s via mutations at:", rep.reduction->label.c_str());
            for (const cdiag::MutationStep& s : rep.reduction->path) std::printf(" %d", s.vertex);
            std::printf("\n");
        }
    } else {
        print_json(j);
    }
    switch (rep.verdict) {
    case cdiag::VerdictKind::finite: return kOk;
    case cdiag::VerdictKind::infinite: return kInfinite;
    case cdiag::VerdictKind::inconclusive: return kInconclusive;
    }
    return kInputError;
}

int run_class(const std::string& path, std::size_t limit, bool stats, bool human) {
    cdiag::Diagram d = cdiag::read_diagram_file(path);
    cdiag::ExplorationLimits lim = env_limits();
    if (limit > 0) lim.max_members = limit;
    cdiag::ClassSummary s = cdiag::enumerate_class(d, lim);
    ordered_json j;
    j["size"] = s.size();
    j["truncated"] = s.truncated;
    j["max_weight"] = s.max_weight_seen;
    if (stats) {
        std::map<cdiag::Weight, int> by_weight;
        for (const cdiag::CanonicalForm& f : s.members) {
            cdiag::Weight w = 1;
            for (const cdiag::Edge& e : cdiag::diagram_of_form(f).edges()) w = std::max(w, e.weight);
            by_weight[w]++;
        }
        ordered_json h;
        for (auto [w, c] : by_weight) h[std::to_string(w)] = c;
        j["members_by_max_weight"] = h;
    }
    if (human) {
        std::printf("class size %zu%s, max weight %lld\n", s.size(), s.truncated ? " (truncated)" : "",
                    static_cast<long long>(s.max_weight_seen));
    } else {
        print_json(j);
    }
    return s.truncated ? kInconclusive : kOk;
}

int run_bm(const std::string& path, const std::string& other, bool human) {
    cdiag::Diagram d = cdiag::read_diagram_file(path);
    cdiag::BmGraph g = cdiag::skeleton_graph(d);
    if (!other.empty()) {
        cdiag::BmGraph h = cdiag::skeleton_graph(cdiag::read_diagram_file(other));
        if (g.n != h.n) {
            if (human)
                std::printf("not equivalent (different sizes)\n");
            else
                print_json({{"equivalent", false}});
            return kInfinite;
        }
        std::optional<bool> eq = cdiag::bm_equivalent(g, h);
        if (human)
            std::printf("%s\n", !eq ? "undecided (limit reached)" : *eq ? "equivalent" : "not equivalent");
        else
            print_json({{"equivalent", eq ? ordered_json(*eq) : ordered_json(nullptr)}});
        return !eq ? kInconclusive : *eq ? kOk : kInfinite;
    }
    int dim_v0 = static_cast<int>(cdiag::radical_basis(g).size());
    int dim_v00 = static_cast<int>(cdiag::v00_basis(g).size());
    std::optional<int> arf;
    if (dim_v0 == dim_v00) arf = cdiag::arf(g);
    if (human) {
        std::printf("dim V0 = %d, dim V00 = %d, arf = %s\n", dim_v0, dim_v00,
                    arf ? std::to_string(*arf).c_str() : "undefined");
    } else {
        print_json({{"dim_v0", dim_v0},
                    {"dim_v00", dim_v00},
                    {"arf", arf ? ordered_json(*arf) : ordered_json(nullptr)}});
    }
    return kOk;
}

std::vector<cdiag::CatalogEntry> builtin_catalog() {
    std::vector<cdiag::CatalogEntry> entries = cdiag::fixture_entries();
    for (cdiag::CatalogEntry& e : cdiag::generate_minimal_by_extension(3)) entries.push_back(std::move(e));
    return entries;
}

int run_catalog_generate(int base, const std::string& out, bool human) {
    std::vector<cdiag::CatalogEntry> entries = cdiag::generate_exceptional(base, env_limits());
    cdiag::save_catalog(entries, out);
    if (human)
        std::printf("wrote %zu entries (%zu skeleton groups) to %s\n", entries.size(),
                    cdiag::skeleton_group_count(entries), out.c_str());
    else
        print_json({{"entries", entries.size()},
                    {"skeleton_groups", cdiag::skeleton_group_count(entries)},
                    {"out", out}});
    return kOk;
}

int run_catalog_list(const std::string& file, bool human) {
    std::vector<cdiag::CatalogEntry> entries = file.empty() ? builtin_catalog() : cdiag::load_catalog(file);
    if (human) {
        for (const cdiag::CatalogEntry& e : entries)
            std::printf("%-28s %s, %d vertices\n", e.label.c_str(), kind_name(e.kind),
                        cdiag::diagram_of_form(e.form).size());
    } else {
        ordered_json arr = ordered_json::array();
        for (const cdiag::CatalogEntry& e : entries)
            arr.push_back({{"label", e.label},
                           {"kind", kind_name(e.kind)},
                           {"vertices", cdiag::diagram_of_form(e.form).size()}});
        print_json({{"entries", arr}});
    }
    return kOk;
}

int run_catalog_match(const std::string& path, const std::string& file, bool human) {
    cdiag::Diagram d = cdiag::read_diagram_file(path);
    std::vector<cdiag::CatalogEntry> extra;
    if (!file.empty()) extra = cdiag::load_catalog(file);
    std::optional<cdiag::CatalogEntry> m = cdiag::match_entry(d, extra);
    if (human)
        std::printf("%s\n", m ? (m->label + " (" + kind_name(m->kind) + ")").c_str() : "NoMatch");
    else if (m)
        print_json({{"match", m->label}, {"kind", kind_name(m->kind)}});
    else
        print_json({{"match", nullptr}});
    return m ? kOk : kInfinite;
}

int run_export_dot(const std::string& path) {
    std::fputs(cdiag::to_dot(cdiag::read_diagram_file(path)).c_str(), stdout);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster algebra diagram toolkit: mutation, 2-finiteness, catalogs"};
    app.require_subcommand(1);
    int threads = 1;
    bool human = false;
    app.add_option("--threads", threads, "worker threads for exploration")->check(CLI::PositiveNumber);
    app.add_flag("--human", human, "prose output instead of JSON");

    std::string path, out, seq, other, catalog_file;
    std::vector<int> at;
    bool witness = false, label = false, reduce = false, stats = false;
    std::size_t limit = 0;
    int base = 6;

    CLI::App* validate = app.add_subcommand("validate", "check a diagram file");
    validate->add_option("path", path)->required();

    CLI::App* mutate_cmd = app.add_subcommand("mutate", "apply mutations and print the result");
    mutate_cmd->add_option("path", path)->required();
    mutate_cmd->add_option("--at", at, "vertex to mutate at (repeatable, applied in order)");
    mutate_cmd->add_option("--seq", seq, "comma-separated vertex list, applied after --at");
    mutate_cmd->add_option("--out", out, "write the result here instead of stdout");

    CLI::App* recognize_cmd = app.add_subcommand("recognize", "decide 2-finiteness");
    recognize_cmd->add_option("path", path)->required();
    recognize_cmd->add_flag("--witness", witness, "report a minimal 2-infinite witness subdiagram");
    recognize_cmd->add_flag("--label", label, "report the witness catalog label");
    recognize_cmd->add_flag("--reduce", reduce, "report a mutation route to a named shape");
    recognize_cmd->add_option("--catalog", catalog_file, "extra catalog file for labeling");

    CLI::App* class_cmd = app.add_subcommand("class", "enumerate the mutation class");
    class_cmd->add_option("path", path)->required();
    class_cmd->add_option("--limit", limit, "stop after this many members");
    class_cmd->add_flag("--stats", stats, "histogram members by max edge weight");

    CLI::App* bm_cmd = app.add_subcommand("bm", "invariants of the underlying graph");
    bm_cmd->add_option("path", path)->required();
    bm_cmd->add_flag("--invariants", "report dim V0, dim V00 and Arf (the default)");
    bm_cmd->add_option("--equiv", other, "instead decide basic-move equivalence with this diagram");

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "minimal 2-infinite catalog tools");
    catalog_cmd->require_subcommand(1);
    CLI::App* cat_gen = catalog_cmd->add_subcommand("generate", "regenerate exceptional entries");
    cat_gen->add_option("--base", base, "base rank 6, 7 or 8")->required();
    cat_gen->add_option("--out", out, "catalog file to write")->required();
    CLI::App* cat_list = catalog_cmd->add_subcommand("list", "list catalog entries");
    cat_list->add_option("--file", catalog_file, "catalog file (default: built-in entries)");
    CLI::App* cat_match = catalog_cmd->add_subcommand("match", "match a diagram against the catalog");
    cat_match->add_option("path", path)->required();
    cat_match->add_option("--file", catalog_file, "extra catalog file to consult");

    CLI::App* dot = app.add_subcommand("export-dot", "Graphviz output");
    dot->add_option("path", path)->required();

    // Let --human / --threads appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        cdiag::set_worker_threads(threads);
        if (*validate) return run_validate(path, human);
        if (*mutate_cmd) return run_mutate(path, at, seq, out);
        if (*recognize_cmd) return run_recognize(path, witness, label, reduce, catalog_file, human);
        if (*class_cmd) return run_class(path, limit, stats, human);
        if (*bm_cmd) return run_bm(path, other, human);
        if (*cat_gen) return run_catalog_generate(base, out, human);
        if (*cat_list) return run_catalog_list(catalog_file, human);
        if (*cat_match) return run_catalog_match(path, catalog_file, human);
        if (*dot) return run_export_dot(path);
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    }
    return kInputError;
}
