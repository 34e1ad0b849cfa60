// annetto: validate, query and inspect ANNETT-O knowledge bases.
//
// Exit codes: 0 success, 1 validation violations found, 2 usage or parse
// error, 3 I/O error. Results go to stdout, diagnostics to stderr.

#include "annetto/example_kbs.hpp"
#include "annetto/query.hpp"
#include "annetto/turtle.hpp"
#include "annetto/validator.hpp"
#include "annetto/vocab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

namespace {

using namespace annetto;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed for '" + path + "'");
    }
    return buf.str();
}

// ANNETTO_PREFIX overrides the default instance namespace bound to ":".
PrefixMap base_prefixes() {
    if (const char* ns = std::getenv("ANNETTO_PREFIX"); ns && *ns) {
        return PrefixMap::defaults(ns);
    }
    return PrefixMap::defaults();
}

KB load_kb(const std::vector<std::string>& files) {
    KB kb{Graph{base_prefixes()}, SchemaModel::builtin()};
    for (const std::string& file : files) {
        Graph g = parse_turtle(read_file(file), base_prefixes());
        for (const auto& [prefix, ns] : g.prefixes().entries()) {
            kb.graph.prefixes().set(prefix, ns);
        }
        for (const Triple& t : g.triples()) {
            kb.graph.insert(t);
        }
    }
    return kb;
}

std::string shrunk(const Iri& iri, const PrefixMap& pm) {
    return pm.shrink(iri.value()).value_or(iri.value());
}

int cmd_validate(const std::string& file, bool strict, const std::string& format) {
    KB kb = load_kb({file});
    ValidateOptions options;
    options.strict_feedforward = strict;
    ValidationReport report = validate(kb, options);

    for (const Violation& w : report.warnings) {
        std::cerr << "warning: " << w.rule_id << "\t" << shrunk(w.subject, kb.graph.prefixes())
                  << "\t" << w.message << "\n";
    }
    if (format == "json") {
        nlohmann::json doc;
        doc["violations"] = nlohmann::json::array();
        for (const Violation& violation : report.violations) {
            doc["violations"].push_back(
                {{"rule", violation.rule_id},
                 {"subject", shrunk(violation.subject, kb.graph.prefixes())},
                 {"message", violation.message}});
        }
        doc["checked_rules"] = report.checked_rule_ids;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << report_to_text(report, kb.graph.prefixes());
    }
    return report.valid() ? kExitOk : kExitViolations;
}

int cmd_query(const std::vector<std::string>& files, const std::string& query_file,
              const std::string& format) {
    KB kb = load_kb(files);
    QueryAst ast = parse_query(read_file(query_file), kb.graph.prefixes());
    ResultTable table = evaluate(ast, kb);
    if (format == "json") {
        nlohmann::json doc;
        doc["head"] = table.header;
        doc["rows"] = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const Term& term : row) {
                jrow.push_back(render_term(term, kb.graph.prefixes()));
            }
            doc["rows"].push_back(std::move(jrow));
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << table_to_csv(table, kb.graph.prefixes());
    }
    return kExitOk;
}

int cmd_examples(const std::string& dir) {
    try {
        examples::export_examples(dir);
    } catch (const Error& e) {
        throw IoError(e.what());
    }
    return kExitOk;
}

int cmd_describe(const std::string& file, const std::string& iri_text) {
    KB kb = load_kb({file});
    std::string expanded = iri_text;
    if (expanded.size() >= 2 && expanded.front() == '<' && expanded.back() == '>') {
        expanded = expanded.substr(1, expanded.size() - 2);
    } else if (auto e = kb.graph.prefixes().expand(expanded)) {
        expanded = *e;
    }
    Iri subject(expanded);
    const PrefixMap& pm = kb.graph.prefixes();

    std::set<Iri> types = types_with_inference(kb, subject);
    auto as_subject = kb.graph.match(subject, std::nullopt, std::nullopt);
    auto as_object = kb.graph.match(std::nullopt, std::nullopt, Term{subject});
    if (types.empty() && as_subject.empty() && as_object.empty()) {
        std::cout << "no statements for " << shrunk(subject, pm) << "\n";
        return kExitOk;
    }

    auto triple_line = [&pm](const Triple& t) {
        std::string pred = t.predicate == vocab::kRdfType ? "a" : shrunk(t.predicate, pm);
        std::string obj =
            as_iri(t.object) ? shrunk(*as_iri(t.object), pm) : render_term(t.object, pm);
        return shrunk(t.subject, pm) + " " + pred + " " + obj + " .";
    };
    auto print_sorted = [&triple_line](std::vector<Triple> triples) {
        std::vector<std::string> lines;
        lines.reserve(triples.size());
        for (const Triple& t : triples) lines.push_back(triple_line(t));
        std::sort(lines.begin(), lines.end());
        for (const std::string& line : lines) std::cout << line << "\n";
    };

    std::cout << "# types (inferred)\n";
    for (const Iri& t : types) {
        std::cout << shrunk(t, pm) << "\n";
    }
    std::cout << "# as subject\n";
    print_sorted(as_subject);
    std::cout << "# as object\n";
    print_sorted(as_object);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ANNETT-O knowledge base tool: validate, query and inspect "
                 "neural-network configuration graphs"};
    app.require_subcommand(1);

    std::string file, query_file, dir, iri_text;
    std::string format = "text";
    bool strict = false;
    std::vector<std::string> kb_files;

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Check a Turtle KB against the rule table");
    validate_cmd->add_option("file", file, "Turtle file")->required();
    validate_cmd->add_flag("--strict-feedforward", strict, "Also flag nextLayer cycles");
    validate_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string query_format = "csv";
    CLI::App* query_cmd = app.add_subcommand("query", "Run a query over one or more Turtle KBs");
    query_cmd->add_option("files", kb_files, "Turtle file(s)")->required();
    query_cmd->add_option("--query", query_file, ".rq query file")->required();
    query_cmd->add_option("--format", query_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* examples_cmd = app.add_subcommand(
        "examples", "Write the stock example KBs and queries into a directory");
    examples_cmd->add_option("dir", dir, "output directory")->required();

    CLI::App* describe_cmd = app.add_subcommand("describe", "Show everything known about an IRI");
    describe_cmd->add_option("file", file, "Turtle file")->required();
    describe_cmd->add_option("iri", iri_text, "IRI, prefixed or in <> form")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(file, strict, format);
        if (query_cmd->parsed()) return cmd_query(kb_files, query_file, query_format);
        if (examples_cmd->parsed()) return cmd_examples(dir);
        if (describe_cmd->parsed()) return cmd_describe(file, iri_text);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
