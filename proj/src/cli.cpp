// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#include "pkgraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pkgraph/bundled_catalog.hpp"
#include "pkgraph/c_callgraph.hpp"
#include "pkgraph/cwe_detectors.hpp"
#include "pkgraph/errors.hpp"
#include "pkgraph/query/executor.hpp"
#include "pkgraph/query/parser.hpp"
#include "pkgraph/report_export.hpp"
#include "pkgraph/vuln_ingest.hpp"

namespace pkgraph::cli {

namespace {

namespace fs = std::filesystem;

// Input that could not be read or parsed; the message is already formatted
// as a diagnostic.
struct InputFailure {
    std::string diagnostic;
};

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw InputFailure{path + ": error: cannot open file"};
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    stream << content;
    if (!stream) throw InputFailure{path.string() + ": error: cannot write file"};
}

std::string located(const std::string& file, const LocatedError& e, const char* severity = "error") {
    return file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + severity + ": " +
           e.message();
}

std::string csv_diagnostic(const std::string& file, const CsvError& e) {
    return file + ":" + std::to_string(e.line()) + ": error: " + e.reason();
}

std::vector<ingest::CweRecord> load_catalog(const std::string& path) {
    const std::string name = path.empty() ? "<bundled catalog>" : path;
    const std::string text = path.empty() ? std::string(bundled_catalog()) : read_file(path);
    try {
        return ingest::parse_cwe_csv(text);
    } catch (const CsvError& e) {
        throw InputFailure{csv_diagnostic(name, e)};
    }
}

std::vector<ingest::CveRecord> load_cves(const std::string& path) {
    if (path.empty()) return {};
    try {
        return ingest::parse_cve_csv(read_file(path));
    } catch (const CsvError& e) {
        throw InputFailure{csv_diagnostic(path, e)};
    }
}

callgraph::TranslationUnit load_unit(const std::string& path, std::ostream& err) {
    const std::string source = read_file(path);
    try {
        auto unit = callgraph::extract_translation_unit(source);
        for (const auto& w : unit.warnings) {
            err << path << ":" << w.line << ":" << w.column << ": warning: " << w.message << "\n";
        }
        return unit;
    } catch (const ParseError& e) {
        throw InputFailure{located(path, e)};
    }
}

struct ProgramGraph {
    graph::PropertyGraph graph;
    callgraph::TranslationUnit unit;
};

ProgramGraph build_program(const std::string& source_path, std::span<const ingest::CweRecord> catalog,
                           std::span<const ingest::CveRecord> cves, std::ostream& err) {
    ProgramGraph program;
    program.unit = load_unit(source_path, err);
    ingest::build_knowledge_graph(catalog, cves, program.graph);
    callgraph::build_call_graph(program.unit, program.graph);
    program.graph.seal();
    return program;
}

struct Style {
    bool color = false;
    std::string bold_red(const std::string& text) const {
        return color ? "\x1b[1;31m" + text + "\x1b[0m" : text;
    }
    std::string dim(const std::string& text) const { return color ? "\x1b[2m" + text + "\x1b[0m" : text; }
};

struct ScanConfig {
    std::vector<ingest::CweRecord> catalog;
    std::vector<ingest::CveRecord> cves;
    std::string format = "table";
    std::optional<std::string> entry;
    Style style;
    bool multiple = false;
};

struct ScanOutput {
    int code = kExitOk;
    std::string out;
    std::string err;
};

ScanOutput scan_one(const std::string& path, const ScanConfig& config) {
    ScanOutput result;
    std::ostringstream out, err;
    try {
        ProgramGraph program = build_program(path, config.catalog, config.cves, err);
        std::vector<std::string> warnings;
        detect::DetectOptions options{config.entry, &warnings};
        auto scan = detect::run_all(program.graph, &program.unit, config.catalog, options);
        for (const auto& w : warnings) err << path << ": warning: " << w << "\n";

        if (config.format == "json") {
            std::string json = report::findings_to_json(program.graph, scan.findings, scan.capabilities);
            if (config.multiple) {
                auto parsed = nlohmann::ordered_json::parse(json);
                nlohmann::ordered_json doc;
                doc["source"] = path;
                for (auto& [key, value] : parsed.items()) doc[key] = value;
                json = doc.dump();
            }
            out << json << "\n";
        } else {
            if (config.multiple) out << config.style.dim("== " + path + " ==") << "\n";
            for (const auto& f : scan.findings) {
                out << config.style.bold_red(f.cwe_id + " " + f.cwe_name) << ": " << f.message << "\n";
                for (std::size_t k = 0; k < f.witness_paths.size(); ++k) {
                    out << "| Path " << (k + 1) << " | " << report::render_path(program.graph, f.witness_paths[k])
                        << " |\n";
                }
            }
            for (const auto& c : scan.capabilities) {
                out << c.cwe_id << " not checked: " << c.reason << "\n";
            }
        }
        result.code = scan.findings.empty() ? kExitOk : kExitFindings;
    } catch (const InputFailure& failure) {
        err << failure.diagnostic << "\n";
        result.code = kExitInput;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace

std::string_view bundled_catalog() { return kBundledCatalog; }

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
            const Environment& env) {
    CLI::App app{"Program knowledge graph vulnerability scanner", "pkgraph"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string cwe_path, cve_path, out_dir = ".", catalog_path, query_path, format = "table", entry;
    std::vector<std::string> inputs;
    std::string input;

    auto* ingest_cmd = app.add_subcommand("ingest", "Build the CWE/CVE knowledge graph and export it");
    ingest_cmd->add_option("--cwe", cwe_path, "CWE catalog CSV")->required()->check(CLI::ExistingFile);
    ingest_cmd->add_option("--cve", cve_path, "CVE CSV")->required()->check(CLI::ExistingFile);
    ingest_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

    auto* extract_cmd = app.add_subcommand("extract", "Print the call-graph node table of a C file");
    extract_cmd->add_option("file", input, "C source file")->required()->check(CLI::ExistingFile);

    auto* scan_cmd = app.add_subcommand("scan", "Detect CWE weaknesses in C files");
    scan_cmd->add_option("files", inputs, "C source files")->required()->check(CLI::ExistingFile);
    scan_cmd->add_option("--catalog", catalog_path, "CWE catalog CSV (default: bundled)")->check(CLI::ExistingFile);
    scan_cmd->add_option("--cve", cve_path, "CVE CSV merged into the graph")->check(CLI::ExistingFile);
    scan_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    scan_cmd->add_option("--entry", entry, "Start witness paths at this function");

    auto* query_cmd = app.add_subcommand("query", "Run a query over the program knowledge graph");
    query_cmd->add_option("file", input, "C source file")->required()->check(CLI::ExistingFile);
    query_cmd->add_option("--query-file", query_path, "Query text (default: stdin)")->check(CLI::ExistingFile);
    query_cmd->add_option("--catalog", catalog_path, "CWE catalog CSV (default: bundled)")->check(CLI::ExistingFile);
    query_cmd->add_option("--cve", cve_path, "CVE CSV merged into the graph")->check(CLI::ExistingFile);

    auto* export_cmd = app.add_subcommand("export", "Write nodes.csv, relationships.csv and graph.dot");
    export_cmd->add_option("file", input, "C source file")->required()->check(CLI::ExistingFile);
    export_cmd->add_option("--out", out_dir, "Output directory")->required();
    export_cmd->add_option("--catalog", catalog_path, "Also merge this CWE catalog")->check(CLI::ExistingFile);
    export_cmd->add_option("--cve", cve_path, "Also merge this CVE CSV")->check(CLI::ExistingFile);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ingest_cmd) {
            std::vector<ingest::CweRecord> cwes;
            try {
                cwes = ingest::parse_cwe_csv(read_file(cwe_path));
            } catch (const CsvError& e) {
                throw InputFailure{csv_diagnostic(cwe_path, e)};
            }
            auto cves = load_cves(cve_path);
            graph::PropertyGraph kg;
            auto stats = ingest::build_knowledge_graph(cwes, cves, kg);
            kg.seal();
            fs::create_directories(out_dir);
            auto files = report::export_csv(kg);
            write_file(fs::path(out_dir) / "nodes.csv", files.nodes);
            write_file(fs::path(out_dir) / "relationships.csv", files.relationships);
            write_file(fs::path(out_dir) / "graph.dot", report::export_dot(kg));
            out << "nodes: " << stats.nodes_created << "\nedges: " << stats.edges_created
                << "\norphan CVEs: " << stats.orphan_cves << "\n";
            return kExitOk;
        }

        if (*extract_cmd) {
            auto unit = load_unit(input, err);
            graph::PropertyGraph g;
            callgraph::build_call_graph(unit, g);
            g.seal();
            out << report::render_call_graph_table(g);
            return kExitOk;
        }

        if (*scan_cmd) {
            ScanConfig config;
            config.catalog = load_catalog(catalog_path);
            config.cves = load_cves(cve_path);
            config.format = format;
            if (!entry.empty()) config.entry = entry;
            config.style.color = format == "table" && env.stdout_is_tty && !env.no_color;
            config.multiple = inputs.size() > 1;

            std::vector<std::future<ScanOutput>> jobs;
            for (const auto& path : inputs) {
                jobs.push_back(std::async(std::launch::async, scan_one, path, std::cref(config)));
            }
            int code = kExitOk;
            for (auto& job : jobs) {
                ScanOutput result = job.get();
                out << result.out;
                err << result.err;
                code = std::max(code, result.code);
            }
            return code;
        }

        if (*query_cmd) {
            auto catalog = load_catalog(catalog_path);
            auto cves = load_cves(cve_path);
            std::string text;
            std::string query_name = query_path.empty() ? "<stdin>" : query_path;
            if (query_path.empty()) {
                std::ostringstream buffer;
                buffer << in.rdbuf();
                text = buffer.str();
            } else {
                text = read_file(query_path);
            }
            query::QueryAst ast;
            try {
                ast = query::parse_query(text);
            } catch (const SyntaxError& e) {
                throw InputFailure{located(query_name, e)};
            }
            ProgramGraph program = build_program(input, catalog, cves, err);
            try {
                out << query::format_result_table(query::execute_query(ast, program.graph));
            } catch (const Error& e) {
                throw InputFailure{query_name + ": error: " + e.what()};
            }
            return kExitOk;
        }

        if (*export_cmd) {
            std::vector<ingest::CweRecord> catalog;
            if (!catalog_path.empty()) catalog = load_catalog(catalog_path);
            auto cves = load_cves(cve_path);
            ProgramGraph program = build_program(input, catalog, cves, err);
            fs::create_directories(out_dir);
            auto files = report::export_csv(program.graph);
            write_file(fs::path(out_dir) / "nodes.csv", files.nodes);
            write_file(fs::path(out_dir) / "relationships.csv", files.relationships);
            write_file(fs::path(out_dir) / "graph.dot", report::export_dot(program.graph));
            return kExitOk;
        }
    } catch (const InputFailure& failure) {
        err << failure.diagnostic << "\n";
        return kExitInput;
    } catch (const fs::filesystem_error& e) {
        err << e.path1().string() << ": error: " << e.code().message() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace pkgraph::cli
