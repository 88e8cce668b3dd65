// srg: build, test and scan strongly regular graph parameters from the
// command line.  Machine output goes to stdout, everything informational to
// stderr; exit codes are 0 (exists / ok), 1 (infeasible / not an SRG),
// 2 (unknown), 64 (usage), 65 (unparseable input file).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "srg/oracle.hpp"
#include "srg/registry.hpp"

namespace {

struct Args {
    long long n = 0, k = 0, lambda = 0;
    long long mu = 0;
    bool has_mu = false;
    std::string format = "graph6";
    std::string out;
    std::string in;
    std::string csv;
    std::string data_dir;
    long long max_n = 1300;
};

std::string render(const srg::Graph& g, const std::string& format) {
    if (format == "graph6") return srg::encode_graph6(g) + "\n";
    if (format == "edges") return srg::encode_edge_list(g);
    throw CLI::ValidationError("--format must be graph6 or edges");
}

int cmd_build(const Args& a) {
    srg::Registry reg = srg::Registry::with_defaults(
        a.data_dir.empty() ? srg::default_data_dir() : a.data_dir);
    auto res = reg.lookup(a.n, a.k, a.lambda,
                          a.has_mu ? std::optional<long long>(a.mu) : std::nullopt);
    switch (res.status) {
        case srg::LookupStatus::Exists: {
            std::string payload = render(*res.graph, a.format);
            if (a.out.empty()) {
                std::cout << payload;
            } else {
                std::ofstream f(a.out, std::ios::binary);
                if (!f) {
                    std::cerr << "cannot write " << a.out << "\n";
                    return 1;
                }
                f << payload;
            }
            std::cerr << res.detail << "\n";
            if (res.degenerate)
                std::cerr << "note: degenerate parameters (mu = 0 or mu = k)\n";
            return 0;
        }
        case srg::LookupStatus::Infeasible:
            std::cerr << "no such strongly regular graph: " << res.detail << "\n";
            return 1;
        case srg::LookupStatus::Unknown:
            std::cerr << "existence unsettled: " << res.detail << "\n";
            return 2;
    }
    return 2;
}

int cmd_exists(const Args& a) {
    srg::Registry reg = srg::Registry::with_defaults(
        a.data_dir.empty() ? srg::default_data_dir() : a.data_dir);
    auto res = reg.existence(a.n, a.k, a.lambda,
                             a.has_mu ? std::optional<long long>(a.mu) : std::nullopt);
    switch (res) {
        case srg::Existence::True:
            std::cout << "True\n";
            return 0;
        case srg::Existence::False:
            std::cout << "False\n";
            return 1;
        case srg::Existence::Unknown:
            std::cout << "Unknown\n";
            return 2;
    }
    return 2;
}

int cmd_scan(const Args& a) {
    srg::Registry reg = srg::Registry::with_defaults(
        a.data_dir.empty() ? srg::default_data_dir() : a.data_dir);
    std::string csv = reg.scan_csv(a.max_n);
    long long exists = 0, nonexistent = 0, unknown = 0;
    {
        std::istringstream lines(csv);
        std::string line;
        std::getline(lines, line);  // header
        while (std::getline(lines, line)) {
            if (line.find(",exists,") != std::string::npos) ++exists;
            else if (line.find(",nonexistent,") != std::string::npos) ++nonexistent;
            else ++unknown;
        }
    }
    if (a.csv.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(a.csv, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << a.csv << "\n";
            return 1;
        }
        f << csv;
    }
    std::cerr << "scanned n <= " << a.max_n << ": " << exists << " exists, "
              << nonexistent << " nonexistent, " << unknown << " unknown ("
              << (exists + nonexistent + unknown) << " rows)\n";
    return 0;
}

int cmd_verify(const Args& a) {
    std::string text;
    if (a.in.empty() || a.in == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(a.in, std::ios::binary);
        if (!f) {
            std::cerr << "cannot read " << a.in << "\n";
            return 65;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    srg::Graph g;
    try {
        if (a.format == "graph6") {
            // trim one trailing newline, as emitted by `srg build`
            while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
                text.pop_back();
            g = srg::decode_graph6(text);
        } else if (a.format == "edges") {
            g = srg::decode_edge_list(text);
        } else {
            throw CLI::ValidationError("--format must be graph6 or edges");
        }
    } catch (const std::exception& ex) {
        std::cerr << "parse failure: " << ex.what() << "\n";
        return 65;
    }
    auto cert = srg::certify(g);
    if (cert && cert->verified) {
        std::cout << "SRG(" << cert->params.n << ',' << cert->params.k << ','
                  << cert->params.lambda << ',' << cert->params.mu << ")\n";
        return 0;
    }
    std::cout << "not strongly regular\n";
    return 1;
}

int cmd_list(const Args& a) {
    srg::Registry reg = srg::Registry::with_defaults(
        a.data_dir.empty() ? srg::default_data_dir() : a.data_dir);
    for (const auto& e : reg.entries())
        std::cout << "tier " << e.tier << "  " << e.id << "\n";
    std::cerr << reg.entries().size() << " registered constructions, "
              << reg.code_db().entries.size() << " two-weight database codes, "
              << reg.nonexistence().size() << " nonexistence records\n";
    for (const auto& s : reg.code_db().skipped)
        std::cerr << "skipped code file: " << s << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly regular graph construction and verification"};
    app.require_subcommand(1);
    Args a;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("n", a.n, "vertex count")->required();
        cmd->add_option("k", a.k, "degree")->required();
        cmd->add_option("lambda", a.lambda, "common neighbours of an edge")->required();
        cmd->add_option("mu", a.mu, "common neighbours of a non-edge (optional)");
    };

    CLI::App* build = app.add_subcommand("build", "construct a graph for (n,k,lambda[,mu])");
    add_params(build);
    build->add_option("--format", a.format, "graph6 or edges")
        ->default_val("graph6")
        ->check(CLI::IsMember({"graph6", "edges"}));
    build->add_option("--out", a.out, "write the graph here instead of stdout");
    build->add_option("--data-dir", a.data_dir, "override the data directory");

    CLI::App* exists = app.add_subcommand("exists", "True / False / Unknown for (n,k,lambda[,mu])");
    add_params(exists);
    exists->add_option("--data-dir", a.data_dir, "override the data directory");

    CLI::App* scan = app.add_subcommand("scan", "classify all feasible tuples up to --max-n");
    scan->add_option("--max-n", a.max_n, "largest vertex count")->default_val(1300)
        ->check(CLI::Range(4LL, 1300LL));
    scan->add_option("--csv", a.csv, "write the CSV here instead of stdout");
    scan->add_option("--data-dir", a.data_dir, "override the data directory");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle on a graph file");
    verify->add_option("--in", a.in, "input file (default: stdin)");
    verify->add_option("--format", a.format, "graph6 or edges")
        ->default_val("graph6")
        ->check(CLI::IsMember({"graph6", "edges"}));

    CLI::App* list = app.add_subcommand("list", "show registered constructions");
    list->add_option("--data-dir", a.data_dir, "override the data directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 64;
    }

    a.has_mu = build->count("mu") > 0 || exists->count("mu") > 0;
    try {
        if (app.got_subcommand(build)) return cmd_build(a);
        if (app.got_subcommand(exists)) return cmd_exists(a);
        if (app.got_subcommand(scan)) return cmd_scan(a);
        if (app.got_subcommand(verify)) return cmd_verify(a);
        if (app.got_subcommand(list)) return cmd_list(a);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 64;
}
