// qhx — combinatorial-topological invariants of quivers and digraphs:
// multipath and matching complexes, blow-ups, integral homology with
// torsion, and magnitude (co)homology. Subcommands read the graph text
// format from a file or stdin and write machine-first TSV.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhx/blowup.hpp"
#include "qhx/errors.hpp"
#include "qhx/families.hpp"
#include "qhx/functors.hpp"
#include "qhx/homology.hpp"
#include "qhx/magnitude.hpp"
#include "qhx/multipath.hpp"
#include "qhx/predicates.hpp"
#include "qhx/quiver.hpp"
#include "qhx/simplicial.hpp"
#include "qhx/survey.hpp"
#include "qhx/text_io.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw qhx::BadParams("cannot open input '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string torsion_column(const std::vector<qhx::BigInt>& torsion) {
    if (torsion.empty()) return "-";
    std::ostringstream ss;
    for (std::size_t i = 0; i < torsion.size(); ++i) ss << (i ? "," : "") << torsion[i];
    return ss.str();
}

void print_table(const std::vector<std::vector<std::string>>& rows, bool pretty) {
    if (!pretty) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "\t" : "") << row[i];
            std::cout << "\n";
        }
        return;
    }
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) std::cout << "  ";
            std::cout << row[i] << std::string(width[i] - row[i].size(), ' ');
        }
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"combinatorial-topological invariants of quivers and digraphs"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "render aligned tables instead of raw TSV");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string family_name;
    std::vector<int> family_params;
    gen->add_option("family", family_name, "family name: I P A D T B K")->required();
    gen->add_option("params", family_params, "family parameters");

    // genus
    auto* genus_cmd = app.add_subcommand("genus", "first Betti number of the realization");
    std::string genus_input = "-";
    genus_cmd->add_option("input", genus_input, "graph file or - for stdin");

    // complex
    auto* complex_cmd = app.add_subcommand("complex", "multipath or matching complex");
    std::string complex_input = "-";
    std::string complex_kind = "multipath";
    complex_cmd->add_option("input", complex_input, "graph file or - for stdin");
    complex_cmd->add_option("--kind", complex_kind, "multipath (default) or matching")
        ->check(CLI::IsMember({"multipath", "matching"}));

    // homology
    auto* homology_cmd = app.add_subcommand("homology", "integral homology of a complex");
    std::string homology_input = "-";
    bool reduced_flag = false, unreduced_flag = false;
    homology_cmd->add_option("input", homology_input, "complex file or - for stdin");
    homology_cmd->add_flag("--reduced", reduced_flag, "reduced homology (the default)");
    homology_cmd->add_flag("--unreduced", unreduced_flag, "unreduced homology");

    // blowup
    auto* blowup_cmd = app.add_subcommand("blowup", "blow-up with its edge bijection");
    std::string blowup_input = "-";
    blowup_cmd->add_option("input", blowup_input, "graph file or - for stdin");

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "dynamical-module decomposition");
    std::string decompose_input = "-";
    decompose_cmd->add_option("input", decompose_input, "graph file or - for stdin");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a structural theorem on one input");
    std::string verify_what, verify_input = "-";
    verify_cmd->add_option("what", verify_what, "blowup | modules")->required()
        ->check(CLI::IsMember({"blowup", "modules"}));
    verify_cmd->add_option("input", verify_input, "graph file or - for stdin");

    // magnitude
    auto* magnitude_cmd = app.add_subcommand("magnitude", "magnitude (co)homology table");
    std::string magnitude_input = "-";
    int max_length = -1;
    bool cohomology = false;
    magnitude_cmd->add_option("input", magnitude_input, "graph file or - for stdin");
    magnitude_cmd->add_option("--max-length", max_length, "largest length grading l")
        ->required();
    magnitude_cmd->add_flag("--cohomology", cohomology, "transpose the differentials");

    // survey
    auto* survey_cmd = app.add_subcommand("survey", "torsion survey over small digraphs");
    int max_vertices = 4, max_edges = 6, max_genus = 1;
    survey_cmd->add_option("--max-vertices", max_vertices, "vertex bound (<= 5)")->required();
    survey_cmd->add_option("--max-edges", max_edges, "edge bound")->required();
    survey_cmd->add_option("--max-genus", max_genus, "genus bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or the help text
        return code == 0 ? 0 : 1;
    }

    if (*gen) {
        std::cout << qhx::serialize_quiver(qhx::family(family_name, family_params));
        return 0;
    }
    if (*genus_cmd) {
        std::cout << qhx::parse_quiver(read_input(genus_input)).genus() << "\n";
        return 0;
    }
    if (*complex_cmd) {
        qhx::Quiver g = qhx::parse_quiver(read_input(complex_input));
        qhx::SimplicialComplex c;
        if (complex_kind == "multipath") {
            if (g.kind() == qhx::QuiverKind::undirected) g = qhx::doubled_quiver(g);
            c = qhx::multipath_complex(g);
        } else {
            if (g.kind() != qhx::QuiverKind::undirected) g = qhx::underlying_graph(g);
            c = qhx::matching_complex(g);
        }
        std::cout << qhx::serialize_complex(c);
        return 0;
    }
    if (*homology_cmd) {
        if (reduced_flag && unreduced_flag)
            throw qhx::BadParams("--reduced and --unreduced are mutually exclusive");
        bool reduced = !unreduced_flag;  // reduced is the default
        qhx::SimplicialComplex c = qhx::parse_complex(read_input(homology_input));
        qhx::HomologyProfile p = qhx::homology(c, reduced);
        std::vector<std::vector<std::string>> rows{{"degree", "betti", "torsion"}};
        for (const auto& r : p.rows)
            rows.push_back({std::to_string(r.degree), std::to_string(r.betti),
                            torsion_column(r.torsion)});
        print_table(rows, pretty);
        return 0;
    }
    if (*blowup_cmd) {
        qhx::Quiver g = qhx::parse_quiver(read_input(blowup_input));
        qhx::BlowupResult b = qhx::blow_up(g);
        std::cout << qhx::serialize_quiver(b.result);
        for (const auto& [in, out] : b.edge_bijection)
            std::cout << "b " << in << " " << out << "\n";
        return 0;
    }
    if (*decompose_cmd) {
        qhx::Quiver g = qhx::parse_quiver(read_input(decompose_input));
        qhx::DynamicalDecomposition dec = qhx::dynamical_modules(g);
        for (std::size_t i = 0; i < dec.modules.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << qhx::serialize_quiver(dec.modules[i]);
            std::cout << "# boundary:";
            for (const auto& v : dec.boundaries[i]) std::cout << " " << v;
            std::cout << "\n";
        }
        return 0;
    }
    if (*verify_cmd) {
        qhx::Quiver g = qhx::parse_quiver(read_input(verify_input));
        bool ok = verify_what == "blowup" ? qhx::verify_blowup_theorem(g)
                                          : qhx::verify_module_join(g);
        std::cout << (ok ? "confirmed" : "REFUTED") << "\n";
        return ok ? 0 : 2;
    }
    if (*magnitude_cmd) {
        qhx::Quiver g = qhx::parse_quiver(read_input(magnitude_input));
        qhx::MagnitudeTable t = cohomology ? qhx::magnitude_cohomology(g, max_length)
                                           : qhx::magnitude_homology(g, max_length);
        std::vector<std::vector<std::string>> rows{{"k", "l", "betti", "torsion"}};
        for (const auto& r : t.rows)
            rows.push_back({std::to_string(r.k), std::to_string(r.l),
                            std::to_string(r.betti), torsion_column(r.torsion)});
        print_table(rows, pretty);
        return 0;
    }
    if (*survey_cmd) {
        std::cout << "genus\tclasses\tmax_torsion_exponent\n";
        qhx::torsion_survey(max_vertices, max_edges, max_genus, [](const qhx::SurveyRow& row) {
            std::ostringstream ss;
            ss << row.genus << "\t" << row.classes << "\t";
            if (row.classes == 0)
                ss << "-";
            else
                ss << row.max_exponent;
            std::cout << ss.str() << "\n" << std::flush;
        });
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qhx::Error& e) {
        std::cerr << "qhx: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "qhx: " << e.what() << "\n";
        return 1;
    }
}
