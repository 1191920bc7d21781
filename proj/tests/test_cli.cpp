#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell pipeline with the binary path substituted for every "%q".
CliResult run_pipeline(std::string command) {
    const std::string bin = QHX_BIN;
    std::size_t pos = 0;
    while ((pos = command.find("%q", pos)) != std::string::npos) {
        command.replace(pos, 2, bin);
        pos += bin.size();
    }
    CliResult res;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(QHX_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen output round-trips through genus") {
    CliResult r = run_pipeline("%q gen P 4 | %q genus");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
    CHECK(run_pipeline("%q gen I 5 | %q genus").out == "0\n");
    CHECK(run_pipeline("%q gen K 5 5 | %q genus").out == "16\n");
}

TEST_CASE("sphere pipeline from the worked example") {
    CliResult r = run_pipeline("%q gen P 4 | %q complex --kind multipath | %q homology --reduced");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "degree\tbetti\ttorsion\n0\t0\t-\n1\t0\t-\n2\t1\t-\n");
}

TEST_CASE("K55 torsion pipeline matches the frozen golden file") {
    CliResult r = run_pipeline("%q gen K 5 5 | %q complex --kind matching | %q homology");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("k55_matching_homology.tsv"));
    // torsion prime 3 appears on the degree-2 row
    CHECK(r.out.find("2\t0\t3\n") != std::string::npos);
}

TEST_CASE("complex serialization golden files") {
    CHECK(run_pipeline("%q gen T 3 | %q complex").out == golden("t3_multipath_complex.txt"));
    CHECK(run_pipeline("%q gen D 3 2 | %q complex | %q homology").out ==
          golden("d32_multipath_homology.tsv"));
    CHECK(run_pipeline("%q gen P 5 | %q magnitude --max-length 3").out ==
          golden("p5_magnitude.tsv"));
}

TEST_CASE("verify blowup exit codes") {
    CHECK(run_pipeline("%q gen T 6 | %q verify blowup").exit_code == 0);
    CHECK(run_pipeline("%q gen D 4 4 | %q verify blowup").exit_code == 0);
    // precondition failures are usage errors, not refutations
    CHECK(run_pipeline("%q gen P 3 | %q verify blowup").exit_code == 1);
    CHECK(run_pipeline("%q gen A 4 | %q verify modules").exit_code == 0);
}

TEST_CASE("parse errors exit 1 with empty stdout") {
    CliResult r = run_pipeline("printf 'v a\\n' | %q genus");
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(run_pipeline("printf 'digraph g\\nv a\\ne x a a\\ne y a a\\n' | %q genus").exit_code ==
          1);
    CHECK(run_pipeline("%q gen I 0").exit_code == 1);
    CHECK(run_pipeline("%q nonsense").exit_code == 1);
    CHECK(run_pipeline("%q genus --bogus < /dev/null").exit_code == 1);
    CHECK(run_pipeline("%q gen A 2 | %q complex | %q homology --reduced --unreduced")
              .exit_code == 1);
    CHECK(run_pipeline("%q --help").exit_code == 0);
}

TEST_CASE("pipelines are deterministic") {
    std::string a = run_pipeline("%q gen T 4 | %q blowup | %q complex --kind matching").out;
    std::string b = run_pipeline("%q gen T 4 | %q blowup | %q complex --kind matching").out;
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("blowup emits bijection trailer lines that the parser skips") {
    CliResult r = run_pipeline("%q gen D 2 2 | %q blowup");
    CHECK(r.out.find("b e0 e0") != std::string::npos);
    CHECK(r.out.find("v0.in") != std::string::npos);
    CHECK(run_pipeline("%q gen D 2 2 | %q blowup | %q genus").out == "0\n");
}

TEST_CASE("matching verb applies iota to directed inputs") {
    // X(A_3) equals M(iota(A_3)); the CLI lets both spellings flow
    std::string via_matching = run_pipeline("%q gen A 3 | %q complex --kind matching").out;
    std::string via_multipath = run_pipeline("%q gen A 3 | %q complex --kind multipath").out;
    CHECK(via_matching == via_multipath);
}

TEST_CASE("unreduced flag and pretty rendering") {
    CliResult unreduced =
        run_pipeline("%q gen A 2 | %q complex | %q homology --unreduced");
    CHECK(unreduced.out.find("0\t2\t-\n") != std::string::npos);
    CliResult pretty = run_pipeline("printf 'dim 0\\na\\nb\\n' | %q --pretty homology");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.out.find("degree  betti") != std::string::npos);
}

TEST_CASE("survey emits the header and one row per genus") {
    CliResult r = run_pipeline("%q survey --max-vertices 3 --max-edges 4 --max-genus 2");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "genus\tclasses\tmax_torsion_exponent");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
    CHECK(run_pipeline("%q survey --max-vertices 9 --max-edges 4 --max-genus 1").exit_code == 1);
}

TEST_CASE("decompose blocks parse back as quivers") {
    CliResult r = run_pipeline("%q gen D 3 2 | %q decompose");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# boundary: v0") != std::string::npos);
    // split the two blocks and reparse the first through genus
    CHECK(run_pipeline("%q gen D 3 2 | %q decompose | head -6 | %q genus").out == "0\n");
}

TEST_CASE("magnitude cohomology flag") {
    CliResult r = run_pipeline("%q gen I 1 | %q magnitude --max-length 2 --cohomology");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0\t0\t2\t-\n") != std::string::npos);
}
