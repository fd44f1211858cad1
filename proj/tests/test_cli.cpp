// End-to-end checks of the command line tool: spawns the binary passed as
// argv[1] and inspects exit codes and emitted reports.

#include "snchodge/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool cond, const std::string& what) {
    if (!cond) {
        ++g_failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <snc-hodge binary>\n";
        return 2;
    }
    g_binary = argv[1];

    {
        RunResult r = run("analyze scenario:hopf-f1 --degree 1");
        check(r.exit_code == 0, "analyze hopf degree 1 exits cleanly");
        check(r.out.find("pure=no") != std::string::npos, "degree-1 purity not established");
    }
    {
        RunResult r = run("analyze scenario:hopf-f1 --format json");
        check(r.exit_code == 0, "analyze hopf json exits cleanly");
        check(r.out.find("\"equivalence_holds\": true") != std::string::npos,
              "middle-degree equivalence recorded");
        RunResult again = run("analyze scenario:hopf-f1 --format json");
        check(r.out == again.out, "reports are byte-identical across runs");
    }
    {
        RunResult r = run("analyze scenario:clemens --param l=2 --format json");
        check(r.exit_code == 0, "analyze clemens exits cleanly");
        check(r.out.find("not surjective") != std::string::npos,
              "non-surjectivity note present");
        check(r.out.find("\"overall\": \"positive_definite\"") != std::string::npos,
              "condition star record present");
    }
    {
        RunResult r = run("bundle L scenario:hashimoto-sano --param a=1 --fiber --format json");
        check(r.exit_code == 0, "bundle command exits cleanly");
        check(r.out.find("\"top_power\": \"-804/1+0/1*i\"") != std::string::npos,
              "bundle top power emitted");
        check(r.out.find("\"hodge_riemann\": \"no\"") != std::string::npos,
              "fiber fragment verdict emitted");
    }
    {
        RunResult r = run("condition-star scenario:tyurin-quintic --mode sufficient --format json");
        check(r.exit_code == 0, "condition-star command exits cleanly");
        check(r.out.find("\"qw3_sufficient\": \"positive_definite\"") != std::string::npos,
              "sufficient verdict emitted");
    }
    for (const char* id : {"hopf-f1", "tyurin-quintic"}) {
        RunResult r = run(std::string("reproduce ") + id);
        check(r.exit_code == 0, std::string("reproduce ") + id + " passes");
        check(r.out.find("PASS") != std::string::npos, std::string("reproduce ") + id + " prints PASS");
    }
    {
        RunResult r = run("reproduce hashimoto-sano --param a=2");
        check(r.exit_code == 0, "reproduce hashimoto-sano passes");
    }
    {
        // dump then re-analyze a file input; also test the round trip
        std::string path = temp_path("snc_hodge_cli_dump.json");
        RunResult d = run("dump hashimoto-sano --param a=1 --out " + path);
        check(d.exit_code == 0, "dump exits cleanly");
        RunResult a = run("analyze " + path + " --format json");
        check(a.exit_code == 0, "analyze of a dumped file exits cleanly");
        check(a.out.find("\"glued\": true") != std::string::npos, "bundle analyzed from file");
        std::remove(path.c_str());
    }
    {
        std::string path = temp_path("snc_hodge_cli_bad.json");
        std::ofstream out(path);
        out << "{\n  \"schema\": \"snc-hodge/1\",\n  broken json\n}\n";
        out.close();
        RunResult r = run("analyze " + path);
        check(r.exit_code == 2, "parse errors exit with code 2");
        check(r.out.find("line 3") != std::string::npos, "parse error names the line");
        std::remove(path.c_str());
    }
    {
        std::string path = temp_path("snc_hodge_cli_schema.json");
        std::ofstream out(path);
        out << "{\"schema\": \"snc-hodge/1\", \"n\": 2}\n";
        out.close();
        RunResult r = run("analyze " + path);
        check(r.exit_code == 2, "schema errors exit with code 2");
        std::remove(path.c_str());
    }
    {
        // degenerate pairing: validation blocks with exit 3
        std::string path = temp_path("snc_hodge_cli_degenerate.json");
        snchodge::InputModel m = snchodge::model_of(snchodge::hopf_f1());
        m.variety.components[0].pairing[2] = snchodge::Mat::zero(2, 2);
        std::ofstream out(path);
        out << snchodge::serialize_model(m);
        out.close();
        RunResult r = run("analyze " + path);
        check(r.exit_code == 3, "validation-blocking input exits with code 3");
        std::remove(path.c_str());
    }
    {
        RunResult r = run("reproduce no-such-scenario");
        check(r.exit_code == 2, "unknown scenario exits with code 2");
    }

    if (g_failures == 0) {
        std::cout << "cli checks passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli check(s) failed\n";
    return 1;
}
