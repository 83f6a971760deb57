// Acceptance gate: nine criteria, one PASS/FAIL line each, exit code is the
// number of failures.  argv[1] is the path of the command line binary, used
// by the determinism criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "alglab/suite.hpp"

namespace {

int g_failures = 0;

struct FamilyOutcome {
    bool pass = true;
    double seconds = 0.0;
    std::string detail;
};

FamilyOutcome run_families(const std::vector<std::string>& families) {
    FamilyOutcome out;
    auto t0 = std::chrono::steady_clock::now();
    for (const std::string& f : families) {
        alglab::SuiteOptions opt;
        opt.only = f;
        alglab::SuiteResult r = alglab::run_suite(opt);
        if (!r.failed_families.empty()) {
            out.pass = false;
            for (const auto& line : r.lines) {
                if (!line.pass) {
                    out.detail = line.family + "/" + line.instance + ": " + line.detail;
                    break;
                }
            }
        }
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

void report(int criterion, const char* label, const FamilyOutcome& out) {
    if (out.pass) {
        std::printf("PASS criterion %d: %s (%.1fs)\n", criterion, label, out.seconds);
    } else {
        std::printf("FAIL criterion %d: %s: %s\n", criterion, label, out.detail.c_str());
        ++g_failures;
    }
}

// Runs a command, captures stdout, returns (exit code, output).
std::pair<int, std::string> capture(const std::string& cmd) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 127;
    }
    const std::string cli = argv[1];

    {
        FamilyOutcome o = run_families({"thm3.6"});
        if (o.pass && o.seconds >= 300.0) {
            o.pass = false;
            o.detail = "took " + std::to_string(o.seconds) + "s, budget is 300s";
        }
        report(1, "commutator law families hold across the catalog", o);
    }
    report(2, "word formula matches the categorical commutator", run_families({"prop3.7"}));
    report(3, "pairwise route agrees with the lattice oracle", run_families({"thm4.6"}));
    report(4, "congruence route unit class matches", run_families({"lemma4.3"}));
    report(5, "centrality checks line up with kernel commutators",
           run_families({"prop3.2", "split-trivial"}));
    report(6, "extension commutator equals the iterated formula", run_families({"furtado-coelho"}));
    report(7, "images commute with the commutator; the converse fails where it must",
           run_families({"stability-ab", "remark3.9"}));
    report(8, "lattice and exactness toolkit behaves",
           run_families({"prop2.4", "noether", "threebythree", "lemma2.5"}));

    {
        auto t0 = std::chrono::steady_clock::now();
        std::string cmd = "\"" + cli + "\" suite --quick --emit json 2>/dev/null";
        auto first = capture(cmd);
        auto second = capture(cmd);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = first.first == 0 && second.first == 0 && !first.second.empty() &&
                  first.second == second.second;
        if (ok) {
            std::printf("PASS criterion 9: repeated quick suite runs are byte identical (%.1fs)\n",
                        secs);
        } else {
            std::printf("FAIL criterion 9: exit codes %d/%d, outputs %s (%zu vs %zu bytes)\n",
                        first.first, second.first,
                        first.second == second.second ? "equal" : "differ", first.second.size(),
                        second.second.size());
            ++g_failures;
        }
    }

    std::printf("%d of 9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
