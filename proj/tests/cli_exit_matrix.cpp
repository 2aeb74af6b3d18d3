// Exit-code contract of the command-line tool on a fixed matrix of good and
// bad invocations: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(QQMOD_BIN) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kModule = "'{\"kind\":\"levels\",\"m\":1,\"Mm\":{\"kind\":\"ray\",\"dir\":[1,0]},"
                      "\"Mm1\":{\"kind\":\"zero\"}}'";

} // namespace

int main() {
    struct Case {
        std::string args;
        int expect;
    };
    std::vector<Case> cases = {
        {std::string("member --module ") + kModule + " --series X^3", 0},
        {std::string("member --module ") + kModule + " --series 'iX^2' --json", 0},
        {std::string("member --module ") + kModule, 2},           // missing --series
        {std::string("member --module ") + kModule + " --series 'X^'", 1}, // parse error
        {std::string("member --module ") + kModule + " --series 'i + X'", 1}, // not in A
        {"member --module '{\"kind\":\"wrong\"}' --series X", 1},
        {"member --module '{\"kind\":\"levels\",\"m\":0,\"Mm\":{\"kind\":\"ray\",\"dir\":"
         "[1,1]},\"Mm1\":{\"kind\":\"zero\"}}' --series X",
         1}, // invalid normal form
        {"sum --a " + std::string(kModule) + " --b " + kModule, 0},
        {"intersect --a " + std::string(kModule), 2},
        {"from-gens --series X --series '-X'", 0},
        {"decompose --series '(2+3i)X^2'", 0},
        {"decompose --series 0", 1}, // indeterminate valuation
        {"generators --module '{\"kind\":\"levels\",\"m\":1,\"Mm\":{\"kind\":\"fan\","
         "\"lo\":[1,0],\"lo_closed\":false,\"hi\":[0,1],\"hi_closed\":false},"
         "\"Mm1\":{\"kind\":\"zero\"}}'",
         1}, // not finitely generated
        {"char2 phi --module '{\"kind\":\"d1\",\"cut\":\"1\",\"inclusive\":false}'", 0},
        {"char2 psi --classifier '{\"segment\":{\"cut\":\"0\",\"inclusive\":true},"
         "\"level\":[0,2]}'",
         1}, // level module leaves the prime field at cut zero
        {"char2 member --module '{\"kind\":\"d2\",\"cut\":\"1\",\"inclusive\":true,"
         "\"M\":[0,1]}' --series 'w*X^{3/2}'",
         0},
        {"suite nosuch", 2},
        {"suite lattice --seed 7 --count 20", 0},
        {"nosuchcommand", 2},
        {"", 2},
    };

    int rc = 0;
    for (const Case& c : cases) {
        int got = run(c.args);
        if (got != c.expect) {
            std::printf("[FAIL] qqmod %s -> exit %d, expected %d\n", c.args.c_str(), got,
                        c.expect);
            rc = 1;
        } else {
            std::printf("[ok]   qqmod %s -> exit %d\n", c.args.c_str(), got);
        }
    }
    return rc;
}
