// One pass/fail line per acceptance criterion. The last criterion runs the
// command-line tool (path given as argv[1]) twice and compares its output.

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <sys/wait.h>

#include "superq/verify.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& cmd)
{
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

void line(int k, bool ok, const std::string& what, const std::string& note)
{
    std::printf("%s %2d  %-34s %s\n", ok ? "PASS" : "FAIL", k, what.c_str(), note.c_str());
}

} // namespace

int main(int argc, char** argv)
{
    superq::SuiteReport suite = superq::verify_paper(0);
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally; // group -> (passed, total)
    std::map<std::string, std::string> first_failure;
    for (const auto& c : suite.checks) {
        auto& t = tally[c.group];
        t.first += c.ok;
        ++t.second;
        if (!c.ok && !first_failure.count(c.group)) first_failure[c.group] = c.name + ": " + c.detail;
    }

    bool all = true;
    int k = 0;
    for (const auto& [group, description] : superq::suite_groups()) {
        ++k;
        auto [passed, total] = tally[group];
        bool ok = total > 0 && passed == total;
        std::string note = "(" + std::to_string(passed) + "/" + std::to_string(total) + " checks)";
        if (!ok && first_failure.count(group)) note += " " + first_failure[group];
        line(k, ok, group, note);
        all = all && ok;
    }

    ++k;
    if (argc < 2) {
        line(k, false, "deterministic_report", "(no command-line tool given)");
        return 1;
    }
    const std::string cmd = std::string("\"") + argv[1] + "\" verify-paper --format json";
    Run a = run(cmd), b = run(cmd);
    std::size_t n_checks = 0;
    try {
        n_checks = superq::Json::parse(a.out)["checks"].size();
    } catch (const std::exception&) {
    }
    bool ok = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out && n_checks >= 25;
    line(k, ok, "deterministic_report",
         "(" + std::to_string(a.out.size()) + " bytes, " + std::to_string(n_checks) + " checks, exit " +
             std::to_string(a.status) + "/" + std::to_string(b.status) + ")");
    all = all && ok;

    std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
    return all ? 0 : 1;
}
