// Drives the installed CLI binary end to end: exit codes, certificate
// content, CSV scan output, fits, catalog display. argv[1] is the binary,
// argv[2] the sample descriptor directory.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary;
std::string descriptor_dir;

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = binary + " " + args + " > " + out_path + " 2> cli_test_stderr.tmp";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cout << "FAIL  " << what << "\n";
    } else {
        std::cout << "ok    " << what << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_test <binary> <descriptor-dir>\n";
        return 2;
    }
    binary = argv[1];
    descriptor_dir = argv[2];
    const auto d = [&](const char* name) { return descriptor_dir + "/" + name; };

    // verify: exit codes are a stable contract
    {
        const RunResult r = run("verify " + d("e8_gram.json"));
        expect(r.exit_code == 0, "verify E8 gram exits 0");
        expect(contains(r.out, "status: ConfirmedStrict"), "E8 certificate is strict");
        expect(contains(r.out, "gain: 4/3"), "E8 certificate carries gain 4/3");
        expect(contains(r.out, "parity: even"), "E8 classified even");

        const RunResult again = run("verify " + d("e8_gram.json"));
        expect(again.out == r.out, "certificates are byte-stable across runs");
    }
    {
        const RunResult r = run("verify " + d("leech_bj.json"));
        expect(r.exit_code == 0, "verify dim-24 descriptor exits 0");
        expect(contains(r.out, "gain: 256/63"), "dim-24 certificate carries gain 256/63");
    }
    {
        const RunResult r = run("verify " + d("refuted_fixture.json"));
        expect(r.exit_code == 2, "verify refuted fixture exits 2");
        expect(contains(r.out, "status: Refuted"), "refuted certificate says so");
        expect(contains(r.out, "witness"), "refuted certificate carries a witness");
    }
    {
        const RunResult r = run("verify /no/such/file.json");
        expect(r.exit_code == 1, "missing descriptor exits 1");
    }
    {
        // malformed JSON goes to stderr with exit 1
        std::ofstream bad("cli_test_bad.json");
        bad << "{ nope";
        bad.close();
        const RunResult r = run("verify cli_test_bad.json");
        expect(r.exit_code == 1, "malformed JSON exits 1");
        std::remove("cli_test_bad.json");
    }

    // gain
    {
        const RunResult r = run("gain " + d("leech_bj.json"));
        expect(r.exit_code == 0, "gain exits 0");
        expect(contains(r.out, "gain: 256/63"), "gain prints the exact rational");
        expect(contains(r.out, "decimal: 4.06349206349"), "gain prints 12 significant digits");
    }
    {
        const RunResult r = run("gain " + d("leech_bj.json") + " --digits 5");
        expect(contains(r.out, "decimal: 4.0635"), "gain honors --digits");
    }

    // scan: geometric grid over [0.25, 4] hits y = 1 in the middle
    {
        const RunResult r = run("scan " + d("e8_ar.json") + " --from 0.25 --to 4 --steps 97");
        expect(r.exit_code == 0, "scan exits 0");
        const auto lines = lines_of(r.out);
        expect(lines.size() == 98, "scan emits header plus 97 rows");
        expect(lines[0] == "y,z,xi", "scan header");
        // row 49 is index 48: y = 0.25 * 16^{48/96} = 1
        const std::string& mid = lines[49];
        const auto c1 = mid.find(',');
        const auto c2 = mid.find(',', c1 + 1);
        const double y_mid = std::stod(mid.substr(0, c1));
        const double xi_mid = std::stod(mid.substr(c2 + 1));
        expect(std::abs(y_mid - 1.0) < 1e-9, "middle row is y = 1");
        expect(std::abs(xi_mid - 4.0 / 3.0) < 1e-9, "xi(1) = 4/3 in the scan");
        // symmetry of mirrored rows
        bool symmetric = true;
        for (int k = 1; k <= 48; ++k) {
            const std::string& a = lines[static_cast<std::size_t>(1 + 48 - k)];
            const std::string& b = lines[static_cast<std::size_t>(1 + 48 + k)];
            const double xa = std::stod(a.substr(a.rfind(',') + 1));
            const double xb = std::stod(b.substr(b.rfind(',') + 1));
            if (std::abs(xa - xb) > 1e-9) symmetric = false;
        }
        expect(symmetric, "scan is symmetric under y -> 1/y");
    }

    // fit
    {
        const RunResult r = run("fit " + d("e8_gram.json") + " --basis ar");
        expect(contains(r.out, "a[0]: 1") && contains(r.out, "a[1]: -16"),
               "fit ar recovers [1, -16]");
        const RunResult rb = run("fit " + d("leech_bj.json") + " --basis bj");
        expect(contains(rb.out, "b[1]: -720"), "fit bj recovers -720");
        const RunResult rz = run("fit " + d("z4.json") + " --basis bj");
        expect(rz.exit_code == 1, "bj fit of an odd lattice fails cleanly");
    }

    // catalog
    {
        const RunResult r = run("catalog list");
        expect(r.exit_code == 0, "catalog list exits 0");
        expect(contains(r.out, "extremal-80"), "catalog lists dimension 80");
        expect(contains(r.out, "refuted-fixture"), "catalog lists the fixture");
        const RunResult s = run("catalog show 24");
        expect(contains(s.out, "(1-z)^3 - 45/16*z^2"), "catalog show prints the factored form");
        expect(contains(s.out, "gain: 256/63"), "catalog show prints the gain");
        expect(contains(s.out, "\"kind\":\"extremal\""), "catalog show exports a descriptor");
        const RunResult e = run("catalog show nonsense");
        expect(e.exit_code == 1, "unknown catalog entry exits 1");
    }

    // identities
    {
        const RunResult r = run("identities --y 2");
        expect(r.exit_code == 0, "identities exits 0");
        const auto lines = lines_of(r.out);
        bool ok = false;
        for (const auto& line : lines)
            if (line.rfind("max: ", 0) == 0) ok = std::stod(line.substr(5)) < 1e-12;
        expect(ok, "identity residuals below 1e-12");
    }

    // extremal descriptor end to end
    {
        const RunResult r = run("verify " + d("extremal48.json"));
        expect(r.exit_code == 0, "extremal-48 descriptor verifies strict");
        expect(contains(r.out, "gain: 524288/19467"), "dim-48 gain");
    }

    // SECRECY_PRECISION env override
    {
        const std::string saved = binary;
        binary = "SECRECY_PRECISION=1e-8 " + saved;
        const RunResult r = run("scan " + d("e8_ar.json") + " --from 0.5 --to 2 --steps 5");
        expect(r.exit_code == 0 && lines_of(r.out).size() == 6,
               "SECRECY_PRECISION override is accepted");
        binary = "SECRECY_PRECISION=bogus " + saved;
        const RunResult rb = run("identities --y 1.5");
        expect(rb.exit_code == 0, "invalid SECRECY_PRECISION falls back to the default");
        binary = saved;
    }

    std::remove("cli_test_stdout.tmp");
    std::remove("cli_test_stderr.tmp");
    if (failures) {
        std::cout << failures << " CLI checks failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
