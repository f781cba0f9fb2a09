#include "qclust/characters.hpp"
#include "qclust/glnsatake.hpp"
#include "qclust/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

using namespace qclust;

namespace {

int failed = 0;

void line(const std::string& id, const std::string& what, const std::function<ReportBook()>& body, bool counts = true) {
    auto t0 = std::chrono::steady_clock::now();
    ReportBook book;
    std::string crash;
    try {
        book = body();
    } catch (const std::exception& e) {
        crash = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = crash.empty() && book.ok() && !book.reports.empty();
    if (!ok && counts) ++failed;
    std::cout << id << ' ' << (ok ? "PASS" : "FAIL") << ' ' << what << " [" << book.reports.size() << " checks, "
              << book.failures() << " failed, " << secs << "s]";
    if (!crash.empty()) std::cout << " error: " << crash;
    else if (const Report* f = book.firstFailure()) std::cout << " first failure: " << f->toJson().dump();
    std::cout << std::endl;
}

// Semistandard tableaux of the k x l rectangle in entries 1..n.
void tableaux(int n, int l, std::vector<int>& cells, std::size_t pos, SymPoly& acc) {
    if (pos == cells.size()) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int c : cells) ++e[static_cast<std::size_t>(c - 1)];
        acc += SymPoly::monomial(static_cast<std::size_t>(n), e);
        return;
    }
    int lo = 1;
    if (pos % static_cast<std::size_t>(l) != 0) lo = std::max(lo, cells[pos - 1]);
    if (pos >= static_cast<std::size_t>(l)) lo = std::max(lo, cells[pos - static_cast<std::size_t>(l)] + 1);
    for (int v = lo; v <= n; ++v) {
        cells[pos] = v;
        tableaux(n, l, cells, pos + 1, acc);
    }
}

ReportBook tableauOracle(int maxN, int maxL) {
    ReportBook book;
    for (int n = 1; n <= maxN; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= maxL; ++l) {
                SymPoly acc(static_cast<std::size_t>(n));
                std::vector<int> cells(static_cast<std::size_t>(k * l), 0);
                tableaux(n, l, cells, 0, acc);
                SymPoly jt = schurRect(n, k, l);
                Report r{"jacobi-trudi-vs-tableaux", {{"n", n}, {"k", k}, {"l", l}}, jt == acc, nullptr};
                if (!r.ok) r.witness = {{"jacobiTrudi", jt.toString()}, {"tableaux", acc.toString()}};
                book.add(r);
            }
    return book;
}

}  // namespace

int main() {
    line("A1", "fixture equality", [] { return fixtureChecks(); });
    line("A2", "compatibility 2<=n<=6 and invariance on 200 random mutations",
         [] { return compatibilityChecks(6, 200); });
    line("A3", "mu on GL_n equals the GLS pair of (01)^n, 2<=n<=5", [] { return muVsGlsChecks(5); });
    line("A4", "beta closed forms and pairings, k,l<=6", [] { return betaChecks(6); });
    line("A5", "raw Lambda exponents against X_{n,0}, X_{n,1}, n<=5, -3<=m<=n+3",
         [] { return lambdaLiteralChecks(5); });
    line("A5-classes", "(informational) the same exponents for the classes [P_{k,m}]",
         [] { return lambdaClassChecks(5); }, false);
    line("A6", "frozen rows along mu then 3 mu' steps, 2<=n<=5", [] { return frozenRowChecks(5, 3); });
    line("A7", "key minors equal extended variables, n<=4", [] { return keyMinorChecks(4); });
    line("A8", "Laurent and bar property on 200 random sequences of length <=8",
         [] { return laurentChecks(200, 8); });
    line("A9", "commutation, frozen identity and mutation identity, n<=4", [] {
        ReportBook b = commutationChecks(4);
        b.merge(frozenIdentityChecks(4));
        b.merge(mutationIdentityChecks(4));
        return b;
    });
    line("A10", "wedge recursion, n<=4, 50 random permutations", [] { return wedgeChecks(4, 50); });
    line("A11", "twist and left duals, n<=4", [] { return twistChecks(4); });
    line("A12", "kedem sequences are maximal green with DT permutation, 2<=n<=5", [] { return greenChecks(5); });
    line("A13", "Q-system, tableau oracle and classical cluster Q-system", [] {
        ReportBook b = qSystemChecks(5, 4);
        b.merge(tableauOracle(4, 3));
        b.merge(classicalQSystemChecks(4, 3));
        return b;
    });
    line("A14", "verify all --n 3 exits 0 within 300 s", [] {
        auto t0 = std::chrono::steady_clock::now();
        int rc = std::system((std::string(QCLUST_CLI_PATH) + " verify all --n 3 > /dev/null 2>&1").c_str());
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        ReportBook b;
        Report r{"verify-all", {{"n", 3}, {"seconds", secs}, {"exit", code}}, code == 0 && secs <= 300.0, nullptr};
        if (!r.ok) r.witness = {{"exit", code}, {"seconds", secs}};
        b.add(r);
        return b;
    });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
