#pragma once

#include <string>
#include <vector>

namespace ecclab {

// Named re-verifications of the paper's statements, used by the CLI
// `verify` verb and the acceptance suite. Each sweeps the relevant
// parameter range and reports pass/fail with a short detail line.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// -2 eigenvectors of eps(K_{m,n}-e), exact integer arithmetic, 2<=m,n<=max.
CheckResult verify_lemma1(int max_mn = 20);
// m=2 column: sign pattern, localization and energy increase.
CheckResult verify_lemma2(int max_n = 30);
// m=3 column, all three cases.
CheckResult verify_lemma3(int max_n = 30);
// m>=4, n>=5: one negative root in (-5,-4).
CheckResult verify_lemma4(int max_mn = 30);
// Closed-form spectrum of K_{m,n}-e equals the numeric one; -2 multiplicity
// is exactly m+n-4; no quartic root near -2.
CheckResult verify_mainthm(int max_mn = 20);
// E_eps(K_{m,n}) < E_eps(K_{m,n}-e) over the sweep.
CheckResult verify_main2(int max_mn = 30);
// Multipartite energy increase, definitional path, all part pairs.
CheckResult verify_main3(int max_total = 12);
// Q_pi is equitable and its eigenvalues embed in the eps-spectrum.
CheckResult verify_quotient_containment(int max_mn = 20);

std::vector<CheckResult> verify_all();

// Lookup by CLI name ("lemma1", ..., "quotient-containment", "all").
std::vector<CheckResult> run_verification(const std::string& name);

}  // namespace ecclab
