#pragma once

#include "qclust/report.hpp"

#include <string>
#include <vector>

namespace qclust {

// Each check below is pure and deterministic (fixed RNG seeds).
ReportBook fixtureChecks();
ReportBook compatibilityChecks(int maxN, int randomMutations);
ReportBook muVsGlsChecks(int maxN);
ReportBook betaChecks(int maxIndex);
ReportBook conjecturalBlockChecks(int maxN);
// Raw cluster variables against X_{n,0}, X_{n,1} on -3 <= m <= n+3.
ReportBook lambdaLiteralChecks(int maxN);
// The same exponents for the classes [P_{k,m}], plus the raw statement where it holds.
ReportBook lambdaClassChecks(int maxN);
ReportBook commutationChecks(int maxN);
ReportBook frozenIdentityChecks(int maxN);
ReportBook mutationIdentityChecks(int maxN);
ReportBook wedgeChecks(int maxN, int randomPermutations);
ReportBook frozenRowChecks(int maxN, int steps);
ReportBook keyMinorChecks(int maxN);
ReportBook laurentChecks(int sequences, int maxLength);
ReportBook twistChecks(int maxN);
ReportBook greenChecks(int maxN);
ReportBook qSystemChecks(int maxN, int maxL);
ReportBook classicalQSystemChecks(int maxN, int maxL);

const std::vector<std::string>& suiteNames();
// maxN <= 0 selects the suite's default scale.
ReportBook runSuite(const std::string& name, int maxN = 0);

}  // namespace qclust
