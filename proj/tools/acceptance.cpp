#include "mdc/report.hpp"

#include <iostream>

// Exit status is 0 when every criterion passes or fails only on a check listed as a
// known conflict in README.md; the FAIL line is printed either way.
int main() {
    int hard = 0, known = 0;
    for (const auto& c : mdc::runAcceptance()) {
        std::cout << mdc::criterionLine(c) << std::endl;
        if (c.pass()) continue;
        if (c.onlyKnownConflicts()) ++known;
        else ++hard;
    }
    std::cout << "known conflicts: " << known << ", unexpected failures: " << hard << std::endl;
    return hard == 0 ? 0 : 1;
}
