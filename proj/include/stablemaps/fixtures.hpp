#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stablemaps/transitions.hpp"

namespace stablemaps {

/// A short path around one swallowtail event, pinned together with the net
/// a3hc - b_zero_g crossing count it must produce.  These nine paths realize
/// every admissible combination of strategies for crossing into and out of a
/// swallowtail pair, and the pinned values witness that the net count is a
/// path invariant only modulo 2.
struct CountFixture {
    std::string name;
    StepList steps;            // sites resolved against the default choice
    int a3hc_minus_b0g = 0;    // expected net count
};

const std::vector<CountFixture>& crossing_count_fixtures();

/// Run every built-in fixture (the nine counting paths plus the replayed
/// construction sequences), writing one line per check.  Returns true when
/// all checks pass.
bool run_fixtures(std::ostream& out);

} // namespace stablemaps
