#ifndef HOMOTALLY_REFERENCE_ELECTION_H_
#define HOMOTALLY_REFERENCE_ELECTION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "homotally/ballot.h"
#include "homotally/crypto.h"

namespace homotally {

// The small hand-checkable election used by fixtures and `simulate
// --reference`: candidates [Charles, Bob, Alice], 7 voters, 3-bit windows,
// a (2, 3) sharing in Z_257 with evaluation points 1, 2, 3. Z_257 is smaller
// than the 2^9 - 1 bound, so the config carries field_bound_override.
struct ReferenceElection {
  ElectionSetup setup;
  std::vector<SigningKey> center_keys;
  // Linear coefficient drawn for each ballot, in casting order.
  std::vector<uint64_t> coefficients;
  std::vector<std::string> votes;
};

ReferenceElection MakeReferenceElection();

}  // namespace homotally

#endif  // HOMOTALLY_REFERENCE_ELECTION_H_
