#include "homotally/reference_election.h"

namespace homotally {

ReferenceElection MakeReferenceElection() {
  const Prime p = Prime::Certify(257);
  ElectionConfig config;
  config.election_id = "reference-2of3";
  config.candidates = {"Charles", "Bob", "Alice"};
  config.voter_count = 7;
  config.window_width = 3;
  config.prime = p;
  config.threshold = 2;
  config.center_count = 3;
  config.field_bound_override = true;

  ReferenceElection ref;
  SeededRandom key_rng(257);
  for (int j = 0; j < 3; ++j) {
    ref.center_keys.push_back(SigningKey::Generate(key_rng));
    config.center_public_keys.push_back(ref.center_keys.back().public_key().ToHex());
  }
  ValidateConfig(config);

  OfficerSecrets secrets{config.election_id,
                         {FieldElement(1, p), FieldElement(2, p), FieldElement(3, p)}};
  ref.setup = ElectionSetup{config, secrets};
  ref.coefficients = {233, 157, 78, 255, 217, 124};
  ref.votes = {"Alice", "Bob", "Bob", "Alice", "Charles", "Alice"};
  return ref;
}

}  // namespace homotally
