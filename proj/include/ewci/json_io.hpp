#ifndef EWCI_JSON_IO_HPP
#define EWCI_JSON_IO_HPP

#include <json.hpp>

#include "ewci/arith.hpp"
#include "ewci/nonvanish.hpp"
#include "ewci/wci.hpp"

namespace ewci {

// Values that fit in 64 bits are written as JSON numbers, wider ones as
// decimal strings.
nlohmann::json int_to_json(Int value);

nlohmann::json to_json(const WeightSequence& a);
nlohmann::json to_json(const SplitProfile& profile);
nlohmann::json to_json(const NonvanishingCertificate& cert);
nlohmann::json to_json(const SectionWitness& witness);
nlohmann::json to_json(const SplitChoice& split);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const WCIInstance& inst);
nlohmann::json to_json(const WitnessOutcome& outcome);

} // namespace ewci

#endif // EWCI_JSON_IO_HPP
