#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "cotilt/family.hpp"
#include "cotilt/prime_set.hpp"
#include "cotilt/ring.hpp"
#include "cotilt/sequence.hpp"
#include "cotilt/zhom/modules.hpp"

namespace cotilt::io {

using Json = nlohmann::ordered_json;

// Loaders take the JSON path of their argument ("$", "$.levels[2]", ...) and
// raise InputError/ConfigError messages of the form "at <path>: <reason>".
// Emitters produce documents the matching loader reads back to an equal value.

/// Parses text; a syntax error becomes InputError naming `source`.
Json parse_document(std::string_view text, const std::string& source);
/// Reads a file and parses it.
Json load_file(const std::string& path);

Ring ring_from_json(const Json& j, const std::string& path = "$");
Json ring_to_json(const Ring& ring);

/// Accepts a label, "(7)", "7", a bare integer, or a node index for synthetic rings.
PrimeIdeal prime_from_json(const Ring& ring, const Json& j, const std::string& path);
Json prime_to_json(const Ring& ring, const PrimeIdeal& p);

PrimeSet prime_set_from_json(const Ring& ring, const Json& j, const std::string& path);
Json prime_set_to_json(const PrimeSet& s);

/// {"ring": ..., "n": k, "levels": [PrimeSet x k]}
CharacteristicSequence sequence_from_json(const Json& j, const std::string& path = "$");
Json sequence_to_json(const CharacteristicSequence& seq);

/// {"ring": ..., "n": k, "default": [pattern x k], "exceptions": {"(2)": [PrimeSet x k], ...}}
CompatibleFamily family_from_json(const Json& j, const std::string& path = "$");
Json family_to_json(const CompatibleFamily& family);

/// {"ring": ..., "n": k, "at": m, "levels": [PrimeSet x k]}
LocalSequence local_sequence_from_json(const Json& j, const std::string& path = "$");
Json local_sequence_to_json(const LocalSequence& local);

/// {"rank": r, "torsion": [[p, e, m], ...]}
zhom::FgZModule module_from_json(const Json& j, const std::string& path = "$");
Json module_to_json(const zhom::FgZModule& m);

/// {"divisible_rank": d, "torsion": [[p, e, m], ...]}
zhom::MatlisModule matlis_from_json(const Json& j, const std::string& path = "$");
Json matlis_to_json(const zhom::MatlisModule& m);

/// {"prime": p, "rank": r, "torsion": [[e, m], ...]}
zhom::LocalizedModule localized_from_json(const Json& j, const std::string& path = "$");
Json localized_to_json(const zhom::LocalizedModule& m);

Json violation_to_json(const Ring& ring, const SequenceViolation& v);
Json verdict_to_json(const Ring& ring, const SequenceVerdict& verdict);
SequenceVerdict verdict_from_json(const Ring& ring, const Json& j, const std::string& path = "$");

Json family_verdict_to_json(const Ring& ring, const FamilyVerdict& verdict);
FamilyVerdict family_verdict_from_json(const Ring& ring, const Json& j, const std::string& path = "$");

}  // namespace cotilt::io
