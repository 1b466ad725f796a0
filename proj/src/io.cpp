#include "cotilt/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "cotilt/error.hpp"

namespace cotilt::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw InputError("at " + path + ": " + why);
}

// Library errors raised while building a value are re-raised with the JSON
// path of the offending node, unless a nested loader already attached one.
template <class F>
auto at_path(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const InputError& e) {
    if (std::string_view(e.what()).starts_with("at ")) throw;
    throw InputError("at " + path + ": " + e.what());
  } catch (const ConfigError& e) {
    if (std::string_view(e.what()).starts_with("at ")) throw;
    throw ConfigError("at " + path + ": " + e.what());
  }
}

std::string key_path(const std::string& path, const std::string& key) {
  const bool plain = !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
  return plain ? path + "." + key : path + "[" + Json(key).dump() + "]";
}

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const char* type_name(const Json& j) { return j.type_name(); }

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, std::string("expected an object, found ") + type_name(j));
}

void require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, std::string("expected an array, found ") + type_name(j));
}

void reject_unknown_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) fail(key_path(path, key), "unknown key");
  }
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  require_object(j, path);
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const std::string& key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::uint64_t as_uint(const Json& j, const std::string& path, std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  if (!j.is_number_integer()) fail(path, std::string("expected a non-negative integer, found ") + type_name(j));
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > max) fail(path, "value " + std::to_string(v) + " exceeds " + std::to_string(max));
    return v;
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0) fail(path, "expected a non-negative integer, found " + std::to_string(v));
  if (static_cast<std::uint64_t>(v) > max) fail(path, "value " + std::to_string(v) + " exceeds " + std::to_string(max));
  return static_cast<std::uint64_t>(v);
}

unsigned as_unsigned(const Json& j, const std::string& path) {
  return static_cast<unsigned>(as_uint(j, path, std::numeric_limits<unsigned>::max()));
}

const std::string& as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, std::string("expected a string, found ") + type_name(j));
  return j.get_ref<const std::string&>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, std::string("expected true or false, found ") + type_name(j));
  return j.get<bool>();
}

std::size_t node_from_json(const std::vector<std::string>& labels, const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto it = std::find(labels.begin(), labels.end(), j.get_ref<const std::string&>());
    if (it == labels.end()) fail(path, "unknown prime '" + j.get<std::string>() + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }
  const std::uint64_t index = as_uint(j, path);
  if (index >= labels.size()) fail(path, "node index " + std::to_string(index) + " out of range");
  return static_cast<std::size_t>(index);
}

std::vector<PrimeIdeal> primes_from_json(const Ring& ring, const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<PrimeIdeal> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(prime_from_json(ring, j[i], index_path(path, i)));
  return out;
}

Json primes_to_json(const Ring& ring, const std::vector<PrimeIdeal>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(prime_to_json(ring, p));
  return out;
}

std::vector<PrimeSet> levels_from_json(const Ring& ring, const Json& j, std::size_t n, const std::string& path) {
  require_array(j, path);
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " levels, found " + std::to_string(j.size()));
  std::vector<PrimeSet> levels;
  for (std::size_t i = 0; i < j.size(); ++i) levels.push_back(prime_set_from_json(ring, j[i], index_path(path, i)));
  return levels;
}

Json levels_to_json(const std::vector<PrimeSet>& levels) {
  Json out = Json::array();
  for (const auto& level : levels) out.push_back(prime_set_to_json(level));
  return out;
}

Ring synthetic_from_json(const Json& j, const std::string& path) {
  reject_unknown_keys(j, path, {"ring", "primes", "order", "maximal", "height", "bass", "gorenstein_heights"});
  const std::string primes_path = key_path(path, "primes");
  const Json& primes = member(j, "primes", path);
  require_array(primes, primes_path);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::string& label = as_string(primes[i], index_path(primes_path, i));
    if (label.empty()) fail(index_path(primes_path, i), "empty label");
    if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
      fail(index_path(primes_path, i), "duplicate label '" + label + "'");
    }
    labels.push_back(label);
  }
  if (labels.empty()) fail(primes_path, "a spectrum needs at least one prime");
  if (labels.size() > kMaxSyntheticNodes) {
    fail(primes_path, "at most " + std::to_string(kMaxSyntheticNodes) + " primes are supported");
  }

  std::vector<std::pair<std::size_t, std::size_t>> less;
  const std::string order_path = key_path(path, "order");
  if (const Json* order = optional_member(j, "order")) {
    require_array(*order, order_path);
    for (std::size_t i = 0; i < order->size(); ++i) {
      const std::string pair_path = index_path(order_path, i);
      const Json& pair = (*order)[i];
      require_array(pair, pair_path);
      if (pair.size() != 2) fail(pair_path, "expected a pair [smaller, larger]");
      less.emplace_back(node_from_json(labels, pair[0], index_path(pair_path, 0)),
                        node_from_json(labels, pair[1], index_path(pair_path, 1)));
    }
  }
  SpectrumPoset poset = at_path(order_path, [&] { return SpectrumPoset(labels, less); });

  if (const Json* height = optional_member(j, "height")) {
    const std::string height_path = key_path(path, "height");
    require_object(*height, height_path);
    std::vector<unsigned> heights = poset.heights();
    for (const auto& [label, value] : height->items()) {
      const std::string entry_path = key_path(height_path, label);
      heights[node_from_json(labels, Json(label), entry_path)] = as_unsigned(value, entry_path);
    }
    at_path(height_path, [&] {
      poset.set_heights(std::move(heights));
      return 0;
    });
  }
  if (const Json* maximal = optional_member(j, "maximal")) {
    const std::string maximal_path = key_path(path, "maximal");
    require_array(*maximal, maximal_path);
    NodeMask declared = 0;
    for (std::size_t i = 0; i < maximal->size(); ++i) {
      declared |= node_bit(node_from_json(labels, (*maximal)[i], index_path(maximal_path, i)));
    }
    at_path(maximal_path, [&] {
      poset.check_declared_maximal(declared);
      return 0;
    });
  }

  const Json* bass = optional_member(j, "bass");
  const Json* gorenstein = optional_member(j, "gorenstein_heights");
  const bool use_gorenstein = gorenstein != nullptr && as_bool(*gorenstein, key_path(path, "gorenstein_heights"));
  if (bass != nullptr && use_gorenstein) fail(path, "give either \"bass\" or \"gorenstein_heights\", not both");
  if (use_gorenstein) poset.set_gorenstein_heights();
  if (bass != nullptr) {
    const std::string bass_path = key_path(path, "bass");
    require_object(*bass, bass_path);
    std::map<std::size_t, NodeMask> data;
    for (const auto& [key, value] : bass->items()) {
      const std::string entry_path = key_path(bass_path, key);
      if (key.empty() || key.size() > 4 || !std::all_of(key.begin(), key.end(), [](unsigned char c) {
            return std::isdigit(c);
          })) {
        fail(entry_path, "Bass data keys are cosyzygy indices \"0\", \"1\", ...");
      }
      require_array(value, entry_path);
      NodeMask mask = 0;
      for (std::size_t i = 0; i < value.size(); ++i) {
        mask |= node_bit(node_from_json(labels, value[i], index_path(entry_path, i)));
      }
      data[std::stoul(key)] = mask;
    }
    at_path(bass_path, [&] {
      poset.set_explicit_bass(std::move(data));
      return 0;
    });
  }
  return Ring::synthetic(std::move(poset));
}

Json synthetic_to_json(const Ring& ring) {
  const SpectrumPoset& poset = ring.poset();
  Json out;
  out["ring"] = "synthetic";
  out["primes"] = poset.labels();
  Json order = Json::array();
  for (const auto& [a, b] : poset.cover_relations()) order.push_back(Json::array({poset.label(a), poset.label(b)}));
  out["order"] = std::move(order);
  Json maximal = Json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if ((poset.maximal() >> i) & 1U) maximal.push_back(poset.label(i));
  }
  out["maximal"] = std::move(maximal);
  Json height = Json::object();
  for (std::size_t i = 0; i < poset.size(); ++i) height[poset.label(i)] = poset.height(i);
  out["height"] = std::move(height);
  switch (poset.bass_mode()) {
    case SpectrumPoset::BassMode::Undeclared:
      break;
    case SpectrumPoset::BassMode::GorensteinHeights:
      out["gorenstein_heights"] = true;
      break;
    case SpectrumPoset::BassMode::Explicit: {
      Json bass = Json::object();
      for (const auto& [index, mask] : poset.explicit_bass()) {
        Json members = Json::array();
        for (std::size_t i = 0; i < poset.size(); ++i) {
          if ((mask >> i) & 1U) members.push_back(poset.label(i));
        }
        bass[std::to_string(index)] = std::move(members);
      }
      out["bass"] = std::move(bass);
      break;
    }
  }
  return out;
}

Json torsion_to_json(const zhom::FgZModule& m) {
  Json torsion = Json::array();
  for (const auto& c : m.torsion()) torsion.push_back(Json::array({c.prime, c.exponent, c.multiplicity}));
  return torsion;
}

std::vector<zhom::PrimaryComponent> torsion_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<zhom::PrimaryComponent> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string entry_path = index_path(path, i);
    require_array(j[i], entry_path);
    if (j[i].size() != 3) fail(entry_path, "expected [prime, exponent, multiplicity]");
    out.push_back({as_uint(j[i][0], index_path(entry_path, 0)), as_unsigned(j[i][1], index_path(entry_path, 1)),
                   as_unsigned(j[i][2], index_path(entry_path, 2))});
  }
  return out;
}

std::string clause_tag(Clause c) {
  switch (c) {
    case Clause::LowerSet:
      return "(i)";
    case Clause::Nested:
      return "(ii)";
    case Clause::Bass:
      return "(iii)";
  }
  return "?";
}

Clause clause_from_json(const Json& j, const std::string& path) {
  const std::string& tag = as_string(j, path);
  for (Clause c : {Clause::LowerSet, Clause::Nested, Clause::Bass}) {
    if (clause_tag(c) == tag) return c;
  }
  fail(path, "unknown clause '" + tag + "'");
}

SequenceViolation violation_from_json(const Ring& ring, const Json& j, const std::string& path) {
  SequenceViolation v{clause_from_json(member(j, "clause", path), key_path(path, "clause")),
                      static_cast<std::size_t>(as_uint(member(j, "index", path), key_path(path, "index"))),
                      std::nullopt, std::nullopt};
  if (const Json* w = optional_member(j, "witness")) v.witness = prime_from_json(ring, *w, key_path(path, "witness"));
  if (const Json* a = optional_member(j, "above")) v.above = prime_from_json(ring, *a, key_path(path, "above"));
  return v;
}

}  // namespace

Json parse_document(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON (" + e.what() + ")");
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path);
}

Ring ring_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get_ref<const std::string&>() == "Z") return Ring::integers();
  const std::string& name = as_string(member(j, "ring", path), key_path(path, "ring"));
  if (name == "Z") {
    reject_unknown_keys(j, path, {"ring"});
    return Ring::integers();
  }
  if (name == "PolyGF") {
    reject_unknown_keys(j, path, {"ring", "q"});
    const std::string q_path = key_path(path, "q");
    const std::uint64_t q = as_uint(member(j, "q", path), q_path);
    return at_path(q_path, [&] { return Ring::poly_over_prime_field(q); });
  }
  if (name == "Zmod") {
    reject_unknown_keys(j, path, {"ring", "n"});
    const std::string n_path = key_path(path, "n");
    const std::uint64_t n = as_uint(member(j, "n", path), n_path);
    return at_path(n_path, [&] { return Ring::integer_quotient(n); });
  }
  if (name == "synthetic") return synthetic_from_json(j, path);
  fail(key_path(path, "ring"), "unknown ring '" + name + "' (expected Z, PolyGF, Zmod or synthetic)");
}

Json ring_to_json(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return Json{{"ring", "Z"}};
    case RingKind::PolyOverPrimeField:
      return Json{{"ring", "PolyGF"}, {"q", ring.parameter()}};
    case RingKind::IntegerQuotient:
      return Json{{"ring", "Zmod"}, {"n", ring.parameter()}};
    case RingKind::Synthetic:
      return synthetic_to_json(ring);
  }
  return {};
}

PrimeIdeal prime_from_json(const Ring& ring, const Json& j, const std::string& path) {
  if (ring.kind() == RingKind::Synthetic) return PrimeIdeal::node(node_from_json(ring.poset().labels(), j, path));
  if (j.is_number_integer()) {
    const std::uint64_t v = as_uint(j, path);
    return at_path(path, [&] { return ring.parse_prime(std::to_string(v)); });
  }
  const std::string& text = as_string(j, path);
  return at_path(path, [&] { return ring.parse_prime(text); });
}

Json prime_to_json(const Ring& ring, const PrimeIdeal& p) { return ring.format(p); }

PrimeSet prime_set_from_json(const Ring& ring, const Json& j, const std::string& path) {
  const std::string& kind = as_string(member(j, "kind", path), key_path(path, "kind"));
  if (kind == "finite" || kind == "bitset") {
    reject_unknown_keys(j, path, {"kind", "elems"});
    if (kind == "bitset" && ring.kind() != RingKind::Synthetic) {
      fail(key_path(path, "kind"), "bitset prime sets need a synthetic ring, not " + ring.describe());
    }
    const std::string elems_path = key_path(path, "elems");
    const std::vector<PrimeIdeal> elems = primes_from_json(ring, member(j, "elems", path), elems_path);
    return at_path(elems_path, [&] { return PrimeSet::of(ring, elems); });
  }
  if (kind == "dim1") {
    reject_unknown_keys(j, path, {"kind", "zero", "max"});
    if (!ring.is_dimension_one()) fail(key_path(path, "kind"), "dim1 prime sets need Z or F_q[x], not " + ring.describe());
    bool zero = false;
    if (const Json* z = optional_member(j, "zero")) zero = as_bool(*z, key_path(path, "zero"));
    bool cofinite = false;
    std::vector<PrimeIdeal> maximals;
    if (const Json* max = optional_member(j, "max")) {
      const std::string max_path = key_path(path, "max");
      require_object(*max, max_path);
      if (max->size() != 1) fail(max_path, "expected exactly one of \"finite\" or \"cofinite_excluding\"");
      const auto& [key, value] = *max->items().begin();
      if (key == "cofinite_excluding") {
        cofinite = true;
      } else if (key != "finite") {
        fail(key_path(max_path, key), "expected \"finite\" or \"cofinite_excluding\"");
      }
      const std::string list_path = key_path(max_path, key);
      maximals = primes_from_json(ring, value, list_path);
      for (std::size_t i = 0; i < maximals.size(); ++i) {
        if (maximals[i].is_zero()) fail(index_path(list_path, i), "(0) is not maximal; use \"zero\"");
      }
      return at_path(list_path, [&] { return PrimeSet::dim_one(ring, zero, cofinite, maximals); });
    }
    return PrimeSet::dim_one(ring, zero, cofinite, maximals);
  }
  fail(key_path(path, "kind"), "unknown prime set kind '" + kind + "' (expected finite, dim1 or bitset)");
}

Json prime_set_to_json(const PrimeSet& s) {
  const Ring& ring = s.ring();
  return std::visit(
      [&](const auto& rep) -> Json {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, PrimeSet::DimOne>) {
          Json max{{rep.cofinite ? "cofinite_excluding" : "finite", primes_to_json(ring, rep.maximals)}};
          return Json{{"kind", "dim1"}, {"zero", rep.zero}, {"max", std::move(max)}};
        } else if constexpr (std::is_same_v<T, PrimeSet::FiniteList>) {
          return Json{{"kind", "finite"}, {"elems", primes_to_json(ring, rep.elems)}};
        } else {
          return Json{{"kind", "bitset"}, {"elems", primes_to_json(ring, s.elements())}};
        }
      },
      s.rep());
}

CharacteristicSequence sequence_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"ring", "n", "levels"});
  const Ring ring = ring_from_json(member(j, "ring", path), key_path(path, "ring"));
  const auto n = static_cast<std::size_t>(as_uint(member(j, "n", path), key_path(path, "n"), 1U << 20));
  std::vector<PrimeSet> levels = levels_from_json(ring, member(j, "levels", path), n, key_path(path, "levels"));
  return CharacteristicSequence(ring, std::move(levels));
}

Json sequence_to_json(const CharacteristicSequence& seq) {
  return Json{{"ring", ring_to_json(seq.ring())}, {"n", seq.length()}, {"levels", levels_to_json(seq.levels())}};
}

CompatibleFamily family_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"ring", "n", "default", "exceptions"});
  const Ring ring = ring_from_json(member(j, "ring", path), key_path(path, "ring"));
  const auto n = static_cast<std::size_t>(as_uint(member(j, "n", path), key_path(path, "n"), 1U << 20));

  std::optional<std::vector<LocalPattern>> default_pattern;
  if (const Json* d = optional_member(j, "default"); d != nullptr && !d->is_null()) {
    const std::string default_path = key_path(path, "default");
    require_array(*d, default_path);
    if (d->size() != n) {
      fail(default_path, "expected " + std::to_string(n) + " patterns, found " + std::to_string(d->size()));
    }
    default_pattern.emplace();
    for (std::size_t i = 0; i < d->size(); ++i) {
      const std::string pattern_path = index_path(default_path, i);
      require_array((*d)[i], pattern_path);
      LocalPattern pattern;
      for (std::size_t k = 0; k < (*d)[i].size(); ++k) {
        const std::string& tag = as_string((*d)[i][k], index_path(pattern_path, k));
        if (tag == "zero") {
          pattern.zero = true;
        } else if (tag == "max") {
          pattern.max = true;
        } else {
          fail(index_path(pattern_path, k), "expected \"zero\" or \"max\", found '" + tag + "'");
        }
      }
      default_pattern->push_back(pattern);
    }
  }

  std::vector<LocalSequence> exceptions;
  if (const Json* e = optional_member(j, "exceptions")) {
    const std::string exceptions_path = key_path(path, "exceptions");
    require_object(*e, exceptions_path);
    for (const auto& [key, value] : e->items()) {
      const std::string entry_path = key_path(exceptions_path, key);
      const PrimeIdeal m = prime_from_json(ring, Json(key), entry_path);
      std::vector<PrimeSet> levels = levels_from_json(ring, value, n, entry_path);
      exceptions.push_back(at_path(entry_path, [&] { return LocalSequence(ring, m, std::move(levels)); }));
    }
  }
  return at_path(path, [&] { return CompatibleFamily(ring, n, std::move(default_pattern), std::move(exceptions)); });
}

Json family_to_json(const CompatibleFamily& family) {
  const Ring& ring = family.ring();
  Json out{{"ring", ring_to_json(ring)}, {"n", family.length()}};
  if (family.default_pattern()) {
    Json patterns = Json::array();
    for (const auto& p : *family.default_pattern()) {
      Json tags = Json::array();
      if (p.zero) tags.push_back("zero");
      if (p.max) tags.push_back("max");
      patterns.push_back(std::move(tags));
    }
    out["default"] = std::move(patterns);
  }
  Json exceptions = Json::object();
  for (const auto& [m, local] : family.exceptions()) exceptions[ring.format(m)] = levels_to_json(local.levels());
  out["exceptions"] = std::move(exceptions);
  return out;
}

LocalSequence local_sequence_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"ring", "n", "at", "levels"});
  const Ring ring = ring_from_json(member(j, "ring", path), key_path(path, "ring"));
  const auto n = static_cast<std::size_t>(as_uint(member(j, "n", path), key_path(path, "n"), 1U << 20));
  const std::string at_path_text = key_path(path, "at");
  const PrimeIdeal m = prime_from_json(ring, member(j, "at", path), at_path_text);
  std::vector<PrimeSet> levels = levels_from_json(ring, member(j, "levels", path), n, key_path(path, "levels"));
  return at_path(path, [&] { return LocalSequence(ring, m, std::move(levels)); });
}

Json local_sequence_to_json(const LocalSequence& local) {
  return Json{{"ring", ring_to_json(local.ring())},
              {"n", local.length()},
              {"at", prime_to_json(local.ring(), local.at())},
              {"levels", levels_to_json(local.levels())}};
}

zhom::FgZModule module_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"rank", "torsion"});
  unsigned rank = 0;
  if (const Json* r = optional_member(j, "rank")) rank = as_unsigned(*r, key_path(path, "rank"));
  std::vector<zhom::PrimaryComponent> torsion;
  const std::string torsion_path = key_path(path, "torsion");
  if (const Json* t = optional_member(j, "torsion")) torsion = torsion_from_json(*t, torsion_path);
  return at_path(torsion_path, [&] { return zhom::FgZModule(rank, std::move(torsion)); });
}

Json module_to_json(const zhom::FgZModule& m) { return Json{{"rank", m.rank()}, {"torsion", torsion_to_json(m)}}; }

zhom::MatlisModule matlis_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"divisible_rank", "torsion"});
  zhom::MatlisModule m;
  m.divisible_rank = as_unsigned(member(j, "divisible_rank", path), key_path(path, "divisible_rank"));
  const std::string torsion_path = key_path(path, "torsion");
  if (const Json* t = optional_member(j, "torsion")) {
    std::vector<zhom::PrimaryComponent> torsion = torsion_from_json(*t, torsion_path);
    m.finite = at_path(torsion_path, [&] { return zhom::FgZModule(0, std::move(torsion)); });
  }
  return m;
}

Json matlis_to_json(const zhom::MatlisModule& m) {
  return Json{{"divisible_rank", m.divisible_rank}, {"torsion", torsion_to_json(m.finite)}};
}

zhom::LocalizedModule localized_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"prime", "rank", "torsion"});
  const std::uint64_t prime = as_uint(member(j, "prime", path), key_path(path, "prime"));
  unsigned rank = 0;
  if (const Json* r = optional_member(j, "rank")) rank = as_unsigned(*r, key_path(path, "rank"));
  std::vector<std::pair<unsigned, unsigned>> torsion;
  const std::string torsion_path = key_path(path, "torsion");
  if (const Json* t = optional_member(j, "torsion")) {
    require_array(*t, torsion_path);
    for (std::size_t i = 0; i < t->size(); ++i) {
      const std::string entry_path = index_path(torsion_path, i);
      require_array((*t)[i], entry_path);
      if ((*t)[i].size() != 2) fail(entry_path, "expected [exponent, multiplicity]");
      torsion.emplace_back(as_unsigned((*t)[i][0], index_path(entry_path, 0)),
                           as_unsigned((*t)[i][1], index_path(entry_path, 1)));
    }
  }
  return at_path(path, [&] { return zhom::LocalizedModule(prime, rank, std::move(torsion)); });
}

Json localized_to_json(const zhom::LocalizedModule& m) {
  Json torsion = Json::array();
  for (const auto& [e, mult] : m.torsion()) torsion.push_back(Json::array({e, mult}));
  return Json{{"prime", m.prime()}, {"rank", m.rank()}, {"torsion", std::move(torsion)}};
}

Json violation_to_json(const Ring& ring, const SequenceViolation& v) {
  Json out{{"clause", clause_tag(v.clause)}, {"index", v.index}};
  if (v.witness) out["witness"] = prime_to_json(ring, *v.witness);
  if (v.above) out["above"] = prime_to_json(ring, *v.above);
  return out;
}

Json verdict_to_json(const Ring& ring, const SequenceVerdict& verdict) {
  Json violations = Json::array();
  for (const auto& v : verdict.violations) violations.push_back(violation_to_json(ring, v));
  return Json{{"ok", verdict.ok()}, {"violations", std::move(violations)}, {"notes", verdict.notes}};
}

SequenceVerdict verdict_from_json(const Ring& ring, const Json& j, const std::string& path) {
  SequenceVerdict verdict;
  const std::string violations_path = key_path(path, "violations");
  const Json& violations = member(j, "violations", path);
  require_array(violations, violations_path);
  for (std::size_t i = 0; i < violations.size(); ++i) {
    verdict.violations.push_back(violation_from_json(ring, violations[i], index_path(violations_path, i)));
  }
  if (const Json* notes = optional_member(j, "notes")) {
    const std::string notes_path = key_path(path, "notes");
    require_array(*notes, notes_path);
    for (std::size_t i = 0; i < notes->size(); ++i) {
      verdict.notes.push_back(as_string((*notes)[i], index_path(notes_path, i)));
    }
  }
  return verdict;
}

Json family_verdict_to_json(const Ring& ring, const FamilyVerdict& verdict) {
  Json local = Json::array();
  for (const auto& l : verdict.local) {
    Json entry{{"at", prime_to_json(ring, l.at)}};
    entry.update(violation_to_json(ring, l.violation));
    local.push_back(std::move(entry));
  }
  Json pairs = Json::array();
  for (const auto& p : verdict.pairs) {
    pairs.push_back(Json{{"index", p.index},
                         {"m", prime_to_json(ring, p.m)},
                         {"m_prime", prime_to_json(ring, p.m_prime)},
                         {"witness", prime_to_json(ring, p.witness)}});
  }
  return Json{{"ok", verdict.ok()}, {"local", std::move(local)}, {"pairs", std::move(pairs)}};
}

FamilyVerdict family_verdict_from_json(const Ring& ring, const Json& j, const std::string& path) {
  FamilyVerdict verdict;
  const std::string local_path = key_path(path, "local");
  const Json& local = member(j, "local", path);
  require_array(local, local_path);
  for (std::size_t i = 0; i < local.size(); ++i) {
    const std::string entry_path = index_path(local_path, i);
    verdict.local.push_back({prime_from_json(ring, member(local[i], "at", entry_path), key_path(entry_path, "at")),
                             violation_from_json(ring, local[i], entry_path)});
  }
  const std::string pairs_path = key_path(path, "pairs");
  const Json& pairs = member(j, "pairs", path);
  require_array(pairs, pairs_path);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string entry_path = index_path(pairs_path, i);
    const Json& e = pairs[i];
    verdict.pairs.push_back(
        {static_cast<std::size_t>(as_uint(member(e, "index", entry_path), key_path(entry_path, "index"))),
         prime_from_json(ring, member(e, "m", entry_path), key_path(entry_path, "m")),
         prime_from_json(ring, member(e, "m_prime", entry_path), key_path(entry_path, "m_prime")),
         prime_from_json(ring, member(e, "witness", entry_path), key_path(entry_path, "witness"))});
  }
  return verdict;
}

}  // namespace cotilt::io
