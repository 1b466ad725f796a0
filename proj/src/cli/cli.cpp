#include "cotilt/cli.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "cotilt/enumerate.hpp"
#include "cotilt/error.hpp"
#include "cotilt/family.hpp"
#include "cotilt/number_theory.hpp"
#include "cotilt/sampling.hpp"
#include "cotilt/sequence.hpp"
#include "cotilt/zhom/membership.hpp"
#include "cotilt/zhom/oracle.hpp"

namespace cotilt::cli {

using io::Json;

std::string status_name(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::Violation:
      return "violation";
    case Status::Error:
      return "error";
  }
  return "?";
}

int CommandReport::exit_code() const {
  switch (status) {
    case Status::Ok:
      return 0;
    case Status::Violation:
      return 1;
    case Status::Error:
      return 2;
  }
  return 2;
}

std::string CommandReport::render() const {
  if (json_output) return payload.dump(2) + "\n";
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

struct Globals {
  bool json = false;
  bool inline_input = false;
};

CommandReport make_report(Status status, Json body) {
  CommandReport report;
  report.status = status;
  report.payload = Json{{"status", status_name(status)}};
  for (auto& [key, value] : body.items()) report.payload[key] = std::move(value);
  return report;
}

// A document given on the command line, either as a path or inline text.
class Document {
 public:
  Document(std::string arg, const std::string& role, const Globals& g)
      : source_(g.inline_input ? "<inline " + role + ">" : arg),
        ring_path_(role == "ring" ? "$" : "$.ring"),
        json_(g.inline_input ? io::parse_document(arg, source_) : io::load_file(arg)) {}

  // Runs a loader or a computation on the document, naming the source in
  // any input or configuration error it raises.
  const std::string& source() const { return source_; }

  template <class F>
  auto with(F&& f) const {
    try {
      return f(json_);
    } catch (const InputError& e) {
      throw InputError(source_ + ": " + e.what());
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      throw ConfigError(source_ + ": " + (what.starts_with("at ") ? what : "at " + ring_path_ + ": " + what));
    }
  }

 private:
  std::string source_;
  std::string ring_path_;
  Json json_;
};

std::vector<std::string> verdict_lines(const Ring& ring, const SequenceVerdict& verdict) {
  std::vector<std::string> lines;
  if (verdict.ok()) lines.emplace_back("ok");
  for (const auto& v : verdict.violations) lines.push_back(format_violation(ring, v));
  for (const auto& note : verdict.notes) lines.push_back("note: " + note);
  return lines;
}

std::vector<std::string> family_verdict_lines(const Ring& ring, const FamilyVerdict& verdict) {
  std::vector<std::string> lines;
  if (verdict.ok()) lines.emplace_back("ok");
  for (const auto& l : verdict.local) {
    lines.push_back("at " + ring.format(l.at) + ": " + format_violation(ring, l.violation));
  }
  for (const auto& p : verdict.pairs) lines.push_back(format_compatibility_violation(ring, p));
  return lines;
}

std::vector<std::string> family_lines(const CompatibleFamily& family) {
  const Ring& ring = family.ring();
  std::vector<std::string> lines{"family over " + ring.describe() + " of length " + std::to_string(family.length())};
  if (family.default_pattern()) {
    std::string text = "default:";
    for (const auto& p : *family.default_pattern()) {
      std::string level;
      if (p.zero) level += "(0)";
      if (p.max) level += level.empty() ? "m" : ", m";
      text += " {" + level + "}";
    }
    lines.push_back(text);
  }
  for (const auto& [m, local] : family.exceptions()) lines.push_back(ring.format(m) + ": " + local.format());
  return lines;
}

CommandReport precondition_report(const PreconditionError& e) {
  CommandReport r = make_report(Status::Violation, Json{{"error", e.what()}});
  r.lines.emplace_back(e.what());
  return r;
}

// Runs a command whose sequence argument must be characteristic; a failure
// is a violation carrying the validator's verdict.
template <class F>
CommandReport require_valid(const CharacteristicSequence& seq, F&& command) {
  try {
    return command();
  } catch (const InvalidSequenceError& e) {
    CommandReport r =
        make_report(Status::Violation, Json{{"error", e.what()}, {"verdict", io::verdict_to_json(seq.ring(), e.verdict())}});
    r.lines.emplace_back("not a characteristic sequence");
    for (auto& line : verdict_lines(seq.ring(), e.verdict())) r.lines.push_back(std::move(line));
    return r;
  }
}

CommandReport sweep_report(const std::string& name, const zhom::SweepReport& sweep) {
  CommandReport r = make_report(sweep.ok() ? Status::Ok : Status::Violation,
                                Json{{"oracle", name}, {"checked", sweep.checked}, {"failures", sweep.failures}});
  r.lines.push_back(name + ": checked " + std::to_string(sweep.checked) + " cases, " +
                    std::to_string(sweep.failures.size()) + " failures");
  for (const auto& f : sweep.failures) r.lines.push_back("failure: " + f);
  return r;
}

void require_primes(const std::vector<std::uint64_t>& primes, const std::string& option) {
  for (auto p : primes) {
    if (!nt::is_prime(p)) throw InputError(option + ": " + std::to_string(p) + " is not prime");
  }
}

CommandReport cmd_validate(const std::string& file, const Globals& g) {
  const Document doc(file, "sequence", g);
  const CharacteristicSequence seq = doc.with([](const Json& j) { return io::sequence_from_json(j); });
  const SequenceVerdict verdict = doc.with([&](const Json&) { return validate_sequence(seq); });
  CommandReport r = make_report(verdict.ok() ? Status::Ok : Status::Violation,
                                Json{{"verdict", io::verdict_to_json(seq.ring(), verdict)}});
  r.lines = verdict_lines(seq.ring(), verdict);
  return r;
}

CommandReport cmd_count(const std::string& file, std::size_t n, const Globals& g) {
  const Document doc(file, "ring", g);
  const Ring ring = doc.with([](const Json& j) { return io::ring_from_json(j); });
  const std::uint64_t count = doc.with([&](const Json&) { return count_sequences(ring, n); });
  CommandReport r = make_report(Status::Ok, Json{{"n", n}, {"count", count}});
  r.lines.push_back(std::to_string(count));
  return r;
}

CommandReport cmd_enumerate(const std::string& file, std::size_t n, bool count_only, const Globals& g) {
  if (count_only) return cmd_count(file, n, g);
  const Document doc(file, "ring", g);
  const Ring ring = doc.with([](const Json& j) { return io::ring_from_json(j); });
  std::vector<std::string> lines;
  Json sequences = Json::array();
  doc.with([&](const Json&) {
    SequenceEnumerator e(ring, n);
    while (auto seq = e.next()) {
      lines.push_back(seq->format());
      sequences.push_back(io::sequence_to_json(*seq)["levels"]);
    }
    return 0;
  });
  CommandReport r = make_report(
      Status::Ok, Json{{"ring", io::ring_to_json(ring)}, {"n", n}, {"count", lines.size()}, {"sequences", sequences}});
  r.lines = std::move(lines);
  return r;
}

CommandReport cmd_localize(const std::string& file, const std::optional<std::string>& at, const Globals& g) {
  const Document doc(file, "sequence", g);
  const CharacteristicSequence seq = doc.with([](const Json& j) { return io::sequence_from_json(j); });
  return require_valid(seq, [&] {
    if (at) {
      const PrimeIdeal m = io::prime_from_json(seq.ring(), Json(*at), "--at");
      const LocalSequence local = doc.with([&](const Json&) { return localize_sequence(seq, m); });
      CommandReport r = make_report(Status::Ok, Json{{"local", io::local_sequence_to_json(local)}});
      r.lines.push_back(local.format());
      return r;
    }
    const CompatibleFamily family = doc.with([&](const Json&) { return localization_family(seq); });
    CommandReport r = make_report(Status::Ok, Json{{"family", io::family_to_json(family)}});
    r.lines = family_lines(family);
    return r;
  });
}

CommandReport cmd_glue(const std::string& file, const Globals& g) {
  const Document doc(file, "family", g);
  const CompatibleFamily family = doc.with([](const Json& j) { return io::family_from_json(j); });
  try {
    const CharacteristicSequence seq = doc.with([&](const Json&) { return glue_family(family); });
    CommandReport r = make_report(Status::Ok, Json{{"sequence", io::sequence_to_json(seq)}});
    r.lines.push_back(seq.format());
    return r;
  } catch (const IncompatibleFamilyError& e) {
    CommandReport r = make_report(Status::Violation,
                                  Json{{"error", e.what()}, {"verdict", io::family_verdict_to_json(family.ring(), e.verdict())}});
    r.lines.emplace_back("family is not compatible");
    for (auto& line : family_verdict_lines(family.ring(), e.verdict())) r.lines.push_back(std::move(line));
    return r;
  }
}

CommandReport cmd_check_family(const std::string& file, const Globals& g) {
  const Document doc(file, "family", g);
  const CompatibleFamily family = doc.with([](const Json& j) { return io::family_from_json(j); });
  const FamilyVerdict verdict = doc.with([&](const Json&) { return check_compatibility(family); });
  CommandReport r = make_report(verdict.ok() ? Status::Ok : Status::Violation,
                                Json{{"verdict", io::family_verdict_to_json(family.ring(), verdict)}});
  r.lines = family_verdict_lines(family.ring(), verdict);
  return r;
}

CommandReport member_report(const Document& module_doc, const Document& seq_doc, const CharacteristicSequence& seq,
                            const std::string& side) {
  bool member = false;
  Json module_json;
  const bool matlis = module_doc.with([](const Json& j) { return j.is_object() && j.contains("divisible_rank"); });
  if (matlis) {
    if (side != "cotilting") {
      throw InputError(module_doc.source() + ": tilting membership is defined for finitely generated modules only");
    }
    const zhom::MatlisModule m = module_doc.with([](const Json& j) { return io::matlis_from_json(j); });
    member = seq_doc.with([&](const Json&) { return zhom::cotilting_membership(m, seq); });
    module_json = io::matlis_to_json(m);
  } else {
    const zhom::FgZModule m = module_doc.with([](const Json& j) { return io::module_from_json(j); });
    member = seq_doc.with([&](const Json&) {
      return side == "cotilting" ? zhom::cotilting_membership(m, seq) : zhom::tilting_membership(m, seq);
    });
    module_json = io::module_to_json(m);
  }
  CommandReport r = make_report(member ? Status::Ok : Status::Violation,
                                Json{{"side", side}, {"module", module_json}, {"member", member}});
  r.lines.emplace_back(member ? "member of the " + side + " class" : "not a member of the " + side + " class");
  return r;
}

CommandReport cmd_member(const std::string& module_file, const std::string& seq_file, const std::string& side,
                         const Globals& g) {
  const Document module_doc(module_file, "module", g);
  const Document seq_doc(seq_file, "sequence", g);
  const CharacteristicSequence seq = seq_doc.with([](const Json& j) { return io::sequence_from_json(j); });
  return require_valid(seq, [&] { return member_report(module_doc, seq_doc, seq, side); });
}

CommandReport cmd_roundtrip(std::size_t samples, std::uint64_t seed, std::size_t max_length,
                            std::size_t max_exceptions) {
  std::mt19937_64 rng(seed);
  const Ring z = Ring::integers();
  zhom::SweepReport sweep;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
    const CharacteristicSequence seq = random_dim_one_sequence(z, n, max_exceptions, rng);
    if (!sequences_equal(glue_family(localization_family(seq)), seq)) {
      sweep.failures.push_back("glue(localize(P)) != P for P = " + seq.format());
    }
    const CompatibleFamily family = random_dim_one_family(z, n, max_exceptions, rng);
    if (!families_equivalent(localization_family(glue_family(family)), family)) {
      sweep.failures.push_back("localize(glue(F)) differs from F for sample " + std::to_string(s));
    }
    sweep.checked += 2;
  }
  return sweep_report("roundtrip", sweep);
}

}  // namespace

CommandReport run(const std::vector<std::string>& argv) {
  CLI::App app{"Characteristic sequences, compatible families and cotilting classes", "cotilt"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print the machine-readable JSON payload");
  app.add_flag("--inline", g.inline_input, "Read documents from the arguments instead of files");

  std::function<CommandReport()> action;
  std::string file;
  std::size_t n = 0;

  auto* validate = app.add_subcommand("validate", "Check the clauses of a characteristic sequence");
  validate->add_option("sequence", file, "Sequence JSON")->required();
  validate->callback([&] { action = [&] { return cmd_validate(file, g); }; });

  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the characteristic sequences over a synthetic ring");
  enumerate->add_option("ring", file, "Ring JSON")->required();
  enumerate->add_option("-n", n, "Sequence length")->required();
  enumerate->add_flag("--count", count_only, "Print only the number of sequences");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(file, n, count_only, g); }; });

  auto* count = app.add_subcommand("count", "Count the characteristic sequences over a synthetic ring");
  count->add_option("ring", file, "Ring JSON")->required();
  count->add_option("-n", n, "Sequence length")->required();
  count->callback([&] { action = [&] { return cmd_count(file, n, g); }; });

  std::optional<std::string> at;
  auto* localize = app.add_subcommand("localize", "Localize a sequence at one maximal ideal or at all of them");
  localize->add_option("sequence", file, "Sequence JSON")->required();
  localize->add_option("--at", at, "Maximal ideal, e.g. \"(2)\" or a synthetic label");
  localize->callback([&] { action = [&] { return cmd_localize(file, at, g); }; });

  auto* glue = app.add_subcommand("glue", "Glue a compatible family into a sequence");
  glue->add_option("family", file, "Family JSON")->required();
  glue->callback([&] { action = [&] { return cmd_glue(file, g); }; });

  auto* check = app.add_subcommand("check-family", "Check local validity and pairwise compatibility of a family");
  check->add_option("family", file, "Family JSON")->required();
  check->callback([&] { action = [&] { return cmd_check_family(file, g); }; });

  std::string module_file;
  std::string seq_file;
  std::string side = "cotilting";
  auto* member = app.add_subcommand("member", "Test membership of a Z-module in the class of a sequence");
  member->add_option("--module", module_file, "Module JSON")->required();
  member->add_option("--seq", seq_file, "Sequence JSON over Z")->required();
  member->add_option("--side", side, "cotilting or tilting")->check(CLI::IsMember({"cotilting", "tilting"}));
  member->callback([&] { action = [&] { return cmd_member(module_file, seq_file, side, g); }; });

  auto* oracle = app.add_subcommand("oracle", "Run a cross-check sweep over finite data");
  oracle->require_subcommand(1);
  std::uint64_t max_order = 0;
  std::vector<std::uint64_t> primes;

  std::string part = "a";
  std::vector<unsigned> degrees{1, 2};
  auto* cartanei = oracle->add_subcommand("cartanei", "Ext over Z_(p) against Ext over Z, localized");
  cartanei->add_option("--part", part, "a or b")->check(CLI::IsMember({"a", "b"}));
  cartanei->add_option("--max-order", max_order, "Largest group order (default 32)");
  cartanei->add_option("--primes", primes, "Primes (default 2,3)")->delimiter(',');
  cartanei->add_option("--degrees", degrees, "Ext degrees (default 1,2)")->delimiter(',');
  cartanei->callback([&] {
    action = [&] {
      if (max_order == 0) max_order = 32;
      if (primes.empty()) primes = {2, 3};
      require_primes(primes, "--primes");
      const auto which = part == "a" ? zhom::CartanPart::A : zhom::CartanPart::B;
      return sweep_report("cartanei-" + part, zhom::cartanei_sweep(which, max_order, primes, degrees));
    };
  });

  auto* dual = oracle->add_subcommand("dual-coloc", "Dual of a localization against colocalization of the dual");
  dual->add_option("--max-order", max_order, "Largest module order (default 64)");
  dual->add_option("--primes", primes, "Primes (default 2,3,5)")->delimiter(',');
  dual->callback([&] {
    action = [&] {
      if (max_order == 0) max_order = 64;
      if (primes.empty()) primes = {2, 3, 5};
      require_primes(primes, "--primes");
      return sweep_report("dual-coloc", zhom::dual_coloc_sweep(max_order, primes));
    };
  });

  auto* coloc = oracle->add_subcommand("coloc", "Closed-form colocalization against an inverse limit");
  coloc->add_option("--max-order", max_order, "Largest module order (default 256)");
  coloc->add_option("--primes", primes, "Primes (default 2,3,5)")->delimiter(',');
  coloc->callback([&] {
    action = [&] {
      if (max_order == 0) max_order = 256;
      if (primes.empty()) primes = {2, 3, 5};
      require_primes(primes, "--primes");
      return sweep_report("coloc", zhom::colocalization_sweep(max_order, primes));
    };
  });

  unsigned max_degree = 2;
  auto* bass = oracle->add_subcommand("bass", "Bass numbers of Z from resolutions against the built-in data");
  bass->add_option("--primes", primes, "Primes (default 2,3,5,7)")->delimiter(',');
  bass->add_option("--max-degree", max_degree, "Largest cosyzygy index (default 2)");
  bass->callback([&] {
    action = [&] {
      if (primes.empty()) primes = {2, 3, 5, 7};
      require_primes(primes, "--primes");
      return sweep_report("bass", zhom::bass_sweep(primes, max_degree));
    };
  });

  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_length = 3;
  std::size_t max_exceptions = 5;
  auto* roundtrip = oracle->add_subcommand("roundtrip", "Random glue/localize round trips over Z");
  roundtrip->add_option("--samples", samples, "Number of samples (default 1000)");
  roundtrip->add_option("--seed", seed, "Random seed (default fixed)");
  roundtrip->add_option("--max-length", max_length, "Largest sequence length (default 3)");
  roundtrip->add_option("--max-exceptions", max_exceptions, "Most exceptional primes (default 5)");
  roundtrip->callback([&] { action = [&] { return cmd_roundtrip(samples, seed, max_length, max_exceptions); }; });

  CommandReport report;
  try {
    std::vector<const char*> raw;
    for (const auto& a : argv) raw.push_back(a.c_str());
    if (raw.empty()) raw.push_back("cotilt");
    if (raw.size() > 1 && raw[1][0] != '-' && app.get_subcommand_no_throw(raw[1]) == nullptr) {
      throw CLI::ParseError("unknown subcommand '" + std::string(raw[1]) + "'", CLI::ExitCodes::ExtrasError);
    }
    app.parse(static_cast<int>(raw.size()), raw.data());
    report = action();
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    report = make_report(Status::Ok, Json{{"help", target->help()}});
    report.lines.push_back(target->help());
  } catch (const CLI::ParseError& e) {
    report = make_report(Status::Error, Json{{"error", e.what()}});
    report.lines.push_back(std::string("error: ") + e.what());
  } catch (const PreconditionError& e) {
    report = precondition_report(e);
  } catch (const Error& e) {
    report = make_report(Status::Error, Json{{"error", e.what()}});
    report.lines.push_back(std::string("error: ") + e.what());
  }
  report.json_output = g.json;
  return report;
}

}  // namespace cotilt::cli
