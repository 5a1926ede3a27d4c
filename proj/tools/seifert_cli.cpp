// seifert: command-line front end for Seifert symbol invariants, profinite
// equivalence verdicts and finite-quotient fingerprints.
//
// Exit status: 0 success, 1 domain or resource error (error JSON on stdout),
// 2 usage or parse error.

#include "seifert/seifert.hpp"
#include "seifert/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifndef SEIFERT_DEFAULT_CATALOGUE
#define SEIFERT_DEFAULT_CATALOGUE "data/groups_le_24.txt"
#endif

namespace {

using seifert::Json;

struct Options {
  std::size_t max_index = 5;
  std::string catalogue_path;
  bool pretty = false;
  bool pq = false;
  bool verify = false;
  std::vector<std::string> args;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string resolve_catalogue(const Options& o) {
  if (!o.catalogue_path.empty()) return o.catalogue_path;
  if (const char* env = std::getenv("SEIFERT_CATALOGUE"); env && *env) return env;
  return SEIFERT_DEFAULT_CATALOGUE;
}

const std::vector<seifert::FiniteGroupTable>& catalogue(const Options& o) {
  static std::optional<std::vector<seifert::FiniteGroupTable>> cached;
  if (!cached) cached = seifert::load_catalogue_file(resolve_catalogue(o));
  return *cached;
}

seifert::SeifertSymbol read_symbol(const std::string& text, const Options& o) {
  seifert::SeifertSymbol s = seifert::parse_symbol(text);
  if (o.pq)
    for (auto& f : s.fibres) f = seifert::seifert_pair_from_fibre_invariants(f.alpha, f.beta);
  return s;
}

bool is_orbifold_text(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text.compare(pos, 3, "ORB") == 0;
}

seifert::Presentation read_group(const std::string& text, const Options& o) {
  if (is_orbifold_text(text)) return seifert::orbifold_presentation(seifert::parse_orbifold(text));
  return seifert::presentation(seifert::normalize(read_symbol(text, o)));
}

seifert::DecideOptions decide_options(const Options& o, bool with_catalogue) {
  seifert::DecideOptions d;
  d.max_index = o.max_index;
  if (with_catalogue) d.catalogue = &catalogue(o);
  return d;
}

void print_human(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); }));
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (flat(value)) {
        out << pad << key << ": " << (value.is_array() ? value.dump() : scalar(value)) << "\n";
      } else {
        out << pad << key << ":\n";
        print_human(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (flat(item)) {
        out << pad << "- " << scalar(item) << "\n";
      } else {
        out << pad << "-\n";
        print_human(item, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const Json& j, const Options& o) {
  if (o.pretty)
    print_human(j, std::cout);
  else
    std::cout << j.dump() << "\n";
}

Json verify(const seifert::Verdict& v, const std::string& a, const std::string& b, const Options& o) {
  const auto& cat = catalogue(o);
  auto f1 = seifert::fingerprint(read_group(a, o), o.max_index, cat);
  auto f2 = seifert::fingerprint(read_group(b, o), o.max_index, cat);
  auto diff = seifert::first_difference(f1, f2);
  const bool equal = !diff.has_value();
  bool consistent = true;
  std::string note;
  switch (v.kind) {
    case seifert::VerdictKind::Homeomorphic:
    case seifert::VerdictKind::HempelEquivalent:
    case seifert::VerdictKind::Equivalent:
      consistent = equal;
      note = equal ? "fingerprints agree, as the verdict requires" : "fingerprints contradict the verdict";
      break;
    case seifert::VerdictKind::NotEquivalent: {
      const bool by_h1 = std::find(v.separators.begin(), v.separators.end(), "H1") != v.separators.end();
      consistent = !(by_h1 && equal);
      if (!equal)
        note = "fingerprints separate the pair";
      else
        note = by_h1 ? "fingerprints fail to see an H1 separator" : "not separated by fingerprints at this depth";
      break;
    }
    case seifert::VerdictKind::FiniteFundamentalGroup:
      consistent = v.inconclusive == equal;
      note = equal ? "fingerprints agree" : "fingerprints separate the pair";
      break;
  }
  Json out;
  out["fingerprints_equal"] = equal;
  out["difference"] = diff ? Json(*diff) : Json(nullptr);
  out["consistent"] = consistent;
  out["note"] = note;
  out["depth"] = Json{{"max_index", f1.depth.max_index}, {"catalogue_id", f1.depth.catalogue_id}};
  return out;
}

Json run_decide(const Options& o) {
  const auto a = read_symbol(o.args[0], o), b = read_symbol(o.args[1], o);
  seifert::Verdict v;
  if (a.closed() && b.closed()) {
    const bool spherical = seifert::geometry(seifert::normalize(a)) == seifert::Geometry::S3 &&
                           seifert::geometry(seifert::normalize(b)) == seifert::Geometry::S3;
    v = seifert::decide_closed(a, b, decide_options(o, spherical));
  } else if (!a.closed() && !b.closed()) {
    v = seifert::decide_bounded(a, b);
  } else {
    v.kind = seifert::VerdictKind::NotEquivalent;
    v.separators = {"boundary"};
    v.notes = "one space is closed and the other has boundary";
  }
  Json out = seifert::to_json(v);
  if (o.verify) out["verification"] = verify(v, o.args[0], o.args[1], o);
  return out;
}

Json run(const std::string& command, const Options& o) {
  if (command == "invariants") return seifert::invariants_report(read_symbol(o.args[0], o));
  if (command == "normalize") {
    auto s = read_symbol(o.args[0], o);
    return Json{{"normalized", seifert::render_symbol(seifert::normalize(s))},
                {"canonical", seifert::render_symbol(seifert::canonical_form(s))}};
  }
  if (command == "decide") return run_decide(o);
  if (command == "partners") {
    Json list = Json::array();
    for (const auto& p : seifert::hempel_partners(read_symbol(o.args[0], o))) list.push_back(seifert::render_symbol(p));
    return Json{{"partners", list}, {"count", list.size()}};
  }
  if (command == "fingerprint")
    return seifert::to_json(seifert::fingerprint(read_group(o.args[0], o), o.max_index, catalogue(o)));
  if (command == "compare") {
    const auto& cat = catalogue(o);
    auto f1 = seifert::fingerprint(read_group(o.args[0], o), o.max_index, cat);
    auto f2 = seifert::fingerprint(read_group(o.args[1], o), o.max_index, cat);
    auto diff = seifert::first_difference(f1, f2);
    return Json{{"equal", !diff.has_value()},
                {"difference", diff ? Json(*diff) : Json(nullptr)},
                {"depth", {{"max_index", f1.depth.max_index}, {"catalogue_id", f1.depth.catalogue_id}}}};
  }
  if (command == "orbifold-decide") {
    auto o1 = seifert::parse_orbifold(o.args[0]), o2 = seifert::parse_orbifold(o.args[1]);
    const bool finite = seifert::sign_of(seifert::orbifold_euler_characteristic(o1)) > 0 &&
                        seifert::sign_of(seifert::orbifold_euler_characteristic(o2)) > 0;
    return seifert::to_json(seifert::decide_orbifolds(o1, o2, decide_options(o, finite)));
  }
  throw UsageError("unknown subcommand " + command);
}

Json error_json(const std::string& type, const std::string& message) {
  return Json{{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert fibre space invariants, profinite equivalence verdicts and quotient fingerprints"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--max-index", o.max_index, "Largest subgroup index in fingerprints")->check(CLI::Range(1, 12));
  app.add_option("--catalogue", o.catalogue_path, "Finite-group catalogue file (overrides SEIFERT_CATALOGUE)");
  auto* json_flag = app.add_flag("--json", "Compact JSON output (default)");
  app.add_flag("--pretty", o.pretty, "Human-readable output")->excludes(json_flag);
  app.add_flag("--pq", o.pq, "Read fibre pairs as fibred-solid-torus invariants (p,q), converting to (p, q^-1 mod p)");

  struct Spec {
    const char* name;
    const char* help;
    std::size_t arity;
  };
  const Spec specs[] = {
      {"invariants", "Euler number, orbifold characteristic, geometry and H1 of a symbol", 1},
      {"normalize", "Normalized and canonical forms of a symbol", 1},
      {"decide", "Profinite-equivalence verdict for two symbols", 2},
      {"partners", "Canonical forms of all zero-Euler unit-scaling partners", 1},
      {"fingerprint", "Finite-quotient fingerprint of a symbol or orbifold", 1},
      {"compare", "Compare the fingerprints of two symbols or orbifolds", 2},
      {"orbifold-decide", "Verdict for two closed 2-orbifolds", 2},
  };
  for (const auto& spec : specs) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    sub->add_option("args", o.args, "SFS[...] or ORB[...] text")->required()->expected(static_cast<int>(spec.arity));
    if (std::string(spec.name) == "decide")
      sub->add_flag("--verify", o.verify, "Also compare fingerprints and report agreement");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    emit(run(app.get_subcommands().front()->get_name(), o), o);
    return 0;
  } catch (const seifert::ParseError& e) {
    emit(error_json("parse", e.what()), o);
    return 2;
  } catch (const UsageError& e) {
    emit(error_json("usage", e.what()), o);
    return 2;
  } catch (const seifert::ResourceError& e) {
    emit(error_json("resource", e.what()), o);
    return 1;
  } catch (const std::exception& e) {
    emit(error_json("domain", e.what()), o);
    return 1;
  }
}
