#pragma once

// Link JSON, report JSON / text, SnapPy scripts and CSV tables.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nbt/surgery.hpp"
#include "nbt/verifier.hpp"

namespace nbt {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Braids and coefficients
// ---------------------------------------------------------------------------

inline json braid_to_json(const BraidWord& u) { return {{"strands", u.strands()}, {"word", u.letters()}}; }

inline BraidWord braid_from_json(const json& j) {
  return BraidWord(j.at("strands").get<int>(), j.at("word").get<std::vector<int>>());
}

/// Filling pair [b, a] for r = b/a, or null.
inline json filling_to_json(const std::optional<ExtendedRational>& r) {
  if (!r) return nullptr;
  return json::array({r->numerator(), r->denominator()});
}

inline std::optional<ExtendedRational> filling_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("filling must be [b, a] or null");
  const auto b = j[0].get<std::int64_t>(), a = j[1].get<std::int64_t>();
  if (a == 0 && b == 0) throw std::invalid_argument("filling [0, 0] is not a slope");
  return ExtendedRational(b, a);
}

inline json ledger_to_json(const TwistLedger& ledger) {
  json out = json::array();
  for (const auto& e : ledger) {
    json before = json::object(), after = json::object();
    for (const auto& [k, v] : e.before) before[k] = v ? json(v->to_string()) : json(nullptr);
    for (const auto& [k, v] : e.after) after[k] = v ? json(v->to_string()) : json(nullptr);
    out.push_back({{"operation", e.operation}, {"before", before}, {"after", after}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Links
// ---------------------------------------------------------------------------

inline json link_to_json(const SurgeredLink& link) {
  json comps = json::array();
  for (const auto& c : link.components())
    comps.push_back({{"name", c.name}, {"strands", c.strands}, {"filling", filling_to_json(c.coefficient)}});
  json j = {{"braid", braid_to_json(link.braid())}, {"axis", link.has_axis()}, {"components", comps}};
  if (link.has_axis()) j["axis_filling"] = filling_to_json(link.axis_coefficient());
  j["ledger"] = ledger_to_json(link.ledger());
  return j;
}

/// The ledger is not read back.
inline SurgeredLink link_from_json(const json& j) {
  std::vector<LinkComponent> cs;
  for (const auto& c : j.at("components"))
    cs.push_back({c.at("name").get<std::string>(), c.at("strands").get<std::vector<int>>(),
                  filling_from_json(c.value("filling", json(nullptr)))});
  const bool axis = j.value("axis", false);
  std::optional<ExtendedRational> ar;
  if (axis && j.contains("axis_filling")) ar = filling_from_json(j["axis_filling"]);
  return SurgeredLink(braid_from_json(j.at("braid")), axis, cs, ar);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json report_to_json(const VerificationReport& rep) {
  json steps = json::array();
  for (const auto& s : rep.steps) {
    json step = {{"description", s.description}, {"pass", s.pass}, {"detail", s.detail}};
    if (s.certificate)
      step["certificate"] = {{"source", braid_to_json(s.certificate->source)},
                             {"target", braid_to_json(s.certificate->target)},
                             {"conjugator", braid_to_json(s.certificate->conjugator)}};
    steps.push_back(step);
  }
  json j = {{"name", rep.name}, {"pass", rep.overall()}, {"steps", steps}, {"ledger", ledger_to_json(rep.ledger)}};
  if (rep.final_link) j["final_link"] = link_to_json(*rep.final_link);
  return j;
}

/// Re-checks every certificate in a report JSON; false if any fails.
inline bool recheck_report_json(const json& j) {
  for (const auto& s : j.at("steps")) {
    if (!s.contains("certificate")) continue;
    const auto& c = s["certificate"];
    ConjugacyCertificate cert{braid_from_json(c.at("source")), braid_from_json(c.at("target")),
                              braid_from_json(c.at("conjugator"))};
    if (!cert.check()) return false;
  }
  return true;
}

inline std::string report_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << rep.name << ": " << (rep.overall() ? "PASS" : "FAIL") << '\n';
  for (const auto& s : rep.steps) {
    os << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.description;
    if (!s.detail.empty()) os << " (" << s.detail << ')';
    os << '\n';
    if (s.certificate && s.certificate->conjugator.length() > 0)
      os << "       conjugator " << to_text(s.certificate->conjugator) << '\n';
  }
  if (!rep.ledger.empty()) {
    os << "  ledger:\n";
    for (const auto& e : rep.ledger) {
      os << "    " << e.operation << ':';
      for (const auto& [k, v] : e.after) os << ' ' << k << '=' << (v ? v->to_string() : "-");
      os << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SnapPy
// ---------------------------------------------------------------------------

/// A Python script that builds the exterior of the closure (plus axis) in
/// SnapPy, matches cusps to component names by the linking matrix, fills
/// them and prints the volume. SnapPy orders link components its own way,
/// so the matching is done at run time. SnapPy's sigma_i is the mirror of
/// ours, so the word goes out negated; fillings keep their signs.
inline std::string snappy_script(const SurgeredLink& link) {
  const auto comps = link.components();
  BraidWord word = link.braid();
  std::vector<LinkComponent> all = comps;
  if (link.has_axis()) {
    word = axis_augmented_braid(word);
    all.push_back({kAxisName, {word.strands()}, link.axis_coefficient()});
  }
  // linking numbers on the augmented braid
  std::vector<LinkComponent> plain;
  for (std::size_t i = 0; i < all.size(); ++i) plain.push_back({"c" + std::to_string(i), all[i].strands, std::nullopt});
  const SurgeredLink flat(word, false, plain);
  const std::size_t k = all.size();

  std::ostringstream os;
  os << "import itertools\nimport snappy\n\n";
  os << "BRAID = [";
  for (std::size_t i = 0; i < word.letters().size(); ++i) os << (i ? ", " : "") << -word.letters()[i];
  os << "]\nNAMES = [";
  for (std::size_t i = 0; i < k; ++i) os << (i ? ", " : "") << '"' << all[i].name << '"';
  os << "]\nLINKING = [";
  for (std::size_t a = 0; a < k; ++a) {
    os << (a ? ", " : "") << '[';
    for (std::size_t b = 0; b < k; ++b)
      os << (b ? ", " : "") << (a == b ? 0 : flat.linking_number("c" + std::to_string(a), "c" + std::to_string(b)));
    os << ']';
  }
  os << "]\nFILLINGS = {";
  bool first = true;
  for (const auto& c : all)
    if (c.coefficient && !c.coefficient->is_infinite()) {
      os << (first ? "" : ", ") << '"' << c.name << "\": (" << c.coefficient->numerator() << ", "
         << c.coefficient->denominator() << ')';
      first = false;
    }
  os << "}\nERASED = [";
  first = true;
  for (const auto& c : all)
    if (c.coefficient && c.coefficient->is_infinite()) {
      os << (first ? "" : ", ") << '"' << c.name << '"';
      first = false;
    }
  os << "]\n\n";
  os << R"(
def cusp_order(link):
    got = link.linking_matrix()
    k = len(NAMES)
    found = []
    for perm in itertools.permutations(range(k)):
        if all(abs(got[perm[a]][perm[b]]) == abs(LINKING[a][b]) for a in range(k) for b in range(k)):
            found.append(perm)
    if not found:
        raise RuntimeError("linking matrix does not match")
    slots = {tuple(FILLINGS.get(NAMES[a]) for a in sorted(range(k), key=lambda a: p[a])) for p in found}
    if len(slots) > 1:
        raise RuntimeError("cusp order is ambiguous for these fillings")
    return found[0]


def manifold():
    if ERASED:
        raise RuntimeError("erase components with coefficient inf before export")
    link = snappy.Link(braid_closure=BRAID)
    order = cusp_order(link)
    M = link.exterior()
    fill = [(0, 0)] * len(NAMES)
    for a, name in enumerate(NAMES):
        if name in FILLINGS:
            fill[order[a]] = FILLINGS[name]
    M.dehn_fill(fill)
    return M


if __name__ == "__main__":
    M = manifold()
    print(M.num_cusps(), M.volume(), M.solution_type())
)";
  return os.str();
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string to_csv(const CsvTable& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

inline CsvTable parse_csv(std::istream& in) {
  CsvTable t;
  std::string text;
  bool first = true;
  while (std::getline(in, text)) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (text.back() == ',') cells.emplace_back();
    if (first)
      t.header = std::move(cells);
    else
      t.rows.push_back(std::move(cells));
    first = false;
  }
  if (t.header.empty()) throw std::invalid_argument("parse_csv: missing header");
  return t;
}

/// Outer join on the first column. Value columns are renamed
/// `<label>:<column>`; missing cells stay empty. Rows keep first-seen order.
inline CsvTable merge_csv(const std::vector<std::pair<std::string, CsvTable>>& inputs) {
  CsvTable out;
  if (inputs.empty()) return out;
  out.header.push_back(inputs.front().second.header.front());
  std::vector<std::string> keys;
  std::map<std::string, std::map<std::string, std::string>> cells;
  for (const auto& [label, t] : inputs) {
    std::vector<std::string> cols;
    for (std::size_t c = 1; c < t.header.size(); ++c) cols.push_back(label + ":" + t.header[c]);
    out.header.insert(out.header.end(), cols.begin(), cols.end());
    for (const auto& r : t.rows) {
      if (r.empty()) continue;
      if (!cells.count(r[0])) keys.push_back(r[0]);
      auto& row = cells[r[0]];
      for (std::size_t c = 1; c < t.header.size() && c < r.size(); ++c) row[cols[c - 1]] = r[c];
    }
  }
  for (const auto& key : keys) {
    std::vector<std::string> r{key};
    for (std::size_t c = 1; c < out.header.size(); ++c) {
      auto it = cells[key].find(out.header[c]);
      r.push_back(it == cells[key].end() ? "" : it->second);
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace nbt
