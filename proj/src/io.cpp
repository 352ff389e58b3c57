#include "dybrace/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dybrace {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

json table_rows(const std::vector<std::uint32_t>& flat, std::size_t rows, std::size_t cols) {
  json out = json::array();
  for (std::size_t r = 0; r < rows; ++r)
    out.push_back(std::vector<std::uint32_t>(flat.begin() + r * cols, flat.begin() + (r + 1) * cols));
  return out;
}

std::vector<std::uint32_t> flatten(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols,
                                   const char* what) {
  std::vector<std::uint32_t> out;
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError(std::string(what) + " row has the wrong length");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

json auts_json(const Holomorph& hol) {
  json out = json::array();
  for (const auto& f : hol.auts()) out.push_back(f.images);
  return out;
}

json family_body(const DBraceFamily& fam) {
  json sections = json::array();
  for (const auto& s : fam.sections) sections.push_back(s.auts);
  return {{"sections", sections}, {"phi", table_rows(fam.phi, fam.params(), fam.order())}};
}

// Parses sections (and φ when present) of one family against a holomorph,
// translating automorphism ids from the file's numbering.
DBraceFamily parse_family(const std::shared_ptr<const Holomorph>& hol,
                          const std::vector<AutId>& remap, const json& j) {
  const auto n = hol->order();
  const auto raw = field<std::vector<std::vector<AutId>>>(j, "sections");
  if (raw.empty()) throw InputError("a family needs at least one section");
  std::vector<Section> sections;
  for (const auto& r : raw) {
    if (r.size() != n) throw InputError("section length differs from |A|");
    Section s;
    for (auto f : r) {
      if (f >= remap.size()) throw InputError("automorphism id out of range");
      s.auts.push_back(remap[f]);
    }
    sections.push_back(std::move(s));
  }
  if (!j.contains("phi") || j.at("phi").is_null()) return make_family(hol, std::move(sections));

  DBraceFamily fam{hol, std::move(sections), {}};
  const auto rows = field<std::vector<std::vector<std::uint32_t>>>(j, "phi");
  if (rows.size() != fam.params()) throw InputError("φ has the wrong number of rows");
  fam.phi = flatten(rows, n, "φ");
  for (auto v : fam.phi)
    if (v >= fam.params()) throw InputError("φ entry outside the parameter range");
  return fam;
}

std::vector<AutId> aut_remap(const Holomorph& hol, const json& j) {
  if (!j.contains("auts")) {
    std::vector<AutId> id(hol.aut_count());
    for (AutId f = 0; f < id.size(); ++f) id[f] = f;
    return id;
  }
  std::vector<AutId> remap;
  for (const auto& images : field<std::vector<std::vector<Elem>>>(j, "auts")) {
    auto f = hol.find(images);
    if (!f) throw InputError("\"auts\" lists a map that is not an automorphism");
    remap.push_back(*f);
  }
  return remap;
}

const char* mode_name(EnumerationMode m) { return m == EnumerationMode::all ? "all" : "minimal"; }

json nullable(std::uint32_t v) { return v == kUndefined ? json(nullptr) : json(v); }

json tally_json(const IdentityTally& t) {
  json w = json::array();
  for (const auto& x : t.witnesses) w.push_back(x.at);
  return {{"checked", t.checked}, {"skipped", t.skipped}, {"failures", t.failures}, {"witnesses", w}};
}

}  // namespace

json group_to_json(const FiniteAbelianGroup& g) { return {{"orders", g.orders()}}; }

FiniteAbelianGroup group_from_json(const json& j) {
  try {
    return make_group(field<std::vector<std::uint32_t>>(j, "orders"));
  } catch (const InvalidGroup& e) {
    throw InputError(e.what());
  }
}

json family_to_json(const DBraceFamily& fam) {
  json j = {{"group", group_to_json(fam.hol->group())}, {"auts", auts_json(*fam.hol)}};
  j.update(family_body(fam));
  return j;
}

DBraceFamily family_from_json(const json& j) {
  auto hol = std::make_shared<const Holomorph>(group_from_json(field<json>(j, "group")));
  return parse_family(hol, aut_remap(*hol, j), j);
}

void write_census(std::ostream& out, const Census& c) {
  out << "{\"group\":" << group_to_json(c.hol->group()).dump() << ",\"auts\":" << auts_json(*c.hol).dump()
      << ",\"mode\":\"" << mode_name(c.mode) << "\",\"dedupe_iso\":" << (c.dedupe_iso ? "true" : "false")
      << ",\"families\":[";
  for (std::size_t i = 0; i < c.families.size(); ++i)
    out << (i ? ",\n" : "\n") << family_body(c.families[i]).dump();
  out << "\n]}\n";
}

Census read_census(const json& j) {
  Census c;
  auto hol = std::make_shared<const Holomorph>(group_from_json(field<json>(j, "group")));
  c.hol = hol;
  const auto remap = aut_remap(*hol, j);
  if (!j.contains("families")) {
    c.families.push_back(parse_family(hol, remap, j));
    return c;
  }
  if (j.contains("mode")) {
    const auto m = field<std::string>(j, "mode");
    if (m != "minimal" && m != "all") throw InputError("unknown mode \"" + m + "\"");
    c.mode = m == "all" ? EnumerationMode::all : EnumerationMode::minimal;
  }
  if (j.contains("dedupe_iso")) c.dedupe_iso = field<bool>(j, "dedupe_iso");
  for (const auto& f : field<json>(j, "families")) c.families.push_back(parse_family(hol, remap, f));
  return c;
}

json dyb_to_json(const DybMap& m) {
  json R = json::array();
  for (std::uint32_t l = 0; l < m.h; ++l) {
    json rows = json::array();
    for (Elem a = 0; a < m.x; ++a) {
      json row = json::array();
      for (Elem b = 0; b < m.x; ++b) row.push_back({m.R(l, a, b), m.L(l, a, b)});
      rows.push_back(std::move(row));
    }
    R.push_back(std::move(rows));
  }
  return {{"X", m.x},
          {"H", m.h},
          {"phi", m.phi ? table_rows(*m.phi, m.h, m.x) : json(nullptr)},
          {"R", std::move(R)}};
}

DybMap dyb_from_json(const json& j) {
  DybMap m;
  m.x = field<std::size_t>(j, "X");
  m.h = field<std::size_t>(j, "H");
  if (j.contains("phi") && !j.at("phi").is_null())
    m.phi = flatten(field<std::vector<std::vector<std::uint32_t>>>(j, "phi"), m.x, "φ");
  const auto R = field<std::vector<std::vector<std::vector<std::array<Elem, 2>>>>>(j, "R");
  if (R.size() != m.h) throw InputError("R has the wrong number of parameters");
  for (const auto& rows : R) {
    if (rows.size() != m.x) throw InputError("R has the wrong number of rows");
    for (const auto& row : rows) {
      if (row.size() != m.x) throw InputError("R row has the wrong length");
      for (const auto& cell : row) {
        m.rpart.push_back(cell[0]);
        m.lpart.push_back(cell[1]);
      }
    }
  }
  try {
    m.validate_shape();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return m;
}

json brace_to_json(const Brace& b) {
  return {{"group", group_to_json(b.group)}, {"mult", table_rows(b.mult, b.group.size(), b.group.size())}};
}

json subgroup_to_json(const RegularSubgroup& s) {
  json out = json::array();
  for (const auto& x : s.elements) out.push_back({x.trans, x.aut});
  return out;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json w = json::array();
    for (const auto& x : c.witnesses) w.push_back(x.at);
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"evaluated", c.evaluated},
                      {"failures", c.failures},
                      {"sampled", c.sampled},
                      {"witnesses", std::move(w)}});
  }
  return {{"ok", r.ok()}, {"checks", std::move(checks)}};
}

json field_example_to_json(const FieldExample& ex) {
  const auto h = ex.params.size();
  const auto p = std::size_t{ex.p};
  json mult = json::array(), phi = json::array(), printed = json::array(), derived = json::array();
  for (std::size_t li = 0; li < h; ++li) {
    mult.push_back(table_rows(std::vector<std::uint32_t>(ex.mult.begin() + li * p * p,
                                                         ex.mult.begin() + (li + 1) * p * p),
                              p, p));
    json prow = json::array();
    for (std::size_t b = 0; b < p; ++b) prow.push_back(nullable(ex.phi[li * p + b]));
    phi.push_back(std::move(prow));
    json pr = json::array(), dr = json::array();
    for (std::size_t b = 0; b < p; ++b) {
      json prc = json::array(), drc = json::array();
      for (std::size_t c = 0; c < p; ++c) {
        const auto cell = (li * p + b) * p + c;
        const auto second = ex.r_second[cell];
        prc.push_back({nullable(ex.r_printed_first[cell]), second});
        drc.push_back({nullable(ex.r_derived_first[cell]), second});
      }
      pr.push_back(std::move(prc));
      dr.push_back(std::move(drc));
    }
    printed.push_back(std::move(pr));
    derived.push_back(std::move(dr));
  }
  return {{"p", ex.p},
          {"params", ex.params},
          {"mult", std::move(mult)},
          {"phi", std::move(phi)},
          {"gamma_defects", ex.gamma_defects},
          {"denominator_defects", ex.denominator_defects},
          {"R_printed", std::move(printed)},
          {"R_derived", std::move(derived)},
          {"R_mismatches", ex.r_mismatches},
          {"parameter_identity", tally_json(ex.parameter_identity)},
          {"star_associativity", tally_json(ex.star_associativity)}};
}

namespace {

/// Terminal columns of a UTF-8 string: every byte except continuation bytes.
std::size_t cols(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string trim_lines(const std::string& s) {
  std::string out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

}  // namespace

std::string format_table(const DBrace& d, std::uint32_t lam) {
  const auto n = d.n();
  std::vector<std::string> names;
  std::size_t width = 1;
  for (Elem a = 0; a < n; ++a) {
    names.push_back(d.group.format(a));
    width = std::max(width, names.back().size());
  }
  const std::string head = "·_λ" + std::to_string(lam);
  const std::size_t head_cols = cols(head);
  const std::size_t first = std::max(width, head_cols);

  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t cols, std::size_t w) {
    out << s << std::string(w > cols ? w - cols : 0, ' ');
  };
  pad(head, head_cols, first);
  out << " |";
  for (Elem b = 0; b < n; ++b) {
    out << ' ';
    pad(names[b], names[b].size(), width);
  }
  out << '\n' << std::string(first + 1, '-') << '+' << std::string(n * (width + 1), '-') << '\n';
  for (Elem a = 0; a < n; ++a) {
    pad(names[a], names[a].size(), first);
    out << " |";
    for (Elem b = 0; b < n; ++b) {
      const auto& s = names[d.mul(lam, a, b)];
      out << ' ';
      pad(s, s.size(), width);
    }
    out << '\n';
  }
  return trim_lines(out.str());
}

std::string format_tables(const DBrace& d) {
  std::ostringstream out;
  for (std::uint32_t l = 0; l < d.params; ++l) out << format_table(d, l) << '\n';
  // Same layout as the multiplication tables.
  const auto n = d.n();
  auto lam_name = [](std::uint32_t l) { return "λ" + std::to_string(l); };
  std::size_t width = cols(lam_name(static_cast<std::uint32_t>(d.params - 1)));
  for (Elem a = 0; a < n; ++a) width = std::max(width, d.group.format(a).size());
  const std::string head = "φ(λ,a)";
  const std::size_t first = std::max(cols(head), cols(lam_name(static_cast<std::uint32_t>(d.params - 1))));
  auto pad = [&](const std::string& t, std::size_t w) {
    out << t << std::string(w > cols(t) ? w - cols(t) : 0, ' ');
  };
  pad(head, first);
  out << " |";
  for (Elem a = 0; a < n; ++a) {
    out << ' ';
    pad(d.group.format(a), width);
  }
  out << '\n' << std::string(first + 1, '-') << '+' << std::string(n * (width + 1), '-') << '\n';
  for (std::uint32_t l = 0; l < d.params; ++l) {
    pad(lam_name(l), first);
    out << " |";
    for (Elem a = 0; a < n; ++a) {
      out << ' ';
      pad(lam_name(d.next(l, a)), width);
    }
    out << '\n';
  }
  return trim_lines(out.str());
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace dybrace
