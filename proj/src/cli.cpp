#include "dybrace/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dybrace/brace.hpp"
#include "dybrace/constructions.hpp"
#include "dybrace/dbrace.hpp"
#include "dybrace/dyb.hpp"
#include "dybrace/graph.hpp"
#include "dybrace/io.hpp"

namespace dybrace {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const DBraceFamily& pick(const Census& c, std::size_t k) {
  if (k >= c.families.size())
    throw UsageError("family index " + std::to_string(k) + " out of range (file has " +
                     std::to_string(c.families.size()) + ")");
  return c.families[k];
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

/// Every check the tool knows for one family; left nondegeneracy is reported
/// separately because these maps are only guaranteed to be right nondegenerate.
Report verify_family(const DBraceFamily& fam, const CheckOptions& opt, bool& left_nondegenerate) {
  Report r;
  CheckResult closed("family_closed");
  ++closed.evaluated;
  try {
    const auto rebuilt = make_family(fam.hol, fam.sections);
    if (rebuilt.phi != fam.phi) {
      for (std::size_t i = 0; i < fam.phi.size(); ++i)
        if (rebuilt.phi[i] != fam.phi[i]) {
          closed.fail(Witness{{i / fam.order(), i % fam.order()}}, opt.max_witnesses);
          break;
        }
    }
  } catch (const std::exception&) {
    closed.fail(Witness{{}}, opt.max_witnesses);
  }
  const bool structural = closed.passed;
  r.add(std::move(closed));
  if (!structural) return r;

  const auto d = family_to_dbrace(fam);
  r.append(check_dbrace(d, opt));
  const auto m = dyb_from_dbrace(d);
  r.append(verify_dyb(m, opt));
  r.append(verify_unitary(m, opt));
  const auto nd = check_nondegeneracy(m, opt);
  r.add(nd.right);
  left_nondegenerate = nd.left.passed;
  r.add(check_weight_zero(m, opt));
  r.append(check_graph_props(build_graph(fam), fam));
  return r;
}

std::string describe_iso(const DBraceIsomorphism& iso, const FiniteAbelianGroup& g) {
  std::ostringstream s;
  s << "F = [";
  for (std::size_t i = 0; i < iso.F.images.size(); ++i) s << (i ? " " : "") << g.format(iso.F.images[i]);
  s << "], p = [";
  for (std::size_t i = 0; i < iso.p.size(); ++i) s << (i ? " " : "") << iso.p[i];
  s << "]";
  return s.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and verify dynamical braces on finite abelian groups"};
  app.require_subcommand(1);

  std::vector<std::uint32_t> orders;
  std::string mode = "minimal";
  bool dedupe_iso = false;
  std::string file, out_path, dot_path;
  std::size_t max_witnesses = 16, family = 0, ka = 0, kb = 0;
  bool labeled = false, restrict_nonzero = false;
  std::uint32_t p = 0;

  auto* en = app.add_subcommand("enumerate", "Enumerate d-brace families on a group");
  en->add_option("--group", orders, "Cyclic factor orders, e.g. 2,2")->required()->delimiter(',');
  en->add_option("--mode", mode, "minimal or all")->check(CLI::IsMember({"minimal", "all"}));
  en->add_flag("--dedupe-iso", dedupe_iso, "Keep one family per isomorphism class");
  en->add_option("--out", out_path, "Census JSON output")->required();

  auto* ve = app.add_subcommand("verify", "Verify every family of a census or family file");
  ve->add_option("file", file)->required();
  ve->add_option("--max-witnesses", max_witnesses)->check(CLI::PositiveNumber);

  auto* gr = app.add_subcommand("graph", "Graph of one family");
  gr->add_option("file", file)->required();
  gr->add_option("--family", family)->required();
  gr->add_option("--dot", dot_path, "DOT output");
  gr->add_flag("--labeled", labeled, "Print the labelled edge list");

  auto* is = app.add_subcommand("iso", "Compare two families of a census");
  is->add_option("file", file)->required();
  is->add_option("--a", ka)->required();
  is->add_option("--b", kb)->required();
  is->add_flag("--labeled", labeled, "Require graph isomorphisms to preserve edge labels");

  auto* ta = app.add_subcommand("tables", "Multiplication tables of one family");
  ta->add_option("file", file)->required();
  ta->add_option("--family", family)->required();

  auto* br = app.add_subcommand("braces", "Regular subgroups of the holomorph and their braces");
  br->add_option("--group", orders, "Cyclic factor orders, e.g. 2,2")->required()->delimiter(',');

  auto* fe = app.add_subcommand("field-example", "The prime-field family with its defect report");
  fe->add_option("--p", p, "Prime ≤ 101")->required();
  fe->add_flag("--restrict-nonzero", restrict_nonzero, "Use the nonzero elements as parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (en->parsed()) {
      auto hol = std::make_shared<const Holomorph>(make_group(orders));
      EnumerationOptions opt;
      opt.mode = mode == "all" ? EnumerationMode::all : EnumerationMode::minimal;
      opt.dedupe_iso = dedupe_iso;
      Census c{hol, opt.mode, dedupe_iso, enumerate_families(hol, opt)};
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw UsageError("cannot write " + out_path);
      write_census(f, c);
      out << c.families.size() << " families written to " << out_path << '\n';
      return kExitOk;
    }

    if (ve->parsed()) {
      const auto c = read_census(read_json_file(file));
      CheckOptions opt;
      opt.max_witnesses = max_witnesses;
      bool all_ok = true;
      for (std::size_t k = 0; k < c.families.size(); ++k) {
        bool left = false;
        const auto r = verify_family(c.families[k], opt, left);
        all_ok = all_ok && r.ok();
        out << "family " << k << ": " << (r.ok() ? "PASS" : "FAIL") << " (|H| = "
            << c.families[k].params() << ", left nondegenerate: " << (left ? "yes" : "no") << ")\n";
        if (!r.ok()) out << describe(r);
      }
      return all_ok ? kExitOk : kExitFailures;
    }

    if (gr->parsed()) {
      const auto c = read_census(read_json_file(file));
      const auto& fam = pick(c, family);
      const auto g = build_graph(fam);
      std::size_t image = 0;
      for (bool b : g.in_image) image += b;
      out << "vertices " << g.vertices << ", edges " << g.edges.size() << ", image vertices " << image
          << '\n';
      if (labeled)
        for (const auto& e : g.edges)
          out << "S" << e.src << " -> S" << e.dst << " [" << g.element_names[e.label] << "]\n";
      const auto r = check_graph_props(g, fam);
      out << describe(r);
      if (!dot_path.empty()) write_file(dot_path, export_dot(g));
      return r.ok() ? kExitOk : kExitFailures;
    }

    if (is->parsed()) {
      const auto c = read_census(read_json_file(file));
      const auto& fa = pick(c, ka);
      const auto& fb = pick(c, kb);
      const auto iso = dbrace_isomorphic(family_to_dbrace(fa), family_to_dbrace(fb));
      out << "dbrace_isomorphic: ";
      if (iso)
        out << "yes, " << describe_iso(*iso, c.hol->group()) << '\n';
      else
        out << "no\n";
      const auto gi = graph_isomorphic(build_graph(fa), build_graph(fb), labeled);
      out << (labeled ? "labeled_graph_isomorphic: " : "graph_isomorphic: ") << (gi ? "yes" : "no")
          << '\n';
      return kExitOk;
    }

    if (ta->parsed()) {
      const auto c = read_census(read_json_file(file));
      out << format_tables(family_to_dbrace(pick(c, family)));
      return kExitOk;
    }

    if (br->parsed()) {
      const Holomorph hol(make_group(orders));
      const auto entries = enumerate_regular_subgroups(hol);
      nlohmann::json subgroups = nlohmann::json::array();
      bool all_ok = true;
      for (const auto& e : entries) {
        const auto m = rump_yb(e.brace);
        Report r = verify_dyb(m);
        r.append(verify_unitary(m));
        const auto nd = check_nondegeneracy(m);
        r.add(nd.left);
        r.add(nd.right);
        all_ok = all_ok && r.ok() && check_brace(e.brace).ok();
        auto j = brace_to_json(e.brace);
        subgroups.push_back({{"elements", subgroup_to_json(e.subgroup)},
                             {"iso_class", e.iso_class},
                             {"mult", j["mult"]},
                             {"yang_baxter", report_to_json(r)}});
      }
      std::size_t classes = 0;
      for (const auto& e : entries) classes = std::max(classes, e.iso_class + 1);
      nlohmann::json doc = {{"group", group_to_json(hol.group())},
                            {"subgroups", std::move(subgroups)},
                            {"classes", classes}};
      out << doc.dump(1) << '\n';
      return all_ok ? kExitOk : kExitFailures;
    }

    if (fe->parsed()) {
      const auto ex = field_example(p, restrict_nonzero);
      out << field_example_to_json(ex).dump() << '\n';
      err << "F_" << ex.p << (restrict_nonzero ? ", parameters F_p^x" : ", parameters F_p") << '\n';
      err << "gamma defects (λ,b) with λb+1 = 0:";
      for (const auto& d : ex.gamma_defects) err << " (" << d[0] << "," << d[1] << ")";
      err << "\nR denominator defects: " << ex.denominator_defects.size() << '\n';
      err << "printed vs derived R first component: " << ex.r_mismatches << " cells differ\n";
      err << "φ(λ, b*c) = φ(φ(λ,c), b): " << ex.parameter_identity.checked << " checked, "
          << ex.parameter_identity.skipped << " undefined, " << ex.parameter_identity.failures
          << " failures\n";
      err << "star associativity: " << ex.star_associativity.checked << " checked, "
          << ex.star_associativity.skipped << " undefined, " << ex.star_associativity.failures
          << " failures\n";
      return ex.ok() ? kExitOk : kExitFailures;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidGroup& e) {
    err << "invalid group: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FamilyError& e) {
    err << "invalid family: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dybrace
