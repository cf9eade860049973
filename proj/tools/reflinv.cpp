// Command-line front end: group closures, invariant construction, verification, Molien series, export.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reflinv/driver.hpp"

using namespace reflinv;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::string render(const MPoly& p, const std::string& format) {
  if (format == "json") return to_json(p).dump(2) + "\n";
  return to_text(p);
}

LiftRoute parse_lift_method(const std::string& m) {
  if (m == "factored") return LiftRoute::Factored;
  if (m == "projection") return LiftRoute::Projection;
  if (m == "direct") return LiftRoute::Direct;
  throw UsageError("unknown lift method '" + m + "'");
}

std::string lift_name(const std::string& name) {
  if (name == "F6" || name == "F8" || name == "F12") return name + "L";
  if (name == "G12") return "G12deg12";
  return name;
}

MPoly compute_invariant(const std::string& name, const std::string& route, const std::string& method, bool raw) {
  if (route == "listed") {
    if (name == "F6") return listed_F6();
    if (name == "F8") return listed_F8();
    if (name == "F12") return listed_F12();
    throw UsageError("no listed form named '" + name + "'");
  }
  if (route == "geometric") return raw ? invariant_from_orbit_raw(name) : invariant_from_orbit(name);
  if (route == "lift") {
    LiftResult r = invariant_by_lift(lift_name(name), parse_lift_method(method));
    return raw ? r.raw : r.invariant;
  }
  throw UsageError("unknown route '" + route + "'");
}

std::string export_object(const std::string& object, const std::string& format) {
  auto parts = split(object, '/');
  if (parts.size() < 2) throw UsageError("object must look like kind/name, e.g. group/H4 or klein/chi/1");
  const std::string& kind = parts[0];
  if (kind == "group") {
    const MatrixGroup& g = builtin_group(parts[1]);
    if (format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : g.elements()) {
        nlohmann::json rows = nlohmann::json::array();
        for (unsigned r = 0; r < 4; ++r) {
          nlohmann::json row = nlohmann::json::array();
          for (unsigned c = 0; c < 4; ++c) row.push_back(e.matrix()(r, c).str());
          rows.push_back(row);
        }
        arr.push_back(rows);
      }
      return nlohmann::json{{"name", g.name()}, {"order", g.order()}, {"elements", arr}}.dump(1) + "\n";
    }
    return group_to_text(g);
  }
  if (kind == "klein") {
    unsigned slot = parts.size() > 2 ? static_cast<unsigned>(std::stoul(parts[2])) : 1;
    return render(klein_form(parse_klein_name(parts[1]), slot).poly, format);
  }
  if (kind == "listed") return render(compute_invariant(parts[1], "listed", "factored", false), format);
  if (kind == "geometric") return render(invariant_from_orbit(parts[1]), format);
  if (kind == "lift") return render(invariant_by_lift(lift_name(parts[1])).invariant, format);
  if (kind == "product") return render(orbit_plane_product(parts[1]), format);
  if (kind == "listed-product") return render(listed_product(parts[1]), format);
  throw UsageError("unknown object kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of the reflection groups [3,4,3] and [3,3,5]"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "Write the result to this file instead of stdout");

  auto* group = app.add_subcommand("group", "Finite matrix groups");
  auto* group_build = group->add_subcommand("build", "Close a named generator set and report its order");
  group->require_subcommand(1);
  std::string group_name;
  std::size_t bound = kDefaultClosureBound;
  auto* positional = group_build->add_option("group", group_name, "G6 G8 G12 F4 H4 Ttilde1 ...");
  group_build->add_option("--name", group_name, "Same as the positional argument")->excludes(positional);
  group_build->add_option("--bound", bound, "Maximum number of elements");

  auto* inv = app.add_subcommand("invariant", "Invariant polynomials");
  auto* inv_compute = inv->add_subcommand("compute", "Construct an invariant");
  inv->require_subcommand(1);
  std::string inv_name, route = "geometric", method = "factored", format = "txt";
  bool raw = false;
  inv_compute->add_option("name", inv_name, "F6 F8 F12 G12 G20 G30")->required();
  inv_compute->add_option("--route", route, "geometric | lift | listed")
      ->check(CLI::IsMember({"geometric", "lift", "listed"}));
  inv_compute->add_option("--lift-method", method, "factored | projection | direct")
      ->check(CLI::IsMember({"factored", "projection", "direct"}));
  inv_compute->add_option("--format", format, "txt | json")->check(CLI::IsMember({"txt", "json"}));
  inv_compute->add_flag("--raw", raw, "Keep the unnormalized group sum");

  auto* verify = app.add_subcommand("verify", "Run checks");
  std::string check, scope = "quick";
  bool json = false, no_timing = false;
  verify->add_option("check", check, "Check name prefix, or 'all'")->required();
  verify->add_option("--scope", scope, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--no-timing", no_timing, "Omit timings so reports are byte-identical");
  bool list = false;
  verify->add_flag("--list", list, "List check names instead of running them");

  auto* molien = app.add_subcommand("molien", "Molien series of a named group");
  std::string molien_group;
  unsigned max_degree = 0;
  molien->add_option("group", molien_group)->required();
  molien->add_option("--max-degree", max_degree)->required();

  auto* exp = app.add_subcommand("export", "Export an object: group/H4, klein/chi/1, listed/F6, geometric/F12, lift/G20, product/T6");
  std::string object;
  exp->add_option("object", object)->required();
  exp->add_option("--format", format, "txt | json")->check(CLI::IsMember({"txt", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (group_build->parsed()) {
      if (group_name.empty()) throw UsageError("group build needs a group name");
      MatrixGroup g = group_closure(builtin_generators(group_name), bound, group_name);
      std::cout << group_name << ": order " << g.order() << "\n";
      if (!out.empty()) emit(group_to_text(g), out);
      return 0;
    }
    if (inv_compute->parsed()) {
      emit(render(compute_invariant(inv_name, route, method, raw), format), out);
      return 0;
    }
    if (verify->parsed()) {
      Scope s = parse_scope(scope);
      if (list) {
        std::string names;
        for (const auto& n : suite_check_names(s)) names += n + "\n";
        emit(names, out);
        return 0;
      }
      SuiteOptions opt;
      opt.scope = s;
      opt.filter = check == "all" ? "" : check;
      opt.budget_seconds = budget_from_environment();
      if (!json) opt.on_report = [&](const CheckReport& r) { std::cerr << report_text({r}, !no_timing); };
      auto reports = run_suite(opt);
      if (reports.empty()) throw UsageError("no check matches '" + check + "'");
      emit(json ? report_json(reports, !no_timing).dump(2) + "\n" : report_text(reports, !no_timing), out);
      return all_passed(reports) ? 0 : 1;
    }
    if (molien->parsed()) {
      MolienSeries m = molien_series(builtin_group(molien_group), max_degree);
      std::string text;
      for (unsigned n = 0; n <= max_degree; ++n) text += std::to_string(n) + " " + m.coefficients[n].str() + "\n";
      emit(text, out);
      return 0;
    }
    if (exp->parsed()) {
      emit(export_object(object, format), out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
