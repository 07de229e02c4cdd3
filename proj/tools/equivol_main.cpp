#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equivol/andreev.hpp"
#include "equivol/bounds.hpp"
#include "equivol/census.hpp"
#include "equivol/error.hpp"
#include "equivol/families.hpp"
#include "equivol/lobachevsky.hpp"
#include "equivol/polyhedron.hpp"

namespace {

using equivol::Error;
using equivol::ErrorKind;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::BadInput, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::BadInput, "cannot write '" + path + "'");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

equivol::AbstractPolyhedron load_polyhedron(const std::string& path,
                                            const std::string& format,
                                            const std::string& kind) {
  const std::string bytes = read_input(path);
  const auto label = equivol::angle_kind_from_name(kind);
  if (format == "planar_code") {
    const equivol::ParsedPlanarCode parsed = equivol::parse_planar_code(bytes);
    if (parsed.graphs.empty()) {
      throw Error(ErrorKind::BadInput, "no planar_code records in input");
    }
    return equivol::to_polyhedron(parsed.graphs.front(), label);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("faces") ||
      !doc["faces"].is_array()) {
    throw Error(ErrorKind::BadInput, "expected {\"faces\": [[...], ...]}");
  }
  std::vector<std::vector<int>> faces;
  for (const auto& row : doc["faces"]) {
    if (!row.is_array()) {
      throw Error(ErrorKind::BadInput, "faces must be arrays of integers");
    }
    std::vector<int> face;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw Error(ErrorKind::BadInput, "faces must be arrays of integers");
      }
      face.push_back(v.get<int>());
    }
    faces.push_back(std::move(face));
  }
  return equivol::AbstractPolyhedron::from_faces(std::move(faces), label);
}

// Round a number to 12 significant digits so the JSON dump prints it that
// short; catalogs keep full precision, the console does not need it.
double twelve_digits(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string bound_interval_at_12_digits(const equivol::BoundInterval& b) {
  nlohmann::ordered_json doc;
  doc["lower"] = twelve_digits(b.lower);
  doc["lower_strict"] = b.lower_strict;
  doc["upper"] = twelve_digits(b.upper);
  doc["upper_strict"] = b.upper_strict;
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& term : b.terms) {
    nlohmann::ordered_json row;
    row["tag"] = term.tag;
    row["side"] = term.side;
    row["value"] = twelve_digits(term.value);
    row["strict"] = term.strict;
    doc["terms"].push_back(std::move(row));
  }
  return doc.dump();
}

equivol::FamilyMember make_member(const std::string& name, int param) {
  switch (equivol::family_tag_from_name(name)) {
    case equivol::FamilyTag::OctGlue:
      return equivol::glue_octahedra(param);
    case equivol::FamilyTag::P2k:
      return equivol::family_P2k(param);
    case equivol::FamilyTag::Q2k:
      return equivol::family_Q2k(param);
    case equivol::FamilyTag::R2k:
      return equivol::family_R2k(param);
  }
  throw Error(ErrorKind::UnknownKind, "family name: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equiangular hyperbolic Coxeter polyhedra toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "faces";
  std::string kind = "pi2";
  std::string output;
  const auto format_check = CLI::IsMember({"faces", "planar_code"});
  const auto kind_check = CLI::IsMember({"pi2", "pi3"});

  CLI::App* cmd_check = app.add_subcommand(
      "check", "decide combinatorial realizability, exit 0/2");
  cmd_check->add_option("input", input, "faces JSON or planar_code, - for stdin");
  cmd_check->add_option("--format", format)->check(format_check);
  cmd_check->add_option("--kind", kind)->check(kind_check);

  CLI::App* cmd_bounds = app.add_subcommand(
      "bounds", "two-sided volume bounds for a realizable polyhedron");
  cmd_bounds->add_option("input", input, "faces JSON or planar_code, - for stdin");
  cmd_bounds->add_option("--format", format)->check(format_check);
  cmd_bounds->add_option("--kind", kind)->check(kind_check);

  std::string family_name;
  int family_param = 0;
  std::string emit = "faces";
  std::vector<int> report_range;
  CLI::App* cmd_family = app.add_subcommand(
      "family", "emit one member of a named polyhedron family");
  cmd_family->add_option("--name", family_name, "octglue | p2k | q2k | r2k")
      ->required();
  CLI::Option* opt_param = cmd_family->add_option("--param", family_param,
                                                  "chain length or half-girth k");
  cmd_family->add_option("--emit", emit)->check(format_check);
  cmd_family->add_option("--output", output, "file path, - for stdout");
  CLI::Option* opt_report =
      cmd_family
          ->add_option("--report", report_range,
                       "FROM TO: per-vertex bound table over a parameter range")
          ->expected(2);
  opt_report->excludes(opt_param);

  double theta = 0.0;
  CLI::App* cmd_lob = app.add_subcommand(
      "lobachevsky", "evaluate the Lobachevsky function at theta");
  cmd_lob->add_option("theta", theta)->required();

  std::string csv_path;
  std::optional<double> max_volume;
  int jobs = 1;
  CLI::App* cmd_census = app.add_subcommand(
      "census", "annotate a planar_code stream with checks and bounds");
  cmd_census->add_option("input", input, "planar_code stream, - for stdin");
  cmd_census->add_option("--kind", kind)->check(kind_check);
  cmd_census->add_option("--output", output, "JSONL path, - for stdout")
      ->required();
  cmd_census->add_option("--csv", csv_path, "also write a CSV summary here");
  cmd_census->add_option("--max-volume", max_volume,
                         "keep only rows whose lower bound admits this cap");
  cmd_census->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  std::string invert_kind;
  double volume = 0.0;
  CLI::App* cmd_invert = app.add_subcommand(
      "invert-bound", "largest vertex count a volume budget allows");
  cmd_invert
      ->add_option("--kind", invert_kind, "ideal_pi2 | compact_pi2 | ideal_pi3")
      ->required();
  cmd_invert->add_option("--volume", volume)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }

  try {
    if (cmd_check->parsed()) {
      const auto p = load_polyhedron(input, format, kind);
      const auto report = equivol::check(p);
      std::printf("%s\n", equivol::report_to_json(report).c_str());
      return report.realizable ? 0 : 2;
    }

    if (cmd_bounds->parsed()) {
      const auto p = load_polyhedron(input, format, kind);
      try {
        const auto b = equivol::bounds(p);
        std::printf("%s\n", bound_interval_at_12_digits(b).c_str());
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotRealizable) {
          std::fprintf(stderr, "%s\n", e.what());
          return 2;
        }
        throw;
      }
      return 0;
    }

    if (cmd_family->parsed()) {
      if (!report_range.empty()) {
        const auto rows = equivol::asymptotic_report(
            equivol::family_tag_from_name(family_name), report_range[0],
            report_range[1]);
        std::string table =
            "param n lower upper lower_per_vertex upper_per_vertex\n";
        for (const auto& row : rows) {
          char line[160];
          std::snprintf(line, sizeof(line), "%d %d %.12g %.12g %.12g %.12g\n",
                        row.parameter, row.n, row.lower, row.upper,
                        row.lower_per_vertex, row.upper_per_vertex);
          table += line;
        }
        write_output(output, table);
        return 0;
      }
      if (opt_param->count() == 0) {
        std::fprintf(stderr, "family needs --param or --report\n");
        return 1;
      }
      const auto member = make_member(family_name, family_param);
      if (emit == "planar_code") {
        const auto graph = equivol::from_polyhedron(member.polyhedron);
        write_output(output, equivol::serialize_planar_code({{graph}, true}));
      } else {
        write_output(output,
                     equivol::polyhedron_to_json(member.polyhedron) + "\n");
      }
      return 0;
    }

    if (cmd_lob->parsed()) {
      std::printf("%.15g\n", equivol::lobachevsky(theta));
      return 0;
    }

    if (cmd_census->parsed()) {
      const std::string source = (input == "-") ? "stdin" : input;
      const auto parsed = equivol::parse_planar_code(read_input(input));
      auto records = equivol::annotate(parsed.graphs, kind, jobs, source);
      if (max_volume) {
        records = equivol::filter_by_volume_cap(records, *max_volume);
      }
      write_output(output, equivol::records_to_jsonl(records));
      if (!csv_path.empty()) {
        write_output(csv_path, equivol::records_to_csv(records));
      }
      return 0;
    }

    if (cmd_invert->parsed()) {
      std::printf("%d\n", equivol::max_vertices_for_volume(volume, invert_kind));
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 1;
}
