#include "toricchi/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "toricchi/class_group.hpp"
#include "toricchi/cohomology_oracle.hpp"
#include "toricchi/error.hpp"
#include "toricchi/euler.hpp"
#include "toricchi/fan_io.hpp"
#include "toricchi/graded_dimension.hpp"
#include "toricchi/library.hpp"
#include "toricchi/monomial_ideals.hpp"

namespace toricchi::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string fan_path;
  bool json_output = false;
  std::optional<std::string> divisor;
  std::optional<std::int64_t> l;
  bool trace = false;
  bool per_degree = false;
};

Fan load_fan(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    const std::string base = std::filesystem::path(path).filename().string();
    if (auto bundled = find_bundled_fan(base)) return bundled->fan;
  }
  return load_fan_file(path).fan;
}

WeilDivisor require_divisor(const Options& opts, const Fan& fan) {
  if (!opts.divisor) throw MalformedInput("--divisor is required for this command");
  WeilDivisor divisor = parse_divisor(*opts.divisor);
  check_divisor_length(fan, divisor);
  return divisor;
}

json supports_json(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (IndexSet s : sets) {
    json one = json::array();
    for (int e : s.elements()) one.push_back(e + 1);
    out.push_back(std::move(one));
  }
  return out;
}

void print_supports(std::ostream& out, const std::vector<IndexSet>& sets) {
  for (IndexSet s : sets) out << to_one_based_string(s) << '\n';
}

template <typename Range>
std::string joined(const Range& values, const char* separator = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s << separator;
    s << v;
    first = false;
  }
  return s.str();
}

json integers_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const Integer& v : values) {
    if (v.fits_slong_p()) {
      out.push_back(v.get_si());
    } else {
      out.push_back(v.get_str());
    }
  }
  return out;
}

int cmd_validate(const Options& opts, std::ostream& out) {
  const Fan fan = load_fan(opts.fan_path);
  const ValidationReport report = validate_fan(fan);
  if (opts.json_output) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    }
    out << json{{"valid", report.ok()},
                {"dim", fan.dim()},
                {"rays", fan.ray_count()},
                {"max_cones", fan.max_cones().size()},
                {"violations", violations}}
               .dump()
        << '\n';
  } else if (report.ok()) {
    out << "valid: dim " << fan.dim() << ", " << fan.ray_count() << " rays, "
        << fan.max_cones().size() << " maximal cones\n";
  } else {
    out << "invalid\n";
    for (const auto& v : report.violations) {
      out << "  " << to_string(v.kind) << ": " << v.message << '\n';
    }
  }
  return report.ok() ? kSuccess : kInvalidFan;
}

int cmd_ideals(const Fan& fan, const Options& opts, std::ostream& out) {
  const SquarefreeIdeal sr = stanley_reisner(fan);
  const SquarefreeIdeal irrelevant = irrelevant_ideal(fan);
  if (opts.json_output) {
    out << json{{"stanley_reisner", supports_json(sr.generators())},
                {"irrelevant", supports_json(irrelevant.generators())}}
               .dump()
        << '\n';
    return kSuccess;
  }
  out << "# stanley-reisner\n";
  print_supports(out, sr.generators());
  out << "# irrelevant\n";
  print_supports(out, irrelevant.generators());
  return kSuccess;
}

int cmd_chow(const Fan& fan, const Options& opts, std::ostream& out) {
  const ChowPresentation chow = chow_presentation(fan);
  if (opts.json_output) {
    out << json{{"stanley_reisner", supports_json(chow.stanley_reisner.generators())},
                {"linear_forms", chow.linear_forms}}
               .dump()
        << '\n';
    return kSuccess;
  }
  out << "# stanley-reisner\n";
  print_supports(out, chow.stanley_reisner.generators());
  out << "# linear forms\n";
  for (const auto& form : chow.linear_forms) out << joined(form) << '\n';
  return kSuccess;
}

int cmd_class_group(const Fan& fan, const Options& opts, std::ostream& out) {
  const ClassGroupPresentation cl = class_group(fan);
  const auto torsion = cl.torsion_orders();
  if (opts.json_output) {
    out << json{{"free_rank", cl.free_rank()},
                {"invariant_factors", integers_json(cl.invariant_factors())},
                {"torsion", integers_json(torsion)}}
               .dump()
        << '\n';
    return kSuccess;
  }
  out << "free_rank " << cl.free_rank() << '\n';
  out << "invariant_factors " << joined(cl.invariant_factors()) << '\n';
  out << "group Z^" << cl.free_rank();
  for (const Integer& t : torsion) out << " + Z/" << t;
  out << '\n';
  return kSuccess;
}

int cmd_dim(const Fan& fan, const Options& opts, std::ostream& out) {
  const std::int64_t value = dim_S(fan, require_divisor(opts, fan));
  if (opts.json_output) {
    out << json{{"dim_S", value}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kSuccess;
}

void print_trace_table(std::ostream& out, const ChiTrace& trace) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"m", "face", "degree", "dim_S", "sign", "contribution"});
  for (const auto& row : trace.rows) {
    cells.push_back({joined(row.weight.entries()), std::to_string(row.face_indicator),
                     joined(row.degree), std::to_string(row.dim_s),
                     row.sign > 0 ? "+1" : "-1", std::to_string(row.contribution)});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      std::string cell = line[c];
      if (c + 1 < line.size()) cell.resize(width[c] + 2, ' ');
      text += cell;
    }
    out << text << '\n';
  }
}

int cmd_chi(const Fan& fan, const Options& opts, std::ostream& out) {
  const WeilDivisor divisor = require_divisor(opts, fan);
  if (!opts.trace) {
    const std::int64_t l = opts.l ? *opts.l : ems_bound(fan, divisor).l_min;
    const std::int64_t value = chi(fan, divisor, l);
    if (opts.json_output) {
      out << json{{"chi", value}, {"l", l}}.dump() << '\n';
    } else {
      out << value << '\n';
    }
    return kSuccess;
  }

  const ChiTrace trace = chi_trace(fan, divisor, opts.l);
  if (opts.json_output) {
    json rows = json::array();
    for (const auto& row : trace.rows) {
      rows.push_back({{"m", row.weight.entries()},
                      {"face", row.face_indicator},
                      {"degree", row.degree},
                      {"dim_S", row.dim_s},
                      {"sign", row.sign},
                      {"contribution", row.contribution}});
    }
    out << json{{"chi", trace.total}, {"l", trace.l}, {"trace", rows}}.dump() << '\n';
    return kSuccess;
  }
  out << "l " << trace.l << '\n';
  print_trace_table(out, trace);
  for (const auto& row : trace.rows) {
    out << "row m=" << joined(row.weight.entries(), ",") << " face=" << row.face_indicator
        << " degree=" << joined(row.degree, ",") << " dim_S=" << row.dim_s
        << " sign=" << row.sign << " contribution=" << row.contribution << '\n';
  }
  out << trace.total << '\n';
  return kSuccess;
}

int cmd_cohomology(const Fan& fan, const Options& opts, std::ostream& out) {
  const WeilDivisor divisor = require_divisor(opts, fan);
  OracleOptions oracle;
  oracle.record_points = opts.per_degree;
  const CohomologyVector h = cohomology_dims(fan, divisor, oracle);
  if (opts.json_output) {
    json doc{{"h", h.h}, {"chi", h.euler_characteristic()}};
    if (opts.per_degree) {
      json points = json::array();
      for (const auto& p : h.points) {
        points.push_back({{"m", p.point},
                          {"negative_rays", supports_json({p.negative_rays}).front()},
                          {"contributions", p.contributions}});
      }
      doc["points"] = std::move(points);
    }
    out << doc.dump() << '\n';
    return kSuccess;
  }
  out << joined(h.h) << '\n';
  out << "chi " << h.euler_characteristic() << '\n';
  if (opts.per_degree) {
    for (const auto& p : h.points) {
      out << "point " << joined(p.point, ",") << " negative_rays "
          << (p.negative_rays.empty() ? "-" : to_one_based_string(p.negative_rays, ","))
          << " h " << joined(p.contributions) << '\n';
    }
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler characteristics and cohomology of divisors on complete simplicial "
               "toric varieties",
               "toricchi"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opts;
  app.add_flag("--json", opts.json_output, "Machine-readable JSON output");
  app.add_option("--divisor", opts.divisor, "Divisor coefficients a1,...,ad");
  app.add_option("--l", opts.l, "Frobenius exponent l (default: the exponent bound)");
  app.add_flag("--trace", opts.trace, "chi: print every term of the sum");
  app.add_flag("--per-degree", opts.per_degree, "cohomology: list contributing points");

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"validate", "Check the complete simplicial fan invariants"},
      {"ideals", "Stanley-Reisner and irrelevant ideal generators"},
      {"class-group", "Free rank and invariant factors of the class group"},
      {"chow", "Stanley-Reisner presentation of the rational Chow ring"},
      {"dim", "Number of Cox ring monomials in the class of --divisor"},
      {"chi", "Euler characteristic of O(D) for D = --divisor"},
      {"cohomology", "All cohomology dimensions of O(D) for D = --divisor"},
  };
  for (const auto& c : commands) {
    app.add_subcommand(c.name, c.help)
        ->add_option("fan", opts.fan_path, "Fan file, or the name of a bundled fan")
        ->required();
  }

  try {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "validate") return cmd_validate(opts, out);

    const Fan fan = load_fan(opts.fan_path);
    require_valid(fan);
    if (command == "ideals") return cmd_ideals(fan, opts, out);
    if (command == "class-group") return cmd_class_group(fan, opts, out);
    if (command == "chow") return cmd_chow(fan, opts, out);
    if (command == "dim") return cmd_dim(fan, opts, out);
    if (command == "chi") return cmd_chi(fan, opts, out);
    if (command == "cohomology") return cmd_cohomology(fan, opts, out);
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const InvalidFan& e) {
    err << "invalid fan: " << e.what() << '\n';
    return kInvalidFan;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << '\n';
    return kComputationError;
  }
  err << "error: unknown command '" << command << "'\n";
  return kMalformedInput;
}

}  // namespace toricchi::cli
