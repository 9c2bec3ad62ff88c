#include "qtoric/cli.hpp"

#include <CLI11.hpp>

#include "qtoric/asymptotic.hpp"
#include "qtoric/cohomology.hpp"
#include "qtoric/json_io.hpp"
#include "qtoric/qample.hpp"
#include "qtoric/svg.hpp"

namespace qtoric {

namespace {

RatVec parse_point(const std::string& s) {
  RatVec out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(parse_rat(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

json union_to_json(const ConeUnion& u) {
  json arr = json::array();
  for (const POCone& c : u) arr.push_back(cone_to_json(c));
  return arr;
}

void require_valid(const Fan& f) {
  ValidationReport report = validate(f);
  if (!report.valid) throw QtError(report.error, report.detail);
}

void check_divisor_length(const Fan& f, std::size_t len) {
  if (len != f.num_rays())
    throw QtError("BadInput", "divisor has " + std::to_string(len) + " coefficients for " +
                                  std::to_string(f.num_rays()) + " rays");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cohomology and q-ample cones of simplicial projective toric varieties"};
  app.require_subcommand(1);

  std::string fan_path, divisor_path, point_str, cache_dir;
  std::size_t q = 0, degree = 0;
  bool keep_weights = false;

  auto add_fan = [&](CLI::App* sub) {
    sub->add_option("fan", fan_path, "fan JSON file")->required();
    return sub;
  };
  CLI::App* cmd_check = add_fan(app.add_subcommand("check", "validate a fan"));
  CLI::App* cmd_classgroup =
      add_fan(app.add_subcommand("classgroup", "divisor class lattice and torsion"));
  CLI::App* cmd_cohomology =
      add_fan(app.add_subcommand("cohomology", "all cohomology of a Cartier divisor"));
  cmd_cohomology->add_option("--divisor", divisor_path, "divisor JSON file")->required();
  cmd_cohomology->add_flag("--keep-weights", keep_weights, "list contributing weights");
  CLI::App* cmd_cech = add_fan(app.add_subcommand("cech", "independent Cech recomputation"));
  cmd_cech->add_option("--divisor", divisor_path, "divisor JSON file")->required();
  CLI::App* cmd_qample = add_fan(app.add_subcommand("qample", "the q-ample cone"));
  cmd_qample->add_option("--q", q, "amplitude level")->required();
  CLI::App* cmd_level = add_fan(app.add_subcommand("level", "least q making a class q-ample"));
  cmd_level->add_option("--point", point_str, "class point, comma-separated rationals");
  cmd_level->add_option("--divisor", divisor_path, "divisor JSON file");
  CLI::App* cmd_hhat = add_fan(app.add_subcommand("hhat", "asymptotic cohomological function"));
  cmd_hhat->add_option("--divisor", divisor_path, "divisor JSON file (rational coefficients)")
      ->required();
  cmd_hhat->add_option("--i", degree, "cohomological degree")->required();
  CLI::App* cmd_betti = add_fan(app.add_subcommand("betti", "obstruction table of the fan"));
  cmd_betti->add_option("--cache", cache_dir, "cache directory for obstruction tables");
  CLI::App* cmd_figure = add_fan(app.add_subcommand("figure", "SVG of the rank-2 cone picture"));
  cmd_figure->add_option("--q", q, "amplitude level")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << json{{"error", "BadUsage"}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  }

  try {
    Fan f = fan_from_json(load_json_file(fan_path));
    json result;

    if (cmd_check->parsed()) {
      ValidationReport report = validate(f);
      if (!report.valid) throw QtError(report.error, report.detail);
      result = {{"valid", true}, {"rays", f.num_rays()}, {"dim", f.dim}};
    } else if (cmd_classgroup->parsed()) {
      require_valid(f);
      ClassLattice cl = class_lattice(f);
      json proj = json::array();
      for (std::size_t r = 0; r < cl.projection.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < cl.projection.cols(); ++c)
          row.push_back(cl.projection(r, c).get_si());
        proj.push_back(row);
      }
      json torsion = json::array();
      for (const Int& t : cl.torsion) torsion.push_back(t.get_si());
      result = {{"rank", cl.rank}, {"torsion", torsion}, {"projection", proj}};
    } else if (cmd_cohomology->parsed() || cmd_cech->parsed()) {
      require_valid(f);
      TorusDivisor d = integral_divisor_from_json(load_json_file(divisor_path));
      check_divisor_length(f, d.size());
      CohomologyTable table = cohomology(f, d, keep_weights);
      if (cmd_cech->parsed()) {
        LatticeBox box = table.box;
        if (box.lo.empty()) {
          box.lo.assign(f.dim, 0);
          box.hi.assign(f.dim, 0);
        }
        for (std::size_t j = 0; j < box.lo.size(); ++j) {
          box.lo[j] -= 1;
          box.hi[j] += 1;
        }
        table = cech_oracle(f, d, box);
      }
      result["dims"] = table.dims;
      if (keep_weights && cmd_cohomology->parsed()) {
        json w = json::object();
        for (const auto& [p, list] : table.weights) {
          json rows = json::array();
          for (const auto& [m, mult] : list) {
            json mv = json::array();
            for (const Int& e : m) mv.push_back(e.get_si());
            rows.push_back({mv, mult});
          }
          w[std::to_string(p)] = rows;
        }
        result["weights"] = w;
      }
    } else if (cmd_qample->parsed()) {
      require_valid(f);
      QAmpleCone amp = q_ample_cone(f, q);
      result = {{"q", amp.q},
                {"cells", union_to_json(amp.cells)},
                {"closed_pieces", union_to_json(amp.closed_pieces)}};
    } else if (cmd_level->parsed()) {
      require_valid(f);
      ClassLattice cl = class_lattice(f);
      RatVec c;
      if (!point_str.empty()) {
        c = parse_point(point_str);
        if (c.size() != cl.rank)
          throw QtError("BadInput", "class point must have " + std::to_string(cl.rank) +
                                        " coordinates");
      } else if (!divisor_path.empty()) {
        RatVec d = divisor_from_json(load_json_file(divisor_path));
        check_divisor_length(f, d.size());
        c = class_of(cl, d);
      } else {
        throw QtError("BadUsage", "level needs --point or --divisor");
      }
      result = {{"level", ampleness_level(f, c)}};
    } else if (cmd_hhat->parsed()) {
      require_valid(f);
      RatVec d = divisor_from_json(load_json_file(divisor_path));
      check_divisor_length(f, d.size());
      AsymptoticValue v = hhat(f, d, degree);
      result = {{"i", v.degree}, {"value", to_string(v.value)}};
    } else if (cmd_betti->parsed()) {
      require_valid(f);
      ObstructionTable table = cached_obstruction_table(f, cache_dir);
      result = obstruction_to_json(f, table);
    } else if (cmd_figure->parsed()) {
      require_valid(f);
      out << emit_figure(f, q);
      return 0;
    }

    out << result.dump(2) << "\n";
    return 0;
  } catch (const QtError& e) {
    err << json{{"error", e.code}, {"detail", e.what()}}.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"detail", e.what()}}.dump(2) << "\n";
    return 1;
  }
}

}  // namespace qtoric
