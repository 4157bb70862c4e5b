// tt: compute, classify, enumerate and verify the right triangles formed by
// two externally tangent circles and their common tangent.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "tt/coords_oracle.hpp"
#include "tt/diophantine.hpp"
#include "tt/generator.hpp"
#include "tt/integrality.hpp"
#include "tt/lengths.hpp"
#include "tt/serialize.hpp"
#include "tt/svg.hpp"

namespace {

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& text) {
  if (text == "human") return Format::Human;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw tt::Error(tt::ErrorKind::InvalidInput, "unknown format '" + text + "' (human, json, csv)");
}

std::string default_format() {
  const char* env = std::getenv("TT_FORMAT");
  return env != nullptr && *env != '\0' ? env : "human";
}

tt::Integer parse_integer_flag(const std::string& text, const char* flag) {
  const tt::Rational q = tt::parse_rational(text);
  if (!tt::is_integer(q)) {
    throw tt::Error(tt::ErrorKind::InvalidInput, std::string(flag) + " must be an integer");
  }
  return q.get_num();
}

void print_triangles(std::ostream& os, const tt::LengthSet& ls, const tt::RadiiPair& r) {
  int group = 0;
  for (const auto& tri : tt::assemble_triangles(ls, r)) {
    if (tri.group != group) {
      group = tri.group;
      os << "group " << group << ": hyp " << tri.hyp << "\n";
    }
    os << "  " << tri.vertices << ": legs " << tri.leg_a << ", " << tri.leg_b << "; hyp " << tri.hyp
       << (tt::verify_pythagorean(tri) ? "  ok" : "  FAIL") << "\n";
  }
}

void print_config(std::ostream& os, const tt::FullConfig& c, Format format) {
  switch (format) {
    case Format::Json:
      os << tt::to_json(c).dump(2) << "\n";
      return;
    case Format::Csv:
      os << tt::csv_header() << "\n" << tt::csv_row(c) << "\n";
      return;
    case Format::Human:
      break;
  }
  os << "m=" << c.params.m << " n=" << c.params.n << " t=" << c.t << "\n";
  os << "triple=(" << c.triple.r1 << "," << c.triple.r2 << "," << c.triple.r3 << ") delta=" << c.delta << "\n";
  os << "R1=" << c.R1 << "\n" << "R2=" << c.R2 << "\n";
  for (std::size_t i = 0; i < tt::IntegerLengths::kNames.size(); ++i) {
    os << tt::IntegerLengths::kNames[i] << "=" << c.lengths.values[i] << "\n";
  }
  const tt::RadiiPair radii{tt::Rational(c.R1), tt::Rational(c.R2)};
  const tt::LengthSet ls = tt::compute_lengths(radii);
  os << "d1=" << tt::to_string(ls.d1) << " (" << c.delta * c.triple.r1 << "*sqrt("
     << c.triple.r1 * c.triple.r1 + 4 * c.triple.r2 * c.triple.r2 << "))\n";
  os << "d2=" << tt::to_string(ls.d2) << " (" << c.delta * c.triple.r2 << "*sqrt("
     << 4 * c.triple.r1 * c.triple.r1 + c.triple.r2 * c.triple.r2 << "))\n";
  print_triangles(os, ls, radii);
}

int cmd_generate(const std::string& m, const std::string& n, const std::string& t, Format format) {
  const auto config = tt::generate({parse_integer_flag(m, "--m"), parse_integer_flag(n, "--n")},
                                   parse_integer_flag(t, "--t"));
  print_config(std::cout, config, format);
  return 0;
}

int cmd_classify(const std::string& r1, const std::string& r2, Format format) {
  const auto report = tt::classify(parse_integer_flag(r1, "--r1"), parse_integer_flag(r2, "--r2"));
  if (format == Format::Json) {
    std::cout << tt::to_json(report).dump(2) << "\n";
    return 0;
  }
  auto opt = [](const std::optional<tt::Integer>& v) { return v ? v->get_str() : std::string(); };
  if (format == Format::Csv) {
    std::cout << "tier,delta,r1,r2,r3,t\n"
              << tt::to_string(report.tier) << "," << opt(report.delta) << "," << opt(report.r1) << ","
              << opt(report.r2) << "," << opt(report.r3) << "," << opt(report.t) << "\n";
    return 0;
  }
  std::cout << tt::to_string(report.tier);
  if (report.t) std::cout << " t=" << *report.t;
  if (report.delta) std::cout << " delta=" << *report.delta;
  if (report.r3) {
    std::cout << " triple=(" << *report.r1 << "," << *report.r2 << "," << *report.r3 << ")";
  } else if (report.r1) {
    std::cout << " r1=" << *report.r1 << " r2=" << *report.r2;
  }
  std::cout << "\n";
  if (report.rational_lengths) {
    for (std::size_t i = 0; i < tt::RationalLengths::kNames.size(); ++i) {
      std::cout << "  " << tt::RationalLengths::kNames[i] << " = " << report.rational_lengths->values[i] << "\n";
    }
  }
  return 0;
}

int cmd_lengths(const std::string& r1, const std::string& r2, Format format) {
  const tt::RadiiPair radii{tt::parse_rational(r1), tt::parse_rational(r2)};
  const auto ls = tt::compute_lengths(radii);
  if (format == Format::Json) {
    std::cout << tt::to_json(ls).dump(2) << "\n";
    return 0;
  }
  const auto fields = ls.fields();
  if (format == Format::Csv) {
    std::cout << "name,value\n";
    for (std::size_t i = 0; i < tt::LengthSet::kNames.size(); ++i) {
      std::cout << tt::LengthSet::kNames[i] << "," << *fields[i] << "\n";
    }
    return 0;
  }
  std::cout << "R1 = " << radii.R1 << ", R2 = " << radii.R2 << "\n";
  for (std::size_t i = 0; i < tt::LengthSet::kNames.size(); ++i) {
    std::cout << tt::display_name(tt::LengthSet::kNames[i]) << " = " << *fields[i] << "\n";
  }
  print_triangles(std::cout, ls, radii);
  return 0;
}

int cmd_enumerate(const std::string& max_r1, Format format) {
  const auto configs = tt::enumerate_configs(parse_integer_flag(max_r1, "--max-r1"));
  if (format == Format::Json) {
    tt::Json arr = tt::Json::array();
    for (const auto& c : configs) arr.push_back(tt::to_json(c));
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  if (format == Format::Csv) {
    std::cout << tt::csv_header() << "\n";
    for (const auto& c : configs) std::cout << tt::csv_row(c) << "\n";
    return 0;
  }
  std::cout << configs.size() << " fully integral configuration(s) with R1 <= " << max_r1 << "\n";
  for (const auto& c : configs) {
    std::cout << "  m=" << c.params.m << " n=" << c.params.n << " t=" << c.t << " triple=(" << c.triple.r1 << ","
              << c.triple.r2 << "," << c.triple.r3 << ") R1=" << c.R1 << " R2=" << c.R2 << "\n";
  }
  return 0;
}

int cmd_search(const std::string& equation, std::uint64_t bound, bool all_parities, Format format) {
  std::vector<tt::QuarticHit> hits;
  if (equation == "plus14") {
    hits = tt::search_plus14(bound, !all_parities);
  } else if (equation == "minus") {
    hits = tt::search_minus_mixed(bound);
  } else {
    throw tt::Error(tt::ErrorKind::InvalidInput, "--equation must be plus14 or minus");
  }
  if (format == Format::Json) {
    tt::Json arr = tt::Json::array();
    for (const auto& h : hits) {
      arr.push_back(tt::Json::array({tt::integer_to_json(h.x), tt::integer_to_json(h.y), tt::integer_to_json(h.z)}));
    }
    std::cout << tt::Json{{"equation", equation}, {"bound", bound}, {"hits", arr}}.dump(2) << "\n";
    return 0;
  }
  if (format == Format::Csv) std::cout << "x,y,z\n";
  const char sep = format == Format::Csv ? ',' : ' ';
  for (const auto& h : hits) std::cout << h.x << sep << h.y << sep << h.z << "\n";
  if (hits.empty() && format == Format::Human) {
    std::cout << "no solutions with 1 <= x, y <= " << bound << " (gcd(x, y) = 1"
              << (equation == "plus14" && !all_parities ? ", x + y odd" : "") << ")\n";
  }
  return 0;
}

int cmd_verify(const std::string& r1, const std::string& r2, const std::string& tol_text, Format format) {
  const tt::RadiiPair radii{tt::parse_rational(r1), tt::parse_rational(r2)};
  double tol = 0.0;
  try {
    tol = std::stod(tol_text);
  } catch (const std::exception&) {
    throw tt::Error(tt::ErrorKind::InvalidInput, "--tol must be a number");
  }
  const auto ls = tt::compute_lengths(radii);
  const auto triangles = tt::assemble_triangles(ls, radii);
  std::size_t exact = 0;
  for (const auto& tri : triangles) exact += tt::verify_pythagorean(tri) ? 1 : 0;
  const auto lengths_report = tt::cross_check(radii, tol);
  const auto angle_report = tt::check_angles(tt::build_scene(radii), tol);

  if (format == Format::Json) {
    std::cout << tt::Json{{"triangles_verified", exact},
                          {"triangles", triangles.size()},
                          {"max_rel_dev", lengths_report.max_deviation},
                          {"max_angle_dev", angle_report.max_deviation},
                          {"tolerance", tol},
                          {"passed", exact == triangles.size()}}
                     .dump(2)
              << "\n";
  } else if (format == Format::Csv) {
    std::cout << "check,expected,observed,deviation,pass\n";
    for (const auto* report : {&lengths_report, &angle_report}) {
      for (const auto& e : report->entries) {
        std::cout << e.name << "," << e.expected << "," << e.observed << "," << e.deviation << ","
                  << (e.pass ? "true" : "false") << "\n";
      }
    }
  } else {
    std::cout << exact << "/" << triangles.size() << " triangles verified; max rel dev < " << tol_text
              << " (observed " << lengths_report.max_deviation << ")\n";
    std::cout << lengths_report.entries.size() << " lengths match the coordinate oracle; "
              << angle_report.entries.size() << " angle checks pass (max deviation " << angle_report.max_deviation
              << ")\n";
  }
  return exact == triangles.size() ? 0 : 2;
}

int cmd_figure(const std::string& m, const std::string& n, const std::string& t, const std::string& out) {
  const auto config = tt::generate({parse_integer_flag(m, "--m"), parse_integer_flag(n, "--n")},
                                   parse_integer_flag(t, "--t"));
  const auto scene = tt::build_scene(config.R1.get_d(), config.R2.get_d());
  std::ofstream file(out);
  if (!file) throw tt::Error(tt::ErrorKind::InvalidInput, "cannot open '" + out + "' for writing");
  file << tt::render_svg(scene, &config);
  file.close();
  if (!file) throw tt::Error(tt::ErrorKind::InvalidInput, "failed writing '" + out + "'");
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pythagorean triangles from two externally tangent circles"};
  app.require_subcommand(1);

  std::string format_text = default_format();
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "human, json or csv (default from TT_FORMAT)");
  };

  std::string m, n, t = "1", r1, r2, max_r1, equation, tol = "1e-9", out;
  std::uint64_t bound = 0;
  bool all_parities = false;

  auto* generate = app.add_subcommand("generate", "fully integral configuration from (m, n, t)");
  generate->add_option("--m", m)->required();
  generate->add_option("--n", n)->required();
  generate->add_option("--t", t);
  add_format(generate);

  auto* classify = app.add_subcommand("classify", "integrality tier of integer radii");
  classify->add_option("--r1", r1)->required();
  classify->add_option("--r2", r2)->required();
  add_format(classify);

  auto* lengths = app.add_subcommand("lengths", "exact surd lengths for rational radii");
  lengths->add_option("--r1", r1)->required();
  lengths->add_option("--r2", r2)->required();
  add_format(lengths);

  auto* enumerate = app.add_subcommand("enumerate", "all fully integral configurations up to a bound");
  enumerate->add_option("--max-r1", max_r1)->required();
  add_format(enumerate);

  auto* search = app.add_subcommand("search", "bounded search for the quartic equations");
  search->add_option("--equation", equation, "plus14 or minus")->required();
  search->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);
  search->add_flag("--all-parities", all_parities, "plus14: also scan pairs with x + y even");
  add_format(search);

  auto* verify = app.add_subcommand("verify", "exact triangle check plus coordinate oracle");
  verify->add_option("--r1", r1)->required();
  verify->add_option("--r2", r2)->required();
  verify->add_option("--tol", tol, "relative tolerance");
  add_format(verify);

  auto* figure = app.add_subcommand("figure", "write an SVG of the configuration");
  figure->add_option("--m", m)->required();
  figure->add_option("--n", n)->required();
  figure->add_option("--t", t);
  figure->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const Format format = parse_format(format_text);
    if (*generate) return cmd_generate(m, n, t, format);
    if (*classify) return cmd_classify(r1, r2, format);
    if (*lengths) return cmd_lengths(r1, r2, format);
    if (*enumerate) return cmd_enumerate(max_r1, format);
    if (*search) return cmd_search(equation, bound, all_parities, format);
    if (*verify) return cmd_verify(r1, r2, tol, format);
    if (*figure) return cmd_figure(m, n, t, out);
  } catch (const tt::Error& e) {
    std::cerr << "error (" << tt::to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == tt::ErrorKind::VerificationFailure ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
