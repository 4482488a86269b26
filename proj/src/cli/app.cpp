#include <CLI11.hpp>

#include "commands.hpp"
#include "ncpark/cli.hpp"
#include "ncpark/errors.hpp"

namespace ncpark {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncrossing partitions, parking functions and hypertree complexes"};
  app.require_subcommand(1);

  std::string n_text = "3";
  std::optional<int> k;
  std::string e = "bottom";
  std::uint64_t seed = 0;
  int backtrack = 8;
  int restarts = 32;
  std::string cache_dir;
  std::string format = "text";
  bool allow_large = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "size, or a range a-b");
    sub->add_option("--cache-dir", cache_dir, "artifact directory (default $NCPARK_CACHE_DIR or ./ncpark-cache)");
    sub->add_flag("--allow-large", allow_large, "lift the default size caps");
  };
  auto add_report_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string kind;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate objects and cache them");
  enumerate->add_option("kind", kind, "nc, pf, trees, hypertrees or chains")
      ->required()
      ->check(CLI::IsMember({"nc", "pf", "trees", "hypertrees", "chains"}));
  add_common(enumerate);
  add_report_format(enumerate);

  auto* bijections = app.add_subcommand("bijections", "round-trip and cardinality checks");
  add_common(bijections);
  add_report_format(bijections);

  std::string theorem;
  auto* verify = app.add_subcommand("verify", "certify a theorem instance");
  verify->add_option("theorem", theorem, "edge, last, space, star-lemma, decomp or join")
      ->required()
      ->check(CLI::IsMember({"edge", "last", "space", "star-lemma", "decomp", "join"}));
  add_common(verify);
  add_report_format(verify);
  verify->add_option("--k", k, "undesired parking space");
  verify->add_option("--e", e, "boundary edge: bottom, top or a-b");
  verify->add_option("--seed", seed, "collapse search seed");
  verify->add_option("--backtrack", backtrack, "collapse backtracking depth")->check(CLI::NonNegativeNumber);
  verify->add_option("--restarts", restarts, "random collapse restarts")->check(CLI::NonNegativeNumber);

  std::string object;
  std::string export_format = "dot";
  std::string output;
  auto* exporter = app.add_subcommand("export", "write a complex as DOT or text");
  exporter->add_option("object", object, "ncht, nc-link or point")
      ->required()
      ->check(CLI::IsMember({"ncht", "nc-link", "point"}));
  add_common(exporter);
  exporter->add_option("--format", export_format, "output format")->check(CLI::IsMember({"dot", "text"}));
  exporter->add_option("--e", e, "boundary edge for the dashed class");
  exporter->add_option("-o,--output", output, "output file (default stdout)");

  std::string certificate, complex, target;
  auto* replay = app.add_subcommand("replay", "replay a collapse certificate");
  replay->add_option("certificate", certificate, "certificate file")->required();
  replay->add_option("complex", complex, "start complex, maximal faces one per line")->required();
  replay->add_option("--target", target, "target subcomplex for relative certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cli::RunConfig cfg;
    cfg.ns = cli::parse_n_range(n_text);
    cfg.k = k;
    cfg.e = e;
    cfg.collapse.seed = seed;
    cfg.collapse.backtrack_depth = backtrack;
    cfg.collapse.restarts = restarts;
    cfg.cache_dir = cli::resolve_cache_dir(cache_dir);
    cfg.format = format == "json" ? cli::Format::Json : cli::Format::Text;
    cfg.allow_large = allow_large;

    if (*enumerate) return cli::cmd_enumerate(kind, cfg, out);
    if (*bijections) return cli::cmd_bijections(cfg, out);
    if (*verify) return cli::cmd_verify(theorem, cfg, out);
    if (*exporter) return cli::cmd_export(object, export_format, output, cfg, out);
    if (*replay) return cli::cmd_replay(certificate, complex, target, out);
  } catch (const cli::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << " (pass --allow-large to override)\n";
    return 2;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const cli::VerificationFailure& e) {
    err << "FAIL: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "FAIL: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ncpark
